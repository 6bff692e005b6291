"""Sparse multivariate polynomials over cyclotomic coefficients.

Supports designated Laurent-invertible variables, exact division, synthetic
division by (q - eps), substitution, fraction-free (Bareiss) determinants and
associate comparison.  Terms map integer exponent vectors to nonzero
:class:`~qweyl.cyclotomic.CycElem` coefficients; the term order used for
division and rendering is graded lexicographic, descending.
"""

from dataclasses import dataclass, field
from functools import reduce

from gmpy2 import mpq

from .cyclotomic import CycElem


class RingMismatchError(ValueError):
    """Raised when polynomials over different variable tables are combined."""


class NotDivisibleError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


@dataclass(frozen=True)
class VarTable:
    """An ordered set of variable names, some of which may be Laurent."""

    names: tuple
    invertible: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if not self.invertible <= set(self.names):
            raise ValueError("invertible variables must be declared variables")

    def index(self, name):
        return self.names.index(name)

    def __len__(self):
        return len(self.names)


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """A commutative polynomial (Laurent in the invertible variables)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
                self._add_term(tuple(exps), coeff)

    def _add_term(self, exps, coeff):
        if coeff.is_zero:
            return
        for name, e in zip(self.ring.names, exps):
            if e < 0 and name not in self.ring.invertible:
                raise ValueError("negative exponent on non-invertible %r" % name)
        cur = self.terms.get(exps)
        if cur is None:
            self.terms[exps] = coeff
        else:
            s = cur + coeff
            if s.is_zero:
                del self.terms[exps]
            else:
                self.terms[exps] = s

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(ring):
        return MPoly(ring)

    @staticmethod
    def constant(ring, coeff):
        if not isinstance(coeff, CycElem):
            coeff = CycElem.rational(coeff)
        p = MPoly(ring)
        if not coeff.is_zero:
            p.terms[(0,) * len(ring)] = coeff
        return p

    @staticmethod
    def variable(ring, name, order=1, exp=1):
        exps = [0] * len(ring)
        exps[ring.index(name)] = exp
        return MPoly(ring, {tuple(exps): CycElem.one(order)})

    @staticmethod
    def monomial(ring, exps, coeff):
        return MPoly(ring, {tuple(exps): coeff})

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_constant(self):
        zero = (0,) * len(self.ring)
        return all(e == zero for e in self.terms)

    def constant_value(self, order=1):
        if self.is_zero:
            return CycElem.zero(order)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    @property
    def order(self):
        """Cyclotomic order of the coefficients (1 for the zero polynomial)."""
        for c in self.terms.values():
            return c.order
        return 1

    def total_degree(self):
        if self.is_zero:
            return None
        return max(sum(e) for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def coeff_map(self, var):
        """Split into {exponent-of-var: polynomial without var}."""
        i = self.ring.index(var)
        out = {}
        for exps, c in self.terms.items():
            rest = exps[:i] + (0,) + exps[i + 1:]
            out.setdefault(exps[i], MPoly(self.ring))._add_term(rest, c)
        return out

    def degree_in(self, var):
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=None)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials over different rings")

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, CycElem):
            return MPoly.constant(self.ring, other)
        return MPoly.constant(self.ring, CycElem.rational(other, self.order))

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = MPoly(self.ring, dict(self.terms))
        for exps, c in other.terms.items():
            out._add_term(exps, c)
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = MPoly(self.ring, dict(self.terms))
        for exps, c in other.terms.items():
            out._add_term(exps, -c)
        return out

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (CycElem, int)) or type(other) is type(mpq(1)):
            if isinstance(other, CycElem):
                if other.is_zero:
                    return MPoly(self.ring)
                return MPoly(self.ring, {e: c * other for e, c in self.terms.items()})
            if other == 0:
                return MPoly(self.ring)
            return MPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = MPoly(self.ring)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out._add_term(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return out

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, e):
        if e < 0:
            inv = self.mono_inverse()
            if inv is None:
                raise NotDivisibleError("negative power of a non-unit polynomial")
            return inv ** (-e)
        result = MPoly.constant(self.ring, CycElem.one(self.order))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._coerce(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def mono_inverse(self):
        """Inverse of a single-term unit (Laurent monomial times a root of unity
        or rational), or None."""
        if len(self.terms) != 1:
            return None
        exps, c = next(iter(self.terms.items()))
        for name, e in zip(self.ring.names, exps):
            if e != 0 and name not in self.ring.invertible:
                return None
        cinv = c.inverse()
        if cinv is None:
            return None
        return MPoly(self.ring, {tuple(-e for e in exps): cinv})

    # -- substitution and ring changes ------------------------------------

    def cast_to(self, ring, order=None):
        """Reinterpret over a ring containing the same-named variables."""
        pos = [ring.index(n) for n in self.ring.names]
        out = MPoly(ring)
        for exps, c in self.terms.items():
            new = [0] * len(ring)
            for p, e in zip(pos, exps):
                new[p] = e
            if order is not None and c.order != order:
                c = c.embed(order)
            out._add_term(tuple(new), c)
        return out

    def map_coeffs(self, fn):
        out = MPoly(self.ring)
        for exps, c in self.terms.items():
            out._add_term(exps, fn(c))
        return out

    def substitute(self, assignments, target_ring=None):
        """Apply a ring homomorphism given on variables.

        ``assignments`` maps variable names to MPoly values (or CycElem
        constants); unassigned variables map to themselves and must exist in
        the target ring.
        """
        ring = target_ring
        for v in assignments.values():
            if isinstance(v, MPoly):
                if ring is None:
                    ring = v.ring
                elif v.ring != ring:
                    raise RingMismatchError("assignment values over different rings")
        if ring is None:
            ring = self.ring
        values = {}
        for name, v in assignments.items():
            values[name] = v if isinstance(v, MPoly) else MPoly.constant(ring, v)
        for name in self.ring.names:
            if name not in values:
                if name not in ring.names:
                    raise RingMismatchError("variable %r missing from target" % name)
                values[name] = MPoly.variable(ring, name, self.order)
        out = MPoly(ring)
        for exps, c in self.terms.items():
            term = MPoly.constant(ring, c)
            for name, e in zip(self.ring.names, exps):
                if e == 0:
                    continue
                term = term * values[name] ** e
            out = out + term
        return out

    # -- division ----------------------------------------------------------

    def _laurent_shift(self):
        """Factor out minimal exponents on invertible variables.

        Returns (shift vector, polynomial with nonnegative exponents there).
        """
        if self.is_zero:
            return (0,) * len(self.ring), self
        shift = [0] * len(self.ring)
        for i, name in enumerate(self.ring.names):
            if name in self.ring.invertible:
                m = min(e[i] for e in self.terms)
                if m < 0:
                    shift[i] = m
        if not any(shift):
            return tuple(shift), self
        out = MPoly(self.ring)
        for exps, c in self.terms.items():
            out._add_term(tuple(e - s for e, s in zip(exps, shift)), c)
        return tuple(shift), out

    def exact_divide(self, d):
        """Quotient self / d when it exists in the ring, else None."""
        if not isinstance(d, MPoly):
            d = self._coerce(d)
        self._check(d)
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return MPoly(self.ring)
        sp, p = self._laurent_shift()
        sd, dd = d._laurent_shift()
        lt_e, lt_c = dd.leading()
        lt_c_inv = lt_c.inverse()
        quot = MPoly(self.ring)
        rem = p
        while not rem.is_zero:
            re, rc = rem.leading()
            qe = tuple(a - b for a, b in zip(re, lt_e))
            if any(e < 0 for e in qe):
                return None
            qc = rc * lt_c_inv
            qterm = MPoly(self.ring, {qe: qc})
            quot = quot + qterm
            rem = rem - qterm * dd
        net = tuple(a - b for a, b in zip(sp, sd))
        if any(net):
            quot = quot * MPoly(self.ring, {net: CycElem.one(quot.order)})
        return quot

    def divide_by_linear(self, var, value):
        """Exact quotient by (var - value) for a CycElem value, via synthetic
        division in ``var``; raises NotDivisibleError when the substitution
        var -> value is nonzero."""
        if self.is_zero:
            return self
        shift, p = self._laurent_shift()
        i = self.ring.index(var)
        by_deg = {}
        for exps, c in p.terms.items():
            rest = exps[:i] + (0,) + exps[i + 1:]
            by_deg.setdefault(exps[i], {}).setdefault(rest, CycElem.zero(c.order))
            by_deg[exps[i]][rest] = by_deg[exps[i]][rest] + c
        deg = max(by_deg)
        coeffs = [MPoly(self.ring, by_deg.get(k, {})) for k in range(deg + 1)]
        out_coeffs = [None] * deg
        carry = MPoly(self.ring)
        for k in range(deg, 0, -1):
            carry = coeffs[k] + carry * value
            out_coeffs[k - 1] = carry
        rem = coeffs[0] + carry * value
        if not rem.is_zero:
            raise NotDivisibleError("polynomial does not vanish at the root")
        out = MPoly(self.ring)
        unit = [0] * len(self.ring)
        unit[i] = 1
        for k, c in enumerate(out_coeffs):
            for exps, cc in c.terms.items():
                out._add_term(
                    tuple(e + (k if j == i else 0) for j, e in enumerate(exps)), cc
                )
        if any(shift):
            out = out * MPoly(self.ring, {shift: CycElem.one(out.order)})
        return out

    # -- rendering and io --------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append("%s^%d" % (name, e))
            cs = repr(c)
            if factors and cs == "1":
                parts.append("·".join(factors))
            elif factors:
                parts.append("(%s)·%s" % (cs, "·".join(factors)))
            else:
                parts.append(cs)
        return " + ".join(parts)

    def to_json(self):
        return [[list(e), c.to_json()] for e, c in self.sorted_terms()]

    @staticmethod
    def from_json(ring, data):
        return MPoly(ring, {tuple(e): CycElem.from_json(c) for e, c in data})


@dataclass
class AssociateWitness:
    """Outcome of an associate comparison p = factor * q."""

    kind: str  # "unit" or "constant"
    factor: "MPoly"

    @property
    def certified(self):
        return self.kind == "unit"


def is_associate(p, q):
    """Certify p = u*q for a unit u (+-eps^k times a Laurent monomial in
    invertible variables); fall back to reporting a constant quotient."""
    if p.is_zero or q.is_zero:
        if p.is_zero and q.is_zero:
            return AssociateWitness("unit", MPoly.constant(p.ring, CycElem.one()))
        return None
    u = p.exact_divide(q)
    if u is None:
        v = q.exact_divide(p)
        if v is None:
            return None
        u = v.mono_inverse()
        if u is None:
            if len(v.terms) == 1 and v.is_constant:
                c = v.constant_value().inverse()
                return AssociateWitness("constant", MPoly.constant(p.ring, c))
            return None
    if len(u.terms) == 1:
        exps, c = next(iter(u.terms.items()))
        laurent_only = all(
            e == 0 or name in p.ring.invertible
            for name, e in zip(p.ring.names, exps)
        )
        if laurent_only and c.as_root_of_unity() is not None:
            return AssociateWitness("unit", u)
        if u.is_constant:
            return AssociateWitness("constant", u)
    return None


class PolyMatrix:
    """A square matrix of polynomials over a shared ring."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")
        rings = {e.ring for row in self.entries for e in row}
        if len(rings) > 1:
            raise RingMismatchError("matrix entries over different rings")
        self.size = n
        self.ring = rings.pop() if rings else None

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def bareiss_determinant(matrix):
    """Fraction-free determinant via single-step Bareiss elimination."""
    if isinstance(matrix, PolyMatrix):
        m = [row[:] for row in matrix.entries]
    else:
        m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    ring = m[0][0].ring
    order = next((e.order for row in m for e in row if not e.is_zero), 1)
    sign = 1
    prev = MPoly.constant(ring, CycElem.one(order))
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero), None)
        if piv is None:
            return MPoly.zero(ring)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q = num.exact_divide(prev)
                if q is None:
                    raise NotDivisibleError("Bareiss pivot division failed")
                m[i][j] = q
            m[i][k] = MPoly.zero(ring)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_determinant(matrix):
    """Reference determinant by cofactor expansion (small matrices only)."""
    if isinstance(matrix, PolyMatrix):
        m = matrix.entries
    else:
        m = matrix
    n = len(m)
    ring = m[0][0].ring
    if n == 1:
        return m[0][0]
    out = MPoly.zero(ring)
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in m[1:]]
        term = m[0][j] * cofactor_determinant(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out
