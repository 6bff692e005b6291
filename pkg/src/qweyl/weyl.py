"""PBW arithmetic in the quantized Weyl algebra.

Elements are stored in normal form: a map from exponent pairs (b, a), meaning
y_1^{b_1}..y_n^{b_n} x_1^{a_1}..x_n^{a_n}, to coefficients.  Coefficients are
commutative polynomials over the cyclotomic ring of order D, in the formal
variables the mode calls for (c for the deformed unit, q for the q-deformed
version, plus any declared formal unit names).

Multiplication pushes the right factor's generators into the left factor one
letter at a time.  All swap scalars are powers of the primitive root eps_D
(or of q), so they are accumulated as integer exponents and only converted to
coefficients at the end of each step.  The single non-scalar rewrite is

    x_j^a y_j = eps_j^a y_j x_j^a + [a]_{eps_j} z_{j-1} x_j^{a-1}

with [a]_eps = 1 + eps + ... + eps^{a-1}, after which z_{j-1} is expanded as
z_0 + sum_{i<j} (eps_i - 1) y_i x_i and each summand is normalized by pure
scalar swaps.
"""

from .cyclotomic import CycElem
from .polyring import MPoly, VarTable
from .params import WeylParams


class ModeMismatchError(ValueError):
    pass


class WeylAlgebra:
    """The algebra attached to a WeylParams, with its coefficient ring."""

    def __init__(self, params):
        self.params = params
        self.n = params.n
        self.D = params.D
        names = []
        invertible = set()
        if params.q_deformed:
            names.append("q")
            invertible.add("q")
        if params.c_formal:
            names.append("c")
        for u in params.formal_units:
            names.append(u)
            invertible.add(u)
        self.coeff_ring = VarTable(tuple(names), frozenset(invertible))
        # eps_j and beta_jk as integer exponents of eps_D (resp. of q).
        # The lower triangle carries the exact negatives of the upper one:
        # in q-mode the exponents live in Z, not Z/D, so q^{-u} and q^{D-u}
        # are different coefficients and the signed choice is the right one.
        D = self.D
        self._t = [D * m // d for m, d in params.eps]
        self._u = [[0] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k in range(j + 1, self.n):
                m, d = params.beta[j][k]
                self._u[j][k] = D * m // d
                self._u[k][j] = -(D * m // d)
        self._mono_cache = {}
        self._pow_cache = {}

    # -- coefficient helpers ----------------------------------------------

    def coeff_one(self):
        return MPoly.constant(self.coeff_ring, CycElem.one(self.D))

    def coeff_const(self, value):
        if not isinstance(value, CycElem):
            value = CycElem.rational(value, self.D)
        elif value.order != self.D:
            value = value.embed(self.D)
        return MPoly.constant(self.coeff_ring, value)

    def root_pow(self, k):
        """The coefficient eps_D^k, rendered as q^k in q-mode."""
        if not self.params.q_deformed:
            k %= self.D
        cached = self._pow_cache.get(k)
        if cached is None:
            if self.params.q_deformed:
                cached = MPoly.variable(self.coeff_ring, "q", self.D, k)
            else:
                cached = MPoly.constant(self.coeff_ring,
                                        CycElem.root(self.D, k))
            self._pow_cache[k] = cached
        return cached

    def qint(self, a, t):
        """[a] at eps_D^t: the sum of root_pow(i*t) for 0 <= i < a."""
        out = MPoly.zero(self.coeff_ring)
        for i in range(a):
            out = out + self.root_pow(i * t)
        return out

    def z0_coeff(self):
        if self.params.c_formal:
            return MPoly.variable(self.coeff_ring, "c", self.D)
        return self.coeff_one()

    # -- element constructors ---------------------------------------------

    def zero(self):
        return WeylElem(self, {})

    def one(self):
        return WeylElem(self, {self._unit_key(): self.coeff_one()})

    def _unit_key(self):
        z = (0,) * self.n
        return (z, z)

    def scalar(self, coeff):
        if not isinstance(coeff, MPoly):
            coeff = self.coeff_const(coeff)
        if coeff.is_zero:
            return self.zero()
        return WeylElem(self, {self._unit_key(): coeff})

    def generator(self, which, j):
        """x_j or y_j, with 1-based index j."""
        if not 1 <= j <= self.n:
            raise IndexError("generator index out of range")
        e = [0] * self.n
        e[j - 1] = 1
        z = (0,) * self.n
        key = (z, tuple(e)) if which == "x" else (tuple(e), z)
        return WeylElem(self, {key: self.coeff_one()})

    def x(self, j):
        return self.generator("x", j)

    def y(self, j):
        return self.generator("y", j)

    def z_element(self, j):
        """z_j = z_0 + sum_{i<=j} (eps_i - 1) y_i x_i, 0 <= j <= n."""
        if not 0 <= j <= self.n:
            raise IndexError("z index out of range")
        terms = {self._unit_key(): self.z0_coeff()}
        for i in range(j):
            e = [0] * self.n
            e[i] = 1
            terms[(tuple(e), tuple(e))] = self.root_pow(self._t[i]) - 1
        return WeylElem(self, terms)

    def monomial(self, b, a, coeff=None):
        key = (tuple(b), tuple(a))
        if any(v < 0 for v in key[0] + key[1]):
            raise ValueError("negative generator exponent")
        c = self.coeff_one() if coeff is None else coeff
        if not isinstance(c, MPoly):
            c = self.coeff_const(c)
        return WeylElem(self, {key: c} if not c.is_zero else {})

    # -- the rewriting core ------------------------------------------------

    def _times_x(self, terms, j):
        """Right-multiply a terms dict by x_{j+1} (0-based j)."""
        t, u = self._t[j], self._u[j]
        out = {}
        for (b, a), coeff in terms.items():
            k_exp = -sum(a[k] * (t + u[k]) for k in range(j + 1, self.n))
            na = a[:j] + (a[j] + 1,) + a[j + 1:]
            _acc(out, (b, na), coeff * self.root_pow(k_exp))
        return out

    def _times_y(self, terms, j):
        """Right-multiply a terms dict by y_{j+1} (0-based j)."""
        t, u = self._t[j], self._u[j]
        out = {}
        for (b, a), coeff in terms.items():
            s1 = sum(a[k] * (t + u[k]) for k in range(j + 1, self.n))
            # straight-through branch: y_j passes every x and joins the y block
            expA = (s1 + a[j] * t
                    + sum(a[k] * u[k] for k in range(j))
                    - sum(b[k] * u[k] for k in range(j + 1, self.n)))
            nb = b[:j] + (b[j] + 1,) + b[j + 1:]
            _acc(out, (nb, a), coeff * self.root_pow(expA))
            if a[j] == 0:
                continue
            # contact branch: one x_j y_j contact leaves z_{j-1} behind
            base = coeff * self.root_pow(
                s1 + sum(a[k] * self._t[k] for k in range(j))
            ) * self.qint(a[j], t)
            na = a[:j] + (a[j] - 1,) + a[j + 1:]
            _acc(out, (b, na), base * self.z0_coeff())
            for i in range(j):
                shift = (-sum(b[k] * self._u[i][k] for k in range(i + 1, self.n))
                         - sum(na[k] * (self._t[k] + self._u[k][i])
                               for k in range(i)))
                ci = base * (self.root_pow(self._t[i]) - 1) \
                    * self.root_pow(shift)
                nb2 = b[:i] + (b[i] + 1,) + b[i + 1:]
                na2 = na[:i] + (na[i] + 1,) + na[i + 1:]
                _acc(out, (nb2, na2), ci)
        return out

    def mono_product(self, key1, key2):
        """Normal form of (monomial key1) * (monomial key2), as a terms dict.

        Peels one letter of key2 at a time, y block first, and memoizes the
        remaining suffix products; distinct left factors share most of the
        work through the cache.
        """
        cached = self._mono_cache.get((key1, key2))
        if cached is not None:
            return cached
        b2, a2 = key2
        j = next((i for i in range(self.n) if b2[i]), None)
        if j is not None:
            rest = (b2[:j] + (b2[j] - 1,) + b2[j + 1:], a2)
            step = self._times_y({key1: self.coeff_one()}, j)
        else:
            j = next((i for i in range(self.n) if a2[i]), None)
            if j is None:
                terms = {key1: self.coeff_one()}
                self._mono_cache[(key1, key2)] = terms
                return terms
            rest = (b2, a2[:j] + (a2[j] - 1,) + a2[j + 1:])
            step = self._times_x({key1: self.coeff_one()}, j)
        terms = {}
        for k, c in step.items():
            for kk, cc in self.mono_product(k, rest).items():
                _acc(terms, kk, c * cc)
        self._mono_cache[(key1, key2)] = terms
        return terms


def _acc(terms, key, coeff):
    cur = terms.get(key)
    if cur is None:
        if not coeff.is_zero:
            terms[key] = coeff
    else:
        s = cur + coeff
        if s.is_zero:
            del terms[key]
        else:
            terms[key] = s


class WeylElem:
    """An algebra element in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other):
        if self.algebra.params != other.algebra.params:
            raise ModeMismatchError("elements of different algebras")

    def _coerce(self, other):
        if isinstance(other, WeylElem):
            return other
        return self.algebra.scalar(other)

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return WeylElem(self.algebra, out)

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, -c)
        return WeylElem(self.algebra, out)

    def __neg__(self):
        return WeylElem(self.algebra,
                        {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (MPoly, CycElem, int)):
            c = other if isinstance(other, MPoly) else \
                self.algebra.coeff_const(other)
            if c.is_zero:
                return self.algebra.zero()
            return WeylElem(self.algebra,
                            {k: v * c for k, v in self.terms.items()})
        self._check(other)
        A = self.algebra
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c12 = c1 * c2
                for key, s in A.mono_product(k1, k2).items():
                    _acc(out, key, c12 * s)
        return WeylElem(A, out)

    def __rmul__(self, other):
        # scalars commute with everything, so only the scalar case lands here
        return self.__mul__(other)

    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, WeylElem):
            other = self._coerce(other)
        return self.algebra.params == other.algebra.params \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra.params, frozenset(
            (k, frozenset(c.terms.items())) for k, c in self.terms.items())))

    def commutator(self, other):
        return self * other - other * self

    # -- structure queries -------------------------------------------------

    def grading_degree(self):
        """The common multidegree sum (b_j - a_j) e_j, or None."""
        degs = {tuple(bj - aj for bj, aj in zip(b, a))
                for b, a in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def filtration_degree(self, weights=None):
        """Max over terms of sum chi_j (a_j + b_j); -inf for zero."""
        if not self.terms:
            return float("-inf")
        if weights is None:
            weights = list(range(1, self.algebra.n + 1))
        return max(sum(w * (bj + aj) for w, bj, aj in zip(weights, b, a))
                   for b, a in self.terms)

    def apply_generator_images(self, images, target):
        """Evaluate the algebra map x_j -> images["x",j], y_j -> images["y",j].

        ``target`` is the codomain WeylAlgebra; coefficients are carried over
        by name.  Well-definedness is the caller's concern.
        """
        out = target.zero()
        for (b, a), coeff in self.terms.items():
            term = target.scalar(coeff.cast_to(target.coeff_ring, target.D))
            for j in range(self.algebra.n):
                if b[j]:
                    term = term * images[("y", j + 1)] ** b[j]
            for j in range(self.algebra.n):
                if a[j]:
                    term = term * images[("x", j + 1)] ** a[j]
            out = out + term
        return out

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        def key(item):
            (b, a), _ = item
            return (sum(b) + sum(a), b, a)
        return sorted(self.terms.items(), key=key, reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (b, a), coeff in self.sorted_terms():
            factors = []
            for j, e in enumerate(b):
                if e == 1:
                    factors.append("y%d" % (j + 1))
                elif e:
                    factors.append("y%d^%d" % (j + 1, e))
            for j, e in enumerate(a):
                if e == 1:
                    factors.append("x%d" % (j + 1))
                elif e:
                    factors.append("x%d^%d" % (j + 1, e))
            cs = repr(coeff)
            if factors and cs == "1":
                parts.append("·".join(factors))
            elif factors:
                if len(coeff.terms) > 1 or cs.startswith("-") or "·" in cs:
                    cs = "(%s)" % cs
                parts.append("%s·%s" % (cs, "·".join(factors)))
            else:
                parts.append(cs)
        return " + ".join(parts)

    def to_json(self):
        return [[list(b), list(a), coeff.to_json()]
                for (b, a), coeff in self.sorted_terms()]
