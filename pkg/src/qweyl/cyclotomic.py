"""Exact arithmetic in cyclotomic rings Q(eps_D), eps_D a primitive D-th root of unity.

Elements are stored in the power basis 1, eps, ..., eps^(phi(D)-1) modulo the
D-th cyclotomic polynomial, with exact rational coefficients.  Elements of
different orders never interact implicitly; use :meth:`CycElem.embed` first.
"""

from functools import lru_cache

from gmpy2 import mpq


class OrderMismatchError(ValueError):
    """Raised when two cyclotomic elements of different order are combined."""


@lru_cache(maxsize=None)
def euler_phi(D: int) -> int:
    result = D
    p, m = 2, D
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact_int(a, b):
    # exact division of integer polynomials, b monic up to sign
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % b[-1] == 0
        q[i] = c // b[-1]
        if q[i]:
            for j, bj in enumerate(b):
                a[i + j] -= q[i] * bj
    assert all(c == 0 for c in a)
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(D: int) -> tuple:
    """Coefficient list (low to high) of the D-th cyclotomic polynomial."""
    if D < 1:
        raise ValueError("order must be positive")
    if D == 1:
        return (-1, 1)
    num = [0] * (D + 1)
    num[0], num[D] = -1, 1  # t^D - 1
    den = [1]
    for e in range(1, D):
        if D % e == 0:
            den = _poly_mul_int(den, cyclotomic_polynomial(e))
    return tuple(_poly_divexact_int(num, den))


@lru_cache(maxsize=None)
def _reduction_rows(D: int):
    """Power-basis expansions of eps^k for k = phi(D) .. 2*phi(D)-2."""
    phi = euler_phi(D)
    Phi = cyclotomic_polynomial(D)
    top = [-c for c in Phi[:phi]]  # eps^phi
    rows = [tuple(top)]
    cur = top
    for _ in range(phi - 2):
        lead = cur[-1]
        shifted = [0] + list(cur[:-1])
        cur = [shifted[i] + lead * top[i] for i in range(phi)]
        rows.append(tuple(cur))
    return tuple(rows)


class CycElem:
    """An element of Q(eps_D) in reduced power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(mpq(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError("expected %d coefficients for order %d" % (phi, order))
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def zero(order=1):
        return CycElem(order, [0] * euler_phi(order))

    @staticmethod
    def one(order=1):
        return CycElem.rational(1, order)

    @staticmethod
    def rational(value, order=1):
        c = [mpq(0)] * euler_phi(order)
        c[0] = mpq(value)
        return CycElem(order, c)

    @staticmethod
    @lru_cache(maxsize=None)
    def root(order, k=1):
        """eps_order^k, reduced into the power basis."""
        phi = euler_phi(order)
        k %= order
        if k < phi:
            c = [mpq(0)] * phi
            c[k] = mpq(1)
            return CycElem(order, c)
        e = CycElem.root(order, phi - 1) if phi > 1 else CycElem.one(order)
        out = e
        for _ in range(k - (phi - 1)):
            out = out._mul_eps()
        return out

    def _mul_eps(self):
        phi = euler_phi(self.order)
        lead = self.coeffs[-1]
        shifted = [mpq(0)] + list(self.coeffs[:-1])
        if lead:
            top = _reduction_rows(self.order)[0]
            shifted = [shifted[i] + lead * top[i] for i in range(phi)]
        return CycElem(self.order, shifted)

    # -- ring operations -------------------------------------------------

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatchError(
                "orders %d and %d differ; embed first" % (self.order, other.order)
            )

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycElem(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycElem(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycElem(self.order, [-a for a in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, CycElem):
            return other
        return CycElem.rational(other, self.order)

    def __mul__(self, other):
        if not isinstance(other, CycElem):
            try:
                q = mpq(other)
            except TypeError:
                return NotImplemented
            return CycElem(self.order, [a * q for a in self.coeffs])
        self._check(other)
        phi = len(self.coeffs)
        if phi == 1:
            return CycElem(self.order, [self.coeffs[0] * other.coeffs[0]])
        conv = [mpq(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:phi]
        rows = _reduction_rows(self.order)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return CycElem(self.order, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, e):
        if e < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError("inverse of zero cyclotomic element")
            return inv ** (-e)
        result = CycElem.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, CycElem):
            other = self._coerce(other)
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def is_integral(self):
        """True when all power-basis coefficients lie in Z."""
        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational:
            raise ValueError("not a rational element")
        return self.coeffs[0]

    # -- inversion, units, embeddings ------------------------------------

    def inverse(self):
        """Multiplicative inverse in Q(eps_D), or None for zero."""
        if self.is_zero:
            return None
        phi = euler_phi(self.order)
        if phi == 1 or self.is_rational:
            return CycElem.rational(1 / self.coeffs[0], self.order)
        # extended gcd of self (as a polynomial) with Phi_D over Q
        Phi = [mpq(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = Phi, list(self.coeffs)
        s0, s1 = [mpq(0)], [mpq(1)]

        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        r1 = trim(r1)
        while True:
            # divide r0 by r1
            q = [mpq(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for i in range(len(q) - 1, -1, -1):
                if len(rem) < i + len(r1):
                    continue
                c = rem[i + len(r1) - 1] / r1[-1]
                q[i] = c
                if c:
                    for j in range(len(r1)):
                        rem[i + j] -= c * r1[j]
            rem = trim(rem)
            # s2 = s0 - q*s1
            qs1 = [mpq(0)] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] += qi * sj
            s2 = [mpq(0)] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                s2[i] += c
            for i, c in enumerate(qs1):
                s2[i] -= c
            s2 = trim(s2)
            if not rem:
                # r1 is the gcd (a nonzero constant since Phi_D is irreducible)
                g = r1[0] if len(r1) == 1 else None
                assert g is not None, "gcd with irreducible Phi_D must be constant"
                inv = [c / g for c in s1]
                inv += [mpq(0)] * (phi - len(inv))
                return CycElem(self.order, inv[:phi])
            r0, r1 = r1, rem
            s0, s1 = s1, s2

    def as_root_of_unity(self):
        """Return (sign, k) with self = sign * eps^k, or None.

        The recognized units are exactly +-eps^k, which for D in
        {1, 2, 3, 4, 6} is the full unit group of Z[eps].
        """
        for k in range(self.order):
            if self == CycElem.root(self.order, k):
                return (1, k)
        for k in range(self.order):
            if self == -CycElem.root(self.order, k):
                return (-1, k)
        return None

    def embed(self, order_target):
        """Image under eps_D -> eps_target^(target/D); requires D | target."""
        if order_target % self.order != 0:
            raise OrderMismatchError(
                "order %d does not divide %d" % (self.order, order_target)
            )
        if order_target == self.order:
            return self
        step = order_target // self.order
        out = CycElem.zero(order_target)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + CycElem.root(order_target, step * i) * c
        return out

    def descend(self, order_target):
        """Preimage in Q(eps_target) under embed, or None if not in the image."""
        if self.order % order_target != 0:
            raise OrderMismatchError(
                "order %d does not divide %d" % (order_target, self.order)
            )
        if self.order == order_target:
            return self
        rows, pivots, back = _descent_basis(self.order, order_target)
        # express self in the echelonized embedded basis
        target = list(self.coeffs)
        xs = [mpq(0)] * len(rows)
        for i, (row, piv) in enumerate(zip(rows, pivots)):
            c = target[piv]
            xs[i] = c
            if c:
                for j in range(len(target)):
                    target[j] -= c * row[j]
        if any(target):
            return None
        phi_t = euler_phi(order_target)
        out = [mpq(0)] * phi_t
        for i, x in enumerate(xs):
            if x:
                for j in range(phi_t):
                    out[j] += x * back[i][j]
        return CycElem(order_target, out)

    # -- io ---------------------------------------------------------------

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [[int(c.numerator), int(c.denominator)] for c in self.coeffs],
        }

    @staticmethod
    def from_json(data):
        return CycElem(data["order"], [mpq(n, d) for n, d in data["coeffs"]])

    def __repr__(self):
        if self.is_rational:
            return str(self.coeffs[0])
        root = self.as_root_of_unity()
        if root is not None:
            sign, k = root
            body = "e" if k == 1 else "e^%d" % k
            return body if sign > 0 else "-" + body
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s·e" % c)
            else:
                parts.append("%s·e^%d" % (c, i))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _descent_basis(order_big, order_small):
    """Gauss-Jordan data for the embedded power basis of Q(eps_small).

    Returns (rows, pivots, back): ``rows`` is the reduced echelon form of the
    embedded basis vectors, ``pivots`` their pivot columns, and ``back[i]``
    the coordinates of echelon row i in the power basis of the subfield.
    """
    phi_s = euler_phi(order_small)
    rows = [
        list(CycElem.root(order_small, i).embed(order_big).coeffs)
        for i in range(phi_s)
    ]
    n = len(rows[0])
    trans = [[mpq(1) if i == j else mpq(0) for j in range(phi_s)] for i in range(phi_s)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, phi_s) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        trans[r], trans[piv] = trans[piv], trans[r]
        inv = 1 / rows[r][col]
        rows[r] = [c * inv for c in rows[r]]
        trans[r] = [c * inv for c in trans[r]]
        for i in range(phi_s):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                trans[i] = [a - f * b for a, b in zip(trans[i], trans[r])]
        pivots.append(col)
        r += 1
        if r == phi_s:
            break
    assert r == phi_s, "embedded basis must stay linearly independent"
    return (
        tuple(tuple(row) for row in rows),
        tuple(pivots),
        tuple(tuple(t) for t in trans),
    )
