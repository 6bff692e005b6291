"""Parameter data for a multiparameter quantized Weyl algebra at roots of unity.

The defining data is a pair (E, B): root-of-unity scalars eps_j given by
reduced fractions m_j/d_j (with d_j >= 2, so eps_j != 1) and a multiplicatively
skew-symmetric matrix of scalars beta_jk given by reduced fractions
m_jk/d_jk.  All scalars live in the single cyclotomic ring of order
D = lcm(d_j, d_jk), which this module computes along with the freeness
criterion, derived commutation denominators, minimal central powers, and
membership in the exponent monoid that indexes the center.
"""

import json
from math import gcd, lcm

from gmpy2 import mpq

from .cyclotomic import CycElem


class ParamError(ValueError):
    pass


def _reduce(m, d):
    if d == 0:
        raise ParamError("zero denominator")
    if d < 0:
        m, d = -m, -d
    g = gcd(m, d)
    if g:
        m, d = m // g, d // g
    return m % d, d


class WeylParams:
    """Validated (E, B) data plus mode flags.

    eps[j] and beta[j][k] hold reduced fraction pairs (m, d); indices are
    0-based internally, 1-based in JSON and rendered output.
    """

    def __init__(self, n, eps, beta, c_formal=False, q_deformed=False,
                 formal_units=()):
        if n < 1:
            raise ParamError("n must be positive")
        if len(eps) != n:
            raise ParamError("need exactly n eps entries")
        self.n = n
        self.eps = []
        for m, d in eps:
            m, d = _reduce(m, d)
            if d < 2:
                raise ParamError("eps_j = 1 is not allowed (d_j must be >= 2)")
            self.eps.append((m, d))
        self.beta = [[(0, 1)] * n for _ in range(n)]
        for j in range(n):
            for k in range(j + 1, n):
                m, d = _reduce(*beta[j][k])
                self.beta[j][k] = (m, d)
                self.beta[k][j] = _reduce(-m, d)
        # only the upper triangle of the input is read; the lower triangle and
        # the diagonal are forced by skew-symmetry and beta_jj = 1
        self.D = lcm(*[d for _, d in self.eps],
                     *[d for row in self.beta for _, d in row])
        self.c_formal = bool(c_formal)
        self.q_deformed = bool(q_deformed)
        self.formal_units = tuple(formal_units)
        if self.q_deformed and not self.is_free_over_center():
            raise ParamError(
                "q-deformation requires the freeness criterion "
                "(all d_j, d_jk divide d_n in staircase order)")

    # -- scalars ----------------------------------------------------------

    def eps_scalar(self, j, order=None):
        """eps_j as a cyclotomic element (default order D)."""
        D = order or self.D
        m, d = self.eps[j]
        return CycElem.root(D, (D // d) * m % D)

    def beta_scalar(self, j, k, order=None):
        """beta_jk as a cyclotomic element; beta_jj = 1."""
        D = order or self.D
        m, d = self.beta[j][k]
        return CycElem.root(D, (D // d) * m % D)

    # -- structure predicates ---------------------------------------------

    def is_free_over_center(self):
        """True iff every d_j and d_jk divides d_l for all l >= j.

        Under this condition D = d_n and the algebra is free over its center
        with the center generated by the d_j-th powers of the generators.
        """
        for j in range(self.n):
            for l in range(j, self.n):
                dl = self.eps[l][1]
                if dl % self.eps[j][1] != 0:
                    return False
                for k in range(self.n):
                    if dl % self.beta[j][k][1] != 0:
                        return False
        return True

    def d_prime(self, j, k):
        """Reduced denominator of m_j/d_j + m_jk/d_jk for the pair {j,k}.

        The value is symmetric; for k < j it is defined as d_prime(k, j).
        """
        if j == k:
            raise ParamError("d_prime needs distinct indices")
        if k < j:
            j, k = k, j
        mj, dj = self.eps[j]
        mjk, djk = self.beta[j][k]
        s = mpq(mj, dj) + mpq(mjk, djk)
        return int(s.denominator)

    def min_central_power(self, j, which):
        """Smallest L with x_j^L (or y_j^L) central."""
        if which == "x":
            return lcm(self.eps[j][1],
                       *[self.d_prime(j, k) for k in range(self.n) if k != j])
        if which == "y":
            return lcm(self.eps[j][1],
                       *[self.beta[j][k][1] for k in range(self.n) if k != j])
        raise ParamError("which must be 'x' or 'y'")

    def in_CEB(self, b, a):
        """Membership of the exponent vector (b, a) in the central monoid.

        Requires d_j | (b_j - a_j) for all j and, for every k, the total
        commutation exponent of the monomial against x_k to be integral.
        """
        n = self.n
        if len(b) != n or len(a) != n:
            raise ParamError("exponent vectors must have length n")
        for j in range(n):
            if (b[j] - a[j]) % self.eps[j][1] != 0:
                return False
        for k in range(n):
            total = mpq(0)
            for j in range(n):
                mjk, djk = self.beta[j][k]
                total += (b[j] - a[j]) * mpq(mjk, djk)
            mk, dk = self.eps[k]
            total += sum(a[k:]) * mpq(mk, dk)
            if total.denominator != 1:
                return False
        return True

    # -- serialization -----------------------------------------------------

    def to_json(self):
        data = {
            "n": self.n,
            "eps": [[m, d] for m, d in self.eps],
            "beta": [[j + 1, k + 1, m, d]
                     for j in range(self.n) for k in range(j + 1, self.n)
                     for m, d in [self.beta[j][k]] if (m, d) != (0, 1)],
            "mode": {},
        }
        if self.c_formal:
            data["mode"]["c_formal"] = True
        if self.q_deformed:
            data["mode"]["q_deformed"] = True
        if self.formal_units:
            data["mode"]["formal_units"] = list(self.formal_units)
        return data

    def __repr__(self):
        return "WeylParams(n=%d, eps=%r, D=%d)" % (self.n, self.eps, self.D)

    def __eq__(self, other):
        return (isinstance(other, WeylParams) and self.n == other.n
                and self.eps == other.eps and self.beta == other.beta
                and self.c_formal == other.c_formal
                and self.q_deformed == other.q_deformed
                and self.formal_units == other.formal_units)

    def __hash__(self):
        return hash((self.n, tuple(self.eps),
                     tuple(tuple(r) for r in self.beta),
                     self.c_formal, self.q_deformed, self.formal_units))


def validate(raw):
    """Build a WeylParams from parsed JSON data (see to_json for the shape)."""
    if not isinstance(raw, dict):
        raise ParamError("parameter data must be a JSON object")
    try:
        n = int(raw["n"])
        eps = [(int(m), int(d)) for m, d in raw["eps"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParamError("malformed parameter data: %s" % e)
    beta = [[None] * n for _ in range(n)]
    for entry in raw.get("beta", []):
        try:
            j, k, m, d = (int(v) for v in entry)
        except (TypeError, ValueError) as e:
            raise ParamError("malformed beta entry: %s" % e)
        if not (1 <= j <= n and 1 <= k <= n) or j == k:
            raise ParamError("beta indices out of range")
        if beta[j - 1][k - 1] is not None:
            raise ParamError("duplicate beta entry for (%d,%d)" % (j, k))
        beta[j - 1][k - 1] = (m, d)
    for j in range(n):
        for k in range(j + 1, n):
            if beta[j][k] is None and beta[k][j] is not None:
                m, d = beta[k][j]
                beta[j][k] = (-m, d)
            elif beta[j][k] is None:
                beta[j][k] = (0, 1)
            elif beta[k][j] is not None:
                m, d = beta[k][j]
                if _reduce(-m, d) != _reduce(*beta[j][k]):
                    raise ParamError("beta is not skew-symmetric")
    mode = raw.get("mode", {}) or {}
    return WeylParams(
        n, eps, beta,
        c_formal=mode.get("c_formal", False),
        q_deformed=mode.get("q_deformed", False),
        formal_units=mode.get("formal_units", ()),
    )


def load(path):
    with open(path) as f:
        return validate(json.load(f))
