"""Discriminant pipeline: basis over the center, internal trace, determinant,
and the two closed-form predictions it is compared against.

With L_j chosen so that x_j^{L_j} and y_j^{L_j} are central, the algebra is a
free module over C = T[c, x_j^{L_j}, y_j^{L_j}] with basis the normal
monomials y^r x^s, 0 <= r_j, s_j < L_j.  Left multiplication embeds the
algebra into Lambda x Lambda matrices over C (Lambda = prod L_j^2), trace and
determinant of the pairing matrix [tr(b_i b_j)] give the discriminant, and
the closed forms predict it up to a unit:

  * free case, L_j = d_j, unit constant:  eta * prod_j Z_j^{N^2 (d_j-1)/d_j}
    with N = d_1..d_n and eta = (N prod_j [d_j-1]_{eps_j}!)^{N^2};
  * formal-c case, arbitrary valid L: a recursion on n peeling off the first
    generator pair, with a product over the (L_1/d_1)-th roots of unity that
    collapses into the base cyclotomic ring.
"""

import time
from math import gcd, lcm
from itertools import product

from .cyclotomic import CycElem
from .polyring import MPoly, VarTable, bareiss_determinant, is_associate
from .params import ParamError
from .weyl import WeylAlgebra
from .center import center_ring, CenterPoly, Z_center_poly


class RecognitionError(RuntimeError):
    """An element expected to lie in the center module failed to decompose."""


def check_L(params, L):
    L = tuple(L)
    if len(L) != params.n:
        raise ParamError("need one L_j per index")
    for j in range(params.n):
        if L[j] % params.min_central_power(j, "x") or \
                L[j] % params.min_central_power(j, "y"):
            raise ParamError(
                "L_%d = %d does not make x,y powers central" % (j + 1, L[j]))
    return L


class CBasis:
    """The free C-module basis of residue monomials, with trace caching."""

    def __init__(self, algebra, L, convention="y-first"):
        self.algebra = algebra
        self.L = check_L(algebra.params, L)
        if convention not in ("y-first", "x-first"):
            raise ValueError("unknown basis convention")
        self.convention = convention
        n = algebra.n
        self.residues = [
            (vec[:n], vec[n:])
            for vec in product(*[range(Lj) for Lj in self.L + self.L])
        ]
        self.index = {r: i for i, r in enumerate(self.residues)}
        self.size = len(self.residues)
        self.cring = center_ring(algebra.params)
        self._tr_cache = {}

    def element(self, i):
        b, a = self.residues[i]
        if self.convention == "y-first":
            return self.algebra.monomial(b, a)
        A = self.algebra
        out = A.one()
        for j in range(A.n):
            if a[j]:
                out = out * A.x(j + 1) ** a[j]
            if b[j]:
                out = out * A.y(j + 1) ** b[j]
        return out

    def _decompose(self, key):
        """Split a normal monomial into (center-monomial exponents, residue)."""
        b, a = key
        beta = tuple(bj // Lj for bj, Lj in zip(b, self.L))
        alpha = tuple(aj // Lj for aj, Lj in zip(a, self.L))
        r = tuple(bj % Lj for bj, Lj in zip(b, self.L))
        s = tuple(aj % Lj for aj, Lj in zip(a, self.L))
        return beta, alpha, (r, s)

    def _center_monomial(self, beta, alpha, coeff):
        exps = [0] * len(self.cring)
        for j in range(self.algebra.n):
            exps[self.cring.index("Y%d" % (j + 1))] = beta[j]
            exps[self.cring.index("X%d" % (j + 1))] = alpha[j]
        return MPoly.monomial(self.cring, exps, CycElem.one(self.algebra.D)) \
            * coeff.cast_to(self.cring)

    def tr_mono(self, key):
        """Internal trace of the normal monomial with exponent pair key."""
        cached = self._tr_cache.get(key)
        if cached is not None:
            return cached
        A = self.algebra
        total = MPoly.zero(self.cring)
        for res in self.residues:
            for tkey, coeff in A.mono_product(key, res).items():
                beta, alpha, trs = self._decompose(tkey)
                if trs == res:
                    total = total + self._center_monomial(beta, alpha, coeff)
        self._tr_cache[key] = total
        return total

    def trace(self, u):
        out = MPoly.zero(self.cring)
        for key, coeff in u.terms.items():
            out = out + coeff.cast_to(self.cring) * self.tr_mono(key)
        return out


def regular_representation(u, basis):
    """Left multiplication by u as a matrix over the center (y-first basis)."""
    if basis.convention != "y-first":
        raise ValueError("matrix form is only computed in the y-first basis")
    A = basis.algebra
    size = basis.size
    zero = MPoly.zero(basis.cring)
    M = [[zero] * size for _ in range(size)]
    for k, res in enumerate(basis.residues):
        col = u * A.monomial(*res)
        for tkey, coeff in col.terms.items():
            beta, alpha, trs = basis._decompose(tkey)
            j = basis.index.get(trs)
            if j is None:
                raise RecognitionError("residue out of basis range")
            M[j][k] = M[j][k] + basis._center_monomial(beta, alpha, coeff)
    return M


def internal_trace(u, basis):
    return CenterPoly(basis.algebra.params, basis.trace(u), basis.L)


def trace_matrix(basis):
    """The Lambda x Lambda pairing matrix [tr(b_i b_j)]."""
    A = basis.algebra
    size = basis.size
    M = [[None] * size for _ in range(size)]
    if basis.convention == "y-first":
        for i, ki in enumerate(basis.residues):
            for j, kj in enumerate(basis.residues):
                t = MPoly.zero(basis.cring)
                for tkey, coeff in A.mono_product(ki, kj).items():
                    t = t + coeff.cast_to(basis.cring) * basis.tr_mono(tkey)
                M[i][j] = t
    else:
        els = [basis.element(i) for i in range(size)]
        for i in range(size):
            for j in range(size):
                M[i][j] = basis.trace(els[i] * els[j])
    return M


def discriminant(params, L, convention="y-first"):
    """The raw determinant of the trace pairing; defined up to a unit."""
    A = WeylAlgebra(params)
    basis = CBasis(A, L, convention)
    det = bareiss_determinant(trace_matrix(basis))
    return CenterPoly(params, det, basis.L)


# -- closed forms ----------------------------------------------------------

def _q_factorial(k, eps, order):
    """[k]_eps! with [i]_eps = 1 + eps + ... + eps^{i-1}."""
    out = CycElem.one(order)
    for i in range(1, k + 1):
        bracket = CycElem.zero(order)
        for p in range(i):
            bracket = bracket + eps ** p
        out = out * bracket
    return out


def theorem_b_eta(params):
    """The unit constant of the free-case closed form, computed two ways."""
    D = params.D
    N = 1
    for _, d in params.eps:
        N *= d
    base = CycElem.rational(N, D)
    alt = CycElem.rational(N * N, D)
    for j in range(params.n):
        eps = params.eps_scalar(j)
        d = params.eps[j][1]
        base = base * _q_factorial(d - 1, eps, D)
        inv = ((CycElem.one(D) - eps) ** (d - 1)).inverse()
        alt = alt * inv
    eta = base ** (N * N)
    if eta != alt ** (N * N):
        raise ArithmeticError("the two unit-constant formulas disagree")
    return eta


def theorem_b_rhs(params):
    """eta * prod_j Z_j^{N^2 (d_j - 1)/d_j} for L_j = d_j (free case)."""
    if not params.is_free_over_center():
        raise ParamError("the free-case closed form needs the freeness criterion")
    N = 1
    for _, d in params.eps:
        N *= d
    ring = center_ring(params)
    out = MPoly.constant(ring, theorem_b_eta(params))
    for j in range(1, params.n + 1):
        d = params.eps[j - 1][1]
        out = out * Z_center_poly(params, j).poly ** (N * N * (d - 1) // d)
    return CenterPoly(params, out, [d for _, d in params.eps])


def _t71_ring(params):
    names = ("c", "w") \
        + tuple("Y%d" % (j + 1) for j in range(params.n)) \
        + tuple("X%d" % (j + 1) for j in range(params.n))
    return VarTable(names, frozenset())


def theorem_71_rhs(params, L):
    """The recursive closed form for the discriminant over C = T[c, x^L, y^L].

    Peels off generator pairs from the left.  Each level multiplies a
    prefactor by a product over the (L_1/d_1)-th roots of unity of the lower
    level's value with c^{d_1} replaced by c^{d_1} - zeta^i (1-eps_1)^{d_1} w,
    where w stands for y_1^{d_1} x_1^{d_1}; the product is a polynomial in
    w^{L_1/d_1}, which is rewritten as Y_1 X_1.  Root-of-unity arithmetic runs
    in an enlarged cyclotomic ring and the result is descended at the end.
    """
    if not params.c_formal:
        raise ParamError("the recursive closed form lives in formal-c mode")
    L = check_L(params, L)
    n = params.n
    Dbig = lcm(params.D, *[L[j] // params.eps[j][1] for j in range(n)])
    ring = _t71_ring(params)
    c = MPoly.variable(ring, "c", Dbig)
    w = MPoly.variable(ring, "w", Dbig)
    one = MPoly.constant(ring, CycElem.one(Dbig))

    def level(k):
        if k == n:
            return one
        sub = level(k + 1)
        d1 = params.eps[k][1]
        L1 = L[k]
        M = L1 // d1
        Lam = 1
        for j in range(k, n):
            Lam *= L[j] ** 2
        eps1 = params.eps_scalar(k).embed(Dbig)
        omd = CycElem.one(Dbig) - eps1
        Y1 = MPoly.variable(ring, "Y%d" % (k + 1), Dbig)
        X1 = MPoly.variable(ring, "X%d" % (k + 1), Dbig)
        # prefactor
        theta = CycElem.rational(L1, Dbig) ** Lam * \
            (CycElem.rational(L1, Dbig) * (omd ** (d1 - 1)).inverse()) ** Lam
        pref = MPoly.constant(ring, theta) \
            * (X1 * Y1) ** ((L1 - d1) * Lam // L1) \
            * (c ** L1 - X1 * Y1 * (omd ** L1)) ** ((d1 - 1) * Lam // L1)
        # zeta-product over the lower level
        by_cdeg = sub.coeff_map("c")
        if any(e % d1 for e in by_cdeg):
            raise RecognitionError(
                "lower-level value is not a polynomial in c^%d" % d1)
        prod_total = one
        for i in range(M):
            zeta = CycElem.root(Dbig, (Dbig // M) * i)
            repl = c ** d1 - w * (omd ** d1 * zeta)
            factor = MPoly.zero(ring)
            for e, coeffpoly in by_cdeg.items():
                factor = factor + coeffpoly * repl ** (e // d1)
            prod_total = prod_total * factor ** (d1 * L1)
        # collapse w^M into Y1 X1
        wi = ring.index("w")
        collapsed = MPoly(ring)
        for exps, coeff in prod_total.terms.items():
            if exps[wi] % M:
                raise RecognitionError(
                    "root-of-unity product did not symmetrize in w")
            p = exps[wi] // M
            new = list(exps)
            new[wi] = 0
            new[ring.index("Y%d" % (k + 1))] += p
            new[ring.index("X%d" % (k + 1))] += p
            collapsed = collapsed + MPoly.monomial(ring, new, coeff)
        return pref * collapsed

    result = level(0)
    # descend coefficients to the base cyclotomic ring and drop w
    cring = center_ring(params)
    out = MPoly.zero(cring)
    for exps, coeff in result.terms.items():
        named = dict(zip(ring.names, exps))
        if named["w"]:
            raise RecognitionError("auxiliary variable survived the collapse")
        small = coeff if Dbig == params.D else coeff.descend(params.D)
        if small is None:
            raise RecognitionError(
                "coefficient does not lie in the base cyclotomic ring")
        full = [named.get(v, 0) for v in cring.names]
        out = out + MPoly.monomial(cring, full, small)
    return CenterPoly(params, out, L)


def verify_discriminant(params, L, which):
    """Compute the determinant and the chosen closed form; compare up to unit."""
    t0 = time.monotonic()
    if which == "theorem-b":
        rhs = theorem_b_rhs(params)
        L = [d for _, d in params.eps]
    elif which == "theorem-71":
        rhs = theorem_71_rhs(params, L)
    else:
        raise ValueError("unknown closed form %r" % which)
    lhs = discriminant(params, L)
    witness = is_associate(lhs.poly, rhs.poly)
    lam = 1
    for Lj in lhs.L:
        lam *= Lj * Lj
    return {
        "lambda": lam,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
        "associate": witness is not None,
        "unit": None if witness is None else
            {"certified": witness.certified, "factor": repr(witness.factor)},
        "lhs": repr(lhs.poly),
        "rhs": repr(rhs.poly),
    }
