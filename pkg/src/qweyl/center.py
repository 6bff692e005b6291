"""The center: membership tests, spanning monomials, and the Z_j recursion.

The center of the algebra is spanned by the elements

    y^{(b-a)_+} * prod_j z_j^{min(b_j, a_j)} * x^{(a-b)_+}

indexed by exponent vectors (b, a) in the central monoid (see
WeylParams.in_CEB).  Under the freeness criterion it is a polynomial ring on
the d_j-th powers of the generators, and the central elements Z_j defined by

    Z_0 = 1,   Z_j = -(1 - eps_j)^{d_j} Y_j X_j + Z_{j-1}^{d_j / d_{j-1}}

(with d_0 = 1, X_j = x_j^{d_j}, Y_j = y_j^{d_j}) satisfy z_j^{d_j} = Z_j.
"""

from itertools import product

from .cyclotomic import CycElem
from .polyring import MPoly, VarTable
from .params import ParamError
from .weyl import WeylAlgebra, WeylElem


def center_ring(params):
    """Variables for center polynomials: the mode's formal variables plus
    Y1..Yn, X1..Xn standing for fixed central powers of the generators."""
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
    names += ["Y%d" % (j + 1) for j in range(params.n)]
    names += ["X%d" % (j + 1) for j in range(params.n)]
    return VarTable(tuple(names), frozenset(invertible))


class CenterPoly:
    """An MPoly over center_ring together with the powers L_j it abbreviates."""

    def __init__(self, params, poly, L):
        self.params = params
        self.poly = poly
        self.L = tuple(L)

    def __eq__(self, other):
        return (isinstance(other, CenterPoly) and self.params == other.params
                and self.L == other.L and self.poly == other.poly)

    def __repr__(self):
        return repr(self.poly)

    def to_weyl(self, algebra=None):
        """Expand back into the algebra: Y_j -> y_j^{L_j}, X_j -> x_j^{L_j}."""
        A = algebra or WeylAlgebra(self.params)
        n = self.params.n
        out = A.zero()
        for exps, coeff in self.poly.terms.items():
            named = dict(zip(self.poly.ring.names, exps))
            b = tuple(named["Y%d" % (j + 1)] * self.L[j] for j in range(n))
            a = tuple(named["X%d" % (j + 1)] * self.L[j] for j in range(n))
            cexps = [named.get(v, 0) for v in A.coeff_ring.names]
            cpoly = MPoly.monomial(A.coeff_ring, cexps, CycElem.one(A.D)) * \
                MPoly.constant(A.coeff_ring, coeff)
            out = out + A.monomial(b, a, cpoly)
        return out


def is_central(u):
    """True iff u commutes with every generator."""
    A = u.algebra
    for j in range(1, A.n + 1):
        if not u.commutator(A.x(j)).is_zero:
            return False
        if not u.commutator(A.y(j)).is_zero:
            return False
    return True


def center_spanning_monomials(params, degree_bound):
    """All central-monoid exponent vectors (b, a) with total degree <= bound."""
    n = params.n
    found = []
    ranges = [range(degree_bound + 1)] * (2 * n)
    for vec in product(*ranges):
        if sum(vec) > degree_bound:
            continue
        b, a = vec[:n], vec[n:]
        if params.in_CEB(list(b), list(a)):
            found.append((b, a))
    found.sort(key=lambda e: (sum(e[0]) + sum(e[1]), e))
    return found


def spanning_element(algebra, b, a):
    """The central element y^{(b-a)_+} prod z_j^{min} x^{(a-b)_+}."""
    n = algebra.n
    out = algebra.monomial(
        tuple(max(bj - aj, 0) for bj, aj in zip(b, a)), (0,) * n)
    for j in range(1, n + 1):
        m = min(b[j - 1], a[j - 1])
        if m:
            out = out * algebra.z_element(j) ** m
    return out * algebra.monomial(
        (0,) * n, tuple(max(aj - bj, 0) for bj, aj in zip(b, a)))


def Z_center_poly(params, j):
    """The j-th central generator as a polynomial in Y_i X_i (free case)."""
    if not params.is_free_over_center():
        raise ParamError("Z_j requires the freeness criterion")
    ring = center_ring(params)
    D = params.D
    Z = MPoly.constant(ring, CycElem.one(D))
    prev_d = 1
    for i in range(j):
        d = params.eps[i][1]
        eps = params.eps_scalar(i)
        YX = MPoly.variable(ring, "Y%d" % (i + 1), D) * \
            MPoly.variable(ring, "X%d" % (i + 1), D)
        Z = YX * (-((CycElem.one(D) - eps) ** d)) + Z ** (d // prev_d)
        prev_d = d
    return CenterPoly(params, Z, [m for _, m in params.eps])


def to_center_poly(u, L):
    """Recognize u as a polynomial in y_j^{L_j}, x_j^{L_j}; None on failure."""
    params = u.algebra.params
    n = params.n
    ring = center_ring(params)
    out = MPoly.zero(ring)
    for (b, a), coeff in u.terms.items():
        if any(bj % Lj or aj % Lj for bj, aj, Lj in zip(b, a, L)):
            return None
        for exps, c in coeff.terms.items():
            named = dict(zip(u.algebra.coeff_ring.names, exps))
            full = [named.get(v, 0) for v in ring.names]
            for jj in range(n):
                full[ring.index("Y%d" % (jj + 1))] = b[jj] // L[jj]
                full[ring.index("X%d" % (jj + 1))] = a[jj] // L[jj]
            out = out + MPoly.monomial(ring, full, c)
    return CenterPoly(params, out, L)


def verify_specz(params, j):
    """Check z_j^{d_j} = Z_j and the single-step identity
    z_j^{d_j} = -(1-eps_j)^{d_j} y_j^{d_j} x_j^{d_j} + z_{j-1}^{d_j}."""
    if not params.is_free_over_center():
        raise ParamError("verification requires the freeness criterion")
    A = WeylAlgebra(params)
    if j == 0:
        return True
    d = params.eps[j - 1][1]
    eps = params.eps_scalar(j - 1)
    zd = A.z_element(j) ** d
    n = A.n
    ej = tuple(d if i == j - 1 else 0 for i in range(n))
    step = A.monomial(ej, ej, A.coeff_const(-((CycElem.one(A.D) - eps) ** d))) \
        + A.z_element(j - 1) ** d
    if zd != step:
        return False
    cp = to_center_poly(zd, [m for _, m in params.eps])
    return cp is not None and cp.poly == Z_center_poly(params, j).poly


def _nullspace(rows, ncols, order):
    """Nullspace basis of a CycElem matrix, vectors as tuples."""
    mat = [list(r) for r in rows]
    pivots = {}
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero),
                   None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    basis = []
    one = CycElem.one(order)
    zero = CycElem.zero(order)
    for c in range(ncols):
        if c in pivots:
            continue
        vec = [zero] * ncols
        vec[c] = one
        for pc, pr in pivots.items():
            vec[pc] = -mat[pr][c]
        basis.append(tuple(vec))
    return basis


def central_combinations(params, degree_bound):
    """Brute-force scan: a basis of central elements in the span of normal
    monomials of total degree <= bound, grouped by multidegree.

    Returns a list of WeylElem.  Central elements decompose into central
    homogeneous components, so the scan runs one multidegree at a time.
    """
    A = WeylAlgebra(params)
    n = A.n
    by_deg = {}
    for vec in product(*([range(degree_bound + 1)] * (2 * n))):
        if sum(vec) > degree_bound:
            continue
        b, a = vec[:n], vec[n:]
        deg = tuple(bj - aj for bj, aj in zip(b, a))
        by_deg.setdefault(deg, []).append((b, a))
    out = []
    gens = [A.x(j) for j in range(1, n + 1)] + \
        [A.y(j) for j in range(1, n + 1)]
    for deg in sorted(by_deg):
        monos = by_deg[deg]
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in gens:
            # commutator constraints: one row per resulting normal monomial,
            # columns indexed by the candidate monomials of this multidegree
            cols = {}
            for m in monos:
                comm = A.monomial(*m).commutator(g)
                for key, coeff in comm.terms.items():
                    cols.setdefault(key, {})[index[m]] = coeff
            for key, entries in cols.items():
                row = [CycElem.zero(A.D)] * len(monos)
                for i, c in entries.items():
                    # constant coefficients only: the scan runs in unit-c mode
                    row[i] = c.constant_value(A.D)
                rows.append(row)
        if not rows:
            rows = [[CycElem.zero(A.D)] * len(monos)]
        for vec in _nullspace(rows, len(monos), A.D):
            el = A.zero()
            for i, c in enumerate(vec):
                if not c.is_zero:
                    el = el + A.monomial(*monos[i], A.coeff_const(c))
            out.append(el)
    return out
