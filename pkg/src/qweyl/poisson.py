"""Poisson structure on the center from the q-deformation.

The algebra is the specialization at q = eps of a deformation over T[q^{±1}]
in which eps_j becomes q^{d_n m_j/d_j} and beta_jk becomes q^{d_n m_jk/d_jk}
(all exponents integral thanks to the freeness criterion).  For central f, g
with lifts c_f, c_g, the bracket is

    {f, g} = sigma( (c_f c_g - c_g c_f) / (q - eps) ),

where sigma sets q to eps.  Canonical lifts send X^alpha Y^beta to
ytilde^{beta d} xtilde^{alpha d}.  verify_prop33 checks the resulting bracket
table against its closed form, exactly (no unit slack).
"""

from dataclasses import dataclass

from .cyclotomic import CycElem
from .polyring import MPoly, NotDivisibleError
from .params import WeylParams, ParamError
from .weyl import WeylAlgebra, WeylElem
from .center import center_ring, CenterPoly, Z_center_poly, to_center_poly


class LiftError(ValueError):
    pass


def q_deform(params):
    """The q-mode counterpart of a free-over-center parameter set."""
    if params.q_deformed:
        return params
    return WeylParams(params.n, params.eps,
                      params.beta, c_formal=params.c_formal,
                      q_deformed=True, formal_units=params.formal_units)


def undeform(params):
    if not params.q_deformed:
        return params
    return WeylParams(params.n, params.eps, params.beta,
                      c_formal=params.c_formal,
                      formal_units=params.formal_units)


def specialize(u, target_algebra=None):
    """Set q = eps_D coefficient-wise; an algebra map onto the base algebra."""
    A = u.algebra
    if not A.params.q_deformed:
        return u
    B = target_algebra or WeylAlgebra(undeform(A.params))
    eps = CycElem.root(A.D)
    qi = A.coeff_ring.index("q")
    out = {}
    for key, coeff in u.terms.items():
        newc = MPoly.zero(B.coeff_ring)
        for exps, c in coeff.terms.items():
            rest = [e for i, e in enumerate(exps) if i != qi]
            newc = newc + MPoly.monomial(B.coeff_ring, rest,
                                         c * eps ** (exps[qi] % A.D))
        if not newc.is_zero:
            out[key] = newc
    return WeylElem(B, out)


@dataclass
class CentralLift:
    target: CenterPoly
    lift: WeylElem


def canonical_lift(z, q_algebra=None):
    """Lift a polynomial in X_j, Y_j (L_j = d_j, no c) monomial-wise."""
    params = z.params
    Aq = q_algebra or WeylAlgebra(q_deform(params))
    n = params.n
    for j in range(n):
        if z.L[j] != params.eps[j][1]:
            raise LiftError("canonical lifts need L_j = d_j")
    ring = z.poly.ring
    out = Aq.zero()
    for exps, coeff in z.poly.terms.items():
        named = dict(zip(ring.names, exps))
        if any(named.get(v, 0) for v in ring.names
               if not (v.startswith("X") or v.startswith("Y"))):
            raise LiftError("only X_j, Y_j monomials have canonical lifts")
        b = tuple(named["Y%d" % (j + 1)] * z.L[j] for j in range(n))
        a = tuple(named["X%d" % (j + 1)] * z.L[j] for j in range(n))
        out = out + Aq.monomial(b, a, Aq.coeff_const(coeff))
    return CentralLift(z, out)


def lift_monomials(u, q_algebra):
    """The naive q-lift of an arbitrary element: same normal monomials."""
    out = {}
    for key, coeff in u.terms.items():
        out[key] = coeff.cast_to(q_algebra.coeff_ring, q_algebra.D)
    return WeylElem(q_algebra, out)


def _divide_q_minus_eps(u):
    """Divide every coefficient by (q - eps); error if some term is not
    divisible, which signals that the inputs were not central."""
    A = u.algebra
    eps = CycElem.root(A.D)
    out = {}
    for key, coeff in u.terms.items():
        try:
            out[key] = coeff.divide_by_linear("q", eps)
        except NotDivisibleError:
            raise LiftError("lifts do not commute at q = eps")
    return WeylElem(A, out)


def _bracket_of_lifts(c1, c2, L):
    comm = c1 * c2 - c2 * c1
    quotient = specialize(_divide_q_minus_eps(comm))
    cp = to_center_poly(quotient, L)
    if cp is None:
        raise LiftError("bracket value does not lie in the center module")
    return cp


def _mono_bracket(params, Aq, ring, L, exps1, exps2):
    """Bracket of two canonical-lift monomials, memoized per algebra."""
    cache = Aq.__dict__.setdefault("_poisson_mono_cache", {})
    key = (tuple(exps1), tuple(exps2), tuple(L))
    hit = cache.get(key)
    if hit is not None:
        return hit
    one = CycElem.one(params.D)
    m1 = CenterPoly(params, MPoly.monomial(ring, list(exps1), one), L)
    m2 = CenterPoly(params, MPoly.monomial(ring, list(exps2), one), L)
    got = _bracket_of_lifts(canonical_lift(m1, Aq).lift,
                            canonical_lift(m2, Aq).lift, L).poly
    cache[key] = got
    return got


def poisson_bracket(z1, z2, q_algebra=None, lifts=None):
    """{z1, z2} as a CenterPoly; custom lifts may be supplied for testing."""
    params = z1.params
    Aq = q_algebra or WeylAlgebra(q_deform(params))
    if lifts is not None:
        return _bracket_of_lifts(lifts[0], lifts[1], z1.L)
    # the bracket is bilinear over the scalars and the canonical lift is
    # monomial-wise, so expand over monomial pairs and reuse the cache
    ring = z1.poly.ring
    out = MPoly.zero(ring)
    for exps1, c1 in z1.poly.terms.items():
        for exps2, c2 in z2.poly.terms.items():
            part = _mono_bracket(params, Aq, ring, z1.L, exps1, exps2)
            if not part.is_zero:
                out = out + part * (c1 * c2)
    return CenterPoly(params, out, z1.L)


def hamiltonian_derivation(lift, u, q_algebra=None):
    """The derivation a -> sigma([c, a~]/(q - eps)) attached to a lift c."""
    Aq = lift.lift.algebra
    a_tilde = lift_monomials(u, Aq)
    comm = lift.lift * a_tilde - a_tilde * lift.lift
    return specialize(_divide_q_minus_eps(comm), u.algebra)


# -- the closed-form bracket table ----------------------------------------

def _XY(ring, name, D):
    return MPoly.variable(ring, name, D)


def prop33_table(params):
    """Expected {g1, g2} for g in {X_j, Y_j, Z_j}, as center polynomials."""
    if not params.is_free_over_center():
        raise ParamError("the bracket table needs the freeness criterion")
    n = params.n
    D = params.D
    ring = center_ring(params)
    eps_inv = CycElem.root(D, D - 1)
    X = [_XY(ring, "X%d" % (j + 1), D) for j in range(n)]
    Y = [_XY(ring, "Y%d" % (j + 1), D) for j in range(n)]
    Z = [Z_center_poly(params, j).poly for j in range(n + 1)]
    def m_signed(j, k):
        # signed residue of the commutation fraction, matching the engine's
        # convention: the stored value for j < k, its negative for j > k
        if j < k:
            return params.beta[j][k][0]
        return -params.beta[k][j][0]

    table = {}
    for j in range(n):
        mj, dj = params.eps[j]
        # {X_j, Y_j}; the constant term carries z_{j-1}^{d_j}, which equals
        # Z_{j-1} raised to d_j/d_{j-1} (these coincide only for equal d's)
        prev_d = params.eps[j - 1][1] if j else 1
        inner = X[j] * Y[j] - Z[j] ** (dj // prev_d) * \
            ((CycElem.one(D) - params.eps_scalar(j)) ** dj).inverse()
        table[("X", j + 1, "Y", j + 1)] = \
            inner * (eps_inv * CycElem.rational(mj * dj * D, D))
        for k in range(n):
            mk, dk = params.eps[k]
            djk = params.beta[j][k][1]
            mjk = m_signed(j, k)
            scale = CycElem.rational(mjk * dj * dk * D // djk, D) * eps_inv
            if k != j:
                table[("Y", j + 1, "Y", k + 1)] = Y[j] * Y[k] * scale
            if j < k:
                table[("X", j + 1, "Y", k + 1)] = X[j] * Y[k] * (-scale)
                mix = mj * djk * dk + mjk * dj * dk  # d_j d_k d_n (m_j/d_j + m_jk/d_jk)
                table[("X", j + 1, "X", k + 1)] = X[j] * X[k] * \
                    (CycElem.rational(mix * D // djk, D) * eps_inv)
            if j > k:
                mkj, dkj = params.beta[k][j]
                mix = mk * dkj * dj + mkj * dj * dk
                table[("X", j + 1, "Y", k + 1)] = X[j] * Y[k] * \
                    (CycElem.rational(mix * D // dkj, D) * eps_inv)
    for j in range(1, n + 1):
        dj = params.eps[j - 1][1]
        for k in range(1, n + 1):
            mk = params.eps[k - 1][0]
            delta = 1 if k <= j else 0
            scale = CycElem.rational(delta * mk * dj * D, D) * eps_inv
            table[("Z", j, "X", k)] = Z[j] * X[k - 1] * (-scale)
            table[("Z", j, "Y", k)] = Z[j] * Y[k - 1] * scale
        for k in range(1, n + 1):
            table[("Z", j, "Z", k)] = MPoly.zero(ring)
    return table


def verify_prop33(params):
    """Compute every tabled bracket through lifts and compare exactly."""
    n = params.n
    ring = center_ring(params)
    Aq = WeylAlgebra(q_deform(params))
    L = [d for _, d in params.eps]

    def as_cp(poly):
        return CenterPoly(params, poly, L)

    gens = {}
    for j in range(1, n + 1):
        gens[("X", j)] = as_cp(_XY(ring, "X%d" % j, params.D))
        gens[("Y", j)] = as_cp(_XY(ring, "Y%d" % j, params.D))
        gens[("Z", j)] = as_cp(Z_center_poly(params, j).poly)
    expected = prop33_table(params)
    report = {}
    for (s1, j, s2, k), rhs in expected.items():
        lhs = poisson_bracket(gens[(s1, j)], gens[(s2, k)], Aq)
        report["{%s%d,%s%d}" % (s1, j, s2, k)] = (lhs.poly == rhs)
    return report
