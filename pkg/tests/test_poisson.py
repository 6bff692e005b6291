import pytest

from qweyl.cyclotomic import CycElem
from qweyl.polyring import MPoly
from qweyl.params import WeylParams, ParamError
from qweyl.weyl import WeylAlgebra
from qweyl.center import center_ring, CenterPoly, Z_center_poly, is_central
from qweyl.poisson import (q_deform, undeform, specialize, canonical_lift,
                           lift_monomials, poisson_bracket,
                           hamiltonian_derivation, prop33_table,
                           verify_prop33, LiftError)


def make_params(n, eps, b12=None, **kw):
    beta = [[None] * n for _ in range(n)]
    if n == 2 and b12 is not None:
        beta[0][1] = b12
    return WeylParams(n, eps, beta, **kw)


P12 = make_params(1, [(1, 2)])


def cp(P, poly):
    return CenterPoly(P, poly, [d for _, d in P.eps])


def test_q_deform_roundtrip():
    Pq = q_deform(P12)
    assert Pq.q_deformed
    assert undeform(Pq) == P12
    with pytest.raises(ParamError):
        q_deform(make_params(2, [(1, 2), (1, 3)], (0, 1)))


def test_specialize_is_algebra_map():
    Aq = WeylAlgebra(q_deform(P12))
    A = WeylAlgebra(P12)
    u = Aq.x(1) * Aq.y(1)
    v = Aq.y(1) * 2 + Aq.scalar(Aq.root_pow(3))
    assert specialize(u * v, A) == specialize(u, A) * specialize(v, A)
    # q^3 becomes eps^3 = eps
    assert specialize(Aq.scalar(Aq.root_pow(3)), A) == \
        A.scalar(CycElem.root(2, 1))


def test_canonical_lift_specializes_back():
    ring = center_ring(P12)
    z = cp(P12, MPoly.variable(ring, "Y1", 2) *
           MPoly.variable(ring, "X1", 2))
    lift = canonical_lift(z)
    back = specialize(lift.lift)
    assert back == z.to_weyl(WeylAlgebra(P12))
    assert is_central(back)


def test_canonical_lift_rejects_z_terms():
    ring = center_ring(make_params(1, [(1, 2)], c_formal=True))
    Pc = make_params(1, [(1, 2)], c_formal=True)
    bad = CenterPoly(Pc, MPoly.variable(ring, "c", 2), [2])
    with pytest.raises(LiftError):
        canonical_lift(bad)


def test_noncentral_lifts_rejected():
    Aq = WeylAlgebra(q_deform(P12))
    ring = center_ring(P12)
    X = cp(P12, MPoly.variable(ring, "X1", 2))
    Y = cp(P12, MPoly.variable(ring, "Y1", 2))
    bad = (lift_monomials(WeylAlgebra(P12).x(1), Aq),
           canonical_lift(Y, Aq).lift)
    with pytest.raises(LiftError):
        poisson_bracket(X, Y, Aq, lifts=bad)


def test_bracket_rank_one_value():
    ring = center_ring(P12)
    X = cp(P12, MPoly.variable(ring, "X1", 2))
    Y = cp(P12, MPoly.variable(ring, "Y1", 2))
    val = poisson_bracket(X, Y)
    # {X, Y} = -eps^{-1} 2 (XY - (1-eps)^{-2}) with eps = -1:
    # 2 XY - 1/2, scaled by the table's d_j d_n m_j factor
    table = prop33_table(P12)
    assert val.poly == table[("X", 1, "Y", 1)]
    assert not val.poly.is_zero


def test_verify_prop33_instances():
    for P in (P12, make_params(1, [(1, 3)]),
              make_params(2, [(1, 2), (1, 4)], (1, 2))):
        rep = verify_prop33(P)
        assert rep and all(rep.values()), rep


def test_bracket_antisymmetry_and_leibniz():
    P = make_params(2, [(1, 2), (1, 2)], (1, 2))
    ring = center_ring(P)
    Aq = WeylAlgebra(q_deform(P))
    X1 = MPoly.variable(ring, "X1", 2)
    Y1 = MPoly.variable(ring, "Y1", 2)
    X2 = MPoly.variable(ring, "X2", 2)
    f, g, h = cp(P, X1), cp(P, Y1), cp(P, X2 + X1 * Y1)
    br = lambda u, v: poisson_bracket(u, v, Aq).poly
    assert (br(f, g) + br(g, f)).is_zero
    assert br(f, cp(P, g.poly * h.poly)) == \
        br(f, g) * h.poly + g.poly * br(f, h)
    jac = br(f, cp(P, br(g, h))) + br(g, cp(P, br(h, f))) + \
        br(h, cp(P, br(f, g)))
    assert jac.is_zero


def test_Z_poisson_normality():
    P = make_params(2, [(1, 2), (1, 2)], (1, 2))
    ring = center_ring(P)
    Aq = WeylAlgebra(q_deform(P))
    Z1 = Z_center_poly(P, 1)
    for name in ("X1", "Y1", "X2", "Y2"):
        g = cp(P, MPoly.variable(ring, name, 2))
        b = poisson_bracket(Z1, g, Aq)
        assert b.poly.exact_divide(Z1.poly) is not None


def test_hamiltonian_derivation_leibniz():
    Aq = WeylAlgebra(q_deform(P12))
    A = WeylAlgebra(P12)
    ring = center_ring(P12)
    lift = canonical_lift(cp(P12, MPoly.variable(ring, "X1", 2)), Aq)
    u = A.y(1)
    v = A.y(1) * A.x(1)
    duv = hamiltonian_derivation(lift, u * v)
    assert duv == hamiltonian_derivation(lift, u) * v + \
        u * hamiltonian_derivation(lift, v)


def test_prop33_needs_freeness():
    with pytest.raises(ParamError):
        prop33_table(make_params(2, [(1, 2), (1, 3)], (0, 1)))
