import pytest

from qweyl.cyclotomic import CycElem
from qweyl.polyring import MPoly, is_associate
from qweyl.params import WeylParams, ParamError
from qweyl.weyl import WeylAlgebra
from qweyl.center import center_ring, Z_center_poly
from qweyl.discriminant import (CBasis, check_L, discriminant,
                                internal_trace, trace_matrix,
                                regular_representation, theorem_b_eta,
                                theorem_b_rhs, theorem_71_rhs,
                                verify_discriminant)


def make_params(n, eps, b12=None, **kw):
    beta = [[None] * n for _ in range(n)]
    if n == 2 and b12 is not None:
        beta[0][1] = b12
    return WeylParams(n, eps, beta, **kw)


P12 = make_params(1, [(1, 2)])
P13 = make_params(1, [(1, 3)])


def test_check_L():
    assert check_L(P12, [2]) == (2,)
    assert check_L(P12, [4]) == (4,)
    with pytest.raises(ParamError):
        check_L(P12, [3])
    with pytest.raises(ParamError):
        check_L(P12, [2, 2])
    P = make_params(2, [(1, 2), (1, 2)], (1, 4))
    # min central powers are lcm(2, 4) = 4 in both slots
    with pytest.raises(ParamError):
        check_L(P, [2, 2])
    assert check_L(P, [4, 4]) == (4, 4)


def test_trace_of_identity_and_monomials():
    A = WeylAlgebra(P12)
    basis = CBasis(A, [2])
    tr_one = internal_trace(A.one(), basis)
    assert tr_one.poly == MPoly.constant(basis.cring,
                                         CycElem.rational(4, 2))
    # tr(y x) = 2 in the rank-one, d = 2 case
    tr_yx = internal_trace(A.y(1) * A.x(1), basis)
    assert tr_yx.poly == MPoly.constant(basis.cring,
                                        CycElem.rational(2, 2))
    # off-grid monomials are traceless
    assert internal_trace(A.y(1), basis).poly.is_zero


def test_trace_agrees_with_regular_representation():
    A = WeylAlgebra(P13)
    basis = CBasis(A, [3])
    for u in (A.one(), A.y(1) * A.x(1), A.y(1) ** 3,
              A.x(1) * A.y(1) * 2 - A.one()):
        M = regular_representation(u, basis)
        diag = MPoly.zero(basis.cring)
        for i in range(basis.size):
            diag = diag + M[i][i]
        assert diag == basis.trace(u)


def test_discriminant_rank_one_d2_exact():
    det = discriminant(P12, [2])
    ring = det.poly.ring
    Y, X = MPoly.variable(ring, "Y1", 2), MPoly.variable(ring, "X1", 2)
    one = MPoly.constant(ring, CycElem.one(2))
    # -16 (1 - 4 Y X)^2, an associate of 16 Z_1^2
    assert det.poly == (one - Y * X * 4) ** 2 * (-16)


def test_theorem_b_eta_values():
    assert theorem_b_eta(P12) == CycElem.rational(16, 2)
    assert theorem_b_eta(P13) == CycElem.rational(-19683, 3)


def test_theorem_b_rhs_needs_freeness():
    with pytest.raises(ParamError):
        theorem_b_rhs(make_params(2, [(1, 2), (1, 3)], (0, 1)))


@pytest.mark.parametrize("P", [P12, P13], ids=["d2", "d3"])
def test_verify_theorem_b(P):
    rep = verify_discriminant(P, [d for _, d in P.eps], "theorem-b")
    assert rep["associate"]
    assert rep["unit"]["certified"]


def test_verify_theorem_71_and_example_n2():
    P = make_params(2, [(1, 2), (1, 2)], (1, 2), c_formal=True)
    rhs = theorem_71_rhs(P, [2, 2])
    ring = rhs.poly.ring
    c = MPoly.variable(ring, "c", 2)
    Y1X1 = MPoly.variable(ring, "Y1", 2) * MPoly.variable(ring, "X1", 2)
    Y2X2 = MPoly.variable(ring, "Y2", 2) * MPoly.variable(ring, "X2", 2)
    expect = MPoly.constant(ring, CycElem.rational(2 ** 32, 2)) \
        * (c * c - Y1X1 * 4) ** 8 * (c * c - Y1X1 * 4 - Y2X2 * 4) ** 8
    assert rhs.poly == expect
    rep = verify_discriminant(P, [2, 2], "theorem-71")
    assert rep["associate"] and rep["unit"]["certified"]


def test_theorem_71_needs_formal_c():
    with pytest.raises(ParamError):
        theorem_71_rhs(P12, [2])


def test_closed_forms_cross_check_at_c_one():
    Pc = make_params(1, [(1, 3)], c_formal=True)
    rhs71 = theorem_71_rhs(Pc, [3])
    at_one = rhs71.poly.substitute({"c": CycElem.one(3)},
                                   target_ring=center_ring(P13))
    assert is_associate(at_one, theorem_b_rhs(P13).poly) is not None


def test_basis_convention_independence():
    lhs = discriminant(P12, [2], convention="y-first")
    rhs = discriminant(P12, [2], convention="x-first")
    w = is_associate(lhs.poly, rhs.poly)
    assert w is not None


def test_discriminant_c_divisibility():
    P = make_params(1, [(1, 2)], c_formal=True)
    det = discriminant(P, [4])
    assert all(e % 4 == 0 for e in det.poly.coeff_map("c"))
