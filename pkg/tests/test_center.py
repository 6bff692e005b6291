import pytest

from qweyl.cyclotomic import CycElem
from qweyl.polyring import MPoly
from qweyl.params import WeylParams, ParamError
from qweyl.weyl import WeylAlgebra
from qweyl.center import (center_ring, CenterPoly, is_central,
                          center_spanning_monomials, spanning_element,
                          Z_center_poly, to_center_poly, verify_specz,
                          central_combinations)


def make_params(n, eps, b12=None, **kw):
    beta = [[None] * n for _ in range(n)]
    if n == 2 and b12 is not None:
        beta[0][1] = b12
    return WeylParams(n, eps, beta, **kw)


P12 = make_params(1, [(1, 2)])
P13 = make_params(1, [(1, 3)])


def test_is_central_basics():
    A = WeylAlgebra(P12)
    assert is_central(A.one())
    assert is_central(A.y(1) ** 2)
    assert is_central(A.x(1) ** 2)
    assert not is_central(A.y(1) * A.x(1))
    assert not is_central(A.z_element(1))
    assert is_central(A.z_element(1) ** 2)


def test_spanning_monomials_rank_one():
    got = center_spanning_monomials(P12, 2)
    assert got == [((0,), (0,)), ((0,), (2,)), ((2,), (0,))]
    assert center_spanning_monomials(P12, 0) == [((0,), (0,))]


def test_spanning_elements_are_central():
    P = make_params(2, [(1, 2), (1, 3)], (0, 1))
    A = WeylAlgebra(P)
    for b, a in center_spanning_monomials(P, 6):
        assert is_central(spanning_element(A, b, a)), (b, a)


def test_nonfree_spanning_exceeds_power_grid():
    # d_12 = 4 breaks freeness; the monoid contains vectors off the
    # (d_1, d_2)-grid
    P = make_params(2, [(1, 2), (1, 2)], (1, 4))
    assert not P.is_free_over_center()
    vecs = center_spanning_monomials(P, 4)
    off_grid = [v for v in vecs
                if any(x % 2 for x in v[0] + v[1])]
    assert off_grid


def test_Z_center_poly():
    ring = center_ring(P12)
    Y, X = MPoly.variable(ring, "Y1", 2), MPoly.variable(ring, "X1", 2)
    assert Z_center_poly(P12, 0).poly == \
        MPoly.constant(ring, CycElem.one(2))
    assert Z_center_poly(P12, 1).poly == \
        MPoly.constant(ring, CycElem.one(2)) - Y * X * 4
    P = make_params(2, [(1, 2), (1, 2)], (1, 2))
    ring2 = center_ring(P)
    z2 = Z_center_poly(P, 2).poly
    expect = MPoly.constant(ring2, CycElem.one(2)) \
        - MPoly.variable(ring2, "Y1", 2) * MPoly.variable(ring2, "X1", 2) * 4 \
        - MPoly.variable(ring2, "Y2", 2) * MPoly.variable(ring2, "X2", 2) * 4
    assert z2 == expect
    with pytest.raises(ParamError):
        Z_center_poly(make_params(2, [(1, 2), (1, 3)], (0, 1)), 1)


def test_z_power_equals_Z():
    A = WeylAlgebra(P12)
    sq = A.z_element(1) ** 2
    cp = to_center_poly(sq, [2])
    assert cp is not None
    assert cp.poly == Z_center_poly(P12, 1).poly
    assert to_center_poly(A.y(1) * A.x(1), [2]) is None


def test_center_poly_roundtrip():
    A = WeylAlgebra(P12)
    cp = Z_center_poly(P12, 1)
    back = cp.to_weyl(A)
    assert back == A.z_element(1) ** 2
    assert is_central(back)


def test_verify_specz():
    for P in (P12, P13, make_params(1, [(1, 4)]),
              make_params(2, [(1, 2), (1, 4)], (1, 2))):
        for j in range(P.n + 1):
            assert verify_specz(P, j)
    with pytest.raises(ParamError):
        verify_specz(make_params(2, [(1, 2), (1, 3)], (0, 1)), 1)


def test_central_combinations_rank_one():
    combos = central_combinations(P12, 4)
    # 1, y^2, x^2, y^4, x^4 and the z^2 direction y^2 x^2
    assert len(combos) == 6
    for el in combos:
        assert is_central(el)
        assert el.grading_degree() is not None


def test_central_combinations_match_monoid_degrees():
    P = make_params(2, [(1, 2), (1, 3)], (0, 1))
    combos = central_combinations(P, 6)
    got = {el.grading_degree() for el in combos}
    want = {tuple(bj - aj for bj, aj in zip(b, a))
            for b, a in center_spanning_monomials(P, 6)}
    assert got == want
