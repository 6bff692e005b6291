import pytest

from qweyl.params import WeylParams
from qweyl.weyl import WeylAlgebra
from qweyl.exprs import parse_element, parse_scalar, ParseError


P = WeylParams(2, [(1, 2), (1, 3)], [[None, (1, 2)], [None, None]],
               c_formal=True, formal_units=("u1",))
A = WeylAlgebra(P)


def test_generators_and_arithmetic():
    assert parse_element("x1", A) == A.x(1)
    assert parse_element("y2 + x1", A) == A.y(2) + A.x(1)
    assert parse_element("x1*y1", A) == A.x(1) * A.y(1)
    assert parse_element("y1^3 * x2", A) == A.y(1) ** 3 * A.x(2)
    assert parse_element("2*x1 - 3", A) == A.x(1) * 2 - A.scalar(3)


def test_z_and_coefficient_symbols():
    assert parse_element("z0", A) == A.z_element(0)
    assert parse_element("z2", A) == A.z_element(2)
    assert parse_element("c*x1", A) == A.x(1) * A.z0_coeff()
    assert parse_element("e^3*y1", A) == A.y(1) * A.root_pow(3)
    assert parse_element("u1*x1", A) == \
        A.x(1) * parse_scalar("u1", A)


def test_parentheses_and_precedence():
    assert parse_element("(x1 + y1)^2", A) == (A.x(1) + A.y(1)) ** 2
    assert parse_element("2*x1^2", A) == A.x(1) ** 2 * 2
    assert parse_element("-x1^2", A) == -(A.x(1) ** 2)


def test_negative_powers_of_units():
    assert parse_scalar("e^-1", A) == A.root_pow(-1)
    assert parse_scalar("u1^-2 * u1^2", A) == A.coeff_one()
    with pytest.raises(ParseError):
        parse_element("x1^-1", A)
    with pytest.raises(ParseError):
        parse_element("c^-1", A)


def test_parse_scalar_rejects_generators():
    with pytest.raises(ParseError):
        parse_scalar("x1", A)
    assert parse_scalar("2*e + c", A) == \
        A.root_pow(1) * 2 + A.z0_coeff()


def test_errors():
    for bad in ("", "x9", "z5", "x1 +", "(x1", "x1^y1", "q", "w", "1 2"):
        with pytest.raises(ParseError):
            parse_element(bad, A)
