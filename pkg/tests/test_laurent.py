"""Polynomial text grammar: parsing, canonical formatting, round trips."""

import pytest

from torusdiv.errors import ParseError
from torusdiv.laurent import format_poly, parse_poly


def test_parse_basic_terms():
    f = parse_poly("X1 + X1^-1 + X2 + X2^-1 + 5")
    assert f.arity == 2
    assert f.coeff((1, 0)) == 1
    assert f.coeff((-1, 0)) == 1
    assert f.coeff((0, -1)) == 1
    assert f.coeff((0, 0)) == 5


def test_parse_coefficients_and_stars():
    f = parse_poly("2*X1 - 1")
    assert f.coeff((1,)) == 2 and f.coeff((0,)) == -1
    g = parse_poly("3*X1*X2^2 - 4*X1^-2")
    assert g.coeff((1, 2)) == 3
    assert g.coeff((-2, 0)) == -4
    # repeated variables multiply
    h = parse_poly("X1*X1")
    assert h.coeff((2,)) == 1


def test_parse_signs():
    f = parse_poly("-X1 + 2")
    assert f.coeff((1,)) == -1 and f.coeff((0,)) == 2
    g = parse_poly("X1 - - 3")
    assert g.coeff((0,)) == 3


def test_like_terms_collapse():
    f = parse_poly("X1 + X1 - 2*X1")
    assert f.is_zero()


def test_roundtrip_is_idempotent():
    texts = [
        "X1 - X2 - 4",
        "2*X1 - 1",
        "X1 + X1^-1 + X2 + X2^-1 + 5",
        "3*X1^2*X2^-1 - X2 + 7",
    ]
    for t in texts:
        once = format_poly(parse_poly(t))
        twice = format_poly(parse_poly(once))
        assert once == twice


def test_parse_errors():
    for bad in ["", "X1 +", "* X1", "X0 + 1", "X1 ^ ^ 2", "1 + $"]:
        with pytest.raises(ParseError):
            parse_poly(bad)
    with pytest.raises(ParseError):
        parse_poly("X3 + 1", arity=2)


def test_transform_monomials():
    f = parse_poly("X1 - X2 - 4")
    # diagonal (z, z): X - Y - 4 -> -4
    g = f.transform_monomials([[1, 1]])
    assert g == parse_poly("-4")
    # (z, 1/z) on X + Y -> z + z^-1
    h = parse_poly("X1 + X2").transform_monomials([[1, -1]])
    assert h == parse_poly("X1 + X1^-1")


def test_cleared_and_dense():
    f = parse_poly("X1 + X1^-2 + 1")
    dense, shift = f.as_dense_univariate()
    assert shift == 2
    assert dense == [1, 0, 1, 1]
