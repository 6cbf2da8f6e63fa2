from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasisim.scalars import GaussianRational, ParseError, conj, format_scalar, gaussian, norm2, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(gaussian, rationals, rationals)


def test_gaussian_collapses_to_fraction():
    assert gaussian(Fraction(3, 2)) == Fraction(3, 2)
    assert isinstance(gaussian(1, 0), Fraction)
    assert isinstance(gaussian(1, 1), GaussianRational)


def test_i_squared():
    i = gaussian(0, 1)
    assert i * i == -1


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", Fraction(3)),
        ("-1/2", Fraction(-1, 2)),
        ("1+2i", gaussian(1, 2)),
        ("1/3-2/5i", gaussian(Fraction(1, 3), Fraction(-2, 5))),
        (7, Fraction(7)),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1.5", "x", "1+i", "1/0", None])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


@given(gaussians)
def test_format_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gaussians, gaussians)
def test_field_axioms(x, y):
    assert x + y == y + x
    assert x * y == y * x
    if x != 0:
        assert (y / x) * x == y
    assert conj(x * y) == conj(x) * conj(y)
    assert norm2(x * y) == norm2(x) * norm2(y)


@given(gaussians)
def test_hash_consistent_with_eq(x):
    y = parse_scalar(format_scalar(x))
    assert x == y and hash(x) == hash(y)
