"""Exact scalar arithmetic: rationals and cyclotomic extensions."""

import random
from fractions import Fraction

import pytest

from hopfcyclic.fields import (Cyclotomic, CyclotomicField, FieldMismatchError,
                               RationalField, ScalarFormatError,
                               cyclotomic_polynomial, field_from_spec,
                               parse_rational)


def test_cyclotomic_polynomial_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    # degree phi(12) = 4 with the classic palindromic coefficients
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_fourth_root_squares_to_minus_one():
    i = Cyclotomic(4, (0, 1))
    assert i * i == Cyclotomic(4, (-1,))
    assert i ** 4 == Cyclotomic(4, (1,))


def test_third_root_satisfies_quadratic():
    z = Cyclotomic(3, (0, 1))
    assert z * z + z + 1 == Cyclotomic(3, (0,))


def test_inverses_random(seed=5):
    rng = random.Random(seed)
    for order in (3, 4, 5, 8, 12):
        field = CyclotomicField(order)
        for _ in range(10):
            coeffs = tuple(Fraction(rng.randrange(-4, 5))
                           for _ in range(len(cyclotomic_polynomial(order)) - 1))
            a = Cyclotomic(order, coeffs)
            if not a:
                continue
            assert a * a.inverse() == field.one()


def test_mixed_orders_rejected():
    with pytest.raises(FieldMismatchError):
        Cyclotomic(3, (1,)) + Cyclotomic(4, (1,))


def test_rational_coercion():
    z = Cyclotomic(5, (0, 1))
    assert z + 1 == Cyclotomic(5, (1, 1))
    assert 2 * z == Cyclotomic(5, (0, 2))
    assert z - Fraction(1, 2) == Cyclotomic(5, (Fraction(-1, 2), 1))


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("7") == Fraction(7)
    with pytest.raises(ScalarFormatError):
        parse_rational("x")


def test_field_round_trip():
    for spec in ({"kind": "rational"}, {"kind": "cyclotomic", "order": 6}):
        field = field_from_spec(spec)
        assert field.to_spec() == spec
        for text in ("0", "1", "-2/3"):
            assert field.format(field.parse(text)) == text


def test_cyclotomic_parse_format_round_trip():
    field = CyclotomicField(8)
    a = field.parse("1/2 + 3*z^2 - z^3")
    assert field.parse(field.format(a)) == a


def test_rational_field_basics():
    field = RationalField()
    assert field.one() + field.one() == field.parse("2")
    assert field.zero() == Fraction(0)
