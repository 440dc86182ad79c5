from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chorner.eft import (
    check_arithmetic,
    fast_two_sum,
    split,
    two_prod,
    two_sum,
)
from chorner.exceptions import DomainError, EftOverflowError

finite = st.floats(
    min_value=-1e300, max_value=1e300, allow_nan=False, allow_infinity=False
)

# Произведение таких чисел не выходит за пределы нормального диапазона
magnitude = st.floats(min_value=2.0**-400, max_value=2.0**400)
scaled = st.builds(lambda m, neg: -m if neg else m, magnitude, st.booleans())

U = Fraction(1, 2**53)


def _significant_bits(f: float) -> int:
    """Длина мантиссы без хвостовых нулей."""
    n = Fraction(abs(f)).numerator
    if n == 0:
        return 0
    return (n >> ((n & -n).bit_length() - 1)).bit_length()


@given(finite, finite)
@settings(max_examples=2000)
def test_two_sum_is_exact(a: float, b: float) -> None:
    res = two_sum(a, b)
    assert res.hi == a + b
    assert Fraction(res.hi) + Fraction(res.lo) == Fraction(a) + Fraction(b)


@given(finite, finite)
def test_two_sum_is_symmetric(a: float, b: float) -> None:
    assert two_sum(a, b) == two_sum(b, a)


@given(scaled, scaled)
@settings(max_examples=2000)
def test_two_prod_is_exact(a: float, b: float) -> None:
    res = two_prod(a, b)
    assert res.exact
    assert res.hi == a * b
    assert Fraction(res.hi) + Fraction(res.lo) == Fraction(a) * Fraction(b)


@given(scaled)
def test_split_halves(a: float) -> None:
    res = split(a)
    assert Fraction(res.hi) + Fraction(res.lo) == Fraction(a)
    # Старшая часть укладывается в 26 бит, её квадрат точен
    assert Fraction(res.hi * res.hi) == Fraction(res.hi) ** 2


@given(finite, finite)
def test_two_sum_error_is_small(a: float, b: float) -> None:
    res = two_sum(a, b)
    assert abs(Fraction(res.lo)) <= U * abs(Fraction(res.hi))


@given(scaled, scaled)
def test_two_prod_error_is_small(a: float, b: float) -> None:
    res = two_prod(a, b)
    exact = Fraction(a) * Fraction(b)
    assert abs(Fraction(res.lo)) <= U * abs(Fraction(res.hi))
    assert abs(Fraction(res.lo)) <= U * abs(exact)


@given(scaled)
def test_split_parts_fit_26_bits(a: float) -> None:
    res = split(a)
    assert _significant_bits(res.hi) <= 26
    assert _significant_bits(res.lo) <= 26


def test_significant_bits() -> None:
    assert _significant_bits(0.0) == 0
    assert _significant_bits(2.0**30) == 1
    assert _significant_bits(-3.0 * 2.0**-40) == 2
    assert _significant_bits(1.0 + 2.0**-52) == 53
    res = split(1.0 + 2.0**-52)
    assert (res.hi, res.lo) == (1.0, 2.0**-52)


def test_two_prod_known_error() -> None:
    a = 1.0 + 2.0**-27
    res = two_prod(a, a)
    assert (res.hi, res.lo) == (1.0 + 2.0**-26, 2.0**-54)


def test_two_sum_known_error() -> None:
    res = two_sum(1.0, 2.0**-60)
    assert (res.hi, res.lo) == (1.0, 2.0**-60)


def test_two_sum_subnormal() -> None:
    a, b = 5e-324, -1e-320
    res = two_sum(a, b)
    assert Fraction(res.hi) + Fraction(res.lo) == Fraction(a) + Fraction(b)


def test_two_sum_overflow() -> None:
    with pytest.raises(EftOverflowError):
        two_sum(1.7e308, 1.7e308)


def test_two_prod_overflow() -> None:
    with pytest.raises(EftOverflowError):
        two_prod(1e200, 1e200)


def test_split_range() -> None:
    with pytest.raises(EftOverflowError):
        split(2.0**1000)
    with pytest.raises(EftOverflowError):
        two_prod(2.0**1000, 0.5)


def test_two_prod_underflow_flag() -> None:
    res = two_prod(2.0**-500, 2.0**-500)
    assert not res.exact
    assert two_prod(0.0, 2.0**-500).exact


@pytest.mark.parametrize("bad", [float("inf"), float("-inf"), float("nan")])
def test_non_finite_input(bad: float) -> None:
    with pytest.raises(DomainError):
        two_sum(bad, 1.0)
    with pytest.raises(DomainError):
        two_prod(1.0, bad)


def test_fast_two_sum() -> None:
    res = fast_two_sum(1.0, 2.0**-60)
    assert (res.hi, res.lo) == (1.0, 2.0**-60)
    assert fast_two_sum(0.0, 5.0).hi == 5.0
    with pytest.raises(DomainError):
        fast_two_sum(1.0, 2.0)


def test_check_arithmetic() -> None:
    check_arithmetic()
