import math
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chorner.enums import CertificateClass
from chorner.exceptions import (
    DomainError,
    EftOverflowError,
    InfiniteConditionError,
)
from chorner.generator import binomial_expand
from chorner.oracle import (
    U_EXACT,
    abs_eval_exact,
    apriori_error_bound,
    apriori_relative_bound,
    classify,
    cond,
    eval_exact,
    eval_exact_terms,
    gamma,
    horner_error_bound,
    is_faithful,
    pred,
    relative_error,
    round_nearest,
    succ,
    ulp,
)
from chorner.polyval import Polynomial, horner
from tests.conftest import random_polynomial

finite = st.floats(min_value=-1.7e308, max_value=1.7e308)


def test_eval_exact_small() -> None:
    p = Polynomial([1.0, 1.0, 1.0])
    assert eval_exact(p, 0.5) == Fraction(7, 4)
    assert eval_exact_terms(p, 0.5) == Fraction(7, 4)


def test_eval_orders_agree(rng: np.random.Generator) -> None:
    for _ in range(30):
        p = random_polynomial(rng, int(rng.integers(0, 30)))
        x = float(rng.uniform(-2, 2))
        assert eval_exact(p, x) == eval_exact_terms(p, x)


@pytest.mark.parametrize(("n", "x"), [(5, 0.75), (6, 1.125), (12, -0.5)])
def test_cond_of_binomial(n: int, x: float) -> None:
    # cond((1 - x)^n, x) = ((1 + |x|) / |1 - x|)^n
    fx = Fraction(x)
    expected = ((1 + abs(fx)) / abs(1 - fx)) ** n
    assert cond(binomial_expand(n), x) == expected


def test_cond_at_root() -> None:
    with pytest.raises(InfiniteConditionError):
        cond(Polynomial([1.0, -1.0]), 1.0)


def test_abs_eval_exact() -> None:
    p = Polynomial([1.0, -2.0, 1.0])
    assert abs_eval_exact(p, -0.5) == Fraction(9, 4)


def test_round_nearest_ties_to_even() -> None:
    assert round_nearest(1 + U_EXACT) == 1.0
    assert round_nearest(1 + 3 * U_EXACT) == 1.0 + 2.0**-51
    assert round_nearest(Fraction(1, 3)) == 1 / 3


def test_neighbours() -> None:
    assert pred(1.0) == 1.0 - 2.0**-53
    assert succ(1.0) == 1.0 + 2.0**-52
    assert succ(0.0) == 5e-324
    assert pred(0.0) == -5e-324
    assert ulp(1.0) == 2.0**-52
    assert ulp(-1.0) == 2.0**-52
    with pytest.raises(EftOverflowError):
        succ(sys.float_info.max)
    with pytest.raises(DomainError):
        pred(math.inf)


@given(finite)
def test_pred_succ_are_adjacent(f: float) -> None:
    lo, hi = pred(f), succ(f)
    assert lo < f < hi
    assert succ(lo) == f
    assert pred(hi) == f


def test_is_faithful() -> None:
    near_one = 1 + Fraction(1, 2**60)
    assert is_faithful(1.0, near_one).faithful
    assert is_faithful(succ(1.0), near_one).faithful
    assert not is_faithful(pred(1.0), near_one).faithful

    exact_one = is_faithful(1.0, Fraction(1))
    assert exact_one.faithful
    assert exact_one.ulp_error == 0
    # Представимое значение допускает только себя
    assert not is_faithful(succ(1.0), Fraction(1)).faithful


def test_classify() -> None:
    good = is_faithful(1.0, Fraction(1))
    bad = is_faithful(2.0, Fraction(1))
    assert classify(True, good) == CertificateClass.CERTIFIED_FAITHFUL
    assert classify(False, good) == CertificateClass.FAITHFUL_UNDETECTED
    assert classify(False, bad) == CertificateClass.UNFAITHFUL
    assert classify(True, bad) == CertificateClass.UNFAITHFUL


def test_gamma() -> None:
    assert gamma(0) == 0
    assert gamma(2) == Fraction(2, 2**53 - 2)
    with pytest.raises(DomainError):
        gamma(2**53)


def test_relative_error() -> None:
    assert relative_error(1.0, Fraction(1)) == 0
    assert relative_error(1.5, Fraction(1)) == Fraction(1, 2)
    assert relative_error(0.25, Fraction(0)) == Fraction(1, 4)


def test_error_bounds_hold(rng: np.random.Generator) -> None:
    for _ in range(30):
        p = random_polynomial(rng, int(rng.integers(1, 20)))
        x = float(rng.uniform(-2, 2))
        exact = eval_exact(p, x)
        err = abs(Fraction(horner(p, x)) - exact)
        assert err <= horner_error_bound(p, x)
        assert apriori_error_bound(p, x) >= U_EXACT * abs(exact)


def test_cond_is_at_least_one(rng: np.random.Generator) -> None:
    for _ in range(100):
        p = random_polynomial(rng, int(rng.integers(0, 30)))
        x = float(rng.uniform(-3, 3))
        if eval_exact(p, x) != 0:
            assert cond(p, x) >= 1
    # Все коэффициенты одного знака при x > 0: cond ровно 1
    assert cond(Polynomial([1.0, 2.0, 3.0]), 0.5) == 1
    assert cond(binomial_expand(8), 1.0 + 2.0**-10) > 1


def test_apriori_relative_bound() -> None:
    g = gamma(20)
    assert apriori_relative_bound(10, Fraction(100)) == U_EXACT + g * g * 100
