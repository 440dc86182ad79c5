import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
import pytest

from chorner.compensated import (
    CertifiedEval,
    apriori_threshold,
    comp_horner,
    comp_horner_checked,
    comp_horner_is_faithful,
    gamma_hat,
)
from chorner.enums import U, EvalStatus
from chorner.exceptions import DomainError
from chorner.generator import GeneratorSpec, binomial_expand, generate
from chorner.oracle import (
    U_EXACT,
    apriori_error_bound,
    cond,
    eval_exact,
    gamma,
    is_faithful,
)
from chorner.polyval import (
    Polynomial,
    abs_horner_sum,
    eft_horner,
    horner,
    horner_sum,
)
from chorner.storage import hex_float
from tests.conftest import random_polynomial


def test_gamma_hat_domain() -> None:
    assert gamma_hat(0) == 0.0
    with pytest.raises(DomainError):
        gamma_hat(-1)
    with pytest.raises(DomainError):
        gamma_hat(2**53)


@pytest.mark.parametrize("k", [1, 2, 19, 99, 999, 2**20])
def test_gamma_hat_close_to_gamma(k: int) -> None:
    assert Fraction(gamma_hat(k)) * (1 + U_EXACT) >= gamma(k)


@pytest.mark.parametrize("n", [1, 5, 10, 100, 200, 300, 400, 500])
def test_apriori_threshold(n: int) -> None:
    t = apriori_threshold(n)
    assert t == pytest.approx(2.0**50 / n**2, rel=1e-9)
    g = gamma(2 * n)
    assert Fraction(t) <= (1 - U_EXACT) / (2 + U_EXACT) * U_EXACT / (g * g)


def test_apriori_threshold_published() -> None:
    assert f"{apriori_threshold(10):.2e}" == "1.13e+13"
    assert f"{apriori_threshold(100):.2e}" == "1.13e+11"
    assert f"{apriori_threshold(200):.2e}" == "2.81e+10"
    assert f"{apriori_threshold(400):.2e}" == "7.04e+09"
    assert apriori_threshold(500) == pytest.approx(4.51e9, rel=1e-2)
    with pytest.raises(DomainError):
        apriori_threshold(0)


def test_constant_polynomial() -> None:
    p = Polynomial([3.0])
    assert comp_horner(p, 7.0) == 3.0
    assert comp_horner_is_faithful(p, 7.0) == CertifiedEval(
        3.0, 0.0, 0.0, True
    )


def test_comp_horner_matches_eft(rng: np.random.Generator) -> None:
    for _ in range(100):
        p = random_polynomial(rng, int(rng.integers(1, 50)))
        x = float(rng.uniform(-2, 2))
        eft = eft_horner(p, x)
        assert eft.p_pi is not None
        assert eft.p_sigma is not None
        expected = eft.value + horner_sum(eft.p_pi, eft.p_sigma, x)

        value = comp_horner(p, x)
        assert hex_float(value) == hex_float(expected)

        n = p.degree
        b = abs_horner_sum(eft.p_pi, eft.p_sigma, x)
        alpha = (gamma_hat(2 * n - 1) * b) / (1.0 - (2 * (n + 1)) * U)
        cert = comp_horner_is_faithful(p, x)
        assert hex_float(cert.value) == hex_float(value)
        assert hex_float(cert.alpha_hat) == hex_float(alpha)


def test_binomial_near_root() -> None:
    # cond = 513^5 меньше априорной границы для n = 5,
    # а значение -2^-40 представимо, значит результат точный
    p = binomial_expand(5)
    x = float.fromhex("0x1.01p0")
    assert cond(p, x) < apriori_threshold(5)
    assert comp_horner(p, x) == -(2.0**-40)

    cert = comp_horner_is_faithful(p, x)
    verdict = is_faithful(cert.value, eval_exact(p, x))
    assert verdict.faithful
    assert not cert.is_faithful or verdict.faithful


@pytest.mark.parametrize("target", [1e4, 1e10, 1e16, 1e24, 1e32])
def test_certificate_is_sound(target: float) -> None:
    for seed in range(10):
        p = generate(GeneratorSpec(30, target, 0.9, seed))
        cert = comp_horner_is_faithful(p, 0.9)
        exact = eval_exact(p, 0.9)
        assert cert.status == EvalStatus.OK
        assert abs(Fraction(cert.value) - exact) <= Fraction(cert.err_bound)
        assert abs(Fraction(cert.value) - exact) <= apriori_error_bound(
            p, 0.9
        )
        if cert.is_faithful:
            assert is_faithful(cert.value, exact).faithful


def test_apriori_faithful_below_threshold() -> None:
    threshold = apriori_threshold(10)
    for seed in range(50):
        p = generate(GeneratorSpec(10, 1e10, 1.25, seed))
        assert cond(p, 1.25) < threshold
        assert is_faithful(comp_horner(p, 1.25), eval_exact(p, 1.25)).faithful


def test_overflow_status() -> None:
    p = Polynomial([1e308, 1e308])
    assert comp_horner_checked(p, 10.0)[1] == EvalStatus.OVERFLOW
    cert = comp_horner_is_faithful(p, 10.0)
    assert cert.status == EvalStatus.OVERFLOW
    assert not cert.is_faithful


def test_split_range_overflow() -> None:
    p = Polynomial([1.0, 2.0**997])
    assert horner(p, 0.5) == 2.0**996
    value, status = comp_horner_checked(p, 0.5)
    assert math.isnan(value)
    assert status == EvalStatus.OVERFLOW
    assert math.isnan(comp_horner(p, 0.5))


def test_underflow_withholds_certificate() -> None:
    p = Polynomial([1.0, 2.0**-500])
    x = 2.0**-500
    assert comp_horner_checked(p, x)[1] == EvalStatus.UNDERFLOW_UNVERIFIED
    cert = comp_horner_is_faithful(p, x)
    assert cert.status == EvalStatus.UNDERFLOW_UNVERIFIED
    assert not cert.is_faithful


def test_subnormal_result_not_certified() -> None:
    cert = comp_horner_is_faithful(Polynomial([2.0**-1070, 0.0]), 1.0)
    assert cert.status == EvalStatus.OK
    assert cert.value == 2.0**-1070
    assert not cert.is_faithful


def test_bits_do_not_depend_on_threads(rng: np.random.Generator) -> None:
    cases = [
        (random_polynomial(rng, 25), float(rng.uniform(-2, 2)))
        for _ in range(64)
    ]

    def evaluate(case: tuple[Polynomial, float]) -> tuple[str, str, str]:
        p, x = case
        cert = comp_horner_is_faithful(p, x)
        return (
            hex_float(comp_horner(p, x)),
            hex_float(cert.value),
            hex_float(cert.err_bound),
        )

    sequential = [evaluate(c) for c in cases]
    assert [evaluate(c) for c in cases] == sequential
    for workers in (2, 8):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            assert list(pool.map(evaluate, cases)) == sequential
