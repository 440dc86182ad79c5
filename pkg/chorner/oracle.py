"""Точная арифметика, эталон для всех проверок.

Любое конечное число binary64 является рациональным числом со
знаменателем степени двойки.
Поэтому значения многочленов в точке binary64 вычисляются точно
в рациональных числах (``fractions.Fraction``).

Предоставляет точное значение p(x), число обусловленности, соседей
числа с плавающей точкой и вердикт о правильном округлении.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from chorner.enums import CertificateClass
from chorner.exceptions import (
    DomainError,
    EftOverflowError,
    InfiniteConditionError,
)
from chorner.polyval import Polynomial

ExactScalar = Fraction

U_EXACT = Fraction(1, 2**53)


@dataclass(slots=True, frozen=True)
class FaithfulVerdict:
    """Вердикт о правильном округлении.

    - `exact_value`: Точное значение p(x).
    - `computed`: Вычисленное значение binary64.
    - `faithful`: Является ли computed правильным округлением.
    - `ulp_error`: Расстояние |exact - computed| в ulp(computed).
    """

    exact_value: Fraction
    computed: float
    faithful: bool
    ulp_error: Fraction


def to_exact(f: float) -> Fraction:
    """Точное рациональное значение конечного числа binary64."""
    if not math.isfinite(f):
        raise DomainError(f"Only finite values are exact: {f!r}")
    return Fraction(f)


def round_nearest(r: Fraction) -> float:
    """Округляет рациональное число к ближайшему binary64.

    Деление целых в Python округляется правильно, половина к чётному.
    """
    return r.numerator / r.denominator


# Вычисление многочленов
# ======================


def eval_exact(p: Polynomial, x: float) -> Fraction:
    """Точное значение Σ a_i x^i по схеме Горнера в рациональных."""
    fx = to_exact(x)
    coeffs = p.coeffs
    r = Fraction(coeffs[-1])
    for i in range(len(coeffs) - 2, -1, -1):
        r = r * fx + Fraction(coeffs[i])
    return r


def eval_exact_terms(p: Polynomial, x: float) -> Fraction:
    """Точное значение как сумма одночленов.

    Второй, независимый от схемы Горнера, порядок вычисления.
    """
    fx = to_exact(x)
    total = Fraction(0)
    power = Fraction(1)
    for a in p.coeffs:
        total += Fraction(a) * power
        power *= fx
    return total


def abs_eval_exact(p: Polynomial, x: float) -> Fraction:
    """Точное значение p̃(|x|) = Σ |a_i| |x|^i."""
    return eval_exact(p.abs(), abs(x))


def cond(p: Polynomial, x: float) -> Fraction:
    """Число обусловленности cond(p, x) = p̃(x) / |p(x)|.

    Raises:
        InfiniteConditionError: Если p(x) = 0 точно.

    """
    value = eval_exact(p, x)
    if value == 0:
        raise InfiniteConditionError("p(x) = 0, condition number is infinite")
    return abs_eval_exact(p, x) / abs(value)


# Оценки ошибок
# =============


def gamma(k: int) -> Fraction:
    """Точное значение γ_k = ku / (1 - ku)."""
    if k < 0 or k * U_EXACT >= 1:
        raise DomainError(f"gamma_k requires 0 <= k*u < 1, got k={k}")
    return k * U_EXACT / (1 - k * U_EXACT)


def horner_error_bound(p: Polynomial, x: float) -> Fraction:
    """Классическая граница ошибки схемы Горнера γ_2n · p̃(x)."""
    return gamma(2 * p.degree) * abs_eval_exact(p, x)


def apriori_error_bound(p: Polynomial, x: float) -> Fraction:
    """Априорная граница ошибки компенсированной схемы.

    u · |p(x)| + γ_2n² · p̃(x)
    """
    g = gamma(2 * p.degree)
    return U_EXACT * abs(eval_exact(p, x)) + g * g * abs_eval_exact(p, x)


def apriori_relative_bound(n: int, condition: Fraction) -> Fraction:
    """Относительная форма априорной границы: u + γ_2n² · cond."""
    g = gamma(2 * n)
    return U_EXACT + g * g * condition


def relative_error(computed: float, exact: Fraction) -> Fraction:
    """Относительная ошибка |computed - exact| / |exact|.

    При exact = 0 возвращает абсолютную ошибку.
    """
    err = abs(to_exact(computed) - exact)
    return err / abs(exact) if exact != 0 else err


# Соседи числа с плавающей точкой
# ===============================


def pred(f: float) -> float:
    """Наибольшее число binary64, меньшее f (включая субнормальные)."""
    if not math.isfinite(f):
        raise DomainError(f"pred requires a finite value, got {f!r}")
    r = math.nextafter(f, -math.inf)
    if math.isinf(r):
        raise EftOverflowError(f"pred({f!r}) overflows")
    return r


def succ(f: float) -> float:
    """Наименьшее число binary64, большее f (включая субнормальные)."""
    if not math.isfinite(f):
        raise DomainError(f"succ requires a finite value, got {f!r}")
    r = math.nextafter(f, math.inf)
    if math.isinf(r):
        raise EftOverflowError(f"succ({f!r}) overflows")
    return r


def ulp(f: float) -> float:
    """Единица последнего разряда: succ(f) - f для f >= 0.

    Для отрицательных чисел берётся зеркальное значение.
    """
    return math.ulp(abs(f))


def is_faithful(computed: float, exact: Fraction) -> FaithfulVerdict:
    """Является ли computed правильным округлением exact.

    Правильное округление означает pred(f) < r < succ(f).
    Если r само представимо, то правильным является только f = r.
    """
    fc = to_exact(computed)
    if fc == exact:
        return FaithfulVerdict(exact, computed, True, Fraction(0))

    # Соседи за пределами диапазона считаются бесконечными
    below = math.nextafter(computed, -math.inf)
    above = math.nextafter(computed, math.inf)
    lower_ok = math.isinf(below) or to_exact(below) < exact
    upper_ok = math.isinf(above) or exact < to_exact(above)
    ulp_error = abs(exact - fc) / to_exact(ulp(computed))
    return FaithfulVerdict(exact, computed, lower_ok and upper_ok, ulp_error)


def classify(certified: bool, verdict: FaithfulVerdict) -> CertificateClass:
    """Относит вычисление к одному из трёх классов сертификата.

    Ложный сертификат тоже попадает в ``UNFAITHFUL``, поэтому
    сертифицированные неправильные результаты считаются отдельно.
    """
    if not verdict.faithful:
        return CertificateClass.UNFAITHFUL
    if certified:
        return CertificateClass.CERTIFIED_FAITHFUL
    return CertificateClass.FAITHFUL_UNDETECTED
