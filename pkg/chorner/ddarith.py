"""Арифметика double-double и DDHorner.

Число double-double это пара (hi, lo) чисел binary64, где значение
равно hi + lo, а |lo| <= u · |hi|.
Это даёт около 106 значащих бит.
Здесь реализовано только то, что нужно схеме Горнера: сложение и
умножение на binary64.

Используется как эталонный конкурент компенсированной схемы при
сравнении точности и времени работы.
Каждая операция завершается перенормировкой.

Число операций:

- ``dd_add``: TwoSum (6) + сложение (1) + FastTwoSum (3) = 10.
- ``dd_mul_f64``: TwoProd (17) + умножение и сложение (2) +
    FastTwoSum (3) = 22.
- ``dd_horner``: 32 операции на шаг.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from chorner.eft import _fast_two_sum, _two_prod, _two_sum
from chorner.exceptions import DomainError, EftOverflowError
from chorner.polyval import Polynomial


@dataclass(slots=True, frozen=True)
class DoubleDouble:
    """Число double-double в нормализованной форме.

    - `hi`: Старшая часть, fl(hi + lo) = hi.
    - `lo`: Младшая часть, |lo| <= u · |hi|.
    """

    hi: float
    lo: float = 0.0

    @property
    def exact(self) -> Fraction:
        """Точное значение hi + lo."""
        return Fraction(self.hi) + Fraction(self.lo)


def _checked(hi: float, lo: float) -> DoubleDouble:
    if not (math.isfinite(hi) and math.isfinite(lo)):
        raise EftOverflowError("double-double operation overflowed")
    return DoubleDouble(hi, lo)


def dd_add(a: DoubleDouble, b: float) -> DoubleDouble:
    """Сумма double-double и binary64 с перенормировкой."""
    if not math.isfinite(b):
        raise DomainError(f"Operand must be finite, got {b!r}")
    s, e = _two_sum(a.hi, b)
    e += a.lo
    return _checked(*_fast_two_sum(s, e))


def dd_mul_f64(a: DoubleDouble, x: float) -> DoubleDouble:
    """Произведение double-double на binary64 с перенормировкой."""
    if not math.isfinite(x):
        raise DomainError(f"Operand must be finite, got {x!r}")
    p, e = _two_prod(a.hi, x)
    e += a.lo * x
    return _checked(*_fast_two_sum(p, e))


def dd_horner_pair(p: Polynomial, x: float) -> DoubleDouble:
    """Схема Горнера в арифметике double-double, полная пара."""
    if not math.isfinite(x):
        raise DomainError(f"Argument x must be finite, got {x!r}")
    coeffs = p.coeffs
    hi, lo = coeffs[-1], 0.0
    for i in range(len(coeffs) - 2, -1, -1):
        # dd_mul_f64
        ph, pl = _two_prod(hi, x)
        pl += lo * x
        hi, lo = _fast_two_sum(ph, pl)
        # dd_add
        sh, sl = _two_sum(hi, coeffs[i])
        sl += lo
        hi, lo = _fast_two_sum(sh, sl)
    return DoubleDouble(hi, lo)


def dd_horner(p: Polynomial, x: float) -> float:
    """Схема Горнера в double-double, старшая часть результата.

    Как и у ``horner``, нечисловой результат означает переполнение.
    """
    return dd_horner_pair(p, x).hi
