"""Безошибочные преобразования (EFT) сложения и умножения.

Для двух чисел binary64 возвращают округлённый результат операции
и точную ошибку округления, тоже в виде числа binary64.
На этих кирпичиках построено всё остальное.

Python выполняет каждую операцию над ``float`` отдельно и с
округлением к ближайшему чётному, без слияния в FMA.
Это как раз то, что требуется алгоритмам: они чувствительны к
порядку операций.
Функция ``check_arithmetic`` проверяет это один раз при запуске.
"""

import math
import sys
from dataclasses import dataclass

from chorner.enums import SPLIT_LIMIT, SPLITTER, UNDERFLOW_LIMIT
from chorner.exceptions import (
    ArithmeticEnvironmentError,
    DomainError,
    EftOverflowError,
)


@dataclass(slots=True, frozen=True)
class EftPair:
    """Результат безошибочного преобразования.

    - `hi`: Округлённый результат операции fl(a∘b).
    - `lo`: Точная ошибка округления, a∘b = hi + lo.
    - `exact`: Гарантировано ли равенство. Сбрасывается, если при
        умножении случилось исчезновение порядка.
    """

    hi: float
    lo: float
    exact: bool = True


def _ensure_finite(*args: float) -> None:
    for a in args:
        if not math.isfinite(a):
            raise DomainError(f"EFT input must be finite, got {a!r}")


# Ядра без проверок
# =================
# Используются во внутренних циклах схемы Горнера.
# Переполнение в них не проверяется, оно проявится как inf или nan.


def _two_sum(a: float, b: float) -> tuple[float, float]:
    x = a + b
    z = x - a
    return x, (a - (x - z)) + (b - z)


def _fast_two_sum(a: float, b: float) -> tuple[float, float]:
    x = a + b
    return x, b - (x - a)


def _split(a: float) -> tuple[float, float]:
    z = a * SPLITTER
    x = z - (z - a)
    return x, a - x


def _two_prod(a: float, b: float) -> tuple[float, float]:
    x = a * b
    z = a * SPLITTER
    ah = z - (z - a)
    al = a - ah
    z = b * SPLITTER
    bh = z - (z - b)
    bl = b - bh
    return x, al * bl - (((x - ah * bh) - al * bh) - ah * bl)


def _prod_underflows(a: float, b: float, x: float) -> bool:
    return a != 0.0 and b != 0.0 and abs(x) < UNDERFLOW_LIMIT


# Публичные преобразования
# ========================


def two_sum(a: float, b: float) -> EftPair:
    """Безошибочное преобразование суммы (6 операций Кнута).

    Возвращает hi = fl(a + b) и lo, такие что a + b = hi + lo точно.
    Равенство выполняется даже при субнормальных аргументах.
    Результат симметричен относительно перестановки аргументов.

    Raises:
        EftOverflowError: Если fl(a + b) переполнилось.

    """
    _ensure_finite(a, b)
    x, y = _two_sum(a, b)
    if not math.isfinite(x):
        raise EftOverflowError(f"two_sum({a!r}, {b!r}) overflowed")
    return EftPair(x, y)


def fast_two_sum(a: float, b: float) -> EftPair:
    """Быстрое преобразование суммы при условии |a| >= |b|.

    Используется для перенормировки в арифметике double-double.
    """
    _ensure_finite(a, b)
    if a != 0.0 and abs(a) < abs(b):
        raise DomainError("fast_two_sum requires |a| >= |b|")
    x, y = _fast_two_sum(a, b)
    if not math.isfinite(x):
        raise EftOverflowError(f"fast_two_sum({a!r}, {b!r}) overflowed")
    return EftPair(x, y)


def split(a: float) -> EftPair:
    """Разбивает число на две части по 26 значащих бит.

    Умножает на 2^27 + 1 (алгоритм Векампа), поэтому для очень больших
    чисел это умножение переполняется.
    В таком случае вызывающая сторона может предварительно
    отмасштабировать аргумент степенью двойки.
    """
    _ensure_finite(a)
    if abs(a) > SPLIT_LIMIT:
        raise EftOverflowError(f"split({a!r}) overflows, pre-scale argument")
    hi, lo = _split(a)
    return EftPair(hi, lo)


def two_prod(a: float, b: float) -> EftPair:
    """Безошибочное преобразование произведения (Деккер, 17 операций).

    Возвращает hi = fl(a * b) и lo, такие что a * b = hi + lo точно,
    если не случилось исчезновения порядка.
    Если |a * b| < 2^-969, равенство не гарантируется, и у результата
    сбрасывается флаг ``exact``.
    Это не ошибка, а только пометка.

    Raises:
        EftOverflowError: Произведение или разбиение переполнилось.

    """
    _ensure_finite(a, b)
    if abs(a) > SPLIT_LIMIT or abs(b) > SPLIT_LIMIT:
        raise EftOverflowError(
            f"two_prod({a!r}, {b!r}): split overflows, pre-scale arguments"
        )
    x, y = _two_prod(a, b)
    if not math.isfinite(x):
        raise EftOverflowError(f"two_prod({a!r}, {b!r}) overflowed")
    return EftPair(x, y, exact=not _prod_underflows(a, b, x))


# Проверка арифметики
# ===================


def check_arithmetic() -> None:
    """Проверяет что арифметика платформы подходит алгоритмам.

    - Числа с плавающей точкой двоичные с 53 битами мантиссы.
    - Округление к ближайшему, половина к чётному.
    - Умножение и сложение не сливаются в FMA: у TwoProd известный
        ответ с точной ошибкой 2^-54.

    Raises:
        ArithmeticEnvironmentError: Если хотя бы одна проверка провалилась.

    """
    info = sys.float_info
    if (info.radix, info.mant_dig) != (2, 53):
        raise ArithmeticEnvironmentError("float is not IEEE-754 binary64")

    # Половина ulp округляется к чётному соседу
    if 1.0 + 2.0**-53 != 1.0:
        raise ArithmeticEnvironmentError("rounding is not to nearest even")
    if (1.0 + 2.0**-52) + 2.0**-53 != 1.0 + 2.0**-51:
        raise ArithmeticEnvironmentError("rounding is not to nearest even")
    if -1.0 - 2.0**-53 != -1.0:
        raise ArithmeticEnvironmentError("rounding is not symmetric")

    a = 1.0 + 2.0**-27
    x, y = _two_prod(a, a)
    if x != 1.0 + 2.0**-26 or y != 2.0**-54:
        raise ArithmeticEnvironmentError(
            "two_prod sentinel failed, contraction suspected"
        )
