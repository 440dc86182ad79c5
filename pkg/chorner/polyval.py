"""Многочлены и классическая схема Горнера.

Содержит сам многочлен, схему Горнера, её безошибочное
преобразование (EFTHorner), а также схемы Горнера для суммы двух
многочленов, которые нужны компенсированному алгоритму и
динамической границе ошибки.

Коэффициенты хранятся по возрастанию степени: индекс i содержит
коэффициент при x^i.
Обратный порядок используется только на границе ввода-вывода.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Self

from chorner.enums import SPLITTER, UNDERFLOW_LIMIT, EvalStatus
from chorner.exceptions import DomainError


@dataclass(slots=True, frozen=True)
class Polynomial:
    """Многочлен p(x) = Σ a_i x^i с коэффициентами binary64.

    Степень структурная: n = len(coeffs) - 1, старший коэффициент
    может быть нулевым.
    Пустой многочлен запрещён, чтобы не путать его с нулевым.

    .. code-block:: python

        p = Polynomial([1.0, -2.0, 1.0])  # (1 - x)^2
        p.degree  # 2
    """

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]) -> None:
        values = tuple(float(a) for a in coeffs)
        if not values:
            raise DomainError("Polynomial must have at least one coefficient")
        for i, a in enumerate(values):
            if not math.isfinite(a):
                raise DomainError(f"Coefficient {i} is not finite: {a!r}")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def _wrap(cls, coeffs: list[float]) -> Self:
        """Оборачивает уже проверенные коэффициенты без копирования."""
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        return p

    @classmethod
    def from_descending(cls, coeffs: Iterable[float]) -> Self:
        """Многочлен из коэффициентов по убыванию степени."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def zeros(cls, degree: int) -> Self:
        """Нулевой многочлен заданной степени."""
        if degree < 0:
            raise DomainError("Degree must be non negative")
        return cls._wrap([0.0] * (degree + 1))

    @property
    def degree(self) -> int:
        """Структурная степень многочлена."""
        return len(self.coeffs) - 1

    def descending(self) -> tuple[float, ...]:
        """Коэффициенты по убыванию степени."""
        return self.coeffs[::-1]

    def abs(self) -> "Polynomial":
        """Многочлен из модулей коэффициентов (p с волной)."""
        return Polynomial._wrap([abs(a) for a in self.coeffs])


@dataclass(slots=True, frozen=True)
class EftHornerOutput:
    """Результат безошибочного преобразования схемы Горнера.

    - `value`: Horner(p, x), вычисленное в binary64.
    - `p_pi`: Ошибки умножений π_i, многочлен степени n - 1.
    - `p_sigma`: Ошибки сложений σ_i, многочлен степени n - 1.
    - `status`: Выполнены ли условия точности преобразования.

    Если статус ``OK``, то p(x) = value + (p_pi + p_sigma)(x) точно.
    У многочлена степени 0 операций нет, и оба многочлена ошибок
    равны ``None``.
    """

    value: float
    p_pi: Polynomial | None
    p_sigma: Polynomial | None
    status: EvalStatus = EvalStatus.OK


def _ensure_x(x: float) -> None:
    if not math.isfinite(x):
        raise DomainError(f"Argument x must be finite, got {x!r}")


def _ensure_same_degree(p: Polynomial, q: Polynomial) -> None:
    if p.degree != q.degree:
        raise DomainError(
            f"Polynomials must have equal degree: {p.degree} != {q.degree}"
        )


# Схема Горнера
# =============


def horner(p: Polynomial, x: float) -> float:
    """Классическая схема Горнера r_i = r_{i+1} ⊗ x ⊕ a_i.

    Относительная ошибка не превышает γ_2n · cond(p, x).
    Переполнение не перехватывается: нечисловой результат и есть
    признак переполнения.
    """
    _ensure_x(x)
    coeffs = p.coeffs
    r = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        r = r * x + coeffs[i]
    return r


def eft_horner(p: Polynomial, x: float) -> EftHornerOutput:
    """Безошибочное преобразование схемы Горнера.

    На каждом шаге:

    - [p_i, π_i] = TwoProd(s_{i+1}, x)
    - [s_i, σ_i] = TwoSum(p_i, a_i)

    Значение совпадает с ``horner(p, x)`` бит в бит.
    Если хотя бы одно произведение попало в область исчезновения
    порядка, статус станет ``UNDERFLOW_UNVERIFIED``.
    """
    _ensure_x(x)
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        return EftHornerOutput(coeffs[0], None, None)

    pi = [0.0] * n
    sigma = [0.0] * n
    underflow = False

    # Разбиение x не меняется на протяжении цикла
    z = x * SPLITTER
    xh = z - (z - x)
    xl = x - xh

    s = coeffs[n]
    for i in range(n - 1, -1, -1):
        # TwoProd(s, x)
        prod = s * x
        z = s * SPLITTER
        sh = z - (z - s)
        sl = s - sh
        pi[i] = sl * xl - (((prod - sh * xh) - sl * xh) - sh * xl)
        if s != 0.0 and x != 0.0 and abs(prod) < UNDERFLOW_LIMIT:
            underflow = True

        # TwoSum(prod, a_i)
        a = coeffs[i]
        s = prod + a
        z = s - prod
        sigma[i] = (prod - (s - z)) + (a - z)

    if not (
        math.isfinite(s)
        and all(map(math.isfinite, pi))
        and all(map(math.isfinite, sigma))
    ):
        status = EvalStatus.OVERFLOW
    elif underflow:
        status = EvalStatus.UNDERFLOW_UNVERIFIED
    else:
        status = EvalStatus.OK

    return EftHornerOutput(
        s, Polynomial._wrap(pi), Polynomial._wrap(sigma), status
    )


def horner_sum(p: Polynomial, q: Polynomial, x: float) -> float:
    """Схема Горнера для многочлена p ⊕ q.

    Коэффициенты складываются в binary64, затем вычисляется схема
    Горнера.
    Используется для вычисления поправки ĉ по многочленам ошибок.

    Raises:
        DomainError: Если степени многочленов не совпадают.

    """
    _ensure_same_degree(p, q)
    _ensure_x(x)
    a, b = p.coeffs, q.coeffs
    r = a[-1] + b[-1]
    for i in range(len(a) - 2, -1, -1):
        r = r * x + (a[i] + b[i])
    return r


def abs_horner_sum(p: Polynomial, q: Polynomial, x: float) -> float:
    """Схема Горнера для |p| ⊕ |q| в точке |x|.

    Это величина b̂ из динамической границы ошибки.
    Результат всегда неотрицателен.
    """
    _ensure_same_degree(p, q)
    _ensure_x(x)
    a, b = p.coeffs, q.coeffs
    ax = abs(x)
    r = abs(a[-1]) + abs(b[-1])
    for i in range(len(a) - 2, -1, -1):
        r = r * ax + (abs(a[i]) + abs(b[i]))
    return r
