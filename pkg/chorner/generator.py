"""Генератор тестовых многочленов.

Предоставляет два источника многочленов:

- Развёрнутые многочлены (1 - x)^n, вычисление которых около кратного
    корня x = 1 очень плохо обусловлено.
- Генератор многочленов с произвольным числом обусловленности C в
    заданной точке x.

Генератор работает в два шага:

1. Коэффициенты при чётных степенях выбираются случайно, так чтобы
    p̃(x) = Σ |a_i| |x|^i ≈ C.
    Величины слагаемых берутся лог-равномерно, знаки случайно.
2. Коэффициенты при нечётных степенях по возрастанию степени
    подбираются в точной арифметике так, чтобы p(x) ≈ 1.
    Каждый следующий коэффициент гасит остаток, оставшийся после
    округления предыдущего.
    Когда остаток становится пренебрежимо мал, оставшиеся нечётные
    коэффициенты остаются нулевыми.

Отсюда cond(p, x) = p̃(x) / |p(x)| ≈ C.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from loguru import logger

from chorner.enums import MAX_BINOMIAL_DEGREE
from chorner.exceptions import DomainError, GeneratorError
from chorner.oracle import cond, eval_exact, round_nearest
from chorner.polyval import Polynomial

# Сетка целевых чисел обусловленности 10^2, 10^4, ..., 10^34
COND_DECADES = tuple(10.0**k for k in range(2, 35, 2))

# Разброс величин случайных слагаемых, в декадах
_SPREAD_DECADES = 2.0
# Допустимое отклонение |p(x)| от 1
_VALUE_BAND = (Fraction(1, 2), Fraction(2))
# Остаток меньше этой величины уже не влияет на p(x) = 1
_RESIDUAL_FLOOR = Fraction(1, 2**106)


@dataclass(slots=True, frozen=True)
class GeneratorSpec:
    """Параметры генератора.

    - `degree`: Степень многочлена, не меньше 2.
    - `target_cond`: Желаемое число обусловленности C >= 1.
    - `x`: Точка, в которой задаётся обусловленность.
    - `seed`: Зерно генератора случайных чисел.
    """

    degree: int
    target_cond: float
    x: float
    seed: int

    def __post_init__(self) -> None:
        if self.degree < 2:  # noqa: PLR2004
            raise DomainError("Generator needs degree >= 2")
        if not (math.isfinite(self.target_cond) and self.target_cond >= 1):
            raise DomainError("Target condition number must be >= 1")
        if not math.isfinite(self.x) or self.x == 0.0:
            raise DomainError("Generator needs a finite non zero x")


@dataclass(slots=True, frozen=True)
class CorpusItem:
    """Запись корпуса: многочлен и обстоятельства его генерации."""

    polynomial: Polynomial
    x: float
    seed: int
    target_cond: float
    cond: float


def binomial_expand(n: int) -> Polynomial:
    """Коэффициенты развёрнутого многочлена (1 - x)^n.

    Коэффициент при x^i равен (-1)^i · C(n, i).
    До n = 56 все коэффициенты представимы точно, C(57, 25) уже нет.
    """
    if not 0 <= n <= MAX_BINOMIAL_DEGREE:
        raise DomainError(
            f"binomial_expand supports 0 <= n <= {MAX_BINOMIAL_DEGREE}"
        )
    return Polynomial(float((-1) ** i * math.comb(n, i)) for i in range(n + 1))


def _to_float(r: Fraction, index: int) -> float:
    try:
        a = round_nearest(r)
    except OverflowError:
        a = math.inf
    if not math.isfinite(a) or (a == 0.0 and r != 0):
        raise GeneratorError(f"Coefficient {index} is not representable")
    return a


def generate(spec: GeneratorSpec) -> Polynomial:
    """Генерирует многочлен с cond(p, x) порядка ``target_cond``.

    Результат детерминирован при фиксированном зерне.
    Точное значение |p(x)| лежит в [1/2, 2].

    Raises:
        GeneratorError: Если коэффициенты не представимы или
            нечётных коэффициентов не хватает, чтобы погасить остаток.

    """
    rng = np.random.default_rng(spec.seed)
    n = spec.degree
    fx = Fraction(spec.x)
    ax = abs(fx)
    coeffs = [0.0] * (n + 1)

    # Шаг 1: случайные слагаемые при чётных степенях, Σ |a_i||x|^i ≈ C
    even = range(0, n + 1, 2)
    weights = 10.0 ** rng.uniform(0.0, _SPREAD_DECADES, size=len(even))
    signs = rng.choice((-1, 1), size=len(even))
    total = float(weights.sum())
    partial = Fraction(0)
    for i, w, sign in zip(even, weights, signs, strict=True):
        term = Fraction(spec.target_cond * float(w) / total)
        coeffs[i] = _to_float(int(sign) * term / ax**i, i)
        partial += Fraction(coeffs[i]) * fx**i

    # Шаг 2: нечётные степени гасят остаток до p(x) = 1
    residual = 1 - partial
    for i in range(1, n + 1, 2):
        if abs(residual) < _RESIDUAL_FLOOR:
            break
        power = fx**i
        coeffs[i] = _to_float(residual / power, i)
        residual -= Fraction(coeffs[i]) * power

    p = Polynomial(coeffs)
    value = abs(eval_exact(p, spec.x))
    if not _VALUE_BAND[0] <= value <= _VALUE_BAND[1]:
        raise GeneratorError(
            f"Target cond {spec.target_cond:.1e} unreachable at degree {n}"
        )
    return p


def generate_corpus(
    degree: int,
    conds: tuple[float, ...] = COND_DECADES,
    count: int = 1,
    seed: int = 0,
    x_range: tuple[float, float] = (0.5, 2.0),
) -> list[CorpusItem]:
    """Генерирует корпус многочленов по сетке чисел обусловленности.

    Для каждого целевого C генерируется ``count`` многочленов.
    Точка x и зерно каждого многочлена берутся из общего потока,
    поэтому весь корпус воспроизводится по одному зерну.
    Недостижимые цели пропускаются с предупреждением.
    """
    logger.info("Generate corpus: degree {}, {} targets", degree, len(conds))
    rng = np.random.default_rng(seed)
    items: list[CorpusItem] = []
    for target in conds:
        for _ in range(count):
            item_seed = int(rng.integers(0, 2**63))
            x = float(rng.uniform(*x_range))
            try:
                p = generate(GeneratorSpec(degree, target, x, item_seed))
            except GeneratorError as e:
                logger.warning("Skip target {:.1e}: {}", target, e)
                continue

            measured = float(cond(p, x))
            items.append(CorpusItem(p, x, item_seed, target, measured))
    logger.info("Corpus ready: {} polynomials", len(items))
    return items
