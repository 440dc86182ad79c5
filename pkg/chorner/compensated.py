"""Компенсированная схема Горнера.

Вычисляет поправку ĉ к результату классической схемы по многочленам
ошибок EFTHorner и прибавляет её: r̄ = r̂ ⊕ ĉ.
Результат так же точен, как схема Горнера в удвоенной точности.

Кроме того модуль содержит:

- Априорный критерий правильного округления через число
    обусловленности (``apriori_threshold``).
- Динамическую, проверенную в арифметике с плавающей точкой, границу
    ошибки β̂ и сертификат правильного округления
    (``comp_horner_is_faithful``).

``comp_horner`` требует около 21n операций,
``comp_horner_is_faithful`` около 26n.
"""

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from chorner.eft import _two_sum
from chorner.enums import SPLITTER, U, UNDERFLOW_LIMIT, EvalStatus
from chorner.exceptions import DomainError
from chorner.oracle import U_EXACT, gamma, round_nearest
from chorner.polyval import Polynomial

_MAX_GAMMA_INDEX = 2**53


@dataclass(slots=True, frozen=True)
class CertifiedEval:
    """Результат компенсированной схемы с сертификатом.

    - `value`: Компенсированный результат r̄.
    - `err_bound`: Проверенная граница абсолютной ошибки β̂.
    - `alpha_hat`: Граница ошибки поправки α̂ >= |ĉ - c|.
    - `is_faithful`: Доказано ли правильное округление r̄.
    - `status`: Выполнены ли условия теорем.

    Если статус ``OK``, то |value - p(x)| <= err_bound, а при
    is_faithful результат гарантированно правильно округлён.
    При любом другом статусе сертификат не выдаётся.
    """

    value: float
    err_bound: float
    alpha_hat: float
    is_faithful: bool
    status: EvalStatus = EvalStatus.OK


def gamma_hat(k: int) -> float:
    """Вычисленное в binary64 значение γ_k: fl(ku) ⊘ fl(1 - ku).

    Погрешность только в делении, поэтому γ_k <= (1 + u) · γ̂_k.

    Raises:
        DomainError: Если k < 0 или k >= 2^53.

    """
    if k < 0 or k >= _MAX_GAMMA_INDEX:
        raise DomainError(f"gamma_hat requires 0 <= k < 2^53, got {k}")
    ku = k * U
    return ku / (1.0 - ku)


def apriori_threshold(n: int) -> float:
    """Граница числа обусловленности для правильного округления.

    Если cond(p, x) < (1 - u) / (2 + u) · u · γ_2n⁻², то
    ``comp_horner`` гарантированно выдаёт правильное округление.
    Граница вычисляется точно и округляется к нулю, поэтому
    возвращаемое значение никогда не больше настоящего.

    Raises:
        DomainError: Если n < 1 или 2nu >= 1.

    """
    if n < 1 or 2 * n >= _MAX_GAMMA_INDEX:
        raise DomainError(f"apriori_threshold requires 1 <= n < 2^52, got {n}")
    g = gamma(2 * n)
    exact = (1 - U_EXACT) / (2 + U_EXACT) * U_EXACT / (g * g)
    res = round_nearest(exact)
    if Fraction(res) > exact:
        res = math.nextafter(res, 0.0)
    return res


# Компенсированная схема
# ======================


def comp_horner_checked(p: Polynomial, x: float) -> tuple[float, EvalStatus]:
    """Компенсированная схема Горнера вместе с состоянием вычисления.

    Поправка ĉ = Horner(p_π ⊕ p_σ, x) накапливается в том же цикле,
    что и EFTHorner, без хранения многочленов ошибок.
    Порядок операций тот же, поэтому результат совпадает бит в бит с
    ``comp_horner_is_faithful``.
    """
    if not math.isfinite(x):
        raise DomainError(f"Argument x must be finite, got {x!r}")
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        return coeffs[0], EvalStatus.OK

    underflow = False
    z = x * SPLITTER
    xh = z - (z - x)
    xl = x - xh

    s = coeffs[n]
    c = 0.0
    for i in range(n - 1, -1, -1):
        prod = s * x
        z = s * SPLITTER
        sh = z - (z - s)
        sl = s - sh
        pi = sl * xl - (((prod - sh * xh) - sl * xh) - sh * xl)
        if s != 0.0 and x != 0.0 and abs(prod) < UNDERFLOW_LIMIT:
            underflow = True

        a = coeffs[i]
        s = prod + a
        z = s - prod
        sigma = (prod - (s - z)) + (a - z)

        c = pi + sigma if i == n - 1 else c * x + (pi + sigma)

    r = s + c
    if not math.isfinite(r):
        return r, EvalStatus.OVERFLOW
    if underflow:
        return r, EvalStatus.UNDERFLOW_UNVERIFIED
    return r, EvalStatus.OK


def comp_horner(p: Polynomial, x: float) -> float:
    """Компенсированная схема Горнера r̄ = r̂ ⊕ ĉ.

    |r̄ - p(x)| <= u · |p(x)| + γ_2n² · p̃(x).
    Пока cond(p, x) заметно меньше 1/u, результат точен почти до
    последнего бита.
    Состояние вычисления отбрасывается, за ним обращайтесь к
    ``comp_horner_checked``.

    Если промежуточная сумма превышает 2^996, разбиение Split
    переполняется и результат равен nan, даже когда ``horner``
    ещё конечен.
    Например p = 1 + 2^997 x при x = 1/2.
    """
    return comp_horner_checked(p, x)[0]


def comp_horner_is_faithful(p: Polynomial, x: float) -> CertifiedEval:
    """Компенсированная схема с проверкой правильного округления.

    - [r̂, p_π, p_σ] = EFTHorner(p, x)
    - ĉ = Horner(p_π ⊕ p_σ, x)
    - b̂ = Horner(|p_π| ⊕ |p_σ|, |x|)
    - [r̄, e] = TwoSum(r̂, ĉ)
    - α̂ = (γ̂_{2n-1} ⊗ b̂) ⊘ (1 ⊖ 2(n + 1) ⊗ u)
    - β̂ = (α̂ ⊕ |e|) ⊘ (1 ⊖ 2 ⊗ u)
    - is_faithful = α̂ < u/2 · |r̄|

    Все три схемы Горнера выполняются в одном цикле, в том же порядке
    операций, что и по отдельности.

    Сертификат выдаётся только если r̄ нормализовано и ни одно
    произведение не попало в область исчезновения порядка.
    Многочлен степени 0 вычисляется точно.
    """
    if not math.isfinite(x):
        raise DomainError(f"Argument x must be finite, got {x!r}")
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        return CertifiedEval(coeffs[0], 0.0, 0.0, True)

    underflow = False
    z = x * SPLITTER
    xh = z - (z - x)
    xl = x - xh
    ax = abs(x)

    s = coeffs[n]
    c = 0.0
    b = 0.0
    for i in range(n - 1, -1, -1):
        prod = s * x
        z = s * SPLITTER
        sh = z - (z - s)
        sl = s - sh
        pi = sl * xl - (((prod - sh * xh) - sl * xh) - sh * xl)
        if s != 0.0 and x != 0.0 and abs(prod) < UNDERFLOW_LIMIT:
            underflow = True

        a = coeffs[i]
        s = prod + a
        z = s - prod
        sigma = (prod - (s - z)) + (a - z)

        if i == n - 1:
            c = pi + sigma
            b = abs(pi) + abs(sigma)
        else:
            c = c * x + (pi + sigma)
            b = b * ax + (abs(pi) + abs(sigma))

    r, e = _two_sum(s, c)
    alpha = (gamma_hat(2 * n - 1) * b) / (1.0 - (2 * (n + 1)) * U)
    beta = (alpha + abs(e)) / (1.0 - 2 * U)

    # Переполнение любого π_i или σ_i проявится в b̂
    if not all(map(math.isfinite, (r, e, b, alpha, beta))):
        status = EvalStatus.OVERFLOW
    elif underflow:
        status = EvalStatus.UNDERFLOW_UNVERIFIED
    else:
        status = EvalStatus.OK

    if status is not EvalStatus.OK:
        logger.debug("Certificate withheld: {} at x={}", status.value, x)
        return CertifiedEval(r, beta, alpha, False, status)

    # Лемма о правильном округлении требует нормализованного r̄
    faithful = abs(r) >= sys.float_info.min and alpha < (U / 2) * abs(r)
    return CertifiedEval(r, beta, alpha, faithful, status)
