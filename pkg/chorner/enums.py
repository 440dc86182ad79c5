"""Коллекция перечислений и констант.

Перечисления могут использоваться всеми компонентами.
Расположены в одном месте для большего удобства.
"""

from enum import Enum

# Единица округления binary64 при округлении к ближайшему
U = 2.0**-53

# Ниже этой границы TwoProd перестаёт быть точным
UNDERFLOW_LIMIT = 2.0**-969
# Выше этой границы умножение на 2^27 + 1 в Split переполняется
SPLIT_LIMIT = 2.0**996
SPLITTER = 134217729.0  # 2^27 + 1

# Степень, до которой биномиальные коэффициенты точно представимы
MAX_BINOMIAL_DEGREE = 56


class EvalStatus(Enum):
    """Состояние вычисления.

    - `OK`: Все предпосылки теорем выполнены.
    - `UNDERFLOW_UNVERIFIED`: В TwoProd случилось исчезновение порядка,
        точность преобразований не гарантируется.
    - `OVERFLOW`: Какой-то этап вычисления переполнился.
    """

    OK = "ok"
    UNDERFLOW_UNVERIFIED = "underflow_unverified"
    OVERFLOW = "overflow"


class Method(Enum):
    """Способ вычисления многочлена в командной строке."""

    HORNER = "horner"
    COMP = "comp"
    CERTIFIED = "certified"
    DD = "dd"
    EXACT = "exact"


class CertificateClass(Enum):
    """Итог проверки сертификата точным эталоном.

    Три возможных случая при динамической проверке:

    - `CERTIFIED_FAITHFUL`: Результат правильно округлён, и сертификат
        это подтвердил (зелёные точки).
    - `FAITHFUL_UNDETECTED`: Результат правильно округлён, но проверка
        не смогла это доказать (синие точки).
    - `UNFAITHFUL`: Результат не является правильным округлением
        (красные точки).
    """

    CERTIFIED_FAITHFUL = "certified_faithful"
    FAITHFUL_UNDETECTED = "faithful_undetected"
    UNFAITHFUL = "unfaithful"
