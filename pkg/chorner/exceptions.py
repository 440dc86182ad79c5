"""Исключения платформы.

Все исключения наследуются от ``ChornerError``.
Командная строка преобразует их в коды выхода.
"""


class ChornerError(Exception):
    """Базовое исключение платформы."""


class NumericError(ChornerError, ArithmeticError):
    """Нарушены численные предпосылки вычисления."""


class EftOverflowError(NumericError):
    """Результат безошибочного преобразования переполнился."""


class InfiniteConditionError(NumericError):
    """Значение многочлена равно нулю, число обусловленности бесконечно."""


class DomainError(ChornerError, ValueError):
    """Аргументы не удовлетворяют требованиям операции."""


class GeneratorError(ChornerError):
    """Генератор не может получить заданное число обусловленности."""


class BenchmarkError(ChornerError):
    """Замер времени недостоверен."""


class PolynomialFileError(ChornerError, ValueError):
    """Ошибка разбора файла многочлена."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class ArithmeticEnvironmentError(ChornerError, RuntimeError):
    """Арифметика платформы не соответствует IEEE-754 binary64 RNE."""
