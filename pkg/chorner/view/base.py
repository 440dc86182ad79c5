"""Базовый класс представления.

Как можно представить результаты вычислений в различных форматах.
"""

from abc import ABC, abstractmethod
from collections import Counter
from fractions import Fraction
from typing import Generic, TypeVar

from chorner.bench import RatioReport
from chorner.compensated import CertifiedEval
from chorner.enums import EvalStatus, Method
from chorner.experiments import ExperimentResult

_VR = TypeVar("_VR")


class View(Generic[_VR], ABC):
    """Базовый класс представления.

    От него наследуются все классы представления.
    Позволяет предоставлять результаты вычислений в некотором формате.
    """

    @abstractmethod
    def environment(self, env: dict[str, str]) -> _VR:
        """Описание окружения и результат проверки арифметики."""

    @abstractmethod
    def evaluation(
        self, method: Method, value: float, status: EvalStatus
    ) -> _VR:
        """Значение многочлена, вычисленное одним из алгоритмов."""

    @abstractmethod
    def certified(self, cert: CertifiedEval) -> _VR:
        """Значение многочлена вместе с сертификатом."""

    @abstractmethod
    def exact(self, value: Fraction) -> _VR:
        """Точное значение многочлена и его округление."""

    @abstractmethod
    def corpus_check(self, summary: Counter[str]) -> _VR:
        """Итоги перепроверки корпуса."""

    @abstractmethod
    def experiment(self, result: ExperimentResult) -> _VR:
        """Итоги эксперимента."""

    @abstractmethod
    def ratios(self, report: RatioReport) -> _VR:
        """Отношения времени работы алгоритмов."""
