"""Генератор текстовых сообщений для командной строки.

Используется для преобразования необработанных результатов работы
алгоритмов, эталона и экспериментов.
Выходным результатом генератора сообщений являются строки.
"""

from collections import Counter
from fractions import Fraction

from chorner.bench import RatioReport
from chorner.compensated import CertifiedEval
from chorner.enums import CertificateClass, EvalStatus, Method
from chorner.experiments import ExperimentResult
from chorner.oracle import round_nearest
from chorner.storage import hex_float
from chorner.view.base import View

# Порядок отображения классов сертификата
_CLASS_ORDER = (
    CertificateClass.CERTIFIED_FAITHFUL,
    CertificateClass.FAITHFUL_UNDETECTED,
    CertificateClass.UNFAITHFUL,
)
_ROWS_FORMS = ("строка", "строки", "строк")
_RECORDS_FORMS = ("запись", "записи", "записей")
# Ключи сводки, которые не выводятся отдельной строкой
_HIDDEN_KEYS = {"total", *(c.value for c in _CLASS_ORDER)}


def plural_form(n: int, v: tuple[str, str, str]) -> str:
    """Возвращает склонённое значение в зависимости от числа.

    Возвращает склонённое слово: "для одного", "для двух",
    "для пяти" значений.
    """
    return v[2 if (4 < n % 100 < 20) else (2, 0, 1, 1, 1, 2)[min(n % 10, 5)]]


def format_value(f: float) -> str:
    """Число в шестнадцатеричном и десятичном виде."""
    return f"{hex_float(f)} ({f!r})"


def _status_line(status: EvalStatus) -> str:
    if status == EvalStatus.OK:
        return "Состояние: ok"
    return f"⚠️ Состояние: {status.value}"


def _summary_lines(summary: Counter[str]) -> list[str]:
    lines: list[str] = []
    if any(c.value in summary for c in _CLASS_ORDER):
        lines.extend(
            f"  | {c.value}: {summary[c.value]}" for c in _CLASS_ORDER
        )
    lines.extend(
        f"  | {k}: {v}"
        for k, v in sorted(summary.items())
        if k not in _HIDDEN_KEYS
    )
    return lines


class MessagesView(View[str]):
    """Представляет результаты в виде текстовых сообщений.

    В отличие от необработанных результатов, методы этого класса
    возвращают готовые строки для вывода в терминал.
    """

    def environment(self, env: dict[str, str]) -> str:
        """Описание окружения после успешной проверки арифметики."""
        lines = ["✅ Арифметика binary64, округление к ближайшему чётному"]
        lines.extend(f"  | {k}: {v}" for k, v in env.items())
        return "\n".join(lines)

    def evaluation(
        self, method: Method, value: float, status: EvalStatus
    ) -> str:
        """Значение многочлена, вычисленное одним из алгоритмов."""
        return "\n".join(
            (
                f"{method.value}: {format_value(value)}",
                _status_line(status),
            )
        )

    def certified(self, cert: CertifiedEval) -> str:
        """Значение многочлена вместе с сертификатом.

        Выводит значение, проверенную границу ошибки β̂, границу α̂ и
        флаг правильного округления.
        """
        return "\n".join(
            (
                f"certified: {format_value(cert.value)}",
                f"  | err_bound: {format_value(cert.err_bound)}",
                f"  | alpha_hat: {format_value(cert.alpha_hat)}",
                f"  | is_faithful: {str(cert.is_faithful).lower()}",
                _status_line(cert.status),
            )
        )

    def exact(self, value: Fraction) -> str:
        """Точное рациональное значение и его округление до binary64."""
        try:
            rounded = hex_float(round_nearest(value))
        except OverflowError:
            rounded = "inf" if value > 0 else "-inf"
        return f"{value.numerator}/{value.denominator} = {rounded}"

    def corpus_check(self, summary: Counter[str]) -> str:
        """Число записей корпуса по классам сертификата."""
        total = summary["total"]
        lines = [
            f"🔎 Проверено {total} {plural_form(total, _RECORDS_FORMS)}:",
            *_summary_lines(summary),
        ]
        if summary["false_positive"]:
            lines.append("❌ Сертификат подтвердил неверное округление!")
        return "\n".join(lines)

    def experiment(self, result: ExperimentResult) -> str:
        """Итоги эксперимента: куда записан CSV и сводка."""
        lines = [
            f"📀 {result.name}: {result.path} "
            f"({result.rows} {plural_form(result.rows, _ROWS_FORMS)})"
        ]
        if result.summary:
            lines.extend(_summary_lines(result.summary))
        return "\n".join(lines)

    def ratios(self, report: RatioReport) -> str:
        """Средние отношения времени работы к схеме Горнера."""
        lines = [f"⏱️ Отношения к Horner ({len(report.rows)} степеней):"]
        for name in ("comp", "cert", "dd"):
            lines.append(
                f"  | {name}: {report.average(name):.2f} "
                f"(медиана {report.average(name, median=True):.2f})"
            )
        lines.append(f"  | checksum: {report.checksum}")
        return "\n".join(lines)
