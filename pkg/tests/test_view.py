from collections import Counter
from fractions import Fraction
from pathlib import Path

from chorner.compensated import CertifiedEval
from chorner.enums import EvalStatus, Method
from chorner.experiments import ExperimentResult
from chorner.view.messages import MessagesView, format_value, plural_form

view = MessagesView()


def test_plural_form() -> None:
    forms = ("строка", "строки", "строк")
    assert plural_form(1, forms) == "строка"
    assert plural_form(3, forms) == "строки"
    assert plural_form(11, forms) == "строк"
    assert plural_form(21, forms) == "строка"


def test_format_value() -> None:
    assert format_value(3.0) == "0x1.8p1 (3.0)"


def test_exact() -> None:
    assert view.exact(Fraction(7, 4)) == "7/4 = 0x1.cp0"
    assert view.exact(Fraction(10**400)).endswith("= inf")


def test_evaluation_status() -> None:
    ok = view.evaluation(Method.HORNER, 3.0, EvalStatus.OK)
    assert ok.startswith("horner: 0x1.8p1")
    bad = view.evaluation(Method.COMP, float("inf"), EvalStatus.OVERFLOW)
    assert "overflow" in bad


def test_certified() -> None:
    text = view.certified(CertifiedEval(1.0, 2.0**-53, 2.0**-60, True))
    assert "is_faithful: true" in text
    assert "err_bound: 0x1p-53" in text


def test_summaries() -> None:
    summary = Counter(
        {"certified_faithful": 2, "total": 2, "false_positive": 0}
    )
    text = view.corpus_check(summary)
    assert "Проверено 2 записи" in text
    assert "certified_faithful: 2" in text
    assert "unfaithful: 0" in text

    res = ExperimentResult("table1", Path("t.csv"), 6)
    assert view.experiment(res) == "📀 table1: t.csv (6 строк)"
