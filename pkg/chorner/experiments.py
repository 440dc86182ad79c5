"""Воспроизведение экспериментов.

Каждый эксперимент записывает один CSV файл, по которому можно
построить соответствующий график или таблицу.

- fig1: (1 - x)^n для n = 6, 8, 10, 12 около кратного корня x = 1.
- fig2: Корпус степени 50 с числами обусловленности от 10^2 до 10^35.
- fig3: (1 - x)^5 около x = 1, динамическая и априорная границы.
- table1: Априорные границы числа обусловленности по степеням.
- table2: Отношения времени работы к классической схеме.

Результаты вычислений сравниваются с точным эталоном, каждое
вычисление относится к одному из трёх классов сертификата.
"""

from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeVar

from loguru import logger

from chorner.bench import RatioReport, run_ratios, write_report
from chorner.compensated import apriori_threshold, comp_horner_is_faithful
from chorner.enums import EvalStatus
from chorner.exceptions import DomainError
from chorner.generator import (
    COND_DECADES,
    CorpusItem,
    binomial_expand,
    generate_corpus,
)
from chorner.oracle import (
    abs_eval_exact,
    apriori_error_bound,
    apriori_relative_bound,
    classify,
    eval_exact,
    is_faithful,
    relative_error,
    to_exact,
)
from chorner.polyval import Polynomial, horner
from chorner.storage import hex_float, save_corpus, write_csv

_T = TypeVar("_T")
_R = TypeVar("_R")

FIG1_DEGREES = (6, 8, 10, 12)
FIG1_POINTS = 2048
# Число обусловленности на краю сетки fig1
FIG1_EDGE_COND = 1e4
FIG2_DEGREE = 50
FIG2_PER_TARGET = 300
FIG3_POINTS = 400
FIG3_HALF_WIDTH = 2.0**-5
TABLE1_DEGREES = (10, 100, 200, 300, 400, 500)

FIG1_HEADER = (
    "n",
    "x",
    "cond",
    "horner_rel_error",
    "comp_rel_error",
    "alpha_hat",
    "beta_hat",
    "is_faithful",
    "oracle_faithful",
    "certificate_class",
)
FIG2_HEADER = (
    "index",
    "degree",
    "x",
    "target_cond",
    "measured_cond",
    "relative_error",
    "apriori_relative_bound",
    "is_faithful",
    "oracle_faithful",
    "certificate_class",
    "status",
)
FIG3_HEADER = ("x", "cond", "forward_error", "dynamic_bound", "apriori_bound")
TABLE1_HEADER = ("degree", "threshold")


@dataclass(slots=True)
class ExperimentResult:
    """Итог эксперимента.

    - `name`: Имя эксперимента.
    - `path`: Путь к записанному CSV.
    - `rows`: Сколько строк записано.
    - `summary`: Счётчик классов сертификата и прочих событий.
    """

    name: str
    path: Path
    rows: int
    summary: Counter[str] = field(default_factory=Counter)


def _fmt(r: Fraction | float) -> str:
    return f"{float(r):.6e}"


def _parallel_map(
    fn: Callable[[_T], _R], items: Sequence[_T], jobs: int
) -> list[_R]:
    """Применяет чистую функцию к элементам, при jobs > 1 в процессах.

    Порядок результатов совпадает с порядком элементов.
    """
    if jobs <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=16))


def symmetric_grid(
    center: float, half_width: float, points: int
) -> list[float]:
    """Равномерная сетка из чётного числа точек вокруг center.

    Точки расположены симметрично, сам центр в сетку не попадает.
    """
    if points < 2 or points % 2:  # noqa: PLR2004
        raise DomainError("points must be an even number >= 2")
    last = points - 1
    return [center + half_width * (2 * j - last) / last for j in range(points)]


# fig1: кратный корень
# ====================


def _fig1_row(args: tuple[int, Polynomial, float]) -> tuple[Any, ...]:
    n, p, x = args
    exact = eval_exact(p, x)
    abs_value = abs_eval_exact(p, x)
    condition = abs_value / abs(exact) if exact != 0 else None
    cert = comp_horner_is_faithful(p, x)
    verdict = is_faithful(cert.value, exact)
    return (
        n,
        hex_float(x),
        _fmt(condition) if condition is not None else "inf",
        _fmt(relative_error(horner(p, x), exact)),
        _fmt(relative_error(cert.value, exact)),
        _fmt(cert.alpha_hat),
        _fmt(cert.err_bound),
        int(cert.is_faithful),
        int(verdict.faithful),
        classify(cert.is_faithful, verdict).value,
    )


def fig1(
    out_dir: Path,
    degrees: Iterable[int] = FIG1_DEGREES,
    points: int = FIG1_POINTS,
    jobs: int = 1,
) -> ExperimentResult:
    """Вычисление (1 - x)^n около кратного корня x = 1.

    Для каждой кратности n сетка из ``points`` точек выбирается так,
    чтобы на её краях cond(p_n, x) = ((1 + x) / |1 - x|)^n было
    порядка 10^4, а в центре далеко за 1/u.
    """
    tasks: list[tuple[int, Polynomial, float]] = []
    for n in degrees:
        p = binomial_expand(n)
        half_width = 2.0 / FIG1_EDGE_COND ** (1 / n)
        tasks.extend((n, p, x) for x in symmetric_grid(1.0, half_width, points))

    logger.info("fig1: {} evaluations", len(tasks))
    rows = sorted(_parallel_map(_fig1_row, tasks, jobs), key=_fig1_key)
    summary = Counter(row[-1] for row in rows)
    summary["false_positive"] = sum(
        1 for row in rows if row[7] == 1 and row[8] == 0
    )
    path = out_dir / "fig1.csv"
    written = write_csv(path, FIG1_HEADER, rows)
    return ExperimentResult("fig1", path, written, summary)


def _fig1_key(row: tuple[Any, ...]) -> tuple[int, float]:
    return row[0], float.fromhex(row[1])


# fig2: корпус произвольной обусловленности
# =========================================


def _fig2_row(args: tuple[int, CorpusItem]) -> tuple[Any, ...]:
    index, item = args
    p, x = item.polynomial, item.x
    exact = eval_exact(p, x)
    condition = abs_eval_exact(p, x) / abs(exact)
    cert = comp_horner_is_faithful(p, x)
    verdict = is_faithful(cert.value, exact)
    return (
        index,
        p.degree,
        hex_float(x),
        f"{item.target_cond:.1e}",
        _fmt(condition),
        _fmt(relative_error(cert.value, exact)),
        _fmt(apriori_relative_bound(p.degree, condition)),
        int(cert.is_faithful),
        int(verdict.faithful),
        classify(cert.is_faithful, verdict).value,
        cert.status.value,
    )


def fig2(
    out_dir: Path,
    degree: int = FIG2_DEGREE,
    count: int = FIG2_PER_TARGET,
    seed: int = 0,
    conds: tuple[float, ...] = COND_DECADES,
    jobs: int = 1,
) -> ExperimentResult:
    """Точность и сертификат на корпусе произвольной обусловленности.

    Для каждого целевого C генерируется ``count`` многочленов.
    Сам корпус также сохраняется, чтобы его можно было перепроверить.
    """
    corpus = generate_corpus(degree, conds, count, seed)
    save_corpus(out_dir / "fig2_corpus.jsonl", corpus)

    rows = sorted(_parallel_map(_fig2_row, list(enumerate(corpus)), jobs))
    summary = Counter(row[9] for row in rows)
    summary["false_positive"] = sum(
        1 for row in rows if row[7] == 1 and row[8] == 0
    )
    summary["not_ok"] = sum(1 for row in rows if row[10] != EvalStatus.OK.value)
    path = out_dir / "fig2.csv"
    written = write_csv(path, FIG2_HEADER, rows)
    return ExperimentResult("fig2", path, written, summary)


# Перепроверка корпуса
# ====================


def _check_item(item: CorpusItem) -> tuple[str, bool, bool, str]:
    p, x = item.polynomial, item.x
    exact = eval_exact(p, x)
    cert = comp_horner_is_faithful(p, x)
    verdict = is_faithful(cert.value, exact)
    within = abs(to_exact(cert.value) - exact) <= to_exact(cert.err_bound)
    return (
        classify(cert.is_faithful, verdict).value,
        cert.is_faithful and not verdict.faithful,
        within,
        cert.status.value,
    )


def check_corpus(items: Sequence[CorpusItem], jobs: int = 1) -> Counter[str]:
    """Перепроверяет корпус сертификатом и точным эталоном.

    Возвращает число записей по классам сертификата, а также:

    - `total`: Всего записей.
    - `false_positive`: Сертификат подтвердил неверное округление.
    - `bound_violation`: Ошибка превысила β̂ при состоянии ok.
    - `not_ok`: Вычисления с исчезновением порядка или переполнением.
    """
    summary: Counter[str] = Counter()
    summary["total"] = len(items)
    summary["false_positive"] = 0
    summary["bound_violation"] = 0
    for cls, false_positive, within, status in _parallel_map(
        _check_item, items, jobs
    ):
        summary[cls] += 1
        summary["false_positive"] += false_positive
        if status == EvalStatus.OK.value:
            summary["bound_violation"] += not within
        else:
            summary["not_ok"] += 1
    logger.info("Corpus checked: {} records", len(items))
    return summary


# fig3: динамическая граница против априорной
# ===========================================


def _fig3_row(args: tuple[Polynomial, float]) -> tuple[Any, ...]:
    p, x = args
    exact = eval_exact(p, x)
    cert = comp_horner_is_faithful(p, x)
    forward = abs(to_exact(cert.value) - exact)
    apriori = apriori_error_bound(p, x)
    condition = abs_eval_exact(p, x) / abs(exact)
    return (
        hex_float(x),
        _fmt(condition),
        _fmt(forward),
        _fmt(cert.err_bound),
        _fmt(apriori),
        # Для сводки: сравнения в точной арифметике
        to_exact(cert.err_bound) <= apriori,
        forward <= to_exact(cert.err_bound) and forward <= apriori,
    )


def fig3(
    out_dir: Path,
    points: int = FIG3_POINTS,
    degree: int = 5,
    jobs: int = 1,
) -> ExperimentResult:
    """Сравнение динамической границы β̂ с априорной для (1 - x)^n."""
    p = binomial_expand(degree)
    tasks = [(p, x) for x in symmetric_grid(1.0, FIG3_HALF_WIDTH, points)]
    rows = _parallel_map(_fig3_row, tasks, jobs)

    summary: Counter[str] = Counter()
    summary["dynamic_sharper"] = sum(1 for row in rows if row[5])
    summary["both_dominate"] = sum(1 for row in rows if row[6])
    summary["points"] = len(rows)
    path = out_dir / "fig3.csv"
    written = write_csv(path, FIG3_HEADER, (row[:5] for row in rows))
    return ExperimentResult("fig3", path, written, summary)


# Таблицы
# =======


def table1(
    out_dir: Path, degrees: Iterable[int] = TABLE1_DEGREES
) -> ExperimentResult:
    """Априорные границы числа обусловленности по степеням."""
    rows = [(n, f"{apriori_threshold(n):.3e}") for n in degrees]
    path = out_dir / "table1.csv"
    written = write_csv(path, TABLE1_HEADER, rows)
    return ExperimentResult("table1", path, written)


def table2(
    out_dir: Path,
    repetitions: int = 1000,
    runs: int = 5,
    seed: int = 0,
) -> tuple[ExperimentResult, RatioReport]:
    """Отношения времени работы алгоритмов к классической схеме."""
    report = run_ratios(repetitions=repetitions, runs=runs, seed=seed)
    path = out_dir / "table2.csv"
    write_report(report, path)
    return ExperimentResult("table2", path, len(report.rows)), report
