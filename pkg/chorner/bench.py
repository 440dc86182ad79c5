"""Замеры времени относительно классической схемы Горнера.

Для каждой степени от 5 до 200 с шагом 5 измеряется время одного
вычисления каждым алгоритмом, и берётся отношение ко времени
классической схемы.
Итоговые отношения усредняются по всем степеням.

Замеры проводятся с прогретым кешем: первые 10% повторений не
учитываются.
Замеры однопоточные. Если параллельно работает что-то ещё, отчёт
недостоверен.
"""

import hashlib
import platform
import statistics
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from datetime import UTC, datetime
from pathlib import Path

import numpy as np
from loguru import logger

from chorner.compensated import comp_horner, comp_horner_is_faithful
from chorner.ddarith import dd_horner
from chorner.exceptions import BenchmarkError, DomainError
from chorner.polyval import Polynomial, horner
from chorner.storage import hex_float, write_csv

REPORT_HEADER = (
    "degree",
    "t_horner_ns",
    "t_comp_ns",
    "t_cert_ns",
    "t_dd_ns",
    "ratio_comp",
    "ratio_cert",
    "ratio_dd",
)
DEFAULT_DEGREES = range(5, 201, 5)

# Время блока должно в 100 раз превышать разрешение таймера
_RESOLUTION_FACTOR = 100
_WARMUP_SHARE = 0.1


def _certified_value(p: Polynomial, x: float) -> float:
    return comp_horner_is_faithful(p, x).value


_ALGORITHMS: dict[str, Callable[[Polynomial, float], float]] = {
    "horner": horner,
    "comp": comp_horner,
    "cert": _certified_value,
    "dd": dd_horner,
}


@dataclass(slots=True)
class DegreeTiming:
    """Замеры для одной степени.

    - `degree`: Степень многочлена.
    - `mean_ns`: Среднее время одного вычисления по алгоритмам.
    - `median_ns`: Медиана времени одного вычисления по алгоритмам.
    """

    degree: int
    mean_ns: dict[str, float]
    median_ns: dict[str, float]

    def ratio(self, name: str, median: bool = False) -> float:
        """Отношение времени алгоритма ко времени схемы Горнера."""
        t = self.median_ns if median else self.mean_ns
        return t[name] / t["horner"]


@dataclass(slots=True)
class RatioReport:
    """Отчёт о замерах.

    - `rows`: Замеры по степеням.
    - `checksum`: Контрольная сумма результатов всех вычислений.
    - `environment`: Описание окружения (процессор, интерпретатор,
        время замера).
    """

    rows: list[DegreeTiming]
    checksum: str
    environment: dict[str, str] = field(default_factory=dict)

    def average(self, name: str, median: bool = False) -> float:
        """Среднее по степеням отношение ко времени схемы Горнера."""
        return statistics.fmean(r.ratio(name, median) for r in self.rows)


def environment() -> dict[str, str]:
    """Описание окружения, в котором проводятся замеры."""
    return {
        "cpu": platform.processor() or platform.machine(),
        "system": platform.platform(),
        "python": (
            f"{platform.python_implementation()} {platform.python_version()}"
        ),
        "compiler": platform.python_compiler(),
        "timestamp": datetime.now(UTC).isoformat(timespec="seconds"),
    }


def _timer_resolution_ns() -> float:
    return time.get_clock_info("perf_counter").resolution * 1e9


def _time_block(
    fn: Callable[[Polynomial, float], float],
    p: Polynomial,
    x: float,
    repetitions: int,
) -> tuple[float, float]:
    """Время одного вычисления в наносекундах и результат."""
    out = 0.0
    for _ in range(max(1, int(repetitions * _WARMUP_SHARE))):
        out = fn(p, x)

    start = time.perf_counter_ns()
    for _ in range(repetitions):
        out = fn(p, x)
    elapsed = time.perf_counter_ns() - start

    if elapsed < _timer_resolution_ns() * _RESOLUTION_FACTOR:
        raise BenchmarkError(
            f"Block of {repetitions} evaluations took {elapsed} ns, "
            "too close to timer resolution: increase repetitions"
        )
    return elapsed / repetitions, out


def run_ratios(
    degrees: Iterable[int] = DEFAULT_DEGREES,
    repetitions: int = 1000,
    runs: int = 5,
    seed: int = 0,
) -> RatioReport:
    """Замеряет отношения времени алгоритмов к схеме Горнера.

    Для каждой степени генерируется случайный многочлен с
    коэффициентами из [-1, 1] и точка x из [0.5, 1].
    Каждый алгоритм замеряется ``runs`` раз по ``repetitions``
    вычислений, алгоритмы чередуются внутри каждого прогона.

    Raises:
        BenchmarkError: Если таймер слишком груб для заданного числа
            повторений или результаты разошлись между прогонами.

    """
    if repetitions < 1 or runs < 1:
        raise DomainError("repetitions and runs must be positive")

    rng = np.random.default_rng(seed)
    digest = hashlib.md5()  # noqa: S324 контрольная сумма, не защита
    rows: list[DegreeTiming] = []

    for degree in degrees:
        p = Polynomial(float(a) for a in rng.uniform(-1, 1, degree + 1))
        x = float(rng.uniform(0.5, 1.0))
        samples: dict[str, list[float]] = {k: [] for k in _ALGORITHMS}
        outputs: dict[str, float] = {}

        for _ in range(runs):
            for name, fn in _ALGORITHMS.items():
                t, out = _time_block(fn, p, x, repetitions)
                if name in outputs and hex_float(outputs[name]) != hex_float(
                    out
                ):
                    raise BenchmarkError(f"{name} is not deterministic")
                outputs[name] = out
                samples[name].append(t)

        for name in _ALGORITHMS:
            digest.update(hex_float(outputs[name]).encode())

        row = DegreeTiming(
            degree,
            {k: statistics.fmean(v) for k, v in samples.items()},
            {k: statistics.median(v) for k, v in samples.items()},
        )
        logger.debug(
            "Degree {}: comp {:.2f}, cert {:.2f}, dd {:.2f}",
            degree,
            row.ratio("comp"),
            row.ratio("cert"),
            row.ratio("dd"),
        )
        rows.append(row)

    if not rows:
        raise DomainError("No degrees to measure")
    return RatioReport(rows, digest.hexdigest(), environment())


def report_rows(report: RatioReport) -> list[tuple[object, ...]]:
    """Строки CSV отчёта в порядке ``REPORT_HEADER``."""
    return [
        (
            r.degree,
            f"{r.mean_ns['horner']:.1f}",
            f"{r.mean_ns['comp']:.1f}",
            f"{r.mean_ns['cert']:.1f}",
            f"{r.mean_ns['dd']:.1f}",
            f"{r.ratio('comp'):.4f}",
            f"{r.ratio('cert'):.4f}",
            f"{r.ratio('dd'):.4f}",
        )
        for r in report.rows
    ]


def write_report(report: RatioReport, path: Path) -> None:
    """Записывает отчёт в CSV с фиксированным заголовком."""
    write_csv(path, REPORT_HEADER, report_rows(report))
