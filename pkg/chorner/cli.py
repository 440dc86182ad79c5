"""Командный интерфейс платформы.

Позволяет вычислять многочлены из файлов, генерировать корпуса плохо
обусловленных многочленов и воспроизводить эксперименты в CSV.

Коды выхода:

- 0: Всё хорошо.
- 1: Ошибка использования: неверные флаги, аргументы или файл.
- 2: Численная ошибка: переполнение, исчезновение порядка,
    недостижимая обусловленность, недостоверный замер.
- 3: Ошибка ввода-вывода.
"""

import math
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NamedTuple

import click
from loguru import logger

from chorner import __version__, config
from chorner.bench import environment
from chorner.compensated import comp_horner_checked, comp_horner_is_faithful
from chorner.ddarith import dd_horner
from chorner.eft import check_arithmetic
from chorner.enums import EvalStatus, Method
from chorner.exceptions import (
    ArithmeticEnvironmentError,
    BenchmarkError,
    DomainError,
    GeneratorError,
    NumericError,
    PolynomialFileError,
)
from chorner.experiments import (
    FIG1_DEGREES,
    FIG1_POINTS,
    FIG2_DEGREE,
    FIG2_PER_TARGET,
    FIG3_POINTS,
    TABLE1_DEGREES,
    check_corpus,
    fig1,
    fig2,
    fig3,
    table1,
    table2,
)
from chorner.generator import generate_corpus
from chorner.oracle import eval_exact
from chorner.polyval import horner
from chorner.storage import (
    load_corpus,
    load_polynomial,
    parse_float,
    save_corpus,
)
from chorner.view.messages import MessagesView

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_IO = 3

EXPERIMENTS = ("fig1", "fig2", "fig3", "table1", "table2")


# Определение группы
# ==================


class AppContext(NamedTuple):
    """Контекст приложения."""

    view: MessagesView


pass_app = click.make_pass_decorator(AppContext)


def setup_logging(level: str) -> None:
    """Настраивает приёмники журнала.

    Журнал пишется в stderr, а также в файл, если он указан в
    ``CHORNER_LOG_FILE``.
    """
    logger.remove()
    logger.add(sys.stderr, level=level.upper())
    if config.LOG_FILE:
        logger.add(config.LOG_FILE, level="DEBUG")


@click.option(
    "--log-level",
    default=config.LOG_LEVEL,
    show_default=True,
    help="Уровень журнала в stderr.",
)
@click.group()
@click.version_option(__version__, prog_name="chorner")
@click.pass_context
def cli(ctx: click.Context, log_level: str) -> None:
    """Точное вычисление многочленов компенсированной схемой Горнера.

    Перед выполнением любой команды проверяется, что арифметика
    платформы подходит алгоритмам.
    """
    setup_logging(log_level)
    check_arithmetic()
    ctx.obj = AppContext(MessagesView())


def _parse_x(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> float | None:
    if value is None:
        return None
    try:
        return parse_float(value)
    except DomainError as e:
        raise click.BadParameter(str(e), ctx, param) from None


def _ensure_ok(status: EvalStatus) -> None:
    if status != EvalStatus.OK:
        raise NumericError(f"Evaluation finished with status {status.value}")


# Определение команд
# ==================


@cli.command()
@pass_app
def check(app: AppContext) -> None:
    """Проверка арифметики и описание окружения."""
    click.echo(app.view.environment(environment()))


# X может начинаться с минуса, как -2 или -0x1p-3
@cli.command(name="eval", context_settings={"ignore_unknown_options": True})
@click.argument(
    "poly_file", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.argument("x", callback=_parse_x)
@click.option(
    "--method",
    "-m",
    type=click.Choice([m.value for m in Method]),
    default=Method.CERTIFIED.value,
    show_default=True,
    help="Алгоритм вычисления.",
)
@pass_app
def eval_cmd(app: AppContext, poly_file: Path, x: float, method: str) -> None:
    """Вычисляет многочлен из файла в точке X.

    X записывается шестнадцатеричным или десятичным литералом.
    """
    p = load_polynomial(poly_file)
    m = Method(method)

    if m == Method.EXACT:
        click.echo(app.view.exact(eval_exact(p, x)))
        return

    if m == Method.CERTIFIED:
        cert = comp_horner_is_faithful(p, x)
        click.echo(app.view.certified(cert))
        _ensure_ok(cert.status)
        return

    if m == Method.COMP:
        value, status = comp_horner_checked(p, x)
    else:
        value = dd_horner(p, x) if m == Method.DD else horner(p, x)
        finite = math.isfinite(value)
        status = EvalStatus.OK if finite else EvalStatus.OVERFLOW

    click.echo(app.view.evaluation(m, value, status))
    _ensure_ok(status)


@cli.command()
@click.option("--degree", "-n", type=click.IntRange(2), default=FIG2_DEGREE)
@click.option(
    "--cond", "-c", type=float, required=True, help="Целевое cond(p, x)."
)
@click.option(
    "--x",
    "x",
    callback=_parse_x,
    default=None,
    help="Точка вычисления. По умолчанию случайная из [0.5, 2].",
)
@click.option("--count", type=click.IntRange(1), default=1)
@click.option("--seed", type=int, default=config.DEFAULT_SEED)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=config.DATA_DIR / "corpus.jsonl",
)
def generate(
    degree: int,
    cond: float,
    x: float | None,
    count: int,
    seed: int,
    out: Path,
) -> None:
    """Генерирует корпус многочленов с заданной обусловленностью."""
    x_range = (0.5, 2.0) if x is None else (x, x)
    items = generate_corpus(degree, (cond,), count, seed, x_range)
    if not items:
        raise GeneratorError(
            f"No polynomial reached cond {cond:.1e} at degree {degree}"
        )
    written = save_corpus(out, items)
    click.echo(f"Write {written} polynomials to {out}")


@cli.command(name="corpus-check")
@click.argument(
    "corpus", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option("--jobs", "-j", type=click.IntRange(1), default=config.WORKERS)
@pass_app
def corpus_check(app: AppContext, corpus: Path, jobs: int) -> None:
    """Перепроверяет корпус сертификатом и точным эталоном."""
    summary = check_corpus(list(load_corpus(corpus)), jobs)
    click.echo(app.view.corpus_check(summary))
    if summary["false_positive"] or summary["bound_violation"]:
        raise NumericError("Certificate contradicts the exact oracle")


@cli.command()
@click.argument("name", type=click.Choice(EXPERIMENTS))
@click.option(
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=config.DATA_DIR,
    help="Каталог для CSV файлов.",
)
@click.option("--seed", type=int, default=config.DEFAULT_SEED)
@click.option("--points", type=click.IntRange(2), default=None)
@click.option("--degree", "-n", type=click.IntRange(1), default=None)
@click.option("--count", type=click.IntRange(1), default=None)
@click.option("--jobs", "-j", type=click.IntRange(1), default=config.WORKERS)
@click.option("--repetitions", type=click.IntRange(1), default=1000)
@click.option("--runs", type=click.IntRange(1), default=5)
@pass_app
def experiment(  # noqa: PLR0913
    app: AppContext,
    name: str,
    out: Path,
    seed: int,
    points: int | None,
    degree: int | None,
    count: int | None,
    jobs: int,
    repetitions: int,
    runs: int,
) -> None:
    """Воспроизводит эксперимент и записывает CSV."""
    logger.info("Run experiment {} into {}", name, out)
    if name == "fig1":
        degrees = FIG1_DEGREES if degree is None else (degree,)
        res = fig1(out, degrees, points or FIG1_POINTS, jobs)
    elif name == "fig2":
        res = fig2(
            out,
            degree or FIG2_DEGREE,
            count or FIG2_PER_TARGET,
            seed,
            jobs=jobs,
        )
    elif name == "fig3":
        res = fig3(out, points or FIG3_POINTS, degree or 5, jobs)
    elif name == "table1":
        res = table1(out, TABLE1_DEGREES if degree is None else (degree,))
    else:
        res, report = table2(out, repetitions, runs, seed)
        click.echo(app.view.experiment(res))
        click.echo(app.view.ratios(report))
        return

    click.echo(app.view.experiment(res))


# Запуск скрипта
# ==============


def run(args: Sequence[str] | None = None) -> int:
    """Выполняет команду и возвращает код выхода.

    Исключения платформы преобразуются в коды выхода, сообщение об
    ошибке выводится в stderr.
    """
    try:
        rv = cli.main(args=args, prog_name="chorner", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except (DomainError, PolynomialFileError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except (
        NumericError,
        GeneratorError,
        BenchmarkError,
        ArithmeticEnvironmentError,
    ) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_NUMERIC
    except OSError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_IO
    except Exception:
        logger.exception("Unexpected error")
        raise
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    """Точка входа консольного скрипта ``chorner``."""
    sys.exit(run())


if __name__ == "__main__":
    main()
