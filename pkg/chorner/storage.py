"""Файлы многочленов, корпусов и отчётов.

**Файл многочлена**: по одному коэффициенту в строке, по
возрастанию степени.
Коэффициенты записываются шестнадцатеричными литералами, поэтому
файл читается обратно бит в бит.
При чтении также принимаются десятичные литералы.

```text
# (1 - x)^2
degree: 2
0x1p0
-0x1p1
0x1p0
```

**Корпус**: по одной JSON записи в строке (``ujson``).

**Отчёты**: CSV с обязательной строкой заголовка.
"""

import csv
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path
from typing import Any

import ujson
from loguru import logger

from chorner.exceptions import DomainError, PolynomialFileError
from chorner.generator import CorpusItem
from chorner.polyval import Polynomial

_DEGREE_HEADER = "degree:"


def hex_float(f: float) -> str:
    """Короткий шестнадцатеричный литерал: 0x1.8p1 вместо 0x1.8000...p+1."""
    s = f.hex()
    if "p" not in s:
        return s  # inf и nan
    mantissa, exponent = s.split("p")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}p{exponent.lstrip('+')}"


def parse_float(s: str) -> float:
    """Разбирает шестнадцатеричный или десятичный литерал.

    Raises:
        DomainError: Если строка не является числом.

    """
    s = s.strip()
    try:
        if "0x" in s.lower():
            return float.fromhex(s)
        return float(s)
    except ValueError:
        raise DomainError(f"Not a float literal: {s!r}") from None


# Файл многочлена
# ===============


def parse_polynomial(text: str) -> Polynomial:
    """Разбирает текст файла многочлена.

    Пустые строки и всё после ``#`` пропускаются.
    Заголовок ``degree: n`` необязателен, но если он есть, то число
    коэффициентов должно ему соответствовать.
    """
    coeffs: list[float] = []
    degree: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if line.lower().startswith(_DEGREE_HEADER):
            if degree is not None or coeffs:
                raise PolynomialFileError(lineno, "unexpected degree header")
            try:
                degree = int(line[len(_DEGREE_HEADER) :])
            except ValueError:
                raise PolynomialFileError(lineno, "bad degree") from None
            continue

        try:
            coeffs.append(parse_float(line))
        except DomainError as e:
            raise PolynomialFileError(lineno, str(e)) from None

    if not coeffs:
        raise PolynomialFileError(0, "no coefficients")
    if degree is not None and degree != len(coeffs) - 1:
        raise PolynomialFileError(
            0, f"header says degree {degree}, found {len(coeffs) - 1}"
        )
    try:
        return Polynomial(coeffs)
    except DomainError as e:
        raise PolynomialFileError(0, str(e)) from None


def format_polynomial(p: Polynomial, comment: str | None = None) -> str:
    """Текст файла многочлена, коэффициенты всегда в hex."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{_DEGREE_HEADER} {p.degree}")
    lines.extend(hex_float(a) for a in p.coeffs)
    return "\n".join(lines) + "\n"


def load_polynomial(path: Path) -> Polynomial:
    """Читает многочлен из файла."""
    logger.debug("Read polynomial {}", path)
    return parse_polynomial(path.read_text())


def save_polynomial(
    path: Path, p: Polynomial, comment: str | None = None
) -> None:
    """Записывает многочлен в файл, создавая каталоги."""
    logger.info("Write file {} ...", path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_polynomial(p, comment))


# Корпус
# ======


def corpus_record(item: CorpusItem) -> dict[str, Any]:
    """Упаковывает запись корпуса в словарь для JSON."""
    return {
        "coeffs": [hex_float(a) for a in item.polynomial.coeffs],
        "x": hex_float(item.x),
        "seed": item.seed,
        "target_cond": item.target_cond,
        "cond": item.cond,
    }


def corpus_item(record: dict[str, Any]) -> CorpusItem:
    """Распаковывает запись корпуса из словаря."""
    return CorpusItem(
        polynomial=Polynomial(parse_float(a) for a in record["coeffs"]),
        x=parse_float(record["x"]),
        seed=int(record["seed"]),
        target_cond=float(record["target_cond"]),
        cond=float(record["cond"]),
    )


def save_corpus(path: Path, items: Iterable[CorpusItem]) -> int:
    """Записывает корпус в файл, по записи в строке."""
    logger.info("Write file {} ...", path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w") as f:
        for item in items:
            f.write(ujson.dumps(corpus_record(item)))
            f.write("\n")
            count += 1
    return count


def load_corpus(path: Path) -> Iterator[CorpusItem]:
    """Читает корпус из файла."""
    logger.info("Read corpus {}", path)
    with path.open() as f:
        for line in f:
            if line.strip():
                yield corpus_item(ujson.loads(line))


# Отчёты
# ======


def write_csv(
    path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> int:
    """Записывает CSV с заголовком, возвращает число строк."""
    logger.info("Write file {} ...", path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    return count
