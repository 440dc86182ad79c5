from pathlib import Path

import numpy as np
import pytest

from chorner.exceptions import DomainError, PolynomialFileError
from chorner.generator import generate_corpus
from chorner.polyval import Polynomial
from chorner.storage import (
    format_polynomial,
    hex_float,
    load_corpus,
    load_polynomial,
    parse_float,
    parse_polynomial,
    save_corpus,
    save_polynomial,
    write_csv,
)
from tests.conftest import random_polynomial


@pytest.mark.parametrize(
    ("value", "text"),
    [
        (3.0, "0x1.8p1"),
        (1.0, "0x1p0"),
        (1.75, "0x1.cp0"),
        (-0.5, "-0x1p-1"),
        (0.0, "0x0p0"),
    ],
)
def test_hex_float(value: float, text: str) -> None:
    assert hex_float(value) == text


def test_parse_float() -> None:
    assert parse_float("0x1.8p1") == 3.0
    assert parse_float(" -0x1p-2 ") == -0.25
    assert parse_float("1e-3") == 1e-3
    with pytest.raises(DomainError):
        parse_float("three")


def test_parse_polynomial() -> None:
    text = "# (1 - x)^2\ndegree: 2\n0x1p+0\n-2.0  # decimal\n\n0x1p+0\n"
    assert parse_polynomial(text) == Polynomial([1.0, -2.0, 1.0])
    assert parse_polynomial("0x1.8p1\n") == Polynomial([3.0])


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("degree: 1\n1.0\nfoo\n", 3),
        ("1.0\ndegree: 0\n", 2),
        ("degree: two\n1.0\n", 1),
        ("degree: 3\n1.0\n2.0\n", 0),
        ("# empty\n", 0),
        ("1.0\ninf\n", 0),
    ],
)
def test_parse_polynomial_errors(text: str, line: int) -> None:
    with pytest.raises(PolynomialFileError) as e:
        parse_polynomial(text)
    assert e.value.line == line


def test_format_polynomial() -> None:
    text = format_polynomial(Polynomial([1.0, -2.0, 1.0]), "(1 - x)^2")
    assert text == "# (1 - x)^2\ndegree: 2\n0x1p0\n-0x1p1\n0x1p0\n"


def test_polynomial_file_is_bit_exact(
    tmp_path: Path, rng: np.random.Generator
) -> None:
    p = random_polynomial(rng, 30, scale=1e10)
    path = tmp_path / "nested" / "p.txt"
    save_polynomial(path, p)
    assert load_polynomial(path) == p


def test_corpus_file(tmp_path: Path) -> None:
    items = generate_corpus(6, (1e3, 1e9), count=2, seed=11)
    path = tmp_path / "corpus.jsonl"
    assert save_corpus(path, items) == len(items)
    loaded = list(load_corpus(path))
    assert [(i.polynomial, i.x, i.seed) for i in loaded] == [
        (i.polynomial, i.x, i.seed) for i in items
    ]
    assert [i.cond for i in loaded] == pytest.approx([i.cond for i in items])


def test_write_csv(tmp_path: Path) -> None:
    path = tmp_path / "out.csv"
    assert write_csv(path, ("a", "b"), [(1, "x"), (2, "y, z")]) == 2
    assert path.read_text().splitlines() == ["a,b", "1,x", '2,"y, z"']
