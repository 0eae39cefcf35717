from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reflexqec.galois import FieldSpec  # noqa: E402
from reflexqec.graphs import LucSpec  # noqa: E402
from reflexqec.pauli import ErrorOp, ErrorSet  # noqa: E402

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def f2():
    return FieldSpec(2)


@pytest.fixture
def f3():
    return FieldSpec(3)


@pytest.fixture
def f4():
    return FieldSpec(2, 2)


def dw1_errors() -> ErrorSet:
    f = FieldSpec(2)
    ops = [
        ErrorOp(f, (1, 0, 0), (0, 1, 0)),
        ErrorOp(f, (0, 0, 1), (0, 0, 1)),
        ErrorOp(f, (0, 1, 0), (1, 0, 0)),
    ]
    return ErrorSet(f, 3, ops)


def dw1_spec() -> LucSpec:
    return LucSpec.from_generators(FieldSpec(2), 3, [(1, 0, 0), (0, 0, 1)], [(1, 0, 1)])


def ex2_spec(n: int) -> LucSpec:
    f = FieldSpec(2)
    return LucSpec.from_generators(f, n, [f.unit(n, i) for i in range(n)], [f.unit(n, n - 1)])


def four_state_spec() -> LucSpec:
    return LucSpec.from_generators(FieldSpec(2, 2), 4, [(1, 2, 1, 0), (2, 1, 1, 1)], [(2, 1, 1, 1)])


# the sixteen vectors listed for the four-state example, with x -> 2, x^2 -> 3
FOUR_STATE_C = [
    "0000", "1210", "2320", "3130", "3301", "1102", "2203", "2111",
    "3222", "1333", "1021", "2032", "3013", "0312", "0123", "0231",
]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
