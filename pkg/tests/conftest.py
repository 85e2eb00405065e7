import functools

import pytest

from sallymod.families import paper_example
from sallymod.field import FieldSpec
from sallymod.poly import make_ring

GF = FieldSpec.prime(32003)
QQ = FieldSpec.rationals()


@functools.lru_cache(maxsize=None)
def example(id: str, token: str = "p:32003"):
    """Example fixtures are shared across test modules so their caches are reused."""
    return paper_example(id, FieldSpec.parse(token))


@pytest.fixture
def xyz():
    return make_ring("x,y,z")


@pytest.fixture
def xy():
    return make_ring("x,y")


ACCEPTANCE: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {criterion:2d}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
