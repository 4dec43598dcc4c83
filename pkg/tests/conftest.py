from __future__ import annotations

import random

import pytest
from hypothesis import settings

from pantsgraph.curves import curve_from_chord
from pantsgraph.mcg import MappingClassWord, apply, half_twist
from pantsgraph.surface import chain_curves, gamma_family

settings.register_profile("repo", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("repo")

ACCEPTANCE_LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:2d} [{status}] {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def random_word(n: int, length: int, rng: random.Random) -> MappingClassWord:
    gens = []
    for _ in range(length):
        gens.extend(half_twist(n, rng.choice(chain_curves(n)), rng.choice((1, -1))).gens)
    return MappingClassWord(n, tuple(gens))


def random_curve(n: int, rng: random.Random, max_len: int = 4):
    c = curve_from_chord(n, rng.choice(gamma_family(n)))
    return apply(random_word(n, rng.randint(0, max_len), rng), c)


@pytest.fixture
def rng():
    return random.Random(12345)
