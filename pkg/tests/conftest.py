import random

import pytest

from surface_braids.presentations import generators
from surface_braids.words import SurfaceSpec


def random_word(rng: random.Random, spec: SurfaceSpec, max_len: int, level: str = "theorem",
                exact: bool = False):
    """Uniform letters and signs; the length is ``max_len`` or uniform in ``[0, max_len]``."""
    gens = generators(spec, level)
    length = max_len if exact else rng.randint(0, max_len)
    return tuple(
        g if rng.random() < 0.5 else g.inverse()
        for g in (rng.choice(gens) for _ in range(length))
    )


@pytest.fixture
def rng():
    return random.Random(20240607)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Record a one-line acceptance verdict for the terminal summary."""
    return _ACCEPTANCE.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
