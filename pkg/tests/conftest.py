import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wrank import corpus  # noqa: E402
from wrank.matroid import BinaryMatroid, GraphicMatroid, UniformMatroid  # noqa: E402

ACCEPTANCE_RESULTS: dict[str, str] = {}


def random_matroid(rng: random.Random, max_n: int = 6, min_n: int = 1):
    n = rng.randint(min_n, max_n)
    kind = rng.choice(("binary", "graphic", "uniform"))
    if kind == "binary":
        rows = rng.randint(1, 4)
        return BinaryMatroid([rng.randrange(1 << rows) for _ in range(n)], rows)
    if kind == "graphic":
        nv = rng.randint(1, 4)
        return GraphicMatroid(nv, [(rng.randrange(nv), rng.randrange(nv)) for _ in range(n)])
    return UniformMatroid(rng.randint(0, n), n)


def random_rational_weights(rng: random.Random, n: int):
    return tuple(Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in range(n))


@pytest.fixture(scope="session")
def corpus_files():
    return corpus.load_all()


@pytest.fixture(scope="session")
def small_corpus(corpus_files):
    """Corpus matroids with n <= 6 plus the full uniform family up to n = 5."""
    out = {k: v.matroid for k, v in corpus_files.items() if v.matroid.n <= 6}
    for u in corpus.uniform_family(5):
        out[f"U({u.r},{u.n})"] = u
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  {name}")
