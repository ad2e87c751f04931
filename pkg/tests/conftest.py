import random
from importlib import resources

import pytest

from jetlink.front import load_front, random_front


def load_fixture(name):
    text = resources.files("jetlink").joinpath("data", f"{name}.json").read_text()
    return load_front(text)


def corpus(size=200, max_events=8):
    """Distinct random fronts with random orientations, in a fixed order."""
    out, seen, seed = [], set(), 0
    while len(out) < size:
        d = random_front(seed, max_events)
        rng = random.Random(10**6 + seed)
        seed += 1
        if (d.seam_strands, d.events) in seen:
            continue
        seen.add((d.seam_strands, d.events))
        o = tuple(rng.choice((1, -1)) for _ in d.components())
        out.append((d, o))
    return out


@pytest.fixture(scope="session")
def fronts():
    return corpus()


@pytest.fixture(scope="session")
def L1():
    return load_fixture("L1")


@pytest.fixture(scope="session")
def L2():
    return load_fixture("L2")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
