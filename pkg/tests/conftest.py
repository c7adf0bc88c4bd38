import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ssp2hcp import Reduced, SspInstance, build_graph, generate_random_instance, simplify  # noqa: E402


@pytest.fixture
def example1():
    return SspInstance(4, ((1, 2, 3), (2, 4)))


@pytest.fixture
def example2():
    return SspInstance(3, ((1, 2), (1, 3), (2, 3)))


@pytest.fixture
def art1(example1):
    return build_graph(simplify(example1).simple)


@pytest.fixture
def art2(example2):
    return build_graph(simplify(example2).simple)


def random_instances(count, seed, u_range=(2, 5), s_range=(1, 4), max_size=4):
    """Deterministic stream of random instances; sizes drawn from 2..min(max_size, u)."""
    rng = random.Random(seed)
    for _ in range(count):
        u = rng.randint(*u_range)
        s = rng.randint(*s_range)
        yield generate_random_instance(u, s, (2, min(max_size, u)), rng.getrandbits(64))


def random_reduced(count, seed, **kw):
    """First ``count`` random instances whose simplification leaves a graph to build."""
    out = []
    stream = random_instances(10**9, seed, **kw)
    while len(out) < count:
        inst = next(stream)
        result = simplify(inst)
        if isinstance(result, Reduced):
            out.append((inst, result.simple))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
