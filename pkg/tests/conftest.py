import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from onechroma import fixtures as F
from onechroma.generator import GenSpec, Mode, gen_theorem1_instance
from onechroma.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def acceptance_spec(seed: int) -> GenSpec:
    """Seed -> parameters used by the acceptance corpus."""
    r = random.Random(seed)
    n = r.randint(20, 40)
    crossings = r.randint(3, 8)
    mode = Mode.BIPARTITE if seed % 2 else Mode.TRIANGLE_FREE
    return GenSpec(seed, n, 7, crossings, mode)


@pytest.fixture(scope="session")
def acceptance_corpus():
    return [gen_theorem1_instance(acceptance_spec(s)) for s in range(1, 201)]


@pytest.fixture(scope="session")
def curated():
    return {name: build() for name, build in F.CURATED.items()}


@st.composite
def graphs(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(n, chosen)


@st.composite
def bipartite_graphs(draw, max_side=6):
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(a + b, chosen)


@st.composite
def generated_instances(draw):
    delta = draw(st.integers(5, 8))
    n = draw(st.integers(delta + 8, 36))
    k = draw(st.integers(0, 6))
    mode = draw(st.sampled_from(list(Mode)))
    seed = draw(st.integers(0, 2**64 - 1))
    return gen_theorem1_instance(GenSpec(seed, n, delta, k, mode))


# ---------------------------------------------------------------------------
# one pass/fail line per acceptance criterion at the end of the run

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and "criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        prev = _ACCEPTANCE.get(name, "passed")
        if report.failed:
            _ACCEPTANCE[name] = "failed"
        elif report.when == "call":
            _ACCEPTANCE[name] = prev if prev == "failed" else report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")

    def number(name):
        return int(name.split("criterion_")[1].split("_")[0])

    for name in sorted(_ACCEPTANCE, key=number):
        outcome = _ACCEPTANCE[name]
        verdict = "PASS" if outcome == "passed" else "FAIL" if outcome == "failed" else outcome.upper()
        terminalreporter.write_line(f"criterion {number(name)}: {verdict}  ({name})")
