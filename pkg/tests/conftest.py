import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphtopo.graph import Graph  # noqa: E402


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.2, 0.8)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected(rng: random.Random, n: int, p: float | None = None) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}
PROBES: dict[str, str] = {}


def record_acceptance(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} {key}: {detail}")


def record_probe(key: str, detail: str) -> None:
    PROBES[key] = detail
    print(f"PROBE {key}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE and not PROBES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[1].rstrip(":")) if k.split()[1].rstrip(":").isdigit() else 99):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {key}: {detail}")
    for key, detail in PROBES.items():
        terminalreporter.write_line(f"PROBE {key}: {detail}")
