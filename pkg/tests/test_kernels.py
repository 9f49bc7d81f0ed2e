import os
import subprocess
import sys

import pytest

from conftest import random_graph
from graphtopo import _kernels_py as pure
from graphtopo import kernels

compiled = pytest.importorskip("graphtopo._kernels")


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


def test_backends_agree_on_canonical_keys(rng):
    for _ in range(400):
        n = rng.randint(1, 16)
        g = random_graph(rng, n)
        assert compiled.canonical_key(list(g.rows), n) == pure.canonical_key(list(g.rows), n)


def test_backends_agree_on_contractibility(rng):
    for _ in range(300):
        n = rng.randint(1, 10)
        g = random_graph(rng, n)
        a = compiled.contractible(list(g.rows), n, {}, True)
        b = pure.contractible(list(g.rows), n, {}, True)
        c = pure.contractible(list(g.rows), n, {}, False)
        assert a == b == c


def test_backends_agree_on_clique_counts(rng):
    for _ in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        assert list(compiled.clique_counts_mask(list(g.rows), g.full_mask)) == list(
            pure.clique_counts_mask(list(g.rows), g.full_mask)
        )


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, GRAPHTOPO_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from graphtopo import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
