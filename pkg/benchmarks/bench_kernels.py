"""Time the compiled kernels against the pure-Python fallback.

The backend is fixed at import, so each one runs in its own interpreter:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    from graphtopo.cubical import circle, intersection_graph, rasterize
    from graphtopo.graph import Graph, octahedron

    rng = random.Random(0)
    randoms = []
    for _ in range(300):
        n = rng.randint(8, 14)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
        randoms.append(Graph.from_edges(n, edges))
    ring = intersection_graph(rasterize(circle(1.0), 0.0625))
    return randoms, octahedron(), ring


def _measure(repeat: int) -> dict:
    from graphtopo import kernels
    from graphtopo.contractibility import ContractibilityCache, is_contractible
    from graphtopo.transforms import compress

    randoms, octa, ring = _workloads()

    def canon():
        for g in randoms:
            kernels.canonical_key(list(g.rows), g.order)

    # fresh caches so every repeat does the full search
    def contract():
        cache = ContractibilityCache()
        for g in randoms:
            is_contractible(g, cache)

    def squeeze():
        compress(ring, cache=ContractibilityCache())

    out = {"backend": kernels.BACKEND}
    for name, fn in [("canonical_key x300", canon), ("contractible x300", contract), (f"compress {ring.order}-point ring", squeeze)]:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.child:
        print(json.dumps(_measure(args.repeat)))
        return 0

    results = []
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("GRAPHTOPO_PURE_PYTHON", None)
        if pure:
            env["GRAPHTOPO_PURE_PYTHON"] = "1"
        proc = subprocess.run(
            [sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        results.append(json.loads(proc.stdout))
    fast, slow = results
    if fast["backend"] != "compiled":
        print("compiled extension not available; both runs used the Python kernels")
    width = max(len(k) for k in fast if k != "backend")
    print(f"{'workload'.ljust(width)}  compiled(s)  python(s)  speedup")
    for k in fast:
        if k == "backend":
            continue
        print(f"{k.ljust(width)}  {fast[k]:11.4f}  {slow[k]:9.4f}  {slow[k] / fast[k]:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
