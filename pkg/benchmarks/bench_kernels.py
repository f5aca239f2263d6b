#!/usr/bin/env python3
"""Benchmark the hot kernels with numba enabled vs the pure-Python path.

Each workload runs in a subprocess so PLATYKIT_JIT is honoured at import
time.  Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "ham_cycle_pp13_5": """
from platykit.constructions import petersen_prism
from platykit.kernels.ham import ham_cycle
g = petersen_prism(13, 5)
adj = g.words1()
st, _, nodes = ham_cycle(adj, g.n, -1, -1, -1)
assert st == 0
""",
    "platypus_pp9_2": """
from platykit.constructions import petersen_prism
from platykit.kernels.props import platypus_check
g = petersen_prism(9, 2)
v, _, _ = platypus_check(g.words1(), g.n, True, -1)
assert v == 1
""",
    "girth_pp31_7": """
from platykit.constructions import petersen_prism
from platykit.kernels.props import girth_w
g = petersen_prism(31, 7)
assert girth_w(g.words(), g.n) == 13
""",
    "census_all_n6": """
from platykit.generation import generate_all_graphs
assert generate_all_graphs(6, collect=False).count == 156
""",
    "census_platypus_n9": """
from platykit.generation import generate_platypuses, GenSpec
assert generate_platypuses(GenSpec(9)).count == 4
""",
}

def run_one(name: str, body: str, jit: bool, repeat: int) -> float:
    """Time `repeat` warm runs of one workload in a fresh interpreter."""
    env = dict(os.environ, PLATYKIT_JIT="1" if jit else "0")
    code = (
        "import time, json\n"
        + body
        + "\nt0 = time.time()\n"
        + "".join(body for _ in range(repeat))
        + "\nprint(json.dumps({'warm': (time.time() - t0) / %d}))\n" % repeat
    )
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(f"{name} ({'jit' if jit else 'nojit'}) failed:\n{out.stderr}")
    return json.loads(out.stdout.strip().splitlines()[-1])["warm"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument(
        "--skip-nojit", action="store_true",
        help="Only time the jitted path (the fallback is slow by design).",
    )
    args = ap.parse_args()

    print(f"{'workload':<24}{'jit (s)':>12}{'no jit (s)':>14}{'speedup':>10}")
    for name, body in WORKLOADS.items():
        jit_t = run_one(name, body, True, args.repeat)
        if args.skip_nojit:
            print(f"{name:<24}{jit_t:>12.4f}{'-':>14}{'-':>10}")
            continue
        raw_t = run_one(name, body, False, 1)
        ratio = raw_t / jit_t if jit_t > 0 else float("inf")
        print(f"{name:<24}{jit_t:>12.4f}{raw_t:>14.4f}{ratio:>9.0f}x")


if __name__ == "__main__":
    main()
