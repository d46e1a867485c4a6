#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks call both backend modules directly in-process; the
end-to-end rows rerun the full analysis pipeline in a subprocess with
CIRCULANT_LAB_PURE=1 to force the fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from circulant_lab import _kernels
from circulant_lab._kernels import build_csr, pure
from circulant_lab.cli import build_odd

try:
    from circulant_lab._kernels import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro_rows(repeat):
    rng = random.Random(0)
    n = 486
    perms = []
    for _ in range(200):
        images = list(range(n))
        rng.shuffle(images)
        perms.append(images)
    graph = build_odd(9).graph
    ptr, flat = build_csr(graph.adjacency)
    colors = [0] * graph.n

    def batch(impl):
        def compose_batch():
            for p in perms:
                impl.compose_images(p, perms[0])
        def cycles_batch():
            for p in perms:
                impl.cycle_lengths(p)
        def semiregular_batch():
            for p in perms:
                impl.is_semiregular_images(p)
        def adjacency_batch():
            ident = list(range(graph.n))
            for _ in range(200):
                impl.preserves_adjacency(ptr, flat, ident)
        def refine_batch():
            for _ in range(20):
                impl.refine_colors(ptr, flat, colors)
        return {
            "compose x200 (n=486)": compose_batch,
            "cycle_lengths x200 (n=486)": cycles_batch,
            "is_semiregular x200 (n=486)": semiregular_batch,
            "preserves_adjacency x200 (n=486)": adjacency_batch,
            "refine_colors x20 (n=486)": refine_batch,
        }

    rows = []
    pure_jobs = batch(pure)
    fast_jobs = batch(_speedups) if _speedups else {}
    for name, job in pure_jobs.items():
        t_pure = timeit(job, repeat)
        t_fast = timeit(fast_jobs[name], repeat) if _speedups else None
        rows.append((name, t_pure, t_fast))
    return rows


def end_to_end_rows(repeat):
    script = (
        "from circulant_lab.cli import build_odd;"
        "from circulant_lab.aut import automorphism_group;"
        "from circulant_lab.kcirc import k_spectrum;"
        "g = build_odd(9).graph;"
        "a = automorphism_group(g);"
        "k_spectrum(g, a)"
    )

    def run(pure_env):
        env = dict(os.environ)
        if pure_env:
            env["CIRCULANT_LAB_PURE"] = "1"
        else:
            env.pop("CIRCULANT_LAB_PURE", None)
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-c", script], check=True, env=env)
        return time.perf_counter() - t0

    t_pure = min(run(True) for _ in range(repeat))
    t_fast = min(run(False) for _ in range(repeat)) if _speedups else None
    return [("aut + spectrum of the 486-vertex family graph (subprocess)", t_pure, t_fast)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"active backend: {_kernels.BACKEND}")
    if _speedups is None:
        print("compiled extension not built; timing the pure backend only\n")

    rows = micro_rows(args.repeat) + end_to_end_rows(args.repeat)
    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_fast in rows:
        if t_fast is None:
            print(f"{name.ljust(width)}  {t_pure * 1e3:9.2f}ms  {'-':>10}  {'-':>8}")
        else:
            print(f"{name.ljust(width)}  {t_pure * 1e3:9.2f}ms  {t_fast * 1e3:9.2f}ms"
                  f"  {t_pure / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
