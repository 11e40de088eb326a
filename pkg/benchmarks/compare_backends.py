#!/usr/bin/env python3
"""Time the compiled kernel against the pure-Python fallback.

The kernel backend is chosen once at import, so each backend is measured
in a child interpreter with MONOMOD_BACKEND set.  Four workloads cover
the two hot entry points (the power walk and the walk-with-reduction-
search) plus two end-to-end jobs built on them.

Usage: python3 benchmarks/compare_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(quick: bool) -> dict[str, tuple]:
    scale = 2 if quick else 1
    return {
        "order walk, all k, N <= %d" % (250 // scale): ("orders", 250 // scale),
        "reduction search, all k, N <= %d" % (200 // scale): ("reductions", 200 // scale),
        "semi verdicts, even N <= %d" % (600 // scale): ("semi", 600 // scale),
        "prime survey to %d" % (20000 // scale): ("conjecture", 20000 // scale),
    }


def run_workload(kind: str, bound: int) -> float:
    from monomod import core
    from monomod.modring import ResidueRing
    from monomod.monomial import find_reduction
    from monomod.scan import ScanJob, run_scan, scan_conjecture

    start = time.perf_counter()
    if kind == "orders":
        for n in range(2, bound + 1):
            cap = n**3 + 1
            for k in range(n):
                core.order_pm(n, k, cap)
    elif kind == "reductions":
        for n in range(2, bound + 1):
            ring = ResidueRing(n)
            for k in range(1, n):
                find_reduction(ring, k)
    elif kind == "semi":
        run_scan(ScanJob(kind="semi", lo=4, hi=bound))
    elif kind == "conjecture":
        scan_conjecture(bound)
    else:
        raise ValueError(kind)
    return time.perf_counter() - start


def child_main(quick: bool) -> None:
    from monomod import core

    results = {"backend": core.BACKEND, "times": {}}
    for label, (kind, bound) in workloads(quick).items():
        results["times"][label] = run_workload(kind, bound)
    print(json.dumps(results))


def measure(backend: str, quick: bool) -> dict:
    env = dict(os.environ, MONOMOD_BACKEND=backend)
    args = [sys.executable, os.path.abspath(__file__), "--child"]
    if quick:
        args.append("--quick")
    proc = subprocess.run(
        args, env=env, capture_output=True, text=True, check=True
    )
    result = json.loads(proc.stdout)
    if result["backend"] != backend:
        raise RuntimeError(
            f"asked for backend {backend!r}, child used {result['backend']!r}"
        )
    return result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    if args.child:
        child_main(args.quick)
        return

    labels = list(workloads(args.quick))
    results = {}
    for backend in ("py", "c"):
        try:
            results[backend] = measure(backend, args.quick)
        except (subprocess.CalledProcessError, RuntimeError) as exc:
            print(f"backend {backend!r} unavailable: {exc}", file=sys.stderr)
    if "py" not in results or "c" not in results:
        raise SystemExit(1)

    width = max(len(label) for label in labels)
    print(f"{'workload':<{width}}  {'pure (s)':>9}  {'compiled (s)':>12}  {'speedup':>7}")
    for label in labels:
        py = results["py"]["times"][label]
        cc = results["c"]["times"][label]
        print(f"{label:<{width}}  {py:>9.3f}  {cc:>12.3f}  {py / cc:>6.1f}x")


if __name__ == "__main__":
    main()
