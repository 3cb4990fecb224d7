"""Compare the compiled mod-p kernels with the pure-Python fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 64 128 256 --repeat 5 --json

Each workload is checked for identical output on both backends before it is
timed. Reported numbers are the best of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from tcakit import _kernels
from tcakit.fields import FieldSpec
from tcakit.invariants import swap_group, symmetric_group, tensor_power_matrix


def random_matrix(rows: int, cols: int, p: int, rank: int, seed: int) -> np.ndarray:
    """A rows x cols matrix over F_p of rank at most ``rank`` (a product of two random factors)."""
    rng = np.random.default_rng(seed)
    left = rng.integers(0, p, size=(rows, rank), dtype=np.int64)
    right = rng.integers(0, p, size=(rank, cols), dtype=np.int64)
    return (left @ right) % p


def fixed_space_rows(G, n: int) -> np.ndarray:
    size = G.m**n
    blocks = [(tensor_power_matrix(g, n, G.field) - np.eye(size, dtype=np.int64)) % G.field.p for g in G.generators]
    return np.vstack(blocks)


def workloads(sizes: list[int], p: int):
    for n in sizes:
        yield f"rref {n}x{n} rank {n // 2} mod {p}", "rref", random_matrix(n, n, p, n // 2, n), p
    yield "fixed space S3 on k^3 over F3, degree 5", "rref", fixed_space_rows(symmetric_group(3, FieldSpec.prime(3)), 5), 3
    yield "fixed space swap over F2, degree 9", "rref", fixed_space_rows(swap_group(FieldSpec.prime(2)), 9), 2
    for n in sizes:
        yield f"incremental echelon {2 * n} rows x {n} cols mod {p}", "echelon", random_matrix(2 * n, n, p, n, n + 1), p


def run_rref(backend, a: np.ndarray, p: int):
    rows = a if backend is _kernels.compiled_backend else a.tolist()
    return backend.rref_mod_p(rows, a.shape[1], p)


def run_echelon(backend, a: np.ndarray, p: int):
    ech = backend.ModPEchelon(a.shape[1], p)
    for row in a.tolist():
        ech.add(row)
    return ech.rank, ech.pivots


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    parser.add_argument("--prime", type=int, default=101)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true", help="emit machine-readable results")
    args = parser.parse_args(argv)

    if _kernels.compiled_backend is None:
        print("compiled kernel not available; build it with `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    backends = {"compiled": _kernels.compiled_backend, "python": _kernels.python_backend}
    runners = {"rref": run_rref, "echelon": run_echelon}
    results = []
    for label, kind, matrix, p in workloads(args.sizes, args.prime):
        run = runners[kind]
        outputs = {name: run(b, matrix, p) for name, b in backends.items()}
        if outputs["compiled"] != outputs["python"]:
            raise SystemExit(f"backends disagree on {label}")
        times = {
            name: min(timeit.repeat(lambda b=b: run(b, matrix, p), number=1, repeat=args.repeat))
            for name, b in backends.items()
        }
        results.append({"workload": label, **{f"{k}_s": v for k, v in times.items()},
                        "speedup": times["python"] / times["compiled"]})

    if args.json:
        json.dump(results, sys.stdout, indent=2)
        print()
        return 0
    width = max(len(r["workload"]) for r in results)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for r in results:
        print(f"{r['workload']:<{width}}  {r['compiled_s']:>9.4f}s  {r['python_s']:>9.4f}s  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
