"""Compare the Cython kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import time
from itertools import permutations

from frobhom import _kernels_py
from frobhom.fixtures import fixture_groups
from frobhom.groups import pair_sets

try:
    from frobhom import _ckernels
except ImportError:
    _ckernels = None


def _timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads(impl):
    from array import array

    groups = list(fixture_groups().values())
    rng = random.Random(1)
    tables = []
    for _ in range(200):
        n = rng.randint(2, 6)
        tables.append((array("i", (rng.randrange(n) for _ in range(n * n))), n))
    perms = [p for n in range(1, 8) for p in permutations(range(n))]
    S3 = fixture_groups()["S3"]

    def assoc():
        for G in groups:
            impl.assoc_witness(G.flat(), G.n)
        for t, n in tables:
            impl.assoc_witness(t, n)

    def cycles():
        for p in perms:
            impl.perm_cycles(p)

    def homs():
        for perm in permutations(range(1, 6)):
            impl.is_homomorphism(S3.flat(), S3.flat(), [0] + list(perm), 6)

    def propagate():
        for G in groups:
            n = G.n
            ps = pair_sets(G)
            table = array("i", [-1] * (n * n))
            a = array("i", [-1] * (n * n))
            b = array("i", [-1] * (n * n))
            for i in range(n):
                for j in range(n):
                    s = sorted(ps.sets[i][j])
                    if len(s) == 1:
                        table[i * n + j] = s[0]
                    else:
                        a[i * n + j], b[i * n + j] = s
            impl.propagate(table, a, b, n)

    return {"assoc_witness": assoc, "perm_cycles": cycles,
            "is_homomorphism": homs, "propagate": propagate}


_E2E = ("import time; from frobhom import kernels; from frobhom.checks import check_group_reconstruction; "
        "import random; t = time.perf_counter(); "
        "ok, _ = check_group_reconstruction('full', random.Random(0)); "
        "print(kernels.BACKEND, ok, time.perf_counter() - t)")


def end_to_end():
    """Time group reconstruction for every fixture group under each backend."""
    import os
    import subprocess
    import sys

    for pure in ("1", "0"):
        env = dict(os.environ, FROBHOM_PURE=pure)
        out = subprocess.run([sys.executable, "-c", _E2E], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"reconstruction, {out[0]} backend: {float(out[2]):.2f}s (pass={out[1]})")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", action="store_true",
                    help="also time full group reconstruction under both backends")
    args = ap.parse_args(argv)
    backends = [("python", _kernels_py)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("Cython extension not built; timing the fallback only")
    results = {name: {k: _timeit(fn, args.repeat) for k, fn in workloads(impl).items()}
               for name, impl in backends}
    print(f"{'kernel':<18}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for k in results["python"]:
        row = f"{k:<18}" + "".join(f"{results[name][k]:>11.4f}s" for name, _ in backends)
        if "cython" in results and results["cython"][k] > 0:
            row += f"   {results['python'][k] / results['cython'][k]:6.1f}x"
        print(row)
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
