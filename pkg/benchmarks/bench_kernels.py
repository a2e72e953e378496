"""Compare the compiled and numpy bicomplex matmul kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each backend runs in a fresh interpreter so ``BICLIFF_PURE_PYTHON`` takes
effect at import time.
"""
import argparse
import json
import os
import subprocess
import sys

PROBE = r"""
import json, sys, timeit
import numpy as np
from bicliff import clear_caches, kernels
from bicliff.lie import verify_lorentz

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
out = {"backend": kernels.BACKEND}
for dim in (2, 8, 32):
    for dtype in (np.int64, np.float64):
        a = rng.integers(-5, 6, size=(4, dim, dim)).astype(dtype)
        b = rng.integers(-5, 6, size=(4, dim, dim)).astype(dtype)
        n = max(10, 20000 // dim**2)
        t = min(timeit.repeat(lambda: kernels.bic_matmul(a, b), number=n, repeat=repeat)) / n
        out[f"matmul d={dim} {np.dtype(dtype).name}"] = t * 1e6
for L in (2, 3):
    def sweep():
        clear_caches()
        return verify_lorentz(L)
    out[f"lorentz level {L}"] = min(timeit.repeat(sweep, number=1, repeat=repeat)) * 1e6
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("BICLIFF_PURE_PYTHON", None)
    if pure:
        env["BICLIFF_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", PROBE, str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = run(False, args.repeat)
    fallback = run(True, args.repeat)
    if compiled["backend"] != "cython":
        print("compiled kernels are not built; both columns use the numpy fallback")
    print(f"{'case':<24}{'compiled (us)':>15}{'numpy (us)':>15}{'speedup':>10}")
    for key in compiled:
        if key == "backend":
            continue
        c, f = compiled[key], fallback[key]
        print(f"{key:<24}{c:>15.1f}{f:>15.1f}{f / c:>9.1f}x")


if __name__ == "__main__":
    main()
