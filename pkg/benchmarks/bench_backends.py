"""Time the numba and numpy implementations of the hot loops side by side.

Usage::

    python3 benchmarks/bench_backends.py [--sizes 128 256 512] [--repeat 5]

Each kernel is called once per backend before timing so JIT compilation is
excluded.  The end-to-end rows run ``bjd`` in a subprocess per backend,
since the backend is fixed at import time by ``TFBJN_BACKEND``.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from tfbjn import accel


def best_of(fn, repeat):
    fn()
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(n, repeat, rng):
    f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    g = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    z = np.linspace(-8, 8, n)
    lags = accel.lag_products_numpy(f, g)
    table = np.exp(-2j * np.pi * np.outer(np.arange(n), np.arange(n)) / n)
    cases = {
        "sinc_power_grid": lambda impl: (lambda: impl(z, z, 3)),
        "lag_products": lambda impl: (lambda: impl(f, g)),
        "lag_dft": lambda impl: (lambda: impl(lags, table)),
        "midpoint_fold": lambda impl: (lambda: impl(f, g)),
    }
    rows = []
    for name, make in cases.items():
        t_np = best_of(make(getattr(accel, f"{name}_numpy")), repeat)
        t_nb = best_of(make(getattr(accel, f"{name}_numba")), repeat) if accel.HAVE_NUMBA else float("nan")
        rows.append((name, n, t_nb, t_np))
    return rows


_E2E = """
import timeit
from tfbjn import bjd, GaussAtom, gen_gaussian
sig = gen_gaussian(GaussAtom(), {n}, 32.0)
bjd(sig, 2)
print(min(timeit.repeat(lambda: bjd(sig, 2), number=1, repeat={repeat})))
"""


def end_to_end(n, repeat):
    out = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, TFBJN_BACKEND=backend)
        res = subprocess.run(
            [sys.executable, "-c", _E2E.format(n=n, repeat=repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        out[backend] = float(res.stdout.strip())
    return ("bjd (end to end)", n, out["numba"], out["numpy"])


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    rng = np.random.default_rng(0)
    rows = []
    for n in args.sizes:
        rows.extend(kernel_rows(n, args.repeat, rng))
        rows.append(end_to_end(n, args.repeat))

    print(f"numba threads: {accel.numba.get_num_threads() if accel.HAVE_NUMBA else 0}")
    print(f"{'kernel':<18} {'N':>5} {'numba [ms]':>11} {'numpy [ms]':>11} {'speedup':>8}")
    for name, n, t_nb, t_np in rows:
        print(f"{name:<18} {n:>5} {1e3 * t_nb:>11.3f} {1e3 * t_np:>11.3f} {t_np / t_nb:>8.2f}")


if __name__ == "__main__":
    main()
