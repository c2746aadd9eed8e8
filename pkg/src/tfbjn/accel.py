"""Hot inner loops, each with a numba and a pure-numpy implementation.

The backend is picked once at import time from ``TFBJN_BACKEND``
(``numba`` or ``numpy``; default ``numba`` when it imports).  Both
implementations are always importable as ``<name>_numba`` / ``<name>_numpy``
so tests and benchmarks can compare them directly.

``TFBJN_THREADS`` caps the number of numba worker threads.  Every parallel
loop writes disjoint output cells and reduces in a fixed order, so results
do not depend on the thread count.
"""

import math
import os

import numpy as np

if "NUMBA_THREADING_LAYER" not in os.environ:
    # workqueue ships with numba and avoids version warnings from system TBB
    os.environ["NUMBA_THREADING_LAYER"] = "workqueue"

try:
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_requested = os.environ.get("TFBJN_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"TFBJN_BACKEND must be 'numba' or 'numpy', got {_requested!r}")
BACKEND = "numba" if (_requested == "numba" and HAVE_NUMBA) else "numpy"


def _apply_thread_cap():
    value = os.environ.get("TFBJN_THREADS")
    if not value or not HAVE_NUMBA:
        return
    try:
        count = int(value)
    except ValueError:
        return
    count = max(1, min(count, numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(count)


_apply_thread_cap()


# ---------------------------------------------------------------------------
# normalized sinc, sin(pi x) / (pi x)

_SERIES_CUTOFF = 1e-4


def sinc_numpy(x):
    x = np.asarray(x, dtype=np.float64)
    k = np.floor(x + 0.5)
    r = x - k  # exact: |x - k| <= 1/2
    s = np.sin(np.pi * r)
    s = np.where(np.fmod(k, 2.0) != 0.0, -s, s)
    small = np.abs(x) < _SERIES_CUTOFF
    with np.errstate(divide="ignore", invalid="ignore"):
        out = s / (np.pi * x)
    px2 = (np.pi * x) ** 2
    series = 1.0 - px2 / 6.0 + px2 * px2 / 120.0
    return np.where(small, series, out)


if HAVE_NUMBA:

    @njit(cache=True)
    def _sinc_scalar(x):
        if abs(x) < _SERIES_CUTOFF:
            px2 = (math.pi * x) ** 2
            return 1.0 - px2 / 6.0 + px2 * px2 / 120.0
        k = math.floor(x + 0.5)
        s = math.sin(math.pi * (x - k))
        if k - 2.0 * math.floor(0.5 * k) != 0.0:
            s = -s
        return s / (math.pi * x)

    @njit(cache=True, parallel=True)
    def _sinc_power_grid_nb(z1, z2, n):
        out = np.empty((z1.shape[0], z2.shape[0]))
        for i in prange(z1.shape[0]):
            for j in range(z2.shape[0]):
                out[i, j] = _sinc_scalar(z1[i] * z2[j]) ** n
        return out

    @njit(cache=True, parallel=True)
    def _lag_products_nb(f, g):
        n = f.shape[0]
        half = n // 2
        out = np.zeros((n, n), dtype=np.complex128)
        for k in prange(n):
            for c in range(n):
                tau = c - half
                a = k + tau
                b = k - tau
                if 0 <= a < n and 0 <= b < n:
                    out[k, c] = f[a] * np.conj(g[b])
        return out

    @njit(cache=True, parallel=True)
    def _lag_dft_nb(lags_t, table_re, table_im):
        # out[c, j] = sum_k lags_t[c, k] * table[k, j], k ascending; real and
        # imaginary parts accumulate separately so the inner loop vectorizes
        n_c, n_k = lags_t.shape
        n_j = table_re.shape[1]
        out_re = np.zeros((n_c, n_j))
        out_im = np.zeros((n_c, n_j))
        for c in prange(n_c):
            acc_re = out_re[c]
            acc_im = out_im[c]
            for k in range(n_k):
                r = lags_t[c, k]
                if r == 0:
                    continue
                a, b = r.real, r.imag
                t_re = table_re[k]
                t_im = table_im[k]
                for j in range(n_j):
                    acc_re[j] += a * t_re[j] - b * t_im[j]
                    acc_im[j] += a * t_im[j] + b * t_re[j]
        return out_re, out_im

    @njit(cache=True, parallel=True)
    def _midpoint_fold_nb(f, g):
        n = f.shape[0]
        out = np.zeros((2 * n, n), dtype=np.complex128)
        for p in prange(2 * n - 1):
            lo = max(0, p - (n - 1))
            hi = min(n - 1, p)
            for j in range(lo, hi + 1):
                k = p - j
                d = (j - k) % n
                out[p, d] += f[j] * np.conj(g[k])
        return out


def sinc_power_grid_numpy(z1, z2, n):
    return sinc_numpy(np.multiply.outer(z1, z2)) ** n


def lag_products_numpy(f, g):
    n = f.shape[0]
    half = n // 2
    k = np.arange(n)[:, None]
    tau = np.arange(n)[None, :] - half
    a = k + tau
    b = k - tau
    valid = (a >= 0) & (a < n) & (b >= 0) & (b < n)
    out = np.zeros((n, n), dtype=np.complex128)
    out[valid] = f[a[valid]] * np.conj(g[b[valid]])
    return out


def lag_dft_numpy(lags, table):
    return lags.T @ table


def midpoint_fold_numpy(f, g):
    n = f.shape[0]
    out = np.zeros((2 * n, n), dtype=np.complex128)
    outer = np.multiply.outer(f, np.conj(g))
    j = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    p = np.broadcast_to(j + k, (n, n)).ravel()
    d = np.broadcast_to((j - k) % n, (n, n)).ravel()
    np.add.at(out, (p, d), outer.ravel())
    return out


if HAVE_NUMBA:

    def sinc_numba(x):
        x = np.asarray(x, dtype=np.float64)
        flat = np.ascontiguousarray(x.reshape(-1))
        out = _sinc_power_grid_nb(flat, np.ones(1), 1)
        return out.reshape(x.shape)

    def sinc_power_grid_numba(z1, z2, n):
        return _sinc_power_grid_nb(
            np.ascontiguousarray(z1, dtype=np.float64),
            np.ascontiguousarray(z2, dtype=np.float64),
            int(n),
        )

    def lag_products_numba(f, g):
        return _lag_products_nb(
            np.ascontiguousarray(f, dtype=np.complex128),
            np.ascontiguousarray(g, dtype=np.complex128),
        )

    def lag_dft_numba(lags, table):
        table = np.asarray(table, dtype=np.complex128)
        re, im = _lag_dft_nb(
            np.ascontiguousarray(np.asarray(lags, dtype=np.complex128).T),
            np.ascontiguousarray(table.real),
            np.ascontiguousarray(table.imag),
        )
        return re + 1j * im

    def midpoint_fold_numba(f, g):
        return _midpoint_fold_nb(
            np.ascontiguousarray(f, dtype=np.complex128),
            np.ascontiguousarray(g, dtype=np.complex128),
        )


if BACKEND == "numba":
    sinc_power_grid = sinc_power_grid_numba
    lag_products = lag_products_numba
    lag_dft = lag_dft_numba
    midpoint_fold = midpoint_fold_numba
else:
    sinc_power_grid = sinc_power_grid_numpy
    lag_products = lag_products_numpy
    lag_dft = lag_dft_numpy
    midpoint_fold = midpoint_fold_numpy
