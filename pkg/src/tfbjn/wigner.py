"""Discrete (cross-)Wigner distribution and ambiguity function.

Two lattices are available.

``standard`` (default)
    N x N grid.  Time axis = the signal's sample times.  The lag runs over
    whole samples, ``y = 2 tau dt``, so the frequency axis has step
    ``fs / (2N)`` and covers ``[-fs/4, fs/4)``: one full period of the
    discrete distribution.  Signals must be bandlimited to ``|w| < fs/4``
    for this to be alias-free::

        W[k, m] = 2 dt * sum_tau f[k + tau] conj(g[k - tau]) exp(-4 pi i w_m tau dt)

``midpoint``
    2N x N grid.  Time axis has step ``dt / 2`` (sample times and the
    midpoints between them), frequency axis has step ``fs / N`` over
    ``[-fs/2, fs/2)``.  This is the lattice on which the weak pairing
    ``<a, W(g, f)>`` reproduces the Weyl matrices of :mod:`tfbjn.quantize`
    exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel
from .errors import InvalidArgument
from .signal import Signal, check_same_grid
from .spectral import Axis, Grid2D, _cis, centered_axis

LATTICES = ("standard", "midpoint")


@dataclass(frozen=True)
class TFDist:
    """A distribution on (time, frequency).

    ``kind`` is one of ``wigner``, ``bjd``, ``cross-wigner``, ``cross-bjd``.
    """

    grid: Grid2D
    kind: str
    order: int | None = None
    sources: tuple = ()
    lattice: str = "standard"

    @property
    def values(self) -> np.ndarray:
        return self.grid.values

    @property
    def times(self) -> np.ndarray:
        return self.grid.coords1

    @property
    def freqs(self) -> np.ndarray:
        return self.grid.coords2

    @property
    def is_auto(self) -> bool:
        return not self.kind.startswith("cross")

    def real(self) -> np.ndarray:
        return self.grid.values.real

    def imag_residue(self) -> float:
        """max |Im| / max |Re| (0 for an all-zero grid)."""
        v = self.grid.values
        top = np.max(np.abs(v.real))
        return 0.0 if top == 0 else float(np.max(np.abs(v.imag)) / top)


@dataclass(frozen=True)
class AmbiguityGrid:
    """Ambiguity values on (zeta1 [s], zeta2 [Hz])."""

    grid: Grid2D

    @property
    def values(self) -> np.ndarray:
        return self.grid.values

    def at_origin(self) -> complex:
        n1, n2 = self.grid.shape
        return complex(self.grid.values[n1 // 2, n2 // 2])


def tf_axes(signal: Signal, lattice: str = "standard"):
    n, fs = len(signal), signal.sample_rate
    if lattice == "standard":
        return Axis(signal.t0, signal.dt, "s"), centered_axis(n, fs / (2 * n), "Hz")
    if lattice == "midpoint":
        return Axis(signal.t0, signal.dt / 2, "s"), centered_axis(n, fs / n, "Hz")
    raise InvalidArgument(f"lattice must be one of {LATTICES}, got {lattice!r}")


def ambiguity_axes(signal: Signal):
    """Dual axes of the standard lattice: zeta1 step 2 dt, zeta2 step fs/N."""
    n, fs = len(signal), signal.sample_rate
    return centered_axis(n, 2.0 / fs, "s"), centered_axis(n, fs / n, "Hz")


def _centered_lag_dft(rows: np.ndarray) -> np.ndarray:
    """sum_c rows[:, c] exp(-2 pi i (c - N/2)(m - N/2) / N) along axis 1."""
    return np.fft.fftshift(np.fft.fft(np.fft.ifftshift(rows, axes=1), axis=1), axes=1)


def _pair_kind(f, g, auto, cross):
    return auto if f is g else cross


def cross_wigner(f: Signal, g: Signal, lattice: str = "standard") -> TFDist:
    check_same_grid([f, g])
    t_axis, w_axis = tf_axes(f, lattice)
    scale = 2.0 * f.dt
    if lattice == "standard":
        lags = accel.lag_products(f.samples, g.samples)
        values = scale * _centered_lag_dft(lags)
    else:
        n = len(f)
        folded = accel.midpoint_fold(f.samples, g.samples)  # [p, d mod N]
        # lag d dt against w_m = (m - N/2) fs/N: phase d (m - N/2) / N, N-periodic in d
        sign = (-1.0) ** np.arange(n)
        values = scale * np.fft.fft(folded * sign[None, :], axis=1)
    kind = _pair_kind(f, g, "wigner", "cross-wigner")
    return TFDist(Grid2D(values, t_axis, w_axis), kind, 0, (f.label, g.label), lattice)


def wigner(f: Signal, lattice: str = "standard") -> TFDist:
    return cross_wigner(f, f, lattice)


def _ambiguity_table(signal: Signal, z2: np.ndarray) -> np.ndarray:
    """exp(-2 pi i z2_j x_k) as a (N_k, N_j) table, exact on quarter turns."""
    k = np.arange(len(signal))
    # x_k z2_j = t0 z2_j + k dt z2_j, kept as separate turns for accuracy
    turns = -(signal.t0 * z2[None, :] + (k[:, None] * signal.dt) * z2[None, :])
    return _cis(turns)


def cross_ambiguity(f: Signal, g: Signal) -> AmbiguityGrid:
    """Direct-sum cross-ambiguity on the dual of the standard lattice.

    ``A[i, j] = dt * sum_k f[k + tau_i] conj(g[k - tau_i]) exp(-2 pi i z2_j x_k)``
    with ``z1_i = 2 tau_i dt``.  Evaluated as a dense sum, independent of
    the FFT path through :func:`cross_wigner`.
    """
    check_same_grid([f, g])
    a1, a2 = ambiguity_axes(f)
    z2 = a2.coords(len(f))
    lags = accel.lag_products(f.samples, g.samples)
    values = f.dt * accel.lag_dft(lags, _ambiguity_table(f, z2))
    return AmbiguityGrid(Grid2D(values, a1, a2))


def ambiguity(f: Signal) -> AmbiguityGrid:
    return cross_ambiguity(f, f)
