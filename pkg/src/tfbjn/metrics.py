"""Quantitative checks on distributions: marginals, Moyal defect,
cross-term energy, a directional decay proxy and a concentration score."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .cohen import cross_bjd
from .errors import InsufficientDataError, InvalidArgument, UndefinedRatioError
from .signal import GaussAtom, Signal, check_same_grid
from .spectral import fft2_centered, fft_centered
from .wigner import TFDist

NOISE_FLOOR = 1e-13
N_ANNULI = 5


def marginals(d: TFDist):
    """``(sum_w Q dw, sum_t Q dt)`` as real arrays."""
    if not d.is_auto:
        raise InvalidArgument(f"marginals need an auto-distribution, got kind {d.kind!r}")
    g = d.grid
    v = g.values.real
    return v.sum(axis=1) * g.axis2.step, v.sum(axis=0) * g.axis1.step


def reference_marginals(f: Signal):
    """``|f(t_k)|^2`` and ``|Ff|^2`` on the frequency axis of the standard lattice.

    The spectrum is taken from a symmetric zero-pad to 2N samples, which
    halves the frequency step to ``fs / (2N)``; the central N bins cover
    ``[-fs/4, fs/4)``.
    """
    n = len(f)
    padded = np.zeros(2 * n, dtype=np.complex128)
    padded[n // 2 : n // 2 + n] = f.samples
    spec, _ = fft_centered(padded, f.dt, start=f.t0 - (n // 2) * f.dt)
    return np.abs(f.samples) ** 2, np.abs(spec[n // 2 : n // 2 + n]) ** 2


def rel_l1(a, b) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    scale = np.sum(np.abs(b))
    if scale == 0:
        return 0.0 if np.sum(np.abs(a)) == 0 else float("inf")
    return float(np.sum(np.abs(a - b)) / scale)


def moyal_defect(f: Signal, g: Signal, n: int) -> float:
    """``| ||Q^n(f, g)||^2 - ||f||^2 ||g||^2 | / (||f||^2 ||g||^2)`` with weighted norms."""
    check_same_grid([f, g])
    ref = f.norm2() * g.norm2()
    if ref == 0:
        raise UndefinedRatioError("Moyal defect is undefined for a zero signal")
    q = cross_bjd(f, g, n)
    return abs(q.grid.norm2() - ref) / ref


@dataclass(frozen=True)
class Box:
    """Closed rectangle ``[t_lo, t_hi] x [f_lo, f_hi]``."""

    t_lo: float
    t_hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.t_lo <= self.t_hi and self.f_lo <= self.f_hi):
            raise InvalidArgument(f"box bounds are reversed: {self}")

    def mask(self, times, freqs) -> np.ndarray:
        t = (times >= self.t_lo) & (times <= self.t_hi)
        w = (freqs >= self.f_lo) & (freqs <= self.f_hi)
        return t[:, None] & w[None, :]


def midpoint_box(a: GaussAtom, b: GaussAtom) -> Box:
    """Box centered between two atoms, 4 spreads wide in time and 4/spread in frequency."""
    tc = 0.5 * (a.t_center + b.t_center)
    fc = 0.5 * (a.f_center + b.f_center)
    s = 0.5 * (a.spread + b.spread)
    return Box(tc - 2 * s, tc + 2 * s, fc - 2 / s, fc + 2 / s)


def cross_term_energy(d: TFDist, box: Box) -> float:
    """``sum |Q|^2 dt df`` over the cells inside ``box``."""
    g = d.grid
    t, w = g.coords1, g.coords2
    half_t, half_w = g.axis1.step / 2, g.axis2.step / 2
    if (
        box.t_lo < t[0] - half_t
        or box.t_hi > t[-1] + half_t
        or box.f_lo < w[0] - half_w
        or box.f_hi > w[-1] + half_w
    ):
        raise InvalidArgument(f"box {box} is not inside the grid")
    m = box.mask(t, w)
    if not m.any():
        raise InvalidArgument(f"box {box} contains no grid cells")
    return float(np.sum(np.abs(g.values[m]) ** 2) * g.cell)


def _raised_cosine(n: int, cover: float = 0.75) -> np.ndarray:
    width = int(round(cover * n))
    out = np.zeros(n)
    lo = (n - width) // 2
    out[lo : lo + width] = np.hanning(width + 2)[1:-1]
    return out


def directional_decay(
    d: TFDist,
    direction=(1.0, 1.0),
    cone_halfangle: float = np.pi / 8,
    noise_floor: float = NOISE_FLOOR,
    n_annuli: int = N_ANNULI,
) -> float:
    """Decay exponent of the windowed 2D transform of ``d`` inside a cone.

    The grid is multiplied by a separable raised cosine on the central 75%
    of each axis and transformed with ``exp(-2 pi i (t xi1 + w xi2))``.  In
    each of ``n_annuli`` dyadic annuli ``[r/2, r)``, with r running down from
    the largest radius the dual grid covers, the maximum of ``|F|`` inside
    the double cone about ``direction`` is recorded.  Annuli that hold no
    lattice point of the cone, or whose maximum lies below
    ``noise_floor * max |F|``, are dropped.  The result is the least-squares
    slope of ``log max`` against ``log r``.

    Distributions of smooth signals decay faster than any power, so the
    number is a comparison tool (trends in n, axis versus diagonal), not an
    estimate of a true Sobolev exponent.
    """
    u = np.asarray(direction, dtype=np.float64)
    if u.shape != (2,) or not np.all(np.isfinite(u)) or np.hypot(*u) == 0:
        raise InvalidArgument(f"direction must be a nonzero 2-vector, got {direction!r}")
    if not 0 < cone_halfangle < np.pi / 2:
        raise InvalidArgument(f"cone_halfangle must be in (0, pi/2), got {cone_halfangle!r}")
    u = u / np.hypot(*u)
    g = d.grid
    n1, n2 = g.shape
    window = np.outer(_raised_cosine(n1), _raised_cosine(n2))
    spec = np.abs(fft2_centered(g.with_values(g.values * window)).values)
    dual = fft2_centered(g.with_values(window))  # axes only
    x1 = dual.coords1[:, None]
    x2 = dual.coords2[None, :]
    r = np.hypot(x1, x2)
    cos_angle = np.abs(x1 * u[0] + x2 * u[1]) / np.where(r == 0, 1.0, r)
    cone = (cos_angle >= np.cos(cone_halfangle)) & (r > 0)

    peak = spec.max()
    if peak == 0:
        raise InsufficientDataError("distribution is identically zero")
    r_max = min(-dual.coords1[0], -dual.coords2[0])
    radii, levels = [], []
    outer = r_max
    for _ in range(int(n_annuli)):
        inner = outer / 2
        sel = cone & (r >= inner) & (r < outer)
        if sel.any():
            top = spec[sel].max()
            if top >= noise_floor * peak:
                radii.append(outer)
                levels.append(top)
        outer = inner
    if len(radii) < 3:
        raise InsufficientDataError(f"only {len(radii)} annuli above the noise floor")
    slope = np.polyfit(np.log(radii), np.log(levels), 1)[0]
    return float(slope)


def concentration(d: TFDist) -> float:
    """``(sum |v|)^2 / (N_cells sum |v|^2)``: 1 for a flat grid, 1/N_cells for a spike."""
    v = np.abs(d.values)
    s2 = float(np.sum(v**2))
    if s2 == 0:
        raise UndefinedRatioError("concentration of a zero grid is undefined")
    return float(np.sum(v) ** 2 / (v.size * s2))


def report_rows(rows) -> list:
    """Sort metric rows by (n, metric) for a stable report."""
    return sorted(rows, key=lambda r: (r["n"], r["metric"]))


def report_json(rows) -> str:
    return json.dumps(report_rows(rows), indent=1, sort_keys=True)
