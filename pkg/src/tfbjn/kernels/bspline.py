"""Centered B-splines as exact piecewise polynomials.

``B_1`` is the indicator of ``[-1/2, 1/2]`` and ``B_{n+1}(t)`` is the
integral of ``B_n`` over ``[t - 1/2, t + 1/2]``.  All coefficients are
:class:`fractions.Fraction`; floats only appear in :meth:`BSpline.__call__`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from ..errors import InvalidArgument
from ..spectral import fft_centered
from .sinc import sinc

# polynomials are tuples of Fractions, lowest degree first


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim(
        (p[i] if i < len(p) else Fraction(0)) + (q[i] if i < len(q) else Fraction(0))
        for i in range(n)
    )


def poly_neg(p):
    return tuple(-c for c in p)


def poly_eval(p, t):
    acc = Fraction(0) if isinstance(t, Fraction) else 0.0
    for c in reversed(p):
        acc = acc * t + (c if isinstance(t, Fraction) else float(c))
    return acc


def poly_integrate(p):
    """Antiderivative vanishing at 0."""
    return _trim((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(p)))


def poly_derivative(p):
    return _trim(tuple(c * i for i, c in enumerate(p))[1:] or (Fraction(0),))


def poly_shift(p, a):
    """Coefficients of ``t -> p(t + a)``."""
    out = [Fraction(0)] * len(p)
    for i, c in enumerate(p):
        for k in range(i + 1):
            out[k] += c * comb(i, k) * a ** (i - k)
    return _trim(out)


@dataclass(frozen=True)
class BSpline:
    """``pieces[i] = ((left, right), coeffs)`` covering ``[-n/2, n/2]``."""

    order: int
    pieces: tuple

    @property
    def support(self):
        return self.pieces[0][0][0], self.pieces[-1][0][1]

    @property
    def knots(self):
        return tuple(iv[0] for iv, _ in self.pieces) + (self.pieces[-1][0][1],)

    def integral(self) -> Fraction:
        total = Fraction(0)
        for (a, b), p in self.pieces:
            P = poly_integrate(p)
            total += poly_eval(P, b) - poly_eval(P, a)
        return total

    def exact(self, t: Fraction) -> Fraction:
        """Exact value; at a knot the two one-sided limits are averaged."""
        t = Fraction(t)
        left = right = Fraction(0)
        for (a, b), p in self.pieces:
            if a <= t < b:
                right = poly_eval(p, t)
            if a < t <= b:
                left = poly_eval(p, t)
        return (left + right) / 2

    def __call__(self, t):
        """Float evaluation on an array; jump points get the mean of both sides."""
        t = np.asarray(t, dtype=np.float64)
        out = np.zeros_like(t)
        for (a, b), p in self.pieces:
            fa, fb = float(a), float(b)
            inside = (t > fa) & (t < fb)
            out = np.where(inside, poly_eval(p, t), out)
        for knot in self.knots:
            at = t == float(knot)
            if np.any(at):
                out = np.where(at, float(self.exact(knot)), out)
        return out


@lru_cache(maxsize=None)
def bspline_build(n: int) -> BSpline:
    if int(n) != n or n < 1:
        raise InvalidArgument(f"spline order must be a positive integer, got {n!r}")
    half = Fraction(1, 2)
    spline = BSpline(1, (((-half, half), (Fraction(1),)),))
    for order in range(2, n + 1):
        spline = _convolve_box(spline, order)
    return spline


def _convolve_box(prev: BSpline, order: int) -> BSpline:
    """B_{order}(t) = C(t + 1/2) - C(t - 1/2) with C the running integral of prev."""
    half = Fraction(1, 2)
    # running integral: on piece i, C(s) = P_i(s) - P_i(a_i) + mass before a_i
    cumulative = []
    mass = Fraction(0)
    for (a, b), p in prev.pieces:
        P = poly_integrate(p)
        offset = mass - poly_eval(P, a)
        cumulative.append(((a, b), poly_add(P, (offset,))))
        mass += poly_eval(P, b) - poly_eval(P, a)

    def C_piece(s_lo, s_hi):
        # polynomial form of C on [s_lo, s_hi], which is inside one piece or outside support
        if s_hi <= cumulative[0][0][0]:
            return (Fraction(0),)
        if s_lo >= cumulative[-1][0][1]:
            return (mass,)
        for (a, b), P in cumulative:
            if a <= s_lo and s_hi <= b:
                return P
        raise AssertionError("interval straddles a knot")

    lo = -Fraction(order, 2)
    pieces = []
    for i in range(order):
        a, b = lo + i, lo + i + 1
        upper = poly_shift(C_piece(a + half, b + half), half)
        lower = poly_shift(C_piece(a - half, b - half), -half)
        pieces.append(((a, b), poly_add(upper, poly_neg(lower))))
    return BSpline(order, tuple(pieces))


def continuity_defects(spline: BSpline, max_derivative: int):
    """Jumps of derivatives 0..max_derivative at every knot, as exact Fractions."""
    defects = []
    zero = (Fraction(0),)
    extended = [zero] + [p for _, p in spline.pieces] + [zero]
    for idx, knot in enumerate(spline.knots):
        left, right = extended[idx], extended[idx + 1]
        for d in range(max_derivative + 1):
            defects.append((knot, d, poly_eval(right, knot) - poly_eval(left, knot)))
            left, right = poly_derivative(left), poly_derivative(right)
    return defects


def bspline_fourier_check(n: int, n_samples: int = 4096, t_range=(-8.0, 8.0)) -> float:
    """Max |FFT(B_n samples) - sinc^n| over the central half of the frequency axis.

    ``B_n`` is sampled on ``t_range`` (half-open) with ``n_samples`` points and
    passed through :func:`~tfbjn.spectral.fft_centered`.
    """
    spline = bspline_build(n)
    start, stop = t_range
    step = (stop - start) / n_samples
    t = start + np.arange(n_samples) * step
    spectrum, d = fft_centered(spline(t), step, start=start)
    xi = (np.arange(n_samples) - n_samples // 2) * d
    quarter = n_samples // 4
    central = slice(quarter, n_samples - quarter)
    return float(np.max(np.abs(spectrum[central] - sinc(xi[central]) ** n)))
