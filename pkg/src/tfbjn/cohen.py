"""Generalized Born-Jordan distributions Q^n.

Q^n is the Wigner distribution convolved with the symplectic Fourier
transform of ``Theta^n(z1, z2) = sinc(z1 z2)^n``.  The convolution is done as
a product on the ambiguity plane::

    Q^n(f, g) = F_sigma^{-1}( Theta^n * A(f, g) )

which only ever touches the bounded kernel, never its singular transform.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgument
from .kernels.sinc import theta_n
from .signal import Signal, check_same_grid
from .spectral import Grid2D, isymplectic_ft, symplectic_ft
from .wigner import TFDist, cross_ambiguity, cross_wigner, tf_axes


def _check_order(n):
    if int(n) != n or n < 0:
        raise InvalidArgument(f"order n must be a non-negative integer, got {n!r}")
    return int(n)


def _to_phase_space(dual: Grid2D, like_axes) -> Grid2D:
    t_axis, w_axis = like_axes
    out = isymplectic_ft(dual, starts=(t_axis.start, w_axis.start))
    return Grid2D(out.values, t_axis, w_axis)


def cohen_smooth(grid: Grid2D, n: int) -> Grid2D:
    """``F_sigma^{-1}(Theta^n F_sigma grid)`` on the lattice of ``grid``.

    Works for any phase-space grid (distributions or symbols).  ``n = 0``
    returns the input unchanged.
    """
    n = _check_order(n)
    if n == 0:
        return grid
    dual = symplectic_ft(grid)
    kernel = theta_n(dual, n)
    return _to_phase_space(dual.with_values(kernel.values * dual.values), (grid.axis1, grid.axis2))


def cross_bjd(f: Signal, g: Signal, n: int, lattice: str = "standard") -> TFDist:
    """Cross distribution ``Q^n(f, g)``.

    On the standard lattice the ambiguity comes from the direct sum in
    :func:`~tfbjn.wigner.cross_ambiguity`; on the midpoint lattice from the
    symplectic transform of the midpoint cross-Wigner.
    """
    n = _check_order(n)
    check_same_grid([f, g])
    axes = tf_axes(f, lattice)
    if lattice == "standard":
        dual = cross_ambiguity(f, g).grid
    else:
        dual = symplectic_ft(cross_wigner(f, g, lattice).grid)
    kernel = theta_n(dual, n)
    grid = _to_phase_space(dual.with_values(kernel.values * dual.values), axes)
    kind = "bjd" if f is g else "cross-bjd"
    return TFDist(grid, kind, n, (f.label, g.label), lattice)


def bjd(f: Signal, n: int) -> TFDist:
    """Born-Jordan distribution of order ``n``; ``n = 0`` is the Wigner distribution."""
    return cross_bjd(f, f, n)


def mixed_derivative_check(f: Signal, n: int) -> Grid2D:
    """``(4 pi^2)^{-n} (d^2/dx dw)^n Q^n f``, evaluated spectrally.

    Under ``F_sigma`` the operator ``d^2/dx dw`` becomes multiplication by
    ``4 pi^2 z1 z2``, and ``(z1 z2)^n sinc^n(z1 z2) = sin^n(pi z1 z2) / pi^n``.
    The returned grid is the inverse transform of ``sin^n(pi z1 z2) / pi^n * A f``,
    so its weighted norm is at most ``pi^-n`` times that of ``A f``.
    """
    n = _check_order(n)
    if n < 1:
        raise InvalidArgument("mixed_derivative_check needs n >= 1")
    amb = cross_ambiguity(f, f).grid
    u = np.multiply.outer(amb.coords1, amb.coords2)
    factor = (np.sin(np.pi * u) / np.pi) ** n
    return _to_phase_space(amb.with_values(factor * amb.values), tf_axes(f))
