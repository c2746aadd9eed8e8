"""sinc functions and the Cohen kernels Theta^n(z1, z2) = sinc(z1 z2)^n.

Two conventions are used in this package and are kept apart by name:

* :func:`sinc` is the normalized ``sin(pi x) / (pi x)``; it defines the
  kernels and everything on time-frequency grids.
* :func:`sinc_u` is the unnormalized ``sin(u) / u``; the monomial ordering
  coefficients in :mod:`tfbjn.kernels.derivs` are derivatives of
  ``sinc_u(t/2)^n``.  Written with the normalized sinc the same kernel reads
  ``sinc^n(pi w x)`` in the ordering formulas; both forms describe one
  function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import accel
from ..errors import InvalidArgument
from ..spectral import Grid2D


def sinc(x):
    """Normalized sinc with value 1 at 0.

    The argument is reduced to ``[-1/2, 1/2]`` before calling ``sin``, so
    the result is exactly 0 at nonzero integers and accurate to a few ulp
    near them.  Accepts scalars or arrays.
    """
    out = accel.sinc_numpy(x)
    return float(out) if np.ndim(out) == 0 else out


def sinc_u(u):
    """Unnormalized sinc ``sin(u) / u``."""
    return sinc(np.asarray(u, dtype=np.float64) / np.pi)


@dataclass(frozen=True)
class KernelGrid:
    order: int
    grid: Grid2D

    @property
    def values(self) -> np.ndarray:
        return self.grid.values


def _check_order(n):
    if int(n) != n or n < 0:
        raise InvalidArgument(f"kernel order must be a non-negative integer, got {n!r}")
    return int(n)


def theta_n(axes, n: int) -> KernelGrid:
    """Sample ``sinc(z1 * z2)^n`` on the lattice of ``axes``.

    ``axes`` is a :class:`Grid2D` (its axes and shape are used, values
    ignored) or an object with a ``grid`` attribute such as an
    :class:`~tfbjn.wigner.AmbiguityGrid`.  ``n = 0`` gives the all-ones grid.
    """
    n = _check_order(n)
    grid = getattr(axes, "grid", axes)
    if not isinstance(grid, Grid2D):
        raise InvalidArgument("theta_n needs a Grid2D or an object with a .grid")
    if n == 0:
        values = np.ones(grid.shape)
    else:
        values = accel.sinc_power_grid(grid.coords1, grid.coords2, n)
    return KernelGrid(n, Grid2D(values, grid.axis1, grid.axis2))
