"""Cohen kernels, exact B-splines and sinc-power derivative tables."""

from .bspline import BSpline, bspline_build, bspline_fourier_check, continuity_defects
from .derivs import (
    GaussRational,
    SincDerivTable,
    multi_indices,
    phi_derivs,
    phi_derivs_series,
    sinc_pow_derivs_faa,
    sinc_pow_derivs_series,
)
from .sinc import KernelGrid, sinc, sinc_u, theta_n

__all__ = [
    "BSpline",
    "GaussRational",
    "KernelGrid",
    "SincDerivTable",
    "bspline_build",
    "bspline_fourier_check",
    "continuity_defects",
    "multi_indices",
    "phi_derivs",
    "phi_derivs_series",
    "sinc",
    "sinc_pow_derivs_faa",
    "sinc_pow_derivs_series",
    "sinc_u",
    "theta_n",
]
