"""Generalized Born-Jordan time-frequency distributions and quantization of order n."""

from .cohen import bjd, cohen_smooth, cross_bjd, mixed_derivative_check
from .errors import (
    FormatError,
    InsufficientDataError,
    InvalidArgument,
    SizeGuardError,
    UndefinedRatioError,
)
from .metrics import (
    Box,
    concentration,
    cross_term_energy,
    directional_decay,
    marginals,
    midpoint_box,
    moyal_defect,
    reference_marginals,
)
from .quantize import (
    CoeffTable,
    OperatorMatrix,
    SymbolGrid,
    bj_quantize,
    bj_quantize_weak,
    bj_symbol_to_weyl,
    monomial_coeffs,
    sample_symbol,
    weyl_quantize,
)
from .signal import (
    GaussAtom,
    Signal,
    analytic,
    gen_gaussian,
    gen_linear_chirp,
    load_signal_csv,
    save_signal_csv,
    superpose,
)
from .spectral import Axis, Grid2D, fft_centered, ifft_centered, isymplectic_ft, symplectic_ft
from .wigner import AmbiguityGrid, TFDist, ambiguity, cross_ambiguity, cross_wigner, wigner

__version__ = "0.1.0"

__all__ = [
    "AmbiguityGrid",
    "Axis",
    "Box",
    "CoeffTable",
    "FormatError",
    "GaussAtom",
    "Grid2D",
    "InsufficientDataError",
    "InvalidArgument",
    "OperatorMatrix",
    "Signal",
    "SizeGuardError",
    "SymbolGrid",
    "TFDist",
    "UndefinedRatioError",
    "ambiguity",
    "analytic",
    "bj_quantize",
    "bj_quantize_weak",
    "bj_symbol_to_weyl",
    "bjd",
    "cohen_smooth",
    "concentration",
    "cross_ambiguity",
    "cross_bjd",
    "cross_term_energy",
    "cross_wigner",
    "directional_decay",
    "fft_centered",
    "gen_gaussian",
    "gen_linear_chirp",
    "ifft_centered",
    "isymplectic_ft",
    "load_signal_csv",
    "marginals",
    "midpoint_box",
    "mixed_derivative_check",
    "monomial_coeffs",
    "moyal_defect",
    "reference_marginals",
    "sample_symbol",
    "save_signal_csv",
    "superpose",
    "symplectic_ft",
    "weyl_quantize",
    "wigner",
]
