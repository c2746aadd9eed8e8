"""Born-Jordan quantization of order n.

Two deliverables live here.

* Exact ordering coefficients for monomials ``w^m x^l``
  (:func:`monomial_coeffs`), carried as Gaussian rationals times a power of
  ``pi``.
* Finite operator matrices for symbols sampled on a grid
  (:func:`weyl_quantize`, :func:`bj_quantize`, :func:`bj_quantize_weak`).

Units: ``hbar = 1 / (2 pi)``, so the frequency operator is
``-(i / 2 pi) d/dx`` and ``[x, w] = (i / 2 pi) I``.

Symbol grids are twice dense in x: a length-N signal on ``x_j = x0 + j dx``
pairs with a symbol on ``x0 + p dx / 2`` (``p = 0 .. 2N-1``) and
``w_m = (m - N/2) / (N dx)``.  Midpoints ``(x_j + x_k) / 2`` are then grid
points and the Weyl kernel needs no interpolation.  A matrix ``M`` acts on
sample vectors directly: ``(Op f)(x_j) = sum_k M[j, k] f_k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .cohen import cohen_smooth, cross_bjd
from .errors import InvalidArgument, SizeGuardError
from .kernels.derivs import GaussRational, phi_derivs
from .signal import Signal, is_power_of_two
from .spectral import Axis, Grid2D, centered_axis

WEAK_FORM_MAX_N = 64

SYMBOL_TAGS = ("weyl-symbol", "bj-n-symbol")


# ---------------------------------------------------------------------------
# monomials


@dataclass(frozen=True)
class CoeffTable:
    """``Op(w^m x^l) = sum_j c_j w^(m-j) x^(l-j)`` with ``c_j = coeffs[j] * pi^(-j)``."""

    m: int
    l: int
    order: int
    coeffs: tuple

    def pi_power(self, j: int) -> int:
        return -j

    def value(self, j: int) -> complex:
        return complex(self.coeffs[j]) * np.pi ** self.pi_power(j)

    def to_dict(self) -> dict:
        rows = [{"j": j, **c.to_json(), "pi_power": self.pi_power(j)} for j, c in enumerate(self.coeffs)]
        return {"m": self.m, "l": self.l, "n": self.order, "coeffs": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_json(cls, text: str) -> CoeffTable:
        data = json.loads(text)
        rows = sorted(data["coeffs"], key=lambda r: r["j"])
        for j, row in enumerate(rows):
            if row["j"] != j or row["pi_power"] != -j:
                raise InvalidArgument(f"malformed coefficient row {row!r}")
        coeffs = tuple(GaussRational.from_json(r) for r in rows)
        return cls(int(data["m"]), int(data["l"]), int(data["n"]), coeffs)


def _nonneg(name, v):
    if int(v) != v or v < 0:
        raise InvalidArgument(f"{name} must be a non-negative integer, got {v!r}")
    return int(v)


def monomial_coeffs(m: int, l: int, n: int) -> CoeffTable:
    """Exact order-n ordering of ``w^m x^l``.

    ``c_j = j! C(m, j) C(l, j) f_j (2 pi)^(-j)`` where ``f_j`` is the j-th
    derivative at 0 of ``exp(i t / 2) sinc_u(t / 2)^n``.  The rational part
    ``j! C(m,j) C(l,j) f_j / 2^j`` is stored; the ``pi^(-j)`` is implicit.
    """
    m, l, n = _nonneg("m", m), _nonneg("l", l), _nonneg("n", n)
    top = min(m, l)
    f = phi_derivs(n, top)
    coeffs = tuple(
        f[j] * Fraction(factorial(j) * comb(m, j) * comb(l, j), 2**j) for j in range(top + 1)
    )
    return CoeffTable(m, l, n, coeffs)


# ---------------------------------------------------------------------------
# grids and matrices


@dataclass(frozen=True)
class SymbolGrid:
    grid: Grid2D
    tag: str = "weyl-symbol"

    def __post_init__(self):
        if self.tag not in SYMBOL_TAGS:
            raise InvalidArgument(f"symbol tag must be one of {SYMBOL_TAGS}, got {self.tag!r}")

    @property
    def values(self) -> np.ndarray:
        return self.grid.values

    @property
    def n_signal(self) -> int:
        return self.grid.shape[1]

    @property
    def dx(self) -> float:
        """Sample spacing of the signals this symbol acts on."""
        return 2.0 * self.grid.axis1.step

    @property
    def x0(self) -> float:
        return self.grid.axis1.start


@dataclass(frozen=True)
class OperatorMatrix:
    matrix: np.ndarray
    tag: str

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        m = self.matrix
        scale = max(1.0, float(np.max(np.abs(m))))
        return bool(np.max(np.abs(m - m.conj().T)) <= tol * scale)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.matrix))


def symbol_axes(n: int, dx: float, x0: float | None = None):
    """Axes of the (2N, N) symbol grid for length-``n`` signals with spacing ``dx``."""
    if not is_power_of_two(n):
        raise InvalidArgument(f"n must be a power of two >= 2, got {n}")
    if x0 is None:
        x0 = -(n // 2) * dx
    return Axis(x0, dx / 2, "s"), centered_axis(n, 1.0 / (n * dx), "Hz")


def sample_symbol(func, n: int, dx: float, x0: float | None = None, tag="weyl-symbol") -> SymbolGrid:
    """Evaluate ``func(x, w)`` (broadcasting) on the symbol grid."""
    ax, aw = symbol_axes(n, dx, x0)
    x = ax.coords(2 * n)[:, None]
    w = aw.coords(n)[None, :]
    values = np.broadcast_to(np.asarray(func(x, w)), (2 * n, n))
    return SymbolGrid(Grid2D(np.array(values), ax, aw), tag)


def _check_twice_dense(a: SymbolGrid):
    g = a.grid
    n2, n = g.shape
    if n2 != 2 * n:
        raise InvalidArgument(f"symbol grid must have shape (2N, N), got {g.shape}")
    want = 1.0 / (n * a.dx)
    if abs(g.axis2.step - want) > 1e-12 * want:
        raise InvalidArgument(
            f"frequency step {g.axis2.step!r} does not match 1/(N dx) = {want!r}"
        )
    if abs(g.axis2.start + (n // 2) * g.axis2.step) > 1e-12 * want * n:
        raise InvalidArgument("symbol frequency axis must be centered")


def weyl_quantize(a: SymbolGrid) -> OperatorMatrix:
    """Weyl matrix by the midpoint rule.

    ``M[j, k] = (1/N) sum_m a[j + k, m] exp(2 pi i (j - k)(m - N/2) / N)``,
    which is ``K(x_j, x_k) dx`` for the Weyl kernel
    ``K(x, y) = int a((x + y) / 2, w) exp(2 pi i (x - y) w) dw``.
    """
    _check_twice_dense(a)
    n = a.n_signal
    values = np.asarray(a.values, dtype=np.complex128)
    # rows[p, d] = (1/N) sum_m a[p, m] exp(2 pi i d (m - N/2) / N), d taken mod N
    sign = (-1.0) ** np.arange(n)
    rows = np.fft.ifft(values, axis=1) * sign[None, :]
    j = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    return OperatorMatrix(rows[j + k, (j - k) % n], "weyl")


def bj_symbol_to_weyl(a: SymbolGrid, n: int) -> SymbolGrid:
    """Weyl symbol of the order-n BJ operator with symbol ``a``: ``F_sigma^-1(Theta^n F_sigma a)``."""
    if n == 0:
        return SymbolGrid(a.grid, "weyl-symbol")
    return SymbolGrid(cohen_smooth(a.grid, n), "weyl-symbol")


def bj_quantize(a: SymbolGrid, n: int) -> OperatorMatrix:
    out = weyl_quantize(bj_symbol_to_weyl(a, n))
    return OperatorMatrix(out.matrix, "weyl" if n == 0 else f"bj({n})")


def bj_quantize_weak(a: SymbolGrid, n: int) -> OperatorMatrix:
    """Assemble ``M[j, k] = <a, Q^n(e_j, e_k)> / dx`` from basis signals.

    The pairing uses the midpoint lattice of :func:`~tfbjn.cohen.cross_bjd`,
    whose cells are ``(dx / 2) x dw``: exactly the symbol grid.  The cost is
    O(N^4 log N), so N is capped at ``WEAK_FORM_MAX_N``.
    """
    _check_twice_dense(a)
    size = a.n_signal
    if size > WEAK_FORM_MAX_N:
        raise SizeGuardError(f"weak-form assembly is capped at N <= {WEAK_FORM_MAX_N}, got {size}")
    eye = np.eye(size)
    basis = [Signal(eye[j], 1.0 / a.dx, a.x0, label=f"e{j}") for j in range(size)]
    values = np.asarray(a.values, dtype=np.complex128)
    cell = a.grid.cell
    out = np.empty((size, size), dtype=np.complex128)
    for j in range(size):
        for k in range(size):
            q = cross_bjd(basis[j], basis[k], n, lattice="midpoint")
            out[j, k] = np.sum(values * np.conj(q.values)) * cell / a.dx
    return OperatorMatrix(out, "weak-form")


def position_matrix(n: int, dx: float, x0: float | None = None) -> np.ndarray:
    """``diag(x_j)``."""
    if x0 is None:
        x0 = -(n // 2) * dx
    return np.diag(x0 + np.arange(n) * dx).astype(np.complex128)


def frequency_matrix(n: int, dx: float) -> np.ndarray:
    """Spectral realization of ``-(i / 2 pi) d/dx``: DFT, multiply by the bin frequency, inverse DFT.

    Bin ``N/2`` carries ``-1 / (2 dx)`` (numpy's convention), matching the
    centered symbol axis.
    """
    nu = np.fft.fftfreq(n, d=dx)
    eye = np.eye(n)
    return np.fft.ifft(nu[:, None] * np.fft.fft(eye, axis=0), axis=0)
