"""Property-based checks of the structural invariants."""

from fractions import Fraction
from math import comb, factorial

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tfbjn.cohen import bjd, cross_bjd
from tfbjn.kernels import (
    GaussRational,
    bspline_build,
    phi_derivs,
    sinc,
    sinc_pow_derivs_faa,
    sinc_pow_derivs_series,
    theta_n,
)
from tfbjn.metrics import Box, cross_term_energy, marginals, moyal_defect
from tfbjn.quantize import SymbolGrid, bj_quantize, monomial_coeffs, sample_symbol
from tfbjn.signal import Signal
from tfbjn.spectral import Axis, Grid2D, centered_axis, symplectic_ft
from tfbjn.wigner import ambiguity, cross_wigner, wigner

SETTINGS = settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
sizes = st.sampled_from([8, 16, 32])
rates = st.sampled_from([4.0, 8.0, 10.0])


@st.composite
def signals(draw, n=None):
    n = n or draw(sizes)
    fs = draw(rates)
    # rounding keeps amplitudes away from the subnormal range
    amp = st.floats(-2, 2).map(lambda v: round(v, 6))
    re = draw(arrays(np.float64, n, elements=amp))
    im = draw(arrays(np.float64, n, elements=amp))
    return Signal(re + 1j * im, fs)


@st.composite
def signal_pairs(draw):
    n = draw(sizes)
    f = draw(signals(n))
    g = draw(signals(n))
    return f, Signal(g.samples, f.sample_rate)


def not_zero(sig):
    return np.any(sig.samples != 0)


# ---------------------------------------------------------------------------
# kernels


@SETTINGS
@given(finite)
def test_sinc_bounded_and_even(x):
    s = sinc(x)
    assert abs(s) <= 1.0
    assert s == sinc(-x)


@SETTINGS
@given(st.floats(-40, 40), st.floats(-40, 40), st.integers(1, 12))
def test_theta_bounded_and_monotone(z1, z2, n):
    g = Grid2D(np.zeros((2, 2)), Axis(z1, 1.0), Axis(z2, 1.0))
    lo = np.abs(theta_n(g, n + 1).values)
    hi = np.abs(theta_n(g, n).values)
    assert np.all(hi <= 1.0)
    assert np.all(lo <= hi)


@SETTINGS
@given(st.integers(1, 8), st.integers(0, 16))
def test_faa_equals_series(n, k):
    assert sinc_pow_derivs_faa(n, k) == sinc_pow_derivs_series(n, k)


@SETTINGS
@given(st.integers(0, 10), st.integers(0, 10))
def test_phi_derivs_head_and_conjugation(n, k):
    t = phi_derivs(n, k)
    assert t[0] == GaussRational(1)
    # f(-t) = conj f(t) for real t, so f_j = (-1)^j conj(f_j)
    for j, v in enumerate(t.values):
        assert v == GaussRational(v.re, -v.im) * (-1) ** j


@SETTINGS
@given(st.integers(1, 7), st.fractions(-4, 4))
def test_bspline_partition_of_unity(n, t):
    b = bspline_build(n)
    lo, hi = b.support
    ks = range(int(np.floor(t - hi)) - 1, int(np.ceil(t - lo)) + 2)
    assert sum(b.exact(t - k) for k in ks) == 1


@SETTINGS
@given(st.integers(1, 8), st.fractions(-5, 5))
def test_bspline_even_and_nonnegative(n, t):
    b = bspline_build(n)
    assert b.exact(t) == b.exact(-t)
    assert b.exact(t) >= 0


# ---------------------------------------------------------------------------
# transforms and distributions


@SETTINGS
@given(st.sampled_from([4, 8, 16]), st.sampled_from([4, 8, 16]), st.data())
def test_symplectic_involution(n1, n2, data):
    vals = data.draw(arrays(np.complex128, (n1, n2), elements=st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)))
    g = Grid2D(vals, Axis(data.draw(st.floats(-3, 3)), 0.25), centered_axis(n2, 0.5))
    back = symplectic_ft(symplectic_ft(g), starts=(g.axis1.start, g.axis2.start))
    scale = max(1.0, float(np.max(np.abs(vals))))
    assert np.max(np.abs(back.values - vals)) <= 1e-12 * scale


@SETTINGS
@given(signals())
def test_wigner_is_real(sig):
    w = wigner(sig).values
    assert np.max(np.abs(w.imag)) <= 1e-12 * max(1.0, np.max(np.abs(w.real)))


@SETTINGS
@given(signals())
def test_ambiguity_is_transform_of_wigner(sig):
    a = ambiguity(sig).values
    b = symplectic_ft(wigner(sig).grid).values
    assert np.max(np.abs(a - b)) <= 1e-10 * max(1.0, np.max(np.abs(a)))


@SETTINGS
@given(signal_pairs(), st.integers(0, 4))
def test_cross_swap_is_conjugate(pair, n):
    f, g = pair
    a = cross_bjd(f, g, n).values
    b = cross_bjd(g, f, n).values
    assert np.max(np.abs(b - np.conj(a))) <= 1e-10 * max(1.0, np.max(np.abs(a)))


@SETTINGS
@given(signal_pairs())
def test_cross_wigner_sesquilinear(pair):
    f, g = pair
    c = 0.7 - 1.3j
    lhs = cross_wigner(f.with_samples(c * f.samples), g).values
    assert np.max(np.abs(lhs - c * cross_wigner(f, g).values)) <= 1e-10 * max(1.0, np.max(np.abs(lhs)))


@SETTINGS
@given(signals(), st.integers(1, 6))
def test_marginals_and_energy_do_not_depend_on_order(sig, n):
    t0, f0 = marginals(bjd(sig, 0))
    tn, fn = marginals(bjd(sig, n))
    scale = max(1.0, np.max(np.abs(t0)), np.max(np.abs(f0)))
    assert np.max(np.abs(tn - t0)) <= 1e-10 * scale
    assert np.max(np.abs(fn - f0)) <= 1e-10 * scale


@SETTINGS
@given(signals(), st.integers(0, 5))
def test_order_n_is_real(sig, n):
    q = bjd(sig, n).values
    assert np.max(np.abs(q.imag)) <= 1e-10 * max(1.0, np.max(np.abs(q.real)))


@SETTINGS
@given(signals(), st.integers(1, 5))
def test_order_n_contracts_the_norm(sig, n):
    # |Theta^n| <= 1 on the ambiguity plane and the transform is unitary
    w = bjd(sig, 0).grid.norm2()
    assert bjd(sig, n).grid.norm2() <= w * (1 + 1e-10) + 1e-300
    if not_zero(sig):
        assert moyal_defect(sig, sig, n) >= 0


@SETTINGS
@given(signals())
def test_full_box_energy_equals_norm(sig):
    d = wigner(sig)
    t, w = d.times, d.freqs
    assert np.isclose(cross_term_energy(d, Box(t[0], t[-1], w[0], w[-1])), d.grid.norm2(), rtol=1e-12, atol=1e-300)


# ---------------------------------------------------------------------------
# quantization


@SETTINGS
@given(st.integers(0, 6), st.integers(0, 6))
def test_weyl_and_bj_closed_forms(m, l):
    for j, c in enumerate(monomial_coeffs(m, l, 0).coeffs):
        assert c == GaussRational(0, Fraction(1, 4)) ** j * (comb(m, j) * comb(l, j) * factorial(j))
    for j, c in enumerate(monomial_coeffs(m, l, 1).coeffs):
        assert c == GaussRational(0, Fraction(1, 2)) ** j * (comb(m, j) * comb(l, j) * Fraction(factorial(j), j + 1))


@SETTINGS
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 6))
def test_leading_coefficient(m, l, n):
    t = monomial_coeffs(m, l, n)
    assert t.coeffs[0] == GaussRational(1) and len(t.coeffs) == min(m, l) + 1


@SETTINGS
@given(arrays(np.float64, (32, 16), elements=st.floats(-5, 5)), st.integers(0, 5))
def test_real_symbols_quantize_to_hermitian(vals, n):
    base = sample_symbol(lambda x, w: 0 * x * w, 16, 0.5).grid
    a = SymbolGrid(base.with_values(vals))
    op = bj_quantize(a, n)
    assert op.is_hermitian(1e-10)
    assert op.frobenius() <= bj_quantize(a, 0).frobenius() * (1 + 1e-10) + 1e-300
