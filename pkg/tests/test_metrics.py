import json

import numpy as np
import pytest

from _corpus import TWO_ATOMS, preset_signal
from tfbjn.cohen import bjd, cross_bjd
from tfbjn.errors import InsufficientDataError, InvalidArgument, UndefinedRatioError
from tfbjn.metrics import (
    Box,
    concentration,
    cross_term_energy,
    directional_decay,
    marginals,
    midpoint_box,
    moyal_defect,
    reference_marginals,
    rel_l1,
    report_json,
    report_rows,
)
from tfbjn.signal import GaussAtom, Signal, gen_gaussian
from tfbjn.spectral import Axis, Grid2D
from tfbjn.wigner import TFDist, cross_wigner, wigner

# 1 - int sinc^2(z1 z2) exp(-pi |z|^2) dz, by scipy dblquad with a polar cross-check
MOYAL_N1_UNIT_GAUSSIAN = 0.06567995070710408


def unit_gauss(n=512, fs=32.0):
    return gen_gaussian(GaussAtom(), n, fs)


# ---------------------------------------------------------------------------
# marginals


def test_gaussian_time_marginal_n1():
    f = unit_gauss()
    t_marg, f_marg = marginals(bjd(f, 1))
    p_t, p_f = reference_marginals(f)
    assert rel_l1(t_marg, p_t) < 1e-3
    assert rel_l1(f_marg, p_f) < 1e-3


def test_zero_signal_marginals():
    t_marg, f_marg = marginals(bjd(Signal(np.zeros(64), 8.0), 2))
    assert np.all(t_marg == 0) and np.all(f_marg == 0)


def test_pure_tone_frequency_marginal():
    # stated threshold; zero extension spreads the marginal to 0.905 in +-2 bins
    n, fs, f0 = 256, 16.0, 2.0
    t = Signal(np.zeros(n), fs).times
    W = wigner(Signal(np.exp(2j * np.pi * f0 * t), fs))
    _, marg = marginals(W)
    m0 = int(np.argmin(np.abs(W.freqs - f0)))
    assert marg[m0 - 2 : m0 + 3].sum() / marg.sum() >= 0.99


def test_marginals_reject_cross_kind(corpus):
    d = cross_wigner(corpus["gauss"], corpus["chirp"])
    with pytest.raises(InvalidArgument):
        marginals(d)


def test_marginals_do_not_depend_on_order(corpus):
    for sig in corpus.values():
        t0, f0 = marginals(bjd(sig, 0))
        scale_t, scale_f = np.abs(t0).max(), np.abs(f0).max()
        for n in (1, 2, 5):
            tn, fn = marginals(bjd(sig, n))
            assert np.max(np.abs(tn - t0)) <= 1e-10 * scale_t
            assert np.max(np.abs(fn - f0)) <= 1e-10 * scale_f


def test_total_energy_does_not_depend_on_order(corpus):
    for sig in corpus.values():
        e0 = bjd(sig, 0).values.real.sum() * bjd(sig, 0).grid.cell
        for n in (1, 3, 100):
            d = bjd(sig, n)
            assert d.values.real.sum() * d.grid.cell == pytest.approx(e0, rel=1e-10)


def test_rel_l1_edge_cases():
    assert rel_l1([0, 0], [0, 0]) == 0.0
    assert rel_l1([1, 0], [0, 0]) == float("inf")
    assert rel_l1([1, 1], [1, 2]) == pytest.approx(1 / 3)


# ---------------------------------------------------------------------------
# Moyal defect


def test_moyal_order_zero_gaussian_pair(corpus):
    assert moyal_defect(corpus["gauss"], corpus["gauss-shifted"], 0) < 1e-6


def test_moyal_order_zero_corpus(corpus):
    names = list(corpus)
    for a in names:
        for b in names:
            if corpus[a].sample_rate != corpus[b].sample_rate:
                continue
            assert moyal_defect(corpus[a], corpus[b], 0) < 1e-6, (a, b)


def test_moyal_order_one_unit_gaussian():
    d = moyal_defect(unit_gauss(), unit_gauss(), 1)
    assert d > 0.01
    assert abs(d - MOYAL_N1_UNIT_GAUSSIAN) < 1e-10


def test_moyal_grows_with_order(corpus):
    for sig in corpus.values():
        d1 = moyal_defect(sig, sig, 1)
        assert d1 > 0
        assert moyal_defect(sig, sig, 100) > d1


def test_moyal_zero_signal_raises():
    z = Signal(np.zeros(64), 8.0)
    with pytest.raises(UndefinedRatioError):
        moyal_defect(z, unit_gauss(64, 8.0), 1)


# ---------------------------------------------------------------------------
# cross-term energy


def full_box(d):
    t, w = d.times, d.freqs
    return Box(t[0], t[-1], w[0], w[-1])


def test_full_box_energy_is_squared_norm(corpus):
    for sig in corpus.values():
        d = wigner(sig)
        assert cross_term_energy(d, full_box(d)) == pytest.approx(sig.norm2() ** 2, rel=1e-6)


def test_zero_signal_box_energy():
    d = wigner(Signal(np.zeros(64), 8.0))
    assert cross_term_energy(d, full_box(d)) == 0.0


def test_two_atom_box_energy_non_increasing():
    sig = preset_signal("two-gaussians")
    box = midpoint_box(*TWO_ATOMS)
    e = [cross_term_energy(bjd(sig, n), box) for n in range(5)]
    assert e[1] < e[0]
    assert all(b <= a for a, b in zip(e, e[1:]))


def test_midpoint_box_geometry():
    box = midpoint_box(GaussAtom(-3, -1, 1), GaussAtom(3, 1, 1))
    assert (box.t_lo, box.t_hi, box.f_lo, box.f_hi) == (-2, 2, -2, 2)


def test_box_validation():
    d = wigner(unit_gauss(64, 8.0))
    with pytest.raises(InvalidArgument):
        Box(1, 0, 0, 1)
    with pytest.raises(InvalidArgument):
        cross_term_energy(d, Box(-100, 0, 0, 1))
    with pytest.raises(InvalidArgument):
        cross_term_energy(d, Box(0.01, 0.02, 0.001, 0.002))


# ---------------------------------------------------------------------------
# directional decay


def test_diagonal_decay_steepens_with_order():
    sig = preset_signal("two-gaussians")
    rates = [directional_decay(bjd(sig, n), (1, 1)) for n in (0, 1, 2)]
    assert rates[0] > rates[1] > rates[2]


def test_axis_decay_unchanged_by_order():
    sig = preset_signal("two-gaussians")
    r0 = directional_decay(bjd(sig, 0), (1, 0))
    r1 = directional_decay(bjd(sig, 1), (1, 0))
    assert abs(r1 - r0) <= 0.5


def test_gaussian_decay_is_steep():
    # unit spread only: other spreads reach the noise floor within two annuli on some axes
    for sig in (gen_gaussian(GaussAtom(), 512, 16.0), unit_gauss(), gen_gaussian(GaussAtom(1, 0.5), 512, 32.0)):
        d = wigner(sig)
        for direction in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1)):
            assert directional_decay(d, direction) < -6


def test_decay_errors():
    d = wigner(unit_gauss(64, 8.0))
    with pytest.raises(InvalidArgument):
        directional_decay(d, (0, 0))
    with pytest.raises(InvalidArgument):
        directional_decay(d, (1, 1), cone_halfangle=0)
    with pytest.raises(InsufficientDataError):
        directional_decay(d, (1, 1), noise_floor=1.0)
    with pytest.raises(InsufficientDataError):
        directional_decay(wigner(Signal(np.zeros(64), 8.0)), (1, 1))


# ---------------------------------------------------------------------------
# concentration


def _dist(values):
    return TFDist(Grid2D(values, Axis(0, 1), Axis(0, 1)), "wigner")


def test_concentration_extremes():
    spike = np.zeros((16, 16))
    spike[3, 5] = 2.0
    assert concentration(_dist(spike)) == pytest.approx(1 / 256, rel=1e-15)
    assert concentration(_dist(np.full((16, 16), -0.5))) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(UndefinedRatioError):
        concentration(_dist(np.zeros((4, 4))))


def test_bat_surrogate_loses_concentration():
    sig = preset_signal("bat-surrogate")
    assert concentration(bjd(sig, 100)) > concentration(bjd(sig, 2))


# ---------------------------------------------------------------------------
# reports


def test_report_ordering_and_json():
    rows = [
        {"signal_id": "a", "n": 2, "metric": "moyal_defect", "value": 0.1},
        {"signal_id": "a", "n": 0, "metric": "total_energy", "value": 1.0},
        {"signal_id": "a", "n": 0, "metric": "concentration", "value": 0.3},
    ]
    ordered = report_rows(rows)
    assert [(r["n"], r["metric"]) for r in ordered] == [(0, "concentration"), (0, "total_energy"), (2, "moyal_defect")]
    back = json.loads(report_json(rows))
    assert back == ordered
    assert report_json(rows) == report_json(list(reversed(rows)))


def test_cross_distribution_moyal_is_symmetric(corpus):
    f, g = corpus["gauss"], corpus["pair"]
    assert moyal_defect(f, g, 1) == pytest.approx(moyal_defect(g, f, 1), rel=1e-10)
    q = cross_bjd(f, g, 1)
    assert q.kind == "cross-bjd"
