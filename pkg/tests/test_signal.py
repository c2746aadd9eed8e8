import numpy as np
import pytest

from tfbjn.errors import FormatError, InvalidArgument
from tfbjn.signal import (
    GaussAtom,
    Signal,
    analytic,
    centered_t0,
    gen_gaussian,
    gen_linear_chirp,
    load_signal_csv,
    save_signal_csv,
    superpose,
)


def test_signal_validation():
    with pytest.raises(InvalidArgument):
        Signal(np.ones(3), 1.0)
    with pytest.raises(InvalidArgument):
        Signal(np.ones(1), 1.0)
    with pytest.raises(InvalidArgument):
        Signal(np.ones(4), 0.0)
    with pytest.raises(InvalidArgument):
        Signal(np.ones((2, 2)), 1.0)
    s = Signal(np.arange(4), 2.0)
    assert s.t0 == centered_t0(4, 2.0) == -1.0
    assert not s.samples.flags.writeable
    assert s.samples.dtype == np.complex128


def test_gaussian_centered_peak():
    s = gen_gaussian(GaussAtom(), 256, 16.0)
    v = s.samples
    assert np.all(v.imag == 0) and np.all(v.real > 0)
    assert v[128] == 1.0
    # even about t = 0: v[128 + k] == v[128 - k]
    assert np.array_equal(v[129:], v[127:0:-1])


def test_gaussian_zero_amplitude():
    s = gen_gaussian(GaussAtom(amplitude=0), 64, 8.0)
    assert not np.any(s.samples)


def test_gaussian_dft_peak_at_modulation():
    f0 = 3.0
    s = gen_gaussian(GaussAtom(f_center=f0), 256, 16.0)
    k = np.arange(256)
    freqs = np.arange(256) * 16.0 / 256
    freqs[freqs >= 8] -= 16
    dft = np.array([np.sum(s.samples * np.exp(-2j * np.pi * m * k / 256)) for m in range(256)])
    assert abs(freqs[np.argmax(np.abs(dft))] - f0) <= 16.0 / 256 / 2


def test_gaussian_bad_length():
    with pytest.raises(InvalidArgument):
        gen_gaussian(GaussAtom(), 100, 8.0)
    with pytest.raises(InvalidArgument):
        GaussAtom(spread=0)


def test_gaussian_energy_matches_continuum():
    s = gen_gaussian(GaussAtom(spread=1.0, amplitude=2.0), 1024, 64.0)
    exact = 4.0 * 1.0 / np.sqrt(2)
    assert abs(s.norm2() - exact) / exact < 1e-4


def test_chirp_constant_and_tone():
    c = gen_linear_chirp(0, 0, 64, 8.0)
    assert np.array_equal(c.samples, np.ones(64))
    f0 = 2.0
    tone = gen_linear_chirp(f0, f0, 256, 16.0)
    spec = np.abs(np.fft.fftshift(np.fft.fft(tone.samples)))
    freqs = (np.arange(256) - 128) * 16.0 / 256
    assert freqs[np.argmax(spec)] == f0
    assert np.sum(spec[np.abs(freqs - f0) < 0.1] ** 2) / np.sum(spec**2) > 0.99


def test_chirp_instantaneous_frequency_linear():
    fs, n = 32.0, 512
    c = gen_linear_chirp(0.0, fs / 4, n, fs)
    dt = 1 / fs
    # central phase difference is exact for a quadratic phase
    dphi = np.angle(c.samples[2:] * np.conj(c.samples[:-2]))
    inst = dphi / (2 * np.pi * 2 * dt)
    tau = np.arange(1, n - 1) * dt
    law = 0.0 + (fs / 4) * tau / (n * dt)
    assert np.max(np.abs(inst - law)) < 1e-9


def test_chirp_nyquist_guard():
    with pytest.raises(InvalidArgument):
        gen_linear_chirp(0, 8.0, 64, 16.0)
    with pytest.raises(InvalidArgument):
        gen_linear_chirp(-9.0, 0, 64, 16.0)


def test_superpose_examples():
    f = gen_gaussian(GaussAtom(1, 1), 128, 16.0)
    assert np.array_equal(superpose([f]).samples, f.samples)
    assert not np.any(superpose([f, f.with_samples(-f.samples)]).samples)
    a = gen_gaussian(GaussAtom(-8), 1024, 32.0)
    b = gen_gaussian(GaussAtom(8), 1024, 32.0)
    s = superpose([a, b])
    assert abs(s.norm2() - (a.norm2() + b.norm2())) / s.norm2() < 1e-6


def test_superpose_grid_mismatch():
    a = gen_gaussian(GaussAtom(), 64, 8.0)
    b = gen_gaussian(GaussAtom(), 64, 16.0)
    with pytest.raises(InvalidArgument):
        superpose([a, b])
    with pytest.raises(InvalidArgument):
        superpose([])


def test_superpose_commutative_associative(rng):
    sigs = [Signal(rng.standard_normal(64) + 1j * rng.standard_normal(64), 4.0) for _ in range(3)]
    a, b, c = sigs
    assert np.array_equal(superpose([a, b]).samples, superpose([b, a]).samples)
    left = superpose([superpose([a, b]), c]).samples
    right = superpose([a, superpose([b, c])]).samples
    assert np.max(np.abs(left - right)) <= 1e-15 * np.max(np.abs(left)) * 4


def test_csv_round_trip_bit_exact(tmp_path):
    c = gen_linear_chirp(-3.3, 2.7, 256, 16.0)
    c = c.with_samples(c.samples * np.pi)
    p = tmp_path / "c.csv"
    save_signal_csv(c, p)
    back = load_signal_csv(p)
    assert np.array_equal(back.samples, c.samples)
    assert back.sample_rate == c.sample_rate and back.t0 == c.t0


def test_csv_bad_row_count(tmp_path):
    p = tmp_path / "x.csv"
    rows = ["# sample_rate=8 t0=0"] + [f"{k},1,0" for k in range(255)]
    p.write_text("\n".join(rows) + "\n")
    with pytest.raises(InvalidArgument):
        load_signal_csv(p)


def test_csv_malformed_row_names_line(tmp_path):
    p = tmp_path / "x.csv"
    p.write_text("# sample_rate=8 t0=0\n0,1,0\na,b\n")
    with pytest.raises(FormatError) as info:
        load_signal_csv(p)
    assert info.value.line == 3
    assert "a,b" in str(info.value)
    p.write_text("sample_rate=8\n0,1,0\n")
    with pytest.raises(FormatError):
        load_signal_csv(p)


def test_analytic_one_sided():
    n, fs = 256, 16.0
    t = gen_gaussian(GaussAtom(), n, fs).times
    real = Signal(np.cos(2 * np.pi * 2.0 * t) * np.exp(-np.pi * (t / 3) ** 2), fs)
    a = analytic(real)
    spec = np.fft.fft(a.samples)
    freqs = np.fft.fftfreq(n, 1 / fs)
    assert np.sum(np.abs(spec[freqs < 0]) ** 2) < 1e-20 * np.sum(np.abs(spec) ** 2) + 1e-12
    assert np.allclose(a.samples.real, real.samples.real)
