"""Discrete signals, synthetic generators and CSV I/O."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import FormatError, InvalidArgument


def is_power_of_two(n: int) -> bool:
    return n >= 2 and (n & (n - 1)) == 0


def centered_t0(n_samples: int, sample_rate: float) -> float:
    """Start time that puts t = 0 on sample ``n_samples // 2``."""
    return -(n_samples // 2) / sample_rate


@dataclass(frozen=True)
class Signal:
    """Complex samples on the grid ``t_k = t0 + k / sample_rate``.

    ``t0`` defaults to the centered grid.  The sample array is copied and
    made read-only.
    """

    samples: np.ndarray
    sample_rate: float
    t0: float | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.complex128)
        if samples.ndim != 1:
            raise InvalidArgument("samples must be one-dimensional")
        if not is_power_of_two(samples.size):
            raise InvalidArgument(f"length must be a power of two >= 2, got {samples.size}")
        rate = float(self.sample_rate)
        if not rate > 0 or not np.isfinite(rate):
            raise InvalidArgument(f"sample_rate must be positive, got {self.sample_rate!r}")
        samples.flags.writeable = False
        t0 = centered_t0(samples.size, rate) if self.t0 is None else float(self.t0)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", rate)
        object.__setattr__(self, "t0", t0)

    def __len__(self):
        return self.samples.size

    @property
    def dt(self) -> float:
        return 1.0 / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(len(self)) * self.dt

    def norm2(self) -> float:
        """Squared l2 norm with the Riemann weight ``dt``."""
        return float(np.sum(np.abs(self.samples) ** 2) * self.dt)

    def inner(self, other: Signal) -> complex:
        """Weighted inner product, antilinear in ``other``."""
        check_same_grid([self, other])
        return complex(np.sum(self.samples * np.conj(other.samples)) * self.dt)

    def same_grid(self, other: Signal) -> bool:
        return (
            len(self) == len(other)
            and self.sample_rate == other.sample_rate
            and self.t0 == other.t0
        )

    def with_samples(self, samples, label=None) -> Signal:
        return Signal(samples, self.sample_rate, self.t0, self.label if label is None else label)


def check_same_grid(signals) -> None:
    first = signals[0]
    for s in signals[1:]:
        if not first.same_grid(s):
            raise InvalidArgument(
                "signals live on different grids: "
                f"(n={len(first)}, fs={first.sample_rate}, t0={first.t0}) vs "
                f"(n={len(s)}, fs={s.sample_rate}, t0={s.t0})"
            )


@dataclass(frozen=True)
class GaussAtom:
    """Modulated Gaussian ``amplitude * exp(-pi ((t - tc) / spread)^2)``."""

    t_center: float = 0.0
    f_center: float = 0.0
    spread: float = 1.0
    amplitude: complex = 1.0

    def __post_init__(self):
        if not self.spread > 0:
            raise InvalidArgument(f"spread must be positive, got {self.spread!r}")


def _check_length(n_samples):
    if not is_power_of_two(int(n_samples)):
        raise InvalidArgument(f"n_samples must be a power of two >= 2, got {n_samples}")


def gen_gaussian(atom: GaussAtom, n_samples: int, sample_rate: float, t0=None) -> Signal:
    _check_length(n_samples)
    if t0 is None:
        t0 = centered_t0(n_samples, sample_rate)
    t = t0 + np.arange(n_samples) / sample_rate - atom.t_center
    samples = (
        atom.amplitude
        * np.exp(-np.pi * (t / atom.spread) ** 2)
        * np.exp(2j * np.pi * atom.f_center * t)
    )
    return Signal(samples, sample_rate, t0, label="gauss")


def gen_linear_chirp(
    f_start: float, f_end: float, n_samples: int, sample_rate: float, t0=None
) -> Signal:
    """Unit-modulus chirp sweeping linearly from ``f_start`` to ``f_end``.

    Time in the phase law is measured from the first sample, so the
    instantaneous frequency is ``f_start`` at the start of the record and
    reaches ``f_end`` one record length later.
    """
    _check_length(n_samples)
    nyquist = sample_rate / 2
    if abs(f_start) >= nyquist or abs(f_end) >= nyquist:
        raise InvalidArgument(
            f"chirp frequencies must satisfy |f| < {nyquist} (Nyquist), "
            f"got {f_start}, {f_end}"
        )
    if t0 is None:
        t0 = centered_t0(n_samples, sample_rate)
    duration = n_samples / sample_rate
    tau = np.arange(n_samples) / sample_rate
    rate = (f_end - f_start) / (2 * duration)
    samples = np.exp(2j * np.pi * (f_start * tau + rate * tau**2))
    return Signal(samples, sample_rate, t0, label="chirp")


def superpose(signals) -> Signal:
    signals = list(signals)
    if not signals:
        raise InvalidArgument("superpose needs at least one signal")
    check_same_grid(signals)
    total = signals[0].samples.copy()
    for s in signals[1:]:
        total = total + s.samples
    first = signals[0]
    return Signal(total, first.sample_rate, first.t0, label="+".join(s.label for s in signals))


def analytic(signal: Signal) -> Signal:
    """One-sided-spectrum version of the real part of ``signal``."""
    from scipy.signal import hilbert

    return signal.with_samples(hilbert(signal.samples.real))


# ---------------------------------------------------------------------------
# CSV

_HEADER = re.compile(r"^#\s*sample_rate=(\S+)\s+t0=(\S+)\s*$")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def save_signal_csv(signal: Signal, path) -> None:
    lines = [f"# sample_rate={_fmt(signal.sample_rate)} t0={_fmt(signal.t0)}"]
    for k, z in enumerate(signal.samples):
        lines.append(f"{k},{_fmt(z.real)},{_fmt(z.imag)}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_signal_csv(path) -> Signal:
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", line=1)
    m = _HEADER.match(lines[0])
    if m is None:
        raise FormatError("expected header '# sample_rate=<float> t0=<float>'", line=1)
    try:
        sample_rate, t0 = float(m.group(1)), float(m.group(2))
    except ValueError as exc:
        raise FormatError(f"bad header value ({exc})", line=1) from None
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise FormatError(f"expected 'k,re,im', got {line!r}", line=lineno)
        try:
            k = int(parts[0])
            re_, im_ = float(parts[1]), float(parts[2])
        except ValueError:
            raise FormatError(f"cannot parse row {line!r}", line=lineno) from None
        if k != len(values):
            raise FormatError(f"row index {k} out of sequence (expected {len(values)})", line=lineno)
        values.append(complex(re_, im_))
    if not is_power_of_two(len(values)):
        raise InvalidArgument(f"row count must be a power of two >= 2, got {len(values)}")
    return Signal(np.array(values), sample_rate, t0, label=Path(path).stem)
