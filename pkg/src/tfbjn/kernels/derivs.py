"""Exact derivative tables of powers of the unnormalized sinc at 0.

``d_k = (d/dt)^k sinc_u(t)^n |_{t=0}`` is computed two independent ways:
Faa di Bruno over multi-indices (:func:`sinc_pow_derivs_faa`) and by
multiplying truncated power series (:func:`sinc_pow_derivs_series`).
:func:`phi_derivs` turns them into the derivatives of
``f(t) = exp(i t / 2) sinc_u(t / 2)^n`` used by the ordering coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from ..errors import InvalidArgument


@dataclass(frozen=True)
class GaussRational:
    """Complex number with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x))

    def __add__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = GaussRational(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = GaussRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def to_json(self) -> dict:
        return {
            "re_num": str(self.re.numerator),
            "re_den": str(self.re.denominator),
            "im_num": str(self.im.numerator),
            "im_den": str(self.im.denominator),
        }

    @classmethod
    def from_json(cls, row: dict):
        return cls(
            Fraction(int(row["re_num"]), int(row["re_den"])),
            Fraction(int(row["im_num"]), int(row["im_den"])),
        )


I = GaussRational(0, 1)


def _check(n, k_max, n_min):
    if int(n) != n or n < n_min:
        raise InvalidArgument(f"order must be an integer >= {n_min}, got {n!r}")
    if int(k_max) != k_max or k_max < 0:
        raise InvalidArgument(f"k_max must be a non-negative integer, got {k_max!r}")


def sinc_u_derivative_at_zero(j: int) -> Fraction:
    """``sinc_u^{(j)}(0)``: 0 for odd j, ``(-1)^m / (2m + 1)`` for j = 2m."""
    if j % 2:
        return Fraction(0)
    m = j // 2
    return Fraction((-1) ** m, 2 * m + 1)


def multi_indices(k: int, max_size: int | None = None):
    """All alpha in N^k with sum_j j * alpha_j = k, lexicographic order.

    ``max_size`` prunes to ``|alpha| <= max_size``.
    """
    if k == 0:
        yield ()
        return

    def rec(j, remaining, size, prefix):
        # choose alpha_j for part size j = 1..k
        if j > k:
            if remaining == 0:
                yield tuple(prefix)
            return
        for a in range(remaining // j + 1):
            if max_size is not None and size + a > max_size:
                break
            prefix.append(a)
            yield from rec(j + 1, remaining - a * j, size + a, prefix)
            prefix.pop()

    yield from rec(1, k, 0, [])


def sinc_pow_derivs_faa(n: int, k_max: int) -> list[Fraction]:
    """Derivatives of ``sinc_u^n`` at 0 by Faa di Bruno's formula.

    With ``g(x) = x^n`` and ``h = sinc_u`` (``h(0) = 1``)::

        d_k = sum_{sum j a_j = k, |a| <= n} k!/prod(a_j!) * n!/(n-|a|)!
                                             * prod_j (h^(j)(0) / j!)^a_j
    """
    _check(n, k_max, 1)
    out = []
    for k in range(k_max + 1):
        total = Fraction(0)
        for alpha in multi_indices(k, max_size=n):
            size = sum(alpha)
            coeff = Fraction(factorial(k))
            prod = Fraction(1)
            for j, a in enumerate(alpha, start=1):
                if a == 0:
                    continue
                coeff /= factorial(a)
                prod *= (sinc_u_derivative_at_zero(j) / factorial(j)) ** a
                if prod == 0:
                    break
            if prod == 0:
                continue
            total += coeff * comb(n, size) * factorial(size) * prod
        out.append(total)
    return out


def _series_mul(p, q, order):
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j in range(min(len(q), order + 1 - i)):
            out[i + j] += a * q[j]
    return out


def sinc_u_series(order: int) -> list[Fraction]:
    """Taylor coefficients of sin(t)/t up to t^order."""
    return [
        Fraction((-1) ** (i // 2), factorial(i + 1)) if i % 2 == 0 else Fraction(0)
        for i in range(order + 1)
    ]


def sinc_pow_derivs_series(n: int, k_max: int) -> list[Fraction]:
    """Same table as :func:`sinc_pow_derivs_faa`, from the power series of sinc_u^n."""
    _check(n, k_max, 1)
    base = sinc_u_series(k_max)
    acc = [Fraction(1)] + [Fraction(0)] * k_max
    for _ in range(n):
        acc = _series_mul(acc, base, k_max)
    return [c * factorial(k) for k, c in enumerate(acc)]


@dataclass(frozen=True)
class SincDerivTable:
    order: int
    values: tuple  # GaussRational f_j, j = 0..k_max

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def to_json(self) -> str:
        rows = [{"j": j, **v.to_json()} for j, v in enumerate(self.values)]
        return json.dumps({"n": self.order, "values": rows}, indent=1)


def phi_derivs(n: int, k_max: int) -> SincDerivTable:
    """``f^(j)(0)`` for ``f(t) = exp(i t/2) sinc_u(t/2)^n`` by Leibniz's rule.

    ``f^(j)(0) = sum_k C(j,k) (i/2)^(j-k) (1/2)^k d_k`` where ``d_k`` are the
    derivatives of ``sinc_u^n`` at 0 (the ``(1/2)^k`` is the inner scaling).
    """
    _check(n, k_max, 0)
    d = [Fraction(1)] + [Fraction(0)] * k_max if n == 0 else sinc_pow_derivs_faa(n, k_max)
    half_i = GaussRational(0, Fraction(1, 2))
    values = []
    for j in range(k_max + 1):
        total = GaussRational()
        for k in range(j + 1):
            if d[k] == 0:
                continue
            total = total + half_i ** (j - k) * (comb(j, k) * d[k] / 2**k)
        values.append(total)
    return SincDerivTable(n, tuple(values))


def phi_derivs_series(n: int, k_max: int) -> tuple:
    """Independent route for :func:`phi_derivs`: Cauchy product of the series
    of ``exp(i t/2)`` and ``sinc_u(t/2)^n``, read off times ``j!``."""
    _check(n, k_max, 0)
    half_i = GaussRational(0, Fraction(1, 2))
    expo = [half_i ** i * Fraction(1, factorial(i)) for i in range(k_max + 1)]
    base = [c / 2**i for i, c in enumerate(sinc_u_series(k_max))]
    power = [Fraction(1)] + [Fraction(0)] * k_max
    for _ in range(n):
        power = _series_mul(power, base, k_max)
    out = []
    for j in range(k_max + 1):
        total = GaussRational()
        for i in range(j + 1):
            total = total + expo[i] * power[j - i]
        out.append(total * factorial(j))
    return tuple(out)


def derivs_to_json(n: int, values) -> str:
    """Real rational table as JSON with numerator/denominator strings."""
    rows = [
        {"k": k, "num": str(Fraction(v).numerator), "den": str(Fraction(v).denominator)}
        for k, v in enumerate(values)
    ]
    return json.dumps({"n": n, "values": rows}, indent=1)
