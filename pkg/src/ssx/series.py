"""Truncated power series over exact rationals or floats.

A series is an immutable tuple of coefficients ``c[n]`` of ``x**n`` for
``n = 0..order``.  Exact series hold :class:`fractions.Fraction` entries;
as soon as one float enters an operation the result is a float series.
Binary operations truncate to the shorter order; nothing is padded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Sequence

from .errors import NonUnitConstant, ParseError, ZeroLeadingCoefficient

__all__ = [
    "PowerSeries",
    "Prefactor",
    "ReducedExpansion",
    "AsymptoticForm",
    "as_scalar",
    "parse_scalar",
    "is_exact",
    "normalize",
    "series_log",
    "series_exp",
    "series_pow",
    "series_xdlog",
    "change_variable_power",
    "from_puiseux",
    "reduced_from_literal",
    "reduced_to_literal",
]


def as_scalar(value):
    """Coerce ``value`` to a Fraction (ints, rationals) or a float."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, Number):
        if isinstance(value, complex):
            raise TypeError("complex coefficients are not supported")
        return float(value)
    raise TypeError(f"not a scalar: {value!r}")


def parse_scalar(value):
    """Parse a literal scalar: int, float, or a string such as ``"-5/32768"``.

    Strings are read exactly (``"0.6"`` becomes ``Fraction(3, 5)``).

    Raises:
        ParseError: on malformed strings or a zero denominator.
    """
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed scalar {value!r}: {exc}") from None
    try:
        return as_scalar(value)
    except TypeError as exc:
        raise ParseError(str(exc)) from None


def is_exact(value) -> bool:
    return isinstance(value, Fraction)


def _unify(values: Iterable) -> tuple:
    vals = [as_scalar(v) for v in values]
    if all(isinstance(v, Fraction) for v in vals):
        return tuple(vals)
    return tuple(float(v) for v in vals)


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients ``coeffs[n]`` of ``x**n``, truncated at ``order``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        vals = _unify(coeffs)
        if not vals:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "coeffs", vals)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def scalar_kind(self) -> str:
        return "exact" if isinstance(self.coeffs[0], Fraction) else "float"

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, k: int) -> "PowerSeries":
        if k < 0:
            raise ValueError("order must be non-negative")
        if k > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {k}")
        return PowerSeries(self.coeffs[: k + 1])

    def padded(self, k: int) -> "PowerSeries":
        """Explicitly pad with zeros up to order ``k``."""
        zero = Fraction(0) if self.scalar_kind == "exact" else 0.0
        extra = max(0, k - self.order)
        return PowerSeries(self.coeffs + (zero,) * extra)

    def to_float(self) -> "PowerSeries":
        return PowerSeries(float(c) for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other] + [0] * self.order)
        k = min(self.order, other.order)
        return PowerSeries(self.coeffs[n] + other.coeffs[n] for n in range(k + 1))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = as_scalar(other)
            return PowerSeries(c * a for a in self.coeffs)
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return PowerSeries(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(k + 1))

    __rmul__ = __mul__

    def shift(self, p: int) -> "PowerSeries":
        """Multiply by ``x**p``; the order grows by ``p``."""
        zero = self.coeffs[0] * 0
        return PowerSeries((zero,) * p + self.coeffs)

    def __call__(self, x):
        """Evaluate the partial sum at ``x`` (Horner)."""
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __repr__(self):
        return f"PowerSeries({[str(c) if isinstance(c, Fraction) else c for c in self.coeffs]})"


@dataclass(frozen=True)
class Prefactor:
    """Known leading factor with large-variable form ``amplitude * x**exponent``."""

    amplitude: object
    exponent: object = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "amplitude", as_scalar(self.amplitude))
        object.__setattr__(self, "exponent", as_scalar(self.exponent))
        if self.amplitude == 0:
            raise ValueError("prefactor amplitude must be nonzero")

    def __call__(self, x):
        if self.exponent == 0:
            return float(self.amplitude)
        return float(self.amplitude) * float(x) ** float(self.exponent)


@dataclass(frozen=True)
class ReducedExpansion:
    """``f_k(x) = prefactor(x) * series(x)`` with ``series[0] == 1``."""

    prefactor: Prefactor
    series: PowerSeries

    def __post_init__(self):
        if self.series[0] != 1:
            raise NonUnitConstant(f"reduced series must start with 1, got {self.series[0]}")

    @property
    def order(self) -> int:
        return self.series.order

    def gamma(self, beta):
        """Exponent carried by the reduced part, ``beta - alpha``."""
        return as_scalar(beta) - self.prefactor.exponent

    def truncate(self, k: int) -> "ReducedExpansion":
        return ReducedExpansion(self.prefactor, self.series.truncate(k))

    def raw(self) -> PowerSeries:
        """Coefficients of the unreduced expansion (relative to ``x**alpha``)."""
        return self.series * self.prefactor.amplitude


@dataclass(frozen=True)
class AsymptoticForm:
    """Large-variable behaviour ``amplitude * x**exponent``."""

    amplitude: float
    exponent: float

    def __post_init__(self):
        if not (math.isfinite(float(self.amplitude)) and math.isfinite(float(self.exponent))):
            raise ValueError("asymptotic form must be finite")


def normalize(raw: PowerSeries | Sequence, leading_power: int = 0) -> ReducedExpansion:
    """Split a raw expansion into prefactor and unit-constant series.

    ``raw[n]`` is the coefficient of ``x**(leading_power + n)``; the leading
    power may be negative (Laurent input).
    """
    if not isinstance(raw, PowerSeries):
        raw = PowerSeries(raw)
    lead = raw[0]
    if lead == 0:
        raise ZeroLeadingCoefficient("leading coefficient is zero")
    series = PowerSeries(c / lead for c in raw.coeffs)
    return ReducedExpansion(Prefactor(lead, Fraction(leading_power)), series)


def _require_unit(s: PowerSeries):
    if s[0] != 1:
        raise NonUnitConstant(f"constant term must be 1, got {s[0]}")


def series_log(s: PowerSeries) -> PowerSeries:
    """Logarithm of a unit-constant series, ``l' = s'/s``."""
    _require_unit(s)
    a = s.coeffs
    zero = a[0] * 0
    out = [zero] * len(a)
    for n in range(1, len(a)):
        acc = n * a[n]
        for j in range(1, n):
            acc -= j * out[j] * a[n - j]
        out[n] = acc / n
    return PowerSeries(out)


def series_exp(s: PowerSeries) -> PowerSeries:
    """Exponential of a series with zero constant term."""
    if s[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    a = s.coeffs
    one = a[0] * 0 + 1
    out = [one] + [a[0] * 0] * (len(a) - 1)
    for n in range(1, len(a)):
        acc = a[0] * 0
        for j in range(1, n + 1):
            acc += j * a[j] * out[n - j]
        out[n] = acc / n
    return PowerSeries(out)


def series_pow(s: PowerSeries, m) -> PowerSeries:
    """``s**m`` for a unit-constant series and any real ``m``.

    Uses the J.C.P. Miller recurrence ``n p_n = sum_j ((m+1) j - n) a_j p_{n-j}``,
    which stays exact for rational ``m``.
    """
    _require_unit(s)
    m = as_scalar(m)
    a = s.coeffs
    if isinstance(m, float) and isinstance(a[0], Fraction):
        a = tuple(float(c) for c in a)
    one = a[0] * 0 + 1
    out = [one] + [a[0] * 0] * (len(a) - 1)
    for n in range(1, len(a)):
        acc = a[0] * 0
        for j in range(1, n + 1):
            acc += ((m + 1) * j - n) * a[j] * out[n - j]
        out[n] = acc / n
    return PowerSeries(out)


def series_xdlog(s: PowerSeries) -> PowerSeries:
    """Coefficients of ``x d/dx ln s(x)``."""
    log = series_log(s)
    return PowerSeries(n * c for n, c in enumerate(log.coeffs))


def change_variable_power(s: PowerSeries, p: int) -> PowerSeries:
    """Substitute ``t = x**p``: coefficient of ``t**n`` moves to ``x**(p n)``."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    zero = s[0] * 0
    out = [zero] * (p * s.order + 1)
    for n, c in enumerate(s.coeffs):
        out[p * n] = c
    return PowerSeries(out)


def from_puiseux(coeffs: Sequence, leading_numerator: int, denominator: int) -> ReducedExpansion:
    """Reduce ``sum_n c_n t**((n0 + n)/m)`` to an integer series in ``x = t**(1/m)``.

    With ``t = x**m`` the coefficient ladder is unchanged and only the prefactor
    exponent (``n0``) is expressed in the new variable.
    """
    if denominator < 1:
        raise ValueError("denominator must be a positive integer")
    return normalize(PowerSeries(coeffs), leading_numerator)


def reduced_from_literal(obj: dict) -> ReducedExpansion:
    """Parse the JSON series literal ``{"prefactor": {"A", "alpha"}, "coeffs": [...]}``."""
    try:
        pre = obj["prefactor"]
        coeffs = obj["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"series literal missing field: {exc}") from None
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError("coeffs must be a non-empty list")
    series = PowerSeries(parse_scalar(c) for c in coeffs)
    if series[0] != 1:
        raise ParseError(f"coeffs[0] must equal 1, got {coeffs[0]!r}")
    amp = parse_scalar(pre.get("A", 1))
    if amp == 0:
        raise ParseError("prefactor amplitude must be nonzero")
    return ReducedExpansion(Prefactor(amp, parse_scalar(pre.get("alpha", 0))), series)


def _literal_scalar(c):
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else int(c)
    return c


def reduced_to_literal(f: ReducedExpansion) -> dict:
    return {
        "prefactor": {
            "A": _literal_scalar(f.prefactor.amplitude),
            "alpha": _literal_scalar(f.prefactor.exponent),
        },
        "coeffs": [_literal_scalar(c) for c in f.series.coeffs],
    }
