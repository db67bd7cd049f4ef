"""Critical-exponent estimates from the logarithmic derivative.

The exponent function ``beta(x) = x d/dx ln f(x)`` tends to the critical
exponent at infinity.  Its expansion ``b_0 + b_1 x + ...`` has ``b_0 = alpha``
and is independent of the prefactor amplitude.  The estimate is the finite
large-variable limit of an approximant built on that expansion.

Two realizations of the finite limit are used:

* ``b_0 != 0`` with the factor family: the normalized series ``b/b_0`` gets a
  factor approximant whose exponents sum to zero; the estimate is
  ``b_0 * prod A_i**n_i``.
* otherwise: the tail is dressed as ``b_1 x (1 + sum (b_{n+1}/b_1) x**n)`` and
  the bracket is approximated with target exponent ``-1``, so that
  ``b_1 x`` times it stays finite; the estimate is ``b_0 + b_1 * amplitude``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroLeadingCoefficient
from .factor import amplitude_factor, build_factor
from .roots import amplitude_corrected, amplitude_iterated_root, build_corrected, build_iterated_root
from .series import PowerSeries, Prefactor, ReducedExpansion, series_xdlog

__all__ = ["ExponentSeries", "FAMILIES", "exponent_series", "estimate_exponent"]

FAMILIES = ("factor", "iterated-root", "corrected-root")


@dataclass(frozen=True)
class ExponentSeries:
    """Coefficients ``b_0..b_k`` of ``x d/dx ln f``."""

    b: tuple
    source_order: int


def exponent_series(f: ReducedExpansion, k: int) -> ExponentSeries:
    if k < 1:
        raise ValueError("k must be at least 1")
    t = series_xdlog(f.series.truncate(min(k, f.order)))
    b = (f.prefactor.exponent,) + tuple(t.coeffs[1:])
    if isinstance(b[1] if len(b) > 1 else b[0], float):
        b = tuple(float(v) for v in b)
    return ExponentSeries(b, f.order)


def _one(v):
    return Fraction(1) if isinstance(v, Fraction) else 1.0


def estimate_exponent(
    f: ReducedExpansion,
    k: int,
    family: str = "factor",
    *,
    p: int = 2,
    mode: str = "constrained",
    conjugate: bool = False,
):
    """Estimate the critical exponent from ``f`` alone.

    Args:
        f: Reduced expansion.
        k: Order of the approximant applied to the (normalized or dressed)
            exponent series.  The dressed route consumes ``b_1..b_{k+1}``;
            the corrected-root family additionally consumes ``p`` more.
        family: ``factor``, ``iterated-root`` or ``corrected-root``.
        p: Correction order for ``corrected-root``.
        mode: Factor resolution for an odd condition count
            (``constrained``, ``scale_fixed`` or ``variational``).
        conjugate: Let the factor family use complex-conjugate pairs.

    Returns:
        The estimate as a float.  A series whose tail ``b_1, b_2, ...``
        vanishes returns ``b_0`` exactly.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    need = k + 1 + (p if family == "corrected-root" else 0)
    if family == "factor" and f.prefactor.exponent != 0:
        need = k
    if need > f.order:
        raise ValueError(f"estimate needs series order {need}, have {f.order}")
    b = exponent_series(f, need).b
    b0 = b[0]
    if all(v == 0 for v in b[1:]):
        return float(b0)

    if family == "factor" and b0 != 0:
        norm = ReducedExpansion(Prefactor(b0, 0), PowerSeries(v / b0 if i else _one(b0) for i, v in enumerate(b)))
        fa = build_factor(norm, k, mode, beta=0, conjugate=conjugate)
        return amplitude_factor(fa).amplitude

    b1 = b[1]
    if b1 == 0:
        raise ZeroLeadingCoefficient("b_1 vanishes; the exponent tail cannot be dressed")
    dressed = ReducedExpansion(
        Prefactor(b1, 1),
        PowerSeries([_one(b1)] + [b[n + 1] / b1 for n in range(1, len(b) - 1)]),
    )
    if family == "factor":
        amp = amplitude_factor(build_factor(dressed, k, mode, beta=0, conjugate=conjugate)).amplitude
    elif family == "iterated-root":
        amp = amplitude_iterated_root(build_iterated_root(dressed, k, 0)).amplitude
    else:
        base = build_iterated_root(dressed, k, 0)
        c = build_corrected(base, dressed.series.coeffs[k + 1 : k + 1 + p], p)
        amp = amplitude_corrected(c).amplitude
    return float(b0) + amp
