"""Independent coefficient generators for the closed-form benchmark functions.

Each oracle returns the *raw* Taylor coefficients ``c_0..c_order`` of the
function in its natural expansion variable (for ``stirling`` and
``scalar-field`` the coefficients of the reduced bracket, whose prefactor is
a power of ``x``).  Rational functions are expanded exactly; the rest use
``mpmath`` at 50 significant digits and are returned as floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from ..errors import PrecisionLoss, UnknownFunction
from ..series import PowerSeries, series_exp, series_log, series_pow

__all__ = ["ORACLES", "oracle_expand", "bernoulli_numbers", "oscillator_energies"]


def bernoulli_numbers(n: int) -> list:
    """``B_0..B_n`` as Fractions (convention ``B_1 = -1/2``)."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(math.comb(m + 1, j) * B[j] for j in range(m)) / Fraction(m + 1))
    return B


def _function1(order):
    # (sqrt(4+x) - 1)/2 = (2 (1 + x/4)**(1/2) - 1)/2
    root = series_pow(PowerSeries([Fraction(1), Fraction(1, 4)] + [Fraction(0)] * (order - 1)), Fraction(1, 2))
    return PowerSeries([root[0] - Fraction(1, 2)] + list(root.coeffs[1:]))


def _debye_huckel(order):
    return PowerSeries(Fraction(2 * (-1) ** n, math.factorial(n + 2)) for n in range(order + 1))


def _stirling(order):
    """Bracket of ``x**(-1/2) * exp(sum_j B_2j / (2j (2j-1)) x**(2j-1))``."""
    B = bernoulli_numbers(order + 1)
    g = [Fraction(0)] * (order + 1)
    for j in range(1, order // 2 + 2):
        n = 2 * j - 1
        if n <= order:
            g[n] = B[2 * j] / (2 * j * (2 * j - 1))
    return series_exp(PowerSeries(g))


def _integral1(order):
    c = []
    for n in range(order + 1):
        if n % 2 == 0:
            c.append(Fraction((-1) ** (n // 2) * math.factorial(n)))
        else:
            c.append(Fraction((-1) ** (n // 2) * 2 * math.factorial(n - 1)))
    return PowerSeries(c)


def _partition_phi4(order):
    return PowerSeries(
        Fraction((-1) ** n * math.factorial(4 * n), 4 ** (2 * n) * math.factorial(2 * n) * math.factorial(n))
        for n in range(order + 1)
    )


def _mittag_leffler(order):
    return PowerSeries(float((-1) ** n / mpmath.gamma(mpmath.mpf(n) / 2 + 1)) for n in range(order + 1))


def _erfc_neg(order):
    # erfc(-x) = 1 + erf(x) = 1 + 2/sqrt(pi) sum (-1)^m x^(2m+1) / (m! (2m+1))
    c = [1.0] + [0.0] * order
    s = 2 / mpmath.sqrt(mpmath.pi)
    for m in range((order - 1) // 2 + 1):
        n = 2 * m + 1
        if n <= order:
            c[n] = float(s * (-1) ** m / (math.factorial(m) * (2 * m + 1)))
    return PowerSeries(c)


def oscillator_energies(order: int) -> list:
    """Ground-state energy coefficients ``E_0..E_order`` of ``-D**2/2 + x**2/2 + g x**4``.

    Writes ``psi = exp(-x**2/2) sum g**n P_n(x)`` with even polynomials
    ``P_n`` (``P_n(0) = 0`` for ``n >= 1``).  The operator
    ``L = -D**2/2 + x D`` maps ``x**(2m)`` to ``2m x**(2m) - m(2m-1) x**(2m-2)``,
    so each ``P_n`` follows by back-substitution from the top power down.
    """
    E = [Fraction(1, 2)]
    P = [[Fraction(1)]]  # P[n][m] = coefficient of x**(2m)
    for n in range(1, order + 1):
        size = 2 * n + 1
        rhs = [Fraction(0)] * size
        for m, c in enumerate(P[n - 1]):
            rhs[m + 2] -= c
        for j in range(1, n):
            for m, c in enumerate(P[n - j]):
                rhs[m] += E[j] * c
        p = [Fraction(0)] * size
        for m in range(size - 1, 0, -1):
            upper = (m + 1) * (2 * m + 1) * p[m + 1] if m + 1 < size else 0
            p[m] = (rhs[m] + upper) / (2 * m)
        # constant term: -p_1 = rhs_0 + E_n
        E.append(-p[1] - rhs[0])
        P.append(p)
    return E


def _oscillator(order):
    return PowerSeries(oscillator_energies(order))


def _scalar_field(order):
    """Bracket of ``x exp(2 int_0^inf e^-t ln[e^{-xt} I_0(xt)] dt)``.

    ``e^{-u} I_0(u) = sum (1/2)_n (-2u)^n / (n!)^2``; integrating term ``u^n``
    against ``e^{-t}`` multiplies it by ``n!``.
    """
    s = []
    poch = Fraction(1)
    for n in range(order + 1):
        s.append(poch * Fraction(-2) ** n / math.factorial(n) ** 2)
        poch *= Fraction(1, 2) + n
    log = series_log(PowerSeries(s))
    g = PowerSeries(2 * log[n] * math.factorial(n) for n in range(order + 1))
    return series_exp(g)


def _branched_polymer(order):
    """``1F1(1; 3/2; -3x/2)``: ``c_n = (-3/2)^n / (3/2)_n``."""
    c, poch = [], Fraction(1)
    for n in range(order + 1):
        c.append(Fraction(-3, 2) ** n / poch)
        poch *= Fraction(3, 2) + n
    return PowerSeries(c)


def _string(order):
    """Bracket ``1 + g**2/32 + (g/4) sqrt(1 + g**2/64)``."""
    inner = series_pow(PowerSeries([Fraction(1), Fraction(0), Fraction(1, 64)] + [Fraction(0)] * max(0, order - 2)), Fraction(1, 2))
    c = [Fraction(0)] * (order + 1)
    c[0] = Fraction(1)
    if order >= 2:
        c[2] += Fraction(1, 32)
    for n in range(1, order + 1):
        c[n] += Fraction(1, 4) * inner[n - 1]
    return PowerSeries(c)


def _mp_taylor(fn):
    def expand(order):
        with mpmath.workdps(50):
            coeffs = mpmath.taylor(fn, 0, order)
            # cross-check against a coarser evaluation to flag cancellation
            with mpmath.workdps(35):
                check = mpmath.taylor(fn, 0, order)
            for a, b in zip(coeffs, check):
                if abs(a - b) > 1e-8 * max(1, abs(a)):
                    raise PrecisionLoss("Taylor coefficients are not stable under precision change")
            return PowerSeries(float(c) for c in coeffs)

    return expand


ORACLES = {
    "function-1": _function1,
    "function-2": _mp_taylor(lambda x: 2 / mpmath.pi * (mpmath.pi / 2 + mpmath.atan(x)) * mpmath.exp(1 - 1 / (1 + x))),
    "function-3": _mp_taylor(lambda x: (mpmath.pi / 2 + mpmath.atan(x)) / (1 + mpmath.exp(-x))),
    "debye-huckel": _debye_huckel,
    "stirling": _stirling,
    "integral-1": _integral1,
    "erfc": _erfc_neg,
    "integral-2": _mp_taylor(lambda x: mpmath.erfc(-x) / (1 + mpmath.exp(-x))),
    "mittag-leffler": _mittag_leffler,
    "partition-phi4": _partition_phi4,
    "oscillator": _oscillator,
    "scalar-field": _scalar_field,
    "branched-polymer": _branched_polymer,
    "string": _string,
}


def oracle_expand(function_id: str, order: int) -> PowerSeries:
    """Coefficients ``c_0..c_order`` of a closed-form benchmark function.

    Raises:
        UnknownFunction: no closed form is registered for ``function_id``.
        PrecisionLoss: a numerical expansion is not stable.
    """
    try:
        fn = ORACLES[function_id]
    except KeyError:
        raise UnknownFunction(f"no oracle for {function_id!r}; known: {sorted(ORACLES)}") from None
    if order < 0:
        raise ValueError("order must be non-negative")
    return fn(order).truncate(order) if order > 0 else PowerSeries([fn(1)[0]])
