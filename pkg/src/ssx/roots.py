"""Root-type self-similar approximants.

Iterated roots use the nested tower

    L_1 = 1 + A_1 x,   L_j = L_{j-1}**(j/(j-1)) + A_j x**j,   R_k = L_k**(gamma/k),

so that every ``A_j`` reaches the large-variable amplitude.  Corrected
approximants multiply a base approximant by ``1 + d x**(k+1) T(x)`` where ``T``
is a tower of the same shape in parameters ``b_1..b_{p-1}`` raised to
``-(k+1)/(p-1)``; the correction then tends to a finite constant.

Coefficients are found order by order.  At order ``j`` the Taylor coefficient
of the tower is affine in the newest parameter, so expanding once with the
parameter set to 0 and once with 1 gives the slope and offset exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, NegativeTower, NoFiniteLimit, NoRealSolution, ZeroGamma
from .factor import FactorApproximant, amplitude_factor, eval_factor
from .series import AsymptoticForm, PowerSeries, Prefactor, ReducedExpansion, as_scalar, series_pow

__all__ = [
    "IteratedRoot",
    "CorrectedApproximant",
    "tower_series",
    "tower_limit",
    "build_iterated_root",
    "amplitude_iterated_root",
    "eval_iterated_root",
    "build_corrected",
    "amplitude_corrected",
    "eval_corrected",
    "generic_root_limit",
    "additive_limit",
]


def _zero_like(v):
    return v * 0


def tower_series(params: Sequence, outer, order: int) -> PowerSeries:
    """Taylor expansion of ``L_K**(outer/K)`` through ``order``, ``K = len(params)``."""
    K = len(params)
    if K == 0:
        raise ValueError("tower needs at least one parameter")
    outer = as_scalar(outer)
    zero = _zero_like(params[0]) if isinstance(params[0], Fraction) else 0.0
    one = zero + 1
    coeffs = [one, params[0]] + [zero] * (order - 1)
    level = PowerSeries(coeffs[: order + 1])
    for j in range(2, K + 1):
        level = series_pow(level, Fraction(j, j - 1))
        if j <= order:
            c = list(level.coeffs)
            c[j] += params[j - 1]
            level = PowerSeries(c)
    return series_pow(level, outer / K)


def _power_ok(base, exponent) -> bool:
    return base > 0 or (float(exponent).is_integer() and (base != 0 or exponent >= 0))


def tower_limit(params: Sequence) -> float:
    """Large-variable value ``((A_1**2 + A_2)**(3/2) + ...) + A_K`` of the tower.

    Returns the innermost-to-outermost value before the outer power is
    applied.

    Raises:
        NegativeTower: a level that must be raised to a fractional power is
            not positive; ``level`` names it (1-based).
    """
    v = float(params[0])
    for j in range(2, len(params) + 1):
        e = j / (j - 1)
        if j > 2 and v <= 0:
            raise NegativeTower(f"tower level {j - 1} is {v:.6g}, not positive", level=j - 1)
        v = v ** e + float(params[j - 1])
    return v


def _tower_value(params, outer):
    K = len(params)
    v = tower_limit(params)
    if not _power_ok(v, outer / K):
        raise NegativeTower(f"tower level {K} is {v:.6g}, not positive", level=K)
    return v ** (float(outer) / K)


def _eval_tower(params, outer, x):
    K = len(params)
    level = 1.0 + float(params[0]) * x
    for j in range(2, K + 1):
        if j > 2 and level < 0:
            raise DomainError(f"tower level {j - 1} negative at x = {x:.6g}", x=x, level=j - 1)
        level = level ** (j / (j - 1)) + float(params[j - 1]) * x ** j
    e = float(outer) / K
    if not _power_ok(level, e):
        raise DomainError(f"tower level {K} not positive at x = {x:.6g}", x=x, level=K)
    return level ** e


def _solve_linear_in_last(known, target, order, expand):
    """Solve for the next tower parameter from the coefficient at ``order``."""
    zero = target * 0
    c0 = expand(list(known) + [zero])[order]
    c1 = expand(list(known) + [zero + 1])[order]
    slope = c1 - c0
    if slope == 0:
        raise NoRealSolution(f"order-{order} coefficient does not depend on the new parameter")
    return (target - c0) / slope


@dataclass(frozen=True)
class IteratedRoot:
    """Iterated root ``f0(x) * R_k(x)`` with parameters ``A_1..A_k``."""

    A: tuple
    gamma: object
    prefactor: Prefactor
    order_k: int

    def expand(self, order: int) -> PowerSeries:
        """Taylor coefficients of ``R_k`` through ``order``."""
        return tower_series(self.A, self.gamma, order)

    def __call__(self, x):
        return eval_iterated_root(self, x)


def build_iterated_root(f: ReducedExpansion, k: int, beta) -> IteratedRoot:
    """Match an iterated root to ``a_1..a_k``.

    Raises:
        ZeroGamma: ``beta`` equals the prefactor exponent.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > f.order:
        raise ValueError(f"series has order {f.order}, cannot match {k} coefficients")
    gamma = f.gamma(beta)
    if gamma == 0:
        raise ZeroGamma("iterated roots need beta different from the prefactor exponent")
    a = f.series.coeffs
    if isinstance(gamma, float):
        a = tuple(float(c) for c in a)
    params = [a[1] / gamma]
    for j in range(2, k + 1):
        params.append(
            _solve_linear_in_last(params, a[j], j, lambda ps, j=j: tower_series(ps, gamma, j))
        )
    return IteratedRoot(tuple(params), gamma, f.prefactor, k)


def amplitude_iterated_root(r: IteratedRoot) -> AsymptoticForm:
    """Amplitude ``A * tower**(gamma/k)`` and exponent ``alpha + gamma``.

    Raises:
        NegativeTower: with the index of the failing level.
    """
    B = float(r.prefactor.amplitude) * _tower_value(r.A, r.gamma)
    return AsymptoticForm(B, float(r.prefactor.exponent) + float(r.gamma))


def eval_iterated_root(r: IteratedRoot, x) -> float:
    """Evaluate ``f0(x) R_k(x)`` by direct nesting."""
    x = float(x)
    try:
        return r.prefactor(x) * _eval_tower(r.A, r.gamma, x)
    except ZeroDivisionError:
        raise DomainError("prefactor singular at x = 0", x=0.0) from None


def generic_root_limit(prefactor: Prefactor, A_k, n_k, k: int) -> AsymptoticForm:
    """Large-variable form of a general root approximant.

    Only the outermost term survives: ``R_k ~ A_k**n_k x**(k n_k)``, so the
    amplitude is ``A A_k**n_k`` and the exponent ``alpha + k n_k``.
    """
    A_k, n_k = float(A_k), float(n_k)
    if not _power_ok(A_k, n_k):
        raise NegativeTower(f"outer coefficient {A_k:.6g} is not positive", level=k)
    return AsymptoticForm(float(prefactor.amplitude) * A_k ** n_k, float(prefactor.exponent) + k * n_k)


# ---------------------------------------------------------------- corrected


def _base_order(base) -> int:
    if isinstance(base, FactorApproximant):
        return base.matched_order
    return base.order_k


def _base_expand(base, order):
    return base.expand(order)


@dataclass(frozen=True)
class CorrectedApproximant:
    """Base approximant times ``C(x) = 1 + d x**(k+1) T_b(x)**(-(k+1)/(p-1))``.

    ``k`` is the highest order the base reproduces; ``b`` is empty when the
    correction is trivial (``d == 0``) or ``p == 1``.
    """

    base: object
    d: object
    b: tuple
    p: int

    @property
    def k(self) -> int:
        return _base_order(self.base)

    @property
    def order(self) -> int:
        return self.k + self.p

    def correction_series(self, order: int) -> PowerSeries:
        return _correction_series(self.k, self.d, self.b, self.p, order)

    def expand(self, order: int) -> PowerSeries:
        return _base_expand(self.base, order) * self.correction_series(order)

    def correction_limit(self) -> float:
        """``C(inf)``; finite by construction for ``p >= 2``."""
        if self.d == 0:
            return 1.0
        if self.p == 1:
            raise NoFiniteLimit("p = 1 correction grows like x**(k+1)")
        return 1.0 + float(self.d) * _tower_value(self.b, -(self.k + 1))

    def __call__(self, x):
        return eval_corrected(self, x)


def _correction_series(k, d, b, p, order):
    zero = d * 0
    c = [zero + 1] + [zero] * order
    if d == 0 or order < k + 1:
        return PowerSeries(c)
    if b:
        # the tower with len(b) levels agrees with the full (p-1)-level one
        # through order len(b), which is all that is needed while solving
        t = tower_series(b, -(k + 1), order - k - 1)
    else:
        t = PowerSeries([zero + 1] + [zero] * (order - k - 1))
    for n in range(k + 1, order + 1):
        c[n] += d * t[n - k - 1]
    return PowerSeries(c)


def build_corrected(base, extra_coeffs: Sequence, p: int) -> CorrectedApproximant:
    """Attach a correction matched to ``a_{k+1}..a_{k+p}``.

    Args:
        base: A built :class:`IteratedRoot` or :class:`FactorApproximant`.
            For factor bases ``k`` is the highest order they reproduce.
        extra_coeffs: Reduced-series coefficients ``a_{k+1}, ..., a_{k+p}``.
        p: Number of extra coefficients used (``p >= 1``).

    Raises:
        NoFiniteLimit: ``p == 1`` with a nonzero correction.
        NegativeTower: the correction's limiting tower is not positive.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if len(extra_coeffs) < p:
        raise ValueError(f"need {p} extra coefficients, got {len(extra_coeffs)}")
    k = _base_order(base)
    K = k + p
    target = [as_scalar(c) for c in extra_coeffs[:p]]
    R = _base_expand(base, K)
    if any(isinstance(c, float) for c in target) or R.scalar_kind == "float":
        target = [float(c) for c in target]
        R = R.to_float()
    d = target[0] - R[k + 1]
    if d == 0:
        return CorrectedApproximant(base, d, (), p)
    if p == 1:
        raise NoFiniteLimit("p = 1 correction 1 + d x**(k+1) has no finite limit")
    b = []
    for j in range(1, p):
        n = k + 1 + j

        def expand(bs, n=n):
            return (R.truncate(n) * _correction_series(k, d, bs, len(bs) + 1, n))

        b.append(_solve_linear_in_last(b, target[j], n, expand))
    c = CorrectedApproximant(base, d, tuple(b), p)
    c.correction_limit()
    return c


def _base_amplitude(base) -> AsymptoticForm:
    if isinstance(base, FactorApproximant):
        return amplitude_factor(base)
    return amplitude_iterated_root(base)


def amplitude_corrected(c: CorrectedApproximant) -> AsymptoticForm:
    """Base amplitude times ``C(inf)``; the exponent is the base exponent."""
    base = _base_amplitude(c.base)
    return AsymptoticForm(base.amplitude * c.correction_limit(), base.exponent)


def eval_corrected(c: CorrectedApproximant, x) -> float:
    x = float(x)
    base = eval_factor(c.base, x) if isinstance(c.base, FactorApproximant) else eval_iterated_root(c.base, x)
    if c.d == 0:
        return base
    t = _eval_tower(c.b, -(c.k + 1), x) if c.b else 1.0
    return base * (1.0 + float(c.d) * x ** (c.k + 1) * t)


# ---------------------------------------------------------------- finite limits


def _tail_expansion(f: ReducedExpansion) -> ReducedExpansion:
    """``f = 1 + a_1 x T(x)`` with ``T`` reduced; ``T`` must stay bounded times ``1/x``."""
    a = f.series.coeffs
    if len(a) < 2 or a[1] == 0:
        raise NoRealSolution("a_1 vanishes; the tail cannot be split off")
    one = a[1] / a[1]
    return ReducedExpansion(Prefactor(a[1], 1), PowerSeries([one] + [c / a[1] for c in a[2:]]))


def additive_limit(f: ReducedExpansion, k: int, family: str = "iterated-root", p: int = 2) -> AsymptoticForm:
    """Finite large-variable limit by approximating the tail ``(f - 1)/(a_1 x)``.

    Root towers cannot approach a constant (their target exponent would be
    zero), so the reduced series is split as ``1 + a_1 x T(x)`` and ``T`` gets
    an approximant with target exponent ``-1``.  The limit is ``A (1 + B)``
    with ``B`` the large-variable value of ``a_1 x T(x)``.  ``k`` counts all
    coefficients used, so the tail approximant has order ``k - 1``.

    Args:
        f: Reduced expansion whose target exponent equals the prefactor's.
        k: Total order, ``a_1..a_k`` (plus ``p`` more for ``corrected-root``).
        family: ``iterated-root`` or ``corrected-root``.
        p: Correction order for ``corrected-root``.
    """
    if k < 2:
        raise ValueError("the additive scheme needs k >= 2")
    tail = _tail_expansion(f)
    if family == "iterated-root":
        B = amplitude_iterated_root(build_iterated_root(tail, k - 1, 0)).amplitude
    elif family == "corrected-root":
        base = build_iterated_root(tail, k - 1, 0)
        c = build_corrected(base, tail.series.coeffs[k : k + p], p)
        B = amplitude_corrected(c).amplitude
    else:
        raise ValueError(f"unknown family {family!r}")
    return AsymptoticForm(float(f.prefactor.amplitude) * (1.0 + B), float(f.prefactor.exponent))
