"""Power-transformed approximants and double renormalization."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import (
    ComplexBranch,
    InversionDomain,
    QuadratureFailure,
    SSXError,
    VelocityZeroCrossing,
    ZeroGamma,
)
from .factor import amplitude_factor, build_factor
from .roots import _eval_tower, amplitude_iterated_root, build_iterated_root
from .series import AsymptoticForm, Prefactor, ReducedExpansion, series_pow

__all__ = [
    "PowerTransformSolution",
    "DoubleRenormResult",
    "power_transform_amplitude",
    "power_transform_extrapolate",
    "double_renorm_amplitude",
]

TRANSFORM_FAMILIES = ("factor", "iterated_root")


@dataclass(frozen=True)
class PowerTransformSolution:
    m: float
    amplitude: AsymptoticForm
    family: str
    stationary_kind: str


@dataclass(frozen=True)
class DoubleRenormResult:
    amplitude_B_star: float
    x_eval: float
    quad_error: float
    family: str = "iterated_root"
    ladder: tuple = field(default=(), compare=False)


def power_transform_amplitude(f: ReducedExpansion, k: int, beta, family: str, m: float) -> float:
    """Amplitude obtained after transforming ``f.series`` to power ``m``.

    The transformed series is extrapolated with target exponent ``m * gamma``
    and the result is mapped back by the ``1/m`` power.
    """
    if family not in TRANSFORM_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {TRANSFORM_FAMILIES}")
    if m == 0:
        raise ValueError("m must be nonzero")
    gamma = float(f.gamma(beta))
    P = ReducedExpansion(Prefactor(1, 0), series_pow(f.series.truncate(k).to_float(), float(m)))
    if family == "factor":
        mode = "constrained"
        bp = amplitude_factor(build_factor(P, k, mode, beta=m * gamma)).amplitude
    else:
        bp = amplitude_iterated_root(build_iterated_root(P, k, m * gamma)).amplitude
    if bp <= 0:
        raise ComplexBranch(f"transformed amplitude {bp:.6g} is not positive")
    return float(f.prefactor.amplitude) * bp ** (1.0 / m)


_SKIP = (SSXError, ArithmeticError, ValueError)


def power_transform_extrapolate(
    f: ReducedExpansion,
    k: int,
    beta,
    family: str = "factor",
    *,
    m_range: tuple = (-5.0, 5.0),
    eps: float = 0.05,
    points: int = 400,
    h: float = 1e-4,
) -> list:
    """Scan ``m`` and return every stationary point of the amplitude.

    A curve that is flat to relative 1e-9 over all admissible ``m`` has no
    isolated stationary point; it is reported once, at ``m = 1``, with kind
    ``saddle-flat``.  An empty list means nothing stationary was found.
    """
    if k < 2:
        raise ValueError("k must be at least 2")

    def amp(m):
        return power_transform_amplitude(f, k, beta, family, m)

    def damp(m):
        return (amp(m + h) - amp(m - h)) / (2 * h)

    grid = np.linspace(m_range[0], m_range[1], points)
    grid = grid[np.abs(grid) > eps]
    values, derivs = [], []
    for m in grid:
        try:
            values.append(amp(m))
            derivs.append(damp(m))
        except _SKIP:
            values.append(None)
            derivs.append(None)

    finite = [v for v in values if v is not None and math.isfinite(v)]
    if not finite:
        return []
    scale = max(abs(v) for v in finite)
    if max(finite) - min(finite) <= 1e-9 * scale:
        try:
            value = amp(1.0)
        except _SKIP:
            value = finite[0]
        exponent = float(beta)
        return [PowerTransformSolution(1.0, AsymptoticForm(value, exponent), family, "saddle-flat")]

    out = []
    for i in range(len(grid) - 1):
        d0, d1 = derivs[i], derivs[i + 1]
        if d0 is None or d1 is None or not (math.isfinite(d0) and math.isfinite(d1)):
            continue
        if d0 * d1 > 0 or (d0 == 0 and i > 0):
            continue
        try:
            root = brentq(damp, grid[i], grid[i + 1], xtol=1e-10) if d0 != 0 else float(grid[i])
            value = amp(root)
            curvature = (amp(root + 10 * h) - 2 * value + amp(root - 10 * h)) / (10 * h) ** 2
        except _SKIP:
            continue
        # across a singularity the derivative flips sign without vanishing
        if abs(damp(root)) > 1e-6 * max(1.0, abs(value)):
            continue
        kind = "local-min" if curvature > 0 else "local-max" if curvature < 0 else "saddle-flat"
        out.append(PowerTransformSolution(float(root), AsymptoticForm(value, float(beta)), family, kind))
    return out


def _richardson(xs, values):
    """Extrapolate the last three ladder values assuming geometric convergence."""
    if len(values) < 3:
        return values[-1]
    b1, b2, b3 = values[-3:]
    d1, d2 = b1 - b2, b2 - b3
    if d2 == 0 or d1 == 0 or d1 / d2 <= 1:
        return b3
    ratio = xs[-1] / xs[-2]
    delta = math.log(d1 / d2) / math.log(ratio)
    return b3 - d2 / (ratio ** delta - 1)


def double_renorm_amplitude(
    f: ReducedExpansion,
    k: int,
    beta,
    *,
    ladder=(1e2, 1e3, 1e4, 1e5, 1e6),
    tau: float = 1.0,
    tol: float = 1e-9,
) -> DoubleRenormResult:
    """Critical amplitude of the doubly renormalized iterated root.

    At each abscissa ``x`` the upper limit ``U`` of
    ``int_{R_k(x)}^{U} dphi / v(phi) = tau`` is found, where
    ``v(phi) = R_k(x(phi)) - phi`` and ``x(phi)`` inverts the first-order
    approximant ``(1 + A_1 x)**gamma``.  The amplitude estimates
    ``A U / x**gamma`` are extrapolated over the ladder.

    Raises:
        VelocityZeroCrossing: the velocity vanishes between the limits.
        InversionDomain: the integration leaves the range of the first-order
            approximant.
        QuadratureFailure: the integral or its root could not be resolved.
    """
    gamma = f.gamma(beta)
    if gamma == 0:
        raise ZeroGamma("double renormalization needs gamma != 0")
    gamma = float(gamma)
    r = build_iterated_root(f, k, beta)
    A = float(f.prefactor.amplitude)
    a1 = float(r.A[0])
    if a1 <= 0:
        raise InversionDomain(f"first-order approximant is not invertible (A_1 = {a1:.6g})")

    def R(x):
        return _eval_tower(r.A, r.gamma, x)

    if k == 1:
        B = amplitude_iterated_root(r).amplitude
        return DoubleRenormResult(B, float(ladder[-1]), 0.0, ladder=tuple((float(x), B) for x in ladder))

    def x_of(phi):
        base = phi ** (1.0 / gamma) if phi > 0 else float("nan")
        if not base >= 1.0:
            raise InversionDomain(f"phi = {phi:.6g} outside the range of the first-order approximant")
        return (base - 1.0) / a1

    def v(phi):
        return R(x_of(phi)) - phi

    estimates = []
    qerr = 0.0
    for x in ladder:
        x = float(x)
        lo = R(x)
        v0 = v(lo)
        if v0 == 0:
            estimates.append(A * lo * x ** (-gamma))
            continue
        sign = 1.0 if v0 > 0 else -1.0

        def G(U, lo=lo):
            val, err = quad(lambda p: 1.0 / v(p), lo, U, epsabs=tol, epsrel=tol, limit=200)
            return val - tau, err

        step = abs(v0)
        hi = lo + sign * step
        for _ in range(200):
            vh = v(hi)
            if vh == 0 or (vh > 0) != (sign > 0):
                # locate the crossing for the report
                try:
                    loc = brentq(v, min(lo, hi), max(lo, hi))
                except ValueError:
                    loc = hi
                raise VelocityZeroCrossing(f"velocity vanishes near phi = {loc:.6g}", location=loc)
            g, _ = G(hi)
            if g >= 0:
                break
            step *= 2
            hi = lo + sign * step
        else:
            raise QuadratureFailure("could not bracket the upper limit")
        try:
            U = brentq(lambda u: G(u)[0], min(lo, hi), max(lo, hi), xtol=tol * max(1.0, abs(hi)))
        except ValueError as exc:
            raise QuadratureFailure(str(exc)) from None
        qerr = max(qerr, G(U)[1])
        estimates.append(A * U * x ** (-gamma))
    xs = [float(x) for x in ladder]
    B = _richardson(xs, estimates)
    last_diff = abs(estimates[-1] - estimates[-2]) if len(estimates) > 1 else 0.0
    return DoubleRenormResult(B, xs[-1], max(qerr, last_diff), ladder=tuple(zip(xs, estimates)))
