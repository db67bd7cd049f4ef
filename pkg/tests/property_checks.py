"""Randomized property checks shared by the property tests and the acceptance run.

Every ``check_*`` function draws ``n`` random rational series from ``rng``,
raises ``AssertionError`` on the first violation, and returns how many draws
were actually exercised (draws for which the approximant legitimately does not
exist are skipped and not counted).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction as F

from ssx import errors
from ssx.exponent import estimate_exponent
from ssx.factor import amplitude_factor, build_factor
from ssx.pade import build_pade, pade_amplitude
from ssx.roots import (
    amplitude_iterated_root,
    build_corrected,
    build_iterated_root,
    tower_series,
)
from ssx.series import (
    PowerSeries,
    Prefactor,
    ReducedExpansion,
    series_exp,
    series_log,
    series_pow,
    series_xdlog,
)

N_DRAWS = 200
SEED = 20240607


def random_series(rng: random.Random, order: int, span: int = 5, den: int = 6) -> PowerSeries:
    coeffs = [F(1)]
    for _ in range(order):
        num = 0
        while num == 0:
            num = rng.randint(-span, span)
        coeffs.append(F(num, rng.randint(1, den)))
    return PowerSeries(coeffs)


def random_expansion(rng: random.Random, order: int) -> ReducedExpansion:
    pre = Prefactor(F(rng.randint(1, 5), rng.randint(1, 3)), F(rng.randint(-2, 2)))
    return ReducedExpansion(pre, random_series(rng, order))


def random_gamma(rng: random.Random) -> F:
    g = F(0)
    while g == 0:
        g = F(rng.randint(-6, 6), rng.randint(1, 4))
    return g


def scaled(f: ReducedExpansion, lam) -> ReducedExpansion:
    """``f(lam x)`` with the prefactor amplitude absorbing ``lam**alpha``."""
    s = PowerSeries(c * lam ** n for n, c in enumerate(f.series.coeffs))
    amp = f.prefactor.amplitude * lam ** f.prefactor.exponent
    return ReducedExpansion(Prefactor(amp, f.prefactor.exponent), s)


# ------------------------------------------------------------------ series


def check_series_identities(rng, n=N_DRAWS):
    for _ in range(n):
        s = random_series(rng, rng.randint(1, 7))
        t = random_series(rng, s.order)
        m = F(rng.randint(-7, 7) or 1, rng.randint(1, 5))
        one = PowerSeries([F(1)] + [F(0)] * s.order)
        assert series_exp(series_log(s)) == s
        assert series_pow(series_pow(s, m), 1 / m) == s
        assert series_pow(s, 2) == s * s
        assert series_pow(s, -1) * s == one
        assert series_log(s * t) == series_log(s) + series_log(t)
        log = series_log(s)
        assert series_xdlog(s) == PowerSeries(k * c for k, c in enumerate(log.coeffs))
    return n


# ------------------------------------------------------------------ roots


def check_root_reexpansion(rng, n=N_DRAWS):
    for _ in range(n):
        k = rng.randint(1, 5)
        f = random_expansion(rng, k)
        beta = f.prefactor.exponent + random_gamma(rng)
        r = build_iterated_root(f, k, beta)
        assert r.expand(k) == f.series.truncate(k)
    return n


def check_root_triangularity(rng, n=N_DRAWS):
    for _ in range(n):
        k = rng.randint(2, 5)
        f = random_expansion(rng, k)
        beta = f.prefactor.exponent + random_gamma(rng)
        full = build_iterated_root(f, k, beta).A
        assert build_iterated_root(f, k - 1, beta).A == full[:-1]
        # changing a_k must leave A_1..A_{k-1} alone
        c = list(f.series.coeffs)
        c[k] += F(rng.randint(1, 9), rng.randint(1, 4))
        g = ReducedExpansion(f.prefactor, PowerSeries(c))
        assert build_iterated_root(g, k, beta).A[:-1] == full[:-1]
    return n


def check_corrected_reexpansion(rng, n=N_DRAWS):
    done = 0
    for _ in range(n):
        k, p = rng.randint(1, 3), rng.randint(2, 3)
        f = random_expansion(rng, k + p)
        beta = f.prefactor.exponent + random_gamma(rng)
        base = build_iterated_root(f, k, beta)
        try:
            c = build_corrected(base, f.series.coeffs[k + 1 : k + 1 + p], p)
        except errors.ComplexBranch:
            continue  # the correction's limiting tower is not real
        assert c.expand(k + p) == f.series.truncate(k + p)
        done += 1
    return done


def check_root_model_recovery(rng, n=N_DRAWS):
    for _ in range(n):
        k = rng.randint(1, 5)
        params = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(k)]
        gamma = random_gamma(rng)
        s = tower_series(params, gamma, k)
        f = ReducedExpansion(Prefactor(F(1), F(0)), s)
        assert list(build_iterated_root(f, k, gamma).A) == params
    return n


# ------------------------------------------------------------------ factor


_FACTOR_SKIP = (errors.DegenerateMoments, errors.ComplexBranch, errors.NoRealSolution)


def _close(a, b, tol):
    return abs(float(a) - float(b)) <= tol * max(1.0, abs(float(b)))


def check_factor_reexpansion(rng, n=N_DRAWS):
    """Matched coefficients are reproduced (nodes are polynomial roots, so to round-off)."""
    done = 0
    for _ in range(n):
        k = rng.randint(1, 5)
        f = random_expansion(rng, k)
        try:
            if rng.random() < 0.5:
                fa = build_factor(f, k, "free", conjugate=True)
            else:
                beta = f.prefactor.exponent + random_gamma(rng)
                fa = build_factor(f, k, "constrained", beta=beta, conjugate=True)
        except _FACTOR_SKIP:
            continue
        got = fa.expand(fa.matched_order)
        for j in range(fa.matched_order + 1):
            assert _close(got[j], f.series[j], 1e-7), (f, k, j, got[j])
        done += 1
    return done


def check_factor_model_recovery(rng, n=N_DRAWS):
    for _ in range(n):
        N = rng.randint(1, 3)
        nodes = rng.sample(range(1, 12), N)
        A = [F(v, 3) for v in nodes]
        ns = [F(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3)) for _ in range(N)]
        k = 2 * N
        s = PowerSeries([F(1)] + [F(0)] * k)
        for a, e in zip(A, ns):
            s = s * series_pow(PowerSeries([F(1), a] + [F(0)] * (k - 1)), e)
        f = ReducedExpansion(Prefactor(F(1), F(0)), s)
        fa = build_factor(f, k, "free")
        got = sorted((float(a), float(e)) for a, e in fa.pairs)
        want = sorted((float(a), float(e)) for a, e in zip(A, ns))
        for (ga, ge), (wa, we) in zip(got, want):
            assert _close(ga, wa, 1e-8) and _close(ge, we, 1e-8), (got, want)
        # the exact exponent sum recovered with the constrained mode
        fc = build_factor(f, k - 1, "constrained", beta=sum(ns))
        assert _close(amplitude_factor(fc).amplitude, math.prod(float(a) ** float(e) for a, e in zip(A, ns)), 1e-7)
    return n


def check_exponent_model_recovery(rng, n=N_DRAWS):
    """``(1 + a x)**g`` times ``x**alpha`` has exponent ``alpha + g`` at every order."""
    for _ in range(n):
        a = F(rng.randint(1, 9), rng.randint(1, 4))
        alpha = F(rng.randint(-2, 2))
        g = random_gamma(rng)
        while alpha and (alpha + g) / alpha <= 0:
            # keep the normalized exponent function's node A (1 + g/alpha) positive
            g = random_gamma(rng)
        # k = 2 leaves a single factor whose exponent must vanish: degenerate
        k = rng.randint(3, 4)
        s = series_pow(PowerSeries([F(1), a] + [F(0)] * (k + 2)), g)
        f = ReducedExpansion(Prefactor(F(1), alpha), s)
        for family in ("factor", "iterated-root"):
            est = estimate_exponent(f, k, family)
            assert _close(est, alpha + g, 1e-9), (family, est, alpha + g)
    return n


# ------------------------------------------------------------------ scaling


def check_scaling_covariance(rng, n=N_DRAWS):
    """``f(lam x)`` has amplitude ``lam**beta`` times that of ``f``."""
    done = 0
    for _ in range(n):
        k = rng.randint(1, 4)
        f = random_expansion(rng, k)
        gamma = random_gamma(rng)
        beta = f.prefactor.exponent + gamma
        lam = F(rng.randint(1, 7), rng.randint(1, 7))
        g = scaled(f, lam)
        r, rl = build_iterated_root(f, k, beta), build_iterated_root(g, k, beta)
        assert list(rl.A) == [a * lam ** (j + 1) for j, a in enumerate(r.A)]
        pairs = []
        try:
            pairs.append((amplitude_iterated_root(r).amplitude, amplitude_iterated_root(rl).amplitude))
        except errors.ComplexBranch:
            pass
        try:
            pairs.append((pade_amplitude(f, k, beta), pade_amplitude(g, k, beta)))
        except (errors.SSXError, ArithmeticError):
            pass
        if k >= 2:
            try:
                fa = build_factor(f, k - 1 + (k % 2), "constrained", beta=beta, conjugate=True)
                fb = build_factor(g, k - 1 + (k % 2), "constrained", beta=beta, conjugate=True)
                pairs.append((amplitude_factor(fa).amplitude, amplitude_factor(fb).amplitude))
            except _FACTOR_SKIP + (errors.NegativeBase,):
                pass
        for b, bl in pairs:
            assert _close(bl, b * float(lam) ** float(beta), 1e-8), (b, bl, lam, beta)
        done += bool(pairs)
    return done


# ------------------------------------------------------------------ Padé


def check_pade_reexpansion(rng, n=N_DRAWS):
    done = 0
    for _ in range(n):
        s = random_series(rng, rng.randint(1, 7))
        M = rng.randint(0, s.order)
        N = rng.randint(0, s.order - M)
        try:
            pa = build_pade(s, M, N)
        except errors.SingularPadeSystem:
            continue
        assert pa.expand(M + N) == s.truncate(M + N)
        done += 1
    return done


ALL_CHECKS = {
    "series exp/log/pow identities": check_series_identities,
    "iterated-root re-expansion": check_root_reexpansion,
    "iterated-root triangularity": check_root_triangularity,
    "iterated-root model recovery": check_root_model_recovery,
    "corrected-root re-expansion": check_corrected_reexpansion,
    "factor re-expansion": check_factor_reexpansion,
    "factor model recovery": check_factor_model_recovery,
    "exponent model recovery": check_exponent_model_recovery,
    "scaling covariance": check_scaling_covariance,
    "Padé re-expansion": check_pade_reexpansion,
}
