"""One-point Padé approximants, used as the comparison baseline."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import SingularSystem, solve
from .errors import DomainError, NegativeRatio, NoFiniteLimit, SingularPadeSystem
from .series import PowerSeries, ReducedExpansion, series_pow

__all__ = ["PadeApproximant", "build_pade", "pade_amplitude", "eval_pade"]


@dataclass(frozen=True)
class PadeApproximant:
    """``P(x)/Q(x)`` with ``deg P = M``, ``deg Q = N`` and ``Q(0) = 1``."""

    numerator_coeffs: tuple
    denominator_coeffs: tuple
    M: int
    N: int

    def __call__(self, x):
        return PowerSeries(self.numerator_coeffs)(x) / PowerSeries(self.denominator_coeffs)(x)

    def expand(self, order: int) -> PowerSeries:
        """Taylor coefficients of ``P/Q`` through ``order``."""
        p, q = self.numerator_coeffs, self.denominator_coeffs
        zero = p[0] * 0
        out = []
        for n in range(order + 1):
            acc = p[n] if n <= self.M else zero
            for j in range(1, min(n, self.N) + 1):
                acc -= q[j] * out[n - j]
            out.append(acc / q[0])
        return PowerSeries(out)


def build_pade(s: PowerSeries, M: int, N: int) -> PadeApproximant:
    """Padé approximant ``[M/N]`` matching ``s`` through order ``M + N``.

    Raises:
        SingularPadeSystem: the denominator system is singular (block
            structure in the Padé table).
    """
    if M < 0 or N < 0:
        raise ValueError("degrees must be non-negative")
    if M + N > s.order:
        raise ValueError(f"[{M}/{N}] needs order {M + N}, series has {s.order}")
    c = s.coeffs
    zero = c[0] * 0

    def coef(n):
        return c[n] if n >= 0 else zero

    if N:
        # sum_{j=1..N} q_j c_{n-j} = -c_n for n = M+1..M+N
        rows = [[coef(n - j) for j in range(1, N + 1)] for n in range(M + 1, M + N + 1)]
        rhs = [-coef(n) for n in range(M + 1, M + N + 1)]
        try:
            q_tail = solve(rows, rhs)
        except SingularSystem as exc:
            raise SingularPadeSystem(f"[{M}/{N}] system is singular: {exc}") from None
        q = [zero + 1] + [v if isinstance(v, Fraction) else float(v) for v in q_tail]
    else:
        q = [zero + 1]
    p = [sum((q[j] * coef(n - j) for j in range(0, min(n, N) + 1)), zero) for n in range(M + 1)]
    return PadeApproximant(tuple(p), tuple(q), M, N)


def pade_amplitude(f: ReducedExpansion, k: int, beta) -> float:
    """Baseline amplitude from Padé approximants of order ``k``.

    For ``gamma = beta - alpha != 0`` the reduced series is raised to
    ``1/gamma`` (so the target grows linearly), approximated by
    ``[N+1/N]`` with ``N = (k-1)//2``, and the amplitude is
    ``A * (p_M/q_N)**gamma``.  For ``gamma == 0`` the diagonal ``[N/N]`` with
    ``N = k//2`` is evaluated at infinity.

    Raises:
        NegativeRatio: the leading-coefficient ratio is not positive.
        NoFiniteLimit: the diagonal approximant degenerates at infinity.
    """
    pa, gamma = _baseline(f, k, beta)
    A = float(f.prefactor.amplitude)
    if gamma == 0:
        return A * float(pa.numerator_coeffs[-1] / pa.denominator_coeffs[-1])
    r = pa.numerator_coeffs[-1] / pa.denominator_coeffs[-1]
    if r <= 0:
        raise NegativeRatio(f"leading ratio {float(r):.6g} is not positive", ratio=float(r))
    return A * float(r) ** float(gamma)


def _baseline(f: ReducedExpansion, k: int, beta):
    gamma = f.gamma(beta)
    if gamma == 0:
        N = k // 2
        pa = build_pade(f.series.truncate(2 * N), N, N)
        if pa.denominator_coeffs[-1] == 0:
            raise NoFiniteLimit("diagonal Padé denominator loses its top degree")
        return pa, gamma
    N = (k - 1) // 2
    M = N + 1
    pa = build_pade(series_pow(f.series.truncate(M + N), 1 / gamma), M, N)
    if pa.denominator_coeffs[-1] == 0:
        raise NoFiniteLimit("Padé denominator loses its top degree")
    return pa, gamma


def eval_pade(f: ReducedExpansion, k: int, beta, x) -> float:
    """Evaluate the baseline approximant behind :func:`pade_amplitude` at ``x``.

    Raises:
        DomainError: ``x`` is a pole, or the rational part is negative where a
            fractional power of it is needed.
    """
    pa, gamma = _baseline(f, k, beta)
    x = float(x)
    num = float(PowerSeries(pa.numerator_coeffs)(x))
    den = float(PowerSeries(pa.denominator_coeffs)(x))
    if den == 0:
        raise DomainError(f"pole at x = {x:.6g}", x=x)
    r = num / den
    if gamma != 0:
        if r <= 0:
            raise DomainError(f"rational part {r:.6g} is not positive at x = {x:.6g}", x=x)
        r = r ** float(gamma)
    return f.prefactor(x) * r
