"""Self-similar factor approximants ``f0(x) * prod_i (1 + A_i x)**n_i``.

Matching the product against a reduced series is done through the
logarithmic derivative.  Writing ``z_i = -A_i``,

    ln prod (1 + A_i x)**n_i = -sum_m s_m x**m / m,   s_m = sum_i n_i z_i**m,

so the series coefficients fix the power sums ``s_1..s_k``; a prescribed
large-variable exponent adds ``s_0 = gamma``.  The nodes ``z_i`` are the roots
of the Prony polynomial whose coefficients solve a Hankel system, and the
weights follow from a Vandermonde system.

When the number of conditions is odd the system has one condition too many
for a fully determined product.  Three resolutions are offered:

* ``constrained``: drop the highest-order matching condition;
* ``scale_fixed``: add a factor with ``A_1 = 1`` (one node known);
* ``variational``: as ``scale_fixed`` but ``A_1`` is chosen where the
  amplitude is stationary with respect to it.

By default every node must be real.  With ``conjugate=True`` nodes may also
come in complex-conjugate pairs with conjugate exponents; each such pair
multiplies to a real, positive function on the real axis.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from ._linalg import SingularSystem, solve
from .errors import ComplexBranch, DegenerateMoments, DomainError, NegativeBase, NoRealSolution
from .series import (
    AsymptoticForm,
    PowerSeries,
    Prefactor,
    ReducedExpansion,
    as_scalar,
    series_exp,
    series_log,
)

__all__ = [
    "FactorApproximant",
    "MODES",
    "factor_moments",
    "build_factor",
    "amplitude_factor",
    "eval_factor",
]

MODES = ("free", "constrained", "scale_fixed", "variational")
IMAG_TOL = 1e-8


@dataclass(frozen=True)
class FactorApproximant:
    """Solved factor approximant.

    Attributes:
        pairs: ``(A_i, n_i)`` for each factor.
        prefactor: The known leading factor ``f0``.
        order_k: Order of the series used to build it.
        mode: Resolution actually applied (see module docstring).
        beta: Prescribed exponent, or None for a free exponent.
        matched_order: Highest Taylor order reproduced by construction.
    """

    pairs: tuple
    prefactor: Prefactor
    order_k: int
    mode: str
    beta: object = None
    matched_order: int = 0
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def N(self) -> int:
        return len(self.pairs)

    @property
    def singularities(self) -> list:
        """Points ``-1/A_i`` where a factor base vanishes."""
        return [-1.0 / float(a) for a, _ in self.pairs if not isinstance(a, complex) and a != 0]

    @property
    def has_conjugate_pairs(self) -> bool:
        return any(isinstance(a, complex) for a, _ in self.pairs)

    def expand(self, order: int) -> PowerSeries:
        """Taylor coefficients of the product part through ``order``."""
        log = [0.0] * (order + 1)
        for a, n in self.pairs:
            a = complex(a) if isinstance(a, complex) else float(a)
            n = complex(n) if isinstance(n, complex) else float(n)
            for m in range(1, order + 1):
                log[m] += (-n * (-a) ** m / m).real if isinstance(a * n, complex) else -n * (-a) ** m / m
        return series_exp(PowerSeries(log))

    def __call__(self, x):
        return eval_factor(self, x)


def factor_moments(series: PowerSeries, k: int) -> list:
    """Power sums ``s_1..s_k`` (index 0 left as None) from a unit-constant series."""
    log = series_log(series.truncate(k))
    return [None] + [-m * log[m] for m in range(1, k + 1)]


def _is_exact(values) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def _prony_poly(t, N, fixed=None):
    """Monic Prony polynomial coefficients (low to high) for power sums ``t``.

    Uses ``t[0..2N-1]`` or, with a known node ``fixed``, ``t[0..2N-2]``.
    """
    if fixed is None:
        H = [[t[i + j] for j in range(N)] for i in range(N)]
        rhs = [-t[i + N] for i in range(N)]
        c = solve(H, rhs, rcond=1e-15)
        return list(c) + [t[0] * 0 + 1]
    M = N - 1
    if M == 0:
        return [-fixed, 1]
    H = [[t[m + i + 1] - fixed * t[m + i] for i in range(M)] for m in range(M)]
    rhs = [-(t[m + M + 1] - fixed * t[m + M]) for m in range(M)]
    q = list(solve(H, rhs, rcond=1e-15)) + [t[0] * 0 + 1]
    # (z - fixed) * q(z)
    p = [t[0] * 0] * (N + 1)
    for j, qj in enumerate(q):
        p[j + 1] += qj
        p[j] -= fixed * qj
    return p


def _roots(poly, conjugate=False) -> list:
    """Roots of a polynomial given low-to-high.

    Complex roots raise ``ComplexBranch`` unless ``conjugate`` is set, in
    which case they are returned as exact conjugate pairs (real roots first,
    then each pair with the positive imaginary part leading).
    """
    if len(poly) == 2 and _is_exact(poly):
        return [-poly[0] / poly[1]]
    coeffs = np.array([float(c) for c in reversed(poly)])
    raw = np.roots(coeffs)
    deriv = np.polyder(coeffs)
    real, cplx = [], []
    for r in raw:
        for _ in range(3):
            d = np.polyval(deriv, r)
            if d == 0:
                break
            r = r - np.polyval(coeffs, r) / d
        if abs(r.imag) <= IMAG_TOL * max(abs(r.real), 1e-300):
            real.append(float(r.real))
        elif not conjugate:
            raise ComplexBranch(f"factor node {complex(r):.6g} is complex")
        elif r.imag > 0:
            cplx.append(complex(r))
    if conjugate and len(real) + 2 * len(cplx) != len(raw):
        raise ComplexBranch("complex factor nodes do not pair up")
    out = sorted(real)
    for r in sorted(cplx, key=lambda z: (z.real, z.imag)):
        out += [r, r.conjugate()]
    return out


def _weights(nodes, t, N, offset=0):
    """Solve ``sum_i w_i z_i**(m+offset) = t[m]`` for ``m < N``."""
    V = [[z ** (m + offset) for z in nodes] for m in range(N)]
    try:
        return solve(V, t[:N], rcond=1e-15)
    except SingularSystem as exc:
        raise DegenerateMoments(f"coincident factor nodes: {exc}") from None


def _solve_pairs(t, N, with_zero_moment, fixed=None, conjugate=False):
    """Nodes and exponents ``(A_i, n_i)`` for power sums ``t``.

    ``t[0]`` is ``s_0`` when ``with_zero_moment``; otherwise ``t[j] = s_{j+1}``
    and the Vandermonde weights are ``n_i z_i``.
    """
    poly = _prony_poly(t, N, fixed)
    nodes = _roots(poly, conjugate)
    if fixed is not None:
        # keep the prescribed node exact
        idx = min(range(len(nodes)), key=lambda i: abs(nodes[i] - float(fixed)))
        nodes[idx] = fixed
    if not with_zero_moment and any(abs(complex(z)) < 1e-300 for z in nodes):
        raise DegenerateMoments("zero factor node")
    w = _weights(nodes, t, N)
    pairs = []
    for i, (z, wi) in enumerate(zip(nodes, w)):
        n = wi if with_zero_moment else wi / z
        if isinstance(z, complex):
            if i > 0 and nodes[i - 1] == z.conjugate():
                # conjugate partner: force exact symmetry
                n = pairs[-1][1].conjugate()
            pairs.append((-z, complex(n)))
            continue
        if isinstance(n, complex):
            if abs(n.imag) > IMAG_TOL * max(abs(n.real), 1e-300):
                raise ComplexBranch("complex factor exponent")
            n = n.real
        if not isinstance(n, Fraction):
            n = float(n)
        pairs.append((-z if isinstance(z, Fraction) else -float(z), n))
    return tuple(pairs)


def _solve_with_reduction(t, N, with_zero_moment, fixed=None, conjugate=False):
    while N >= 1:
        try:
            return _solve_pairs(t, N, with_zero_moment, fixed, conjugate), N
        except SingularSystem:
            if N == 1 or (fixed is not None and N == 2):
                break
            warnings.warn(f"degenerate Hankel system; reducing factor count from {N} to {N - 1}", stacklevel=3)
            N -= 1
    raise DegenerateMoments("moment system is singular")


def _amplitude_value(prefactor, pairs):
    value = float(prefactor.amplitude)
    phase = 1.0 + 0j
    for a, n in pairs:
        if isinstance(a, complex):
            phase *= a ** n
            continue
        a = float(a)
        if a <= 0:
            raise NegativeBase(f"factor base coefficient A={a:.6g} is not positive")
        value *= a ** float(n)
    if abs(phase.imag) > 1e-9 * abs(phase):
        raise ComplexBranch("conjugate factors do not combine to a real amplitude")
    return value * phase.real


def _variational_node(t, N, with_zero_moment, prefactor, conjugate=False):
    """Pick ``A_1`` where the amplitude is stationary in ``ln A_1``."""

    def amp(log_a1):
        pairs = _solve_pairs(t, N, with_zero_moment, fixed=-math.exp(log_a1), conjugate=conjugate)
        return _amplitude_value(prefactor, pairs)

    def damp(log_a1, h=1e-4):
        return (amp(log_a1 + h) - amp(log_a1 - h)) / (2 * h)

    failures = (ComplexBranch, NegativeBase, DegenerateMoments, SingularSystem, ArithmeticError, ValueError)
    grid = np.linspace(math.log(1e-3), math.log(1e3), 401)
    derivs = []
    for g in grid:
        try:
            d = damp(g)
            derivs.append(d if math.isfinite(d) else None)
        except failures:
            derivs.append(None)
    for i in range(len(grid) - 1):
        d0, d1 = derivs[i], derivs[i + 1]
        if d0 is None or d1 is None:
            continue
        if d0 == 0:
            return math.exp(grid[i])
        if d0 * d1 < 0:
            try:
                root = brentq(damp, grid[i], grid[i + 1], xtol=1e-12)
                # a sign flip across a pole of the derivative is not a stationary point
                genuine = abs(damp(root)) < 1e-6 * max(1.0, abs(amp(root)))
            except failures:
                continue
            if genuine:
                return math.exp(root)
    raise NoRealSolution("amplitude has no stationary point in A_1 over [1e-3, 1e3]")


def build_factor(
    f: ReducedExpansion, k: int, mode: str = "free", beta=None, *, conjugate: bool = False
) -> FactorApproximant:
    """Build a factor approximant from the first ``k`` series coefficients.

    Args:
        f: Reduced expansion.
        k: Number of series coefficients to match (``k >= 1``).
        mode: One of ``free``, ``constrained``, ``scale_fixed``, ``variational``.
            ``free`` with an odd condition count switches to ``scale_fixed``.
        beta: Target large-variable exponent.  Required for ``constrained``,
            optional for ``scale_fixed``/``variational``, forbidden for ``free``.
        conjugate: Accept complex-conjugate node pairs instead of raising.

    Raises:
        ComplexBranch: a node or exponent comes out complex.
        DegenerateMoments: the moment system has no unique solution.
        NoRealSolution: variational mode finds no stationary amplitude.
    """
    if mode not in MODES:
        raise ValueError(f"unknown factor mode {mode!r}; expected one of {MODES}")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > f.order:
        raise ValueError(f"series has order {f.order}, cannot match {k} coefficients")
    if mode == "constrained" and beta is None:
        raise ValueError("constrained mode needs beta")
    if mode == "free" and beta is not None:
        raise ValueError("free mode takes no beta; use constrained")

    s = factor_moments(f.series, k)
    with_zero = beta is not None
    if with_zero:
        beta = as_scalar(beta)
        s[0] = beta - f.prefactor.exponent
        if isinstance(s[0], float) or any(isinstance(v, float) for v in s[1:]):
            s = [float(v) for v in s]
        t = s
    else:
        t = s[1:]
    n_cond = len(t)
    matched = k
    diagnostics = {}

    if n_cond % 2 == 0:
        pairs, N = _solve_with_reduction(t, n_cond // 2, with_zero, conjugate=conjugate)
        applied = mode if mode in ("free", "constrained") else "exact"
        if mode in ("scale_fixed", "variational"):
            raise ValueError(f"{mode} mode applies only to an odd number of conditions (got {n_cond})")
    elif mode == "constrained":
        pairs, N = _solve_with_reduction(t[:-1], (n_cond - 1) // 2, with_zero, conjugate=conjugate)
        matched = k - 1
        applied = "constrained"
    else:
        N = (n_cond + 1) // 2
        if mode == "variational":
            a1 = _variational_node(t, N, with_zero, f.prefactor, conjugate)
            diagnostics["A1"] = a1
            pairs, N = _solve_with_reduction(t, N, with_zero, fixed=-a1, conjugate=conjugate)
            applied = "variational"
        else:
            one = Fraction(1) if _is_exact(t) else 1.0
            pairs, N = _solve_with_reduction(t, N, with_zero, fixed=-one, conjugate=conjugate)
            applied = "scale_fixed"
    if 2 * N < n_cond - (1 if n_cond % 2 else 0):
        diagnostics["reduced_to"] = N
    return FactorApproximant(
        pairs=pairs,
        prefactor=f.prefactor,
        order_k=k,
        mode=applied,
        beta=beta,
        matched_order=matched,
        diagnostics=diagnostics,
    )


def amplitude_factor(fa: FactorApproximant) -> AsymptoticForm:
    """Large-variable amplitude ``A prod A_i**n_i`` and exponent ``alpha + sum n_i``.

    Raises:
        NegativeBase: some ``A_i <= 0``.
    """
    B = _amplitude_value(fa.prefactor, fa.pairs)
    beta = float(fa.prefactor.exponent) + sum(complex(n).real for _, n in fa.pairs)
    return AsymptoticForm(B, beta)


def _is_integer(v) -> bool:
    return float(v).is_integer()


def eval_factor(fa: FactorApproximant, x) -> float:
    """Evaluate ``f0(x) * prod (1 + A_i x)**n_i``.

    Raises:
        DomainError: a base is zero with negative power, or negative with a
            non-integer power; ``x`` is reported as the offending singularity.
    """
    x = float(x)
    value = 1.0
    phase = 1.0 + 0j
    for a, n in fa.pairs:
        if isinstance(a, complex):
            # 1 + A x never meets the negative real axis for complex A
            phase *= (1.0 + a * x) ** n
            continue
        base = 1.0 + float(a) * x
        n = float(n)
        if base == 0 and n < 0:
            raise DomainError(f"pole at x = {-1 / float(a):.6g}", x=-1 / float(a))
        if base < 0 and not _is_integer(n):
            raise DomainError(f"branch point at x = {-1 / float(a):.6g}", x=-1 / float(a))
        value *= base ** n
    value *= phase.real
    try:
        return fa.prefactor(x) * value
    except ZeroDivisionError:
        raise DomainError("prefactor singular at x = 0", x=0.0) from None
