"""Hard-sphere Bose gas equation of state from a second-order iterated root.

Units: ``m = a_s = 1``, so the close-packed density is ``rho_0 = sqrt(2)``
and energies are per particle.  The density enters through
``rho/rho_0 = x**6/(1 + x**2)**3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ..roots import IteratedRoot, amplitude_iterated_root
from ..series import PowerSeries, Prefactor, ReducedExpansion

__all__ = ["EquationOfState", "eos_equation_of_state", "eos_expansion", "density_from_x"]

RHO0 = math.sqrt(2.0)
#: close-packed energy ~ CLOSE_PACKED * x**4
CLOSE_PACKED = math.pi ** 2


def density_from_x(x: float) -> float:
    """``rho/rho_0`` as a function of the auxiliary variable ``x``."""
    return x ** 6 / (1.0 + x * x) ** 3


def eos_expansion() -> ReducedExpansion:
    """Low-density energy in ``x``: ``2 pi rho_0 x**6 (1 - 3x**2 + c x**3 + 6x**4 - d x**5)``."""
    q = math.sqrt(RHO0)  # sqrt(rho_0 a_s**3)
    coeffs = [1.0, 0.0, -3.0, 128.0 / (15.0 * math.sqrt(math.pi)) * q, 6.0, -192.0 / 5.0 * q]
    return ReducedExpansion(Prefactor(2 * math.pi * RHO0, 6), PowerSeries(coeffs))


@dataclass(frozen=True)
class EquationOfState:
    """Closed-form equation of state.

    Attributes:
        A2: Second tower parameter, fixed by the close-packed limit.
        b: Coefficient of ``(rho/rho_0)**(1/3)`` in the density form.
        root: The underlying iterated root in ``x``.
        energy: Energy per particle as a function of ``r = rho/rho_0``.
    """

    A2: float
    b: float
    root: IteratedRoot
    energy: Callable[[float], float]

    def energy_of_x(self, x: float) -> float:
        return self.root(x)


def eos_equation_of_state() -> EquationOfState:
    """Second-order iterated root with the close-packed constraint.

    The tower is ``(1 + A_1 x)**2 + A_2 x**2`` raised to ``gamma/2`` with
    ``gamma = 4 - 6 = -2``.  ``A_1 = a_1/gamma = 0`` comes from the expansion;
    ``A_2`` is chosen so that the amplitude equals ``pi**2`` instead of
    matching ``a_2``.
    """
    f = eos_expansion()
    gamma = -2
    A1 = f.series[1] / gamma
    # amplitude = A * (A1**2 + A2)**(gamma/2) = pi**2
    A2 = (CLOSE_PACKED / f.prefactor.amplitude) ** (2.0 / gamma) - A1 ** 2
    root = IteratedRoot((A1, A2), gamma, f.prefactor, 2)
    assert abs(amplitude_iterated_root(root).amplitude - CLOSE_PACKED) < 1e-9 * CLOSE_PACKED
    b = A2 - 1.0

    def energy(r: float) -> float:
        """Energy per particle at ``r = rho/rho_0`` in ``[0, 1)``."""
        if not 0.0 <= r < 1.0:
            raise ValueError("rho/rho_0 must lie in [0, 1)")
        u = r ** (1.0 / 3.0)
        return 2 * math.pi * RHO0 * r / ((1.0 - u) ** 2 * (1.0 + b * u))

    return EquationOfState(A2, b, root, energy)
