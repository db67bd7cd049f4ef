"""Method tags: one string names a family, its orders and its resolution mode.

Grammar ``<family>:<order-spec>:<mode>`` with ``<order-spec>`` either ``kK``
or ``kKpP``.  Examples::

    factor:k4:constrained        iterated-root:k3:fixed
    corrected-root:k2p2:fixed    corrected-factor:k3p4:constrained
    iterated-root:k3:additive    power-root:k4:stationary
    double:k4:fixed              pade:k4:baseline
    exponent-factor:k3:constrained factor:k4:constrained+conj

Amplitude families return the critical amplitude (or the finite limit when
the target exponent equals the prefactor exponent).  ``exponent-*`` families
return an exponent estimate.  ``power-*`` families return every stationary
value as a tuple.  Factor-based modes accept a ``+conj`` suffix that admits
complex-conjugate factor pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exponent import estimate_exponent
from .factor import amplitude_factor, build_factor
from .pade import pade_amplitude
from .roots import (
    additive_limit,
    amplitude_corrected,
    amplitude_iterated_root,
    build_corrected,
    build_iterated_root,
)
from .series import ReducedExpansion
from .transforms import double_renorm_amplitude, power_transform_extrapolate

__all__ = ["MethodTag", "parse_tag", "run_method", "FAMILIES"]

FAMILIES = {
    "factor": ("free", "constrained", "scale_fixed", "variational"),
    "corrected-factor": ("free", "constrained", "scale_fixed", "variational"),
    "iterated-root": ("fixed", "additive"),
    "corrected-root": ("fixed", "additive"),
    "power-factor": ("stationary",),
    "power-root": ("stationary",),
    "double": ("fixed",),
    "pade": ("baseline",),
    "exponent-factor": ("constrained", "scale_fixed", "variational"),
    "exponent-root": ("fixed",),
    "exponent-corrected": ("fixed",),
}

_CORRECTED = {"corrected-factor", "corrected-root", "exponent-corrected"}
_TAG = re.compile(r"^([a-z-]+):k(\d+)(?:p(\d+))?:([a-z_-]+)(\+conj)?$")
_CONJ_OK = {"factor", "corrected-factor", "exponent-factor"}


@dataclass(frozen=True)
class MethodTag:
    family: str
    k: int
    p: int | None
    mode: str
    conjugate: bool = False

    def __str__(self):
        order = f"k{self.k}" + (f"p{self.p}" if self.p is not None else "")
        return f"{self.family}:{order}:{self.mode}" + ("+conj" if self.conjugate else "")


def parse_tag(tag: str) -> MethodTag:
    """Parse and validate a method tag; raises ``ValueError`` when malformed."""
    m = _TAG.match(tag.strip())
    if not m:
        raise ValueError(f"malformed method tag {tag!r}")
    family, k, p, mode, conj = m.group(1), int(m.group(2)), m.group(3), m.group(4), bool(m.group(5))
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} in {tag!r}")
    if mode not in FAMILIES[family]:
        raise ValueError(f"mode {mode!r} not valid for {family}; expected one of {FAMILIES[family]}")
    if (p is not None) != (family in _CORRECTED):
        raise ValueError(f"{family} {'needs' if family in _CORRECTED else 'takes no'} a p order in {tag!r}")
    if conj and family not in _CONJ_OK:
        raise ValueError(f"+conj applies only to factor families, not {family}")
    return MethodTag(family, k, int(p) if p is not None else None, mode, conj)


def run_method(tag, f: ReducedExpansion, beta):
    """Evaluate the method named by ``tag`` on ``f`` with target exponent ``beta``.

    Returns a float, or a tuple of floats for ``power-*`` families.  Library
    exceptions propagate so callers can map them to statuses.
    """
    t = parse_tag(tag) if isinstance(tag, str) else tag
    fam, k, p, mode, conj = t.family, t.k, t.p, t.mode, t.conjugate
    if fam.startswith("exponent-"):
        family = {"exponent-factor": "factor", "exponent-root": "iterated-root",
                  "exponent-corrected": "corrected-root"}[fam]
        kwargs = {"mode": mode, "conjugate": conj} if fam == "exponent-factor" else {}
        if p is not None:
            kwargs["p"] = p
        return float(estimate_exponent(f, k, family, **kwargs))
    if beta is None:
        raise ValueError(f"{fam} needs a target exponent")
    if fam == "factor":
        return amplitude_factor(build_factor(f, k, mode, beta=beta, conjugate=conj)).amplitude
    if fam == "corrected-factor":
        base = build_factor(f, k, mode, beta=beta, conjugate=conj)
        start = base.matched_order + 1
        c = build_corrected(base, f.series.coeffs[start : start + p], p)
        return amplitude_corrected(c).amplitude
    if fam in ("iterated-root", "corrected-root") and mode == "additive":
        if f.gamma(beta) != 0:
            raise ValueError("the additive scheme applies only when beta equals the prefactor exponent")
        family = "iterated-root" if fam == "iterated-root" else "corrected-root"
        return additive_limit(f, k, family, p or 2).amplitude
    if fam == "iterated-root":
        return amplitude_iterated_root(build_iterated_root(f, k, beta)).amplitude
    if fam == "corrected-root":
        base = build_iterated_root(f, k, beta)
        c = build_corrected(base, f.series.coeffs[k + 1 : k + 1 + p], p)
        return amplitude_corrected(c).amplitude
    if fam in ("power-factor", "power-root"):
        family = "factor" if fam == "power-factor" else "iterated_root"
        sols = power_transform_extrapolate(f, k, beta, family)
        return tuple(s.amplitude.amplitude for s in sols)
    if fam == "double":
        return double_renorm_amplitude(f, k, beta).amplitude_B_star
    if fam == "pade":
        return pade_amplitude(f, k, beta)
    raise ValueError(f"unhandled family {fam!r}")  # pragma: no cover
