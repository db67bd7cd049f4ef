"""Benchmark cases: coefficients, reference values and printed method results.

Each case is one JSON file.  The function is stored as a raw literal
``{"prefactor": {"A", "alpha"}, "coeffs": [c_0, c_1, ...]}`` meaning
``A x**alpha sum c_n x**n``; ``c_0`` need not be one and is folded into the
amplitude on load.  Rationals are strings ``"p/q"``; printed decimals are
strings too, so they load as exact fractions.

``printed_values`` maps a method tag (see :mod:`ssx.methods`) to the printed
value: a decimal string, a list of strings for methods with several
stationary solutions, or one of the status words ``complex`` / ``negative``
when the reported outcome is a failure.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..errors import InvariantViolation, ParseError
from ..methods import parse_tag
from ..series import PowerSeries, Prefactor, ReducedExpansion, parse_scalar
from .eos import EquationOfState, eos_equation_of_state
from .oracles import oracle_expand

__all__ = [
    "BenchmarkCase",
    "PrintedValue",
    "load_corpus",
    "default_corpus_dir",
    "oracle_expand",
    "eos_equation_of_state",
    "EquationOfState",
    "TRANSFORMS",
    "STATUS_WORDS",
]

TRANSFORMS = ("none", "square-variable", "eos-variable")
STATUS_WORDS = ("complex", "negative")


@dataclass(frozen=True)
class PrintedValue:
    """A printed result and its comparison tolerance.

    ``values`` holds one or more decimals; ``status`` is set instead when the
    printed outcome is a failure.  The tolerance is two units in the last
    printed digit.
    """

    text: tuple
    status: str | None = None
    label: str | None = None

    @property
    def values(self) -> tuple:
        return tuple(float(t) for t in self.text) if self.status is None else ()

    @property
    def tolerance(self) -> float:
        if self.status is not None:
            return 0.0
        exps = [Decimal(t).as_tuple().exponent for t in self.text]
        return 2 * 10.0 ** max(exps)

    def matches(self, value, magnitude: bool = False) -> bool:
        """True when ``value`` (a float or tuple of floats) agrees with every printed value."""
        if self.status is not None:
            return False
        got = value if isinstance(value, tuple) else (value,)
        if magnitude:
            got = tuple(abs(v) for v in got)
        tol = self.tolerance * (1 + 1e-9)
        return all(any(abs(g - v) <= tol for g in got) for v in self.values)


@dataclass(frozen=True)
class BenchmarkCase:
    id: str
    series: ReducedExpansion
    target_beta: object
    exact_amplitude: float | None = None
    exact_limit: float | None = None
    exact_exponent: object = None
    transform: str = "none"
    provenance: str = ""
    printed_values: dict = field(default_factory=dict)
    title: str = ""
    oracle: str | None = None
    reference_value: float | None = None
    reference_uncertainty: float | None = None
    reference_kind: str | None = None
    compare_magnitude: bool = False

    @property
    def reference(self):
        """Best available reference for the amplitude or limit."""
        for v in (self.exact_amplitude, self.exact_limit, self.reference_value):
            if v is not None:
                return float(v)
        return None


def default_corpus_dir() -> Path:
    """Bundled data directory, overridden by ``SSX_CORPUS_DIR``."""
    env = os.environ.get("SSX_CORPUS_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files(__package__) / "data"))


def _scalar(value, where):
    if value is None:
        return None
    try:
        return parse_scalar(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _build_series(raw: dict, transform: str, pad_to: int | None, where: str) -> ReducedExpansion:
    try:
        pre = raw["prefactor"]
        coeffs = raw["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{where}: raw series missing field {exc}") from None
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError(f"{where}: coeffs must be a non-empty list")
    c = [_scalar(v, f"{where}: coeffs[{i}]") for i, v in enumerate(coeffs)]
    if c[0] == 0:
        raise ParseError(f"{where}: c_0 must be nonzero")
    if pad_to is not None and pad_to >= len(c):
        c += [c[0] * 0] * (pad_to + 1 - len(c))
    A = _scalar(pre.get("A", 1), f"{where}: prefactor.A")
    alpha = _scalar(pre.get("alpha", 0), f"{where}: prefactor.alpha")
    if transform == "square-variable":
        # g = x**2: the half-integer ladder in g becomes an integer one in x
        alpha = alpha * 2
    s = PowerSeries(c)
    reduced = PowerSeries(v / s[0] for v in s.coeffs)
    return ReducedExpansion(Prefactor(A * s[0], alpha), reduced)


def _printed_values(obj: dict, labels: dict, where: str) -> dict:
    out = {}
    for tag, value in obj.items():
        try:
            parse_tag(tag)
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
        label = labels.get(tag)
        if isinstance(value, str) and value in STATUS_WORDS:
            out[tag] = PrintedValue((), value, label)
            continue
        texts = tuple(value) if isinstance(value, list) else (value,)
        for t in texts:
            try:
                Decimal(str(t))
                float(t)
            except Exception:
                raise ParseError(f"{where}: printed value {t!r} for {tag} is not a decimal") from None
        out[tag] = PrintedValue(tuple(str(t) for t in texts), None, label)
    return out


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _load_case(path: Path) -> BenchmarkCase:
    text = path.read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from None
    where = str(path)
    if not isinstance(obj, dict) or "id" not in obj:
        raise ParseError(f"{where}: missing case id")
    cid = obj["id"]
    transform = obj.get("transform", "none")
    if transform not in TRANSFORMS:
        raise ParseError(f"{where}: unknown transform {transform!r}")
    if "raw" not in obj:
        raise ParseError(f"{where}: missing raw series")
    series = _build_series(obj["raw"], transform, obj.get("pad_to_order"), where)
    beta = _scalar(obj.get("target_beta"), f"{where}: target_beta")
    if beta is not None and transform == "square-variable":
        beta = beta * 2
    exact = {k: _scalar(obj.get(k), f"{where}: {k}") for k in ("exact_amplitude", "exact_limit", "exact_exponent")}
    pv = _printed_values(obj.get("printed_values", {}), obj.get("printed_labels", {}), where)
    case = BenchmarkCase(
        id=cid,
        series=series,
        target_beta=beta,
        exact_amplitude=float(exact["exact_amplitude"]) if exact["exact_amplitude"] is not None else None,
        exact_limit=float(exact["exact_limit"]) if exact["exact_limit"] is not None else None,
        exact_exponent=exact["exact_exponent"],
        transform=transform,
        provenance=obj.get("provenance", ""),
        printed_values=pv,
        title=obj.get("title", ""),
        oracle=obj.get("oracle"),
        reference_value=obj.get("reference_value"),
        reference_uncertainty=obj.get("reference_uncertainty"),
        reference_kind=obj.get("reference_kind"),
        compare_magnitude=bool(obj.get("compare_magnitude", False)),
    )
    _validate(case)
    return case


def _validate(case: BenchmarkCase) -> None:
    if not any(v is not None for v in (case.exact_amplitude, case.exact_limit, case.exact_exponent)) and not (
        case.printed_values or case.reference_value is not None
    ):
        raise InvariantViolation(f"case {case.id}: no reference value and no printed results")
    if case.series.series[0] != 1:
        raise InvariantViolation(f"case {case.id}: reduced series does not start with 1")
    if case.oracle is not None:
        ref = oracle_expand(case.oracle, case.series.order)
        scale = ref[0]
        for n, c in enumerate(case.series.series.coeffs):
            want = ref[n] / scale
            if abs(float(c) - float(want)) > 1e-9 * max(1.0, abs(float(want))):
                raise InvariantViolation(f"case {case.id}: a_{n} = {float(c)!r} disagrees with oracle {float(want)!r}")


def load_corpus(path=None) -> list:
    """Load every ``*.json`` case under ``path`` (default: bundled corpus).

    Returns:
        Cases sorted by id.

    Raises:
        ParseError: malformed file, with the file name (and line for JSON
            syntax errors).
        InvariantViolation: a case fails validation, named by id.
    """
    root = Path(path) if path is not None else default_corpus_dir()
    if not root.is_dir():
        raise ParseError(f"corpus directory {root} does not exist")
    cases = [_load_case(p) for p in sorted(root.glob("*.json"))]
    ids = [c.id for c in cases]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise InvariantViolation(f"duplicate case ids: {sorted(dup)}")
    return sorted(cases, key=lambda c: c.id)
