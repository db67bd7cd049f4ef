"""Command-line front end.

Subcommands::

    ssx extrapolate FILE --method root --order 2 --beta 1/2
    ssx exponent FILE --family factor --order 3
    ssx bench [--corpus-dir DIR] [--families pade,factor] [--report out.csv]
    ssx curve FILE --method factor --order 4 --beta 1/2 --xmax 100 --points 50
    ssx eos [--points 20]

``FILE`` is either a bare series literal or a corpus case file; a case file
also supplies the default target exponent and the reference value.

Exit codes: 0 on success, 1 on usage or input errors, 2 when the requested
approximant does not exist (complex branch, domain error and the like).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import errors
from .corpus import BenchmarkCase, _load_case, default_corpus_dir, eos_equation_of_state, load_corpus
from .exponent import estimate_exponent
from .factor import amplitude_factor, build_factor, eval_factor
from .methods import FAMILIES, MethodTag, parse_tag, run_method
from .pade import eval_pade
from .roots import build_corrected, build_iterated_root, eval_corrected, eval_iterated_root
from .series import parse_scalar, reduced_from_literal

CSV_COLUMNS = ("case_id", "method_tag", "value", "reference", "abs_error", "status")

METHODS = {
    "factor": "factor",
    "root": "iterated-root",
    "corrected-root": "corrected-root",
    "power-factor": "power-factor",
    "power-root": "power-root",
    "double": "double",
    "pade": "pade",
}

CURVE_METHODS = ("factor", "root", "corrected-root", "pade")

# Most specific classes first: the first isinstance match wins.
_STATUS = (
    (errors.ComplexBranch, "complex"),
    (errors.InversionDomain, "inversion-domain"),
    (errors.DomainError, "domain-error"),
    (errors.NoRealSolution, "no-real-solution"),
    (errors.DegenerateMoments, "degenerate-moments"),
    (errors.ZeroGamma, "zero-gamma"),
    (errors.NoFiniteLimit, "no-finite-limit"),
    (errors.VelocityZeroCrossing, "velocity-zero-crossing"),
    (errors.QuadratureFailure, "quadrature-failure"),
    (errors.SingularPadeSystem, "singular-pade"),
    (errors.NegativeRatio, "negative-ratio"),
    (errors.ZeroLeadingCoefficient, "zero-leading-coefficient"),
    (errors.NonUnitConstant, "non-unit-constant"),
    (errors.PrecisionLoss, "precision-loss"),
    (errors.SSXError, "error"),
    (ValueError, "invalid-request"),
    (ArithmeticError, "arithmetic-error"),
)

# printed status words and the run statuses that reproduce them
_STATUS_WORDS = {"complex": {"complex"}, "negative": {"negative-ratio"}}


def status_of(exc: BaseException) -> str:
    """Status string for a failed method call."""
    for cls, name in _STATUS:
        if isinstance(exc, cls):
            return name
    return "internal-error"


@dataclass(frozen=True)
class RunReport:
    case_id: str
    method_tag: str
    value: object
    reference: object
    abs_error: float | None
    status: str
    verdict: str | None = None

    def row(self) -> list:
        return [self.case_id, self.method_tag, _fmt(self.value), _fmt(self.reference), _fmt(self.abs_error), self.status]


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, tuple):
        return ";".join(_fmt(x) for x in v)
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ input


def _load_input(path: str):
    """Return ``(case_id, expansion, default_beta, case_or_None)``."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}: {exc.msg}") from None
    try:
        if isinstance(obj, dict) and "raw" in obj and "id" in obj:
            case = _load_case(p)
            return case.id, case.series, case.target_beta, case
        return p.stem, reduced_from_literal(obj), None, None
    except (errors.ParseError, errors.InvariantViolation, errors.NonUnitConstant) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _beta(args, default):
    if args.beta is None:
        return default
    try:
        return parse_scalar(args.beta)
    except errors.ParseError as exc:
        raise UsageError(f"--beta: {exc}") from None


def _method_tag(args, beta) -> MethodTag:
    family = METHODS[args.method]
    mode = args.mode
    if mode is None:
        if family == "factor":
            mode = "free" if beta is None else "constrained"
        else:
            mode = FAMILIES[family][0]
    p = args.p if family == "corrected-root" else None
    tag = f"{family}:k{args.order}" + (f"p{p}" if p is not None else "") + f":{mode}"
    if args.conj:
        tag += "+conj"
    try:
        return parse_tag(tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _reference(case: BenchmarkCase | None, exponent: bool = False):
    if case is None:
        return None
    if exponent:
        return float(case.exact_exponent) if case.exact_exponent is not None else None
    return case.reference


def _report(case_id, tag, value, reference, status="ok") -> RunReport:
    err = None
    if status == "ok" and reference is not None and isinstance(value, float):
        err = abs(value - reference)
    return RunReport(case_id, str(tag), value, reference, err, status)


# ------------------------------------------------------------------ output


def _emit(reports, fmt, out, extra=None):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            w.writerow(r.row())
    elif fmt == "json":
        payload = {"rows": [{k: v for k, v in asdict(r).items() if v is not None or k in CSV_COLUMNS} for r in reports]}
        if extra:
            payload.update(extra)
        json.dump(payload, out, indent=2, sort_keys=True, default=list)
        out.write("\n")
    else:
        rows = [list(CSV_COLUMNS) + (["verdict"] if any(r.verdict for r in reports) else [])]
        for r in reports:
            rows.append(r.row() + ([r.verdict or ""] if len(rows[0]) > len(CSV_COLUMNS) else []))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
        if extra:
            for k, v in extra.items():
                out.write(f"{k}: {v}\n")


# ------------------------------------------------------------------ commands


def cmd_extrapolate(args, out) -> int:
    case_id, f, default_beta, case = _load_input(args.input)
    beta = _beta(args, default_beta)
    tag = _method_tag(args, beta)
    if beta is None and not (tag.family == "factor" and tag.mode == "free"):
        raise UsageError(f"--beta is required for {tag}")
    ref = _reference(case)
    extra = None
    try:
        if tag.family == "factor" and tag.mode == "free":
            form = amplitude_factor(build_factor(f, tag.k, "free", beta=None, conjugate=tag.conjugate))
            value = float(form.amplitude)
            extra = {"exponent": float(form.exponent)}
        else:
            value = run_method(tag, f, beta)
    except errors.SSXError as exc:
        _emit([_report(case_id, tag, status_of(exc), ref, status_of(exc))], args.format, out, {"message": str(exc)})
        return 2
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = [_report(case_id, tag, value, ref)]
    if extra is not None and args.format == "csv":
        # the frozen schema has no exponent column: it gets its own row
        reports.append(_report(case_id, f"{tag}#exponent", extra["exponent"], _reference(case, True)))
    _emit(reports, args.format, out, extra)
    return 0


def cmd_exponent(args, out) -> int:
    case_id, f, _, case = _load_input(args.input)
    kwargs = {"p": args.p}
    if args.family == "factor":
        kwargs.update(mode=args.mode or "constrained", conjugate=args.conj)
    tag = {"factor": "exponent-factor", "iterated-root": "exponent-root", "corrected-root": "exponent-corrected"}[
        args.family
    ]
    label = f"{tag}:k{args.order}" + (f"p{args.p}" if args.family == "corrected-root" else "")
    label += f":{kwargs.get('mode', 'fixed')}" + ("+conj" if args.conj and args.family == "factor" else "")
    ref = _reference(case, exponent=True)
    try:
        value = float(estimate_exponent(f, args.order, args.family, **kwargs))
    except errors.SSXError as exc:
        _emit([_report(case_id, label, status_of(exc), ref, status_of(exc))], args.format, out, {"message": str(exc)})
        return 2
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit([_report(case_id, label, value, ref)], args.format, out)
    return 0


def _abs_error(value, pv, magnitude):
    got = value if isinstance(value, tuple) else (value,)
    if magnitude:
        got = tuple(abs(g) for g in got)
    if not got or not pv.values:
        return None
    return max(min(abs(g - v) for g in got) for v in pv.values)


def bench_case(case: BenchmarkCase, tag: str) -> RunReport:
    """Run one printed comparison and judge it against its tolerance."""
    pv = case.printed_values[tag]
    reference = pv.status if pv.status is not None else (pv.values if len(pv.values) > 1 else pv.values[0])
    if case.target_beta is None and not tag.startswith("exponent-"):
        return RunReport(case.id, tag, "skipped", reference, None, "skipped", "fail")
    try:
        value = run_method(tag, case.series, case.target_beta)
        status = "ok"
    except Exception as exc:  # every failure becomes a status row
        value, status = status_of(exc), status_of(exc)
    if pv.status is not None:
        verdict = "pass" if status in _STATUS_WORDS[pv.status] else "fail"
        return RunReport(case.id, tag, value, reference, None, status, verdict)
    if status != "ok":
        return RunReport(case.id, tag, value, reference, None, status, "fail")
    err = _abs_error(value, pv, case.compare_magnitude)
    verdict = "pass" if pv.matches(value, case.compare_magnitude) else "fail"
    return RunReport(case.id, tag, value, reference, err, status, verdict)


def run_bench(corpus_dir=None, families=None) -> list:
    """Every (case, printed tag) comparison, sorted by case id then tag."""
    root = Path(corpus_dir) if corpus_dir is not None else default_corpus_dir()
    cases = load_corpus(root)
    reports = []
    for case in cases:
        for tag in sorted(case.printed_values):
            if families and parse_tag(tag).family not in families:
                continue
            reports.append(bench_case(case, tag))
    return sorted(reports, key=lambda r: (r.case_id, r.method_tag))


def cmd_bench(args, out) -> int:
    families = None
    if args.families:
        families = {s.strip() for s in args.families.split(",") if s.strip()}
        unknown = families - set(FAMILIES)
        if unknown:
            raise UsageError(f"unknown families {sorted(unknown)}; known: {sorted(FAMILIES)}")
    try:
        reports = run_bench(args.corpus_dir, families)
    except (errors.ParseError, errors.InvariantViolation) as exc:
        raise UsageError(str(exc)) from None
    passed = sum(r.verdict == "pass" for r in reports)
    summary = {"comparisons": len(reports), "pass": passed, "fail": len(reports) - passed}
    if args.report:
        with open(args.report, "w", newline="") as fh:
            _emit(reports, "csv", fh)
    if args.format == "csv":
        _emit(reports, "csv", out)
        sys.stderr.write(f"summary: {summary['comparisons']} comparisons, {passed} pass, {summary['fail']} fail\n")
    else:
        _emit(reports, args.format, out, {"summary": summary} if args.format == "json" else None)
        if args.format == "text":
            out.write(f"summary: {summary['comparisons']} comparisons, {passed} pass, {summary['fail']} fail\n")
    return 0


def _curve_function(tag: MethodTag, f, beta):
    if tag.family == "factor":
        fa = build_factor(f, tag.k, tag.mode, beta=beta, conjugate=tag.conjugate)
        return lambda x: eval_factor(fa, x)
    if tag.mode == "additive":
        raise UsageError("the additive scheme yields a limit only; no curve is available")
    if tag.family == "iterated-root":
        r = build_iterated_root(f, tag.k, beta)
        return lambda x: eval_iterated_root(r, x)
    if tag.family == "corrected-root":
        base = build_iterated_root(f, tag.k, beta)
        c = build_corrected(base, f.series.coeffs[tag.k + 1 : tag.k + 1 + tag.p], tag.p)
        return lambda x: eval_corrected(c, x)
    return lambda x: eval_pade(f, tag.k, beta, x)


def cmd_curve(args, out) -> int:
    if args.method not in CURVE_METHODS:
        raise UsageError(f"curve supports {', '.join(CURVE_METHODS)}; not {args.method}")
    _, f, default_beta, _ = _load_input(args.input)
    beta = _beta(args, default_beta)
    tag = _method_tag(args, beta)
    if beta is None and not (tag.family == "factor" and tag.mode == "free"):
        raise UsageError(f"--beta is required for {tag}")
    if not (0 < args.xmin < args.xmax) or args.points < 2:
        raise UsageError("need 0 < --xmin < --xmax and --points >= 2")
    try:
        fn = _curve_function(tag, f, beta)
    except errors.SSXError as exc:
        sys.stderr.write(f"{status_of(exc)}: {exc}\n")
        return 2
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("x", "value", "status"))
    for x in np.geomspace(args.xmin, args.xmax, args.points):
        try:
            y = float(fn(float(x)))
            if not math.isfinite(y):
                raise errors.DomainError("non-finite value", x=float(x))
            w.writerow((f"{x:.10g}", f"{y:.12g}", "ok"))
        except (errors.SSXError, ArithmeticError, ValueError) as exc:
            w.writerow((f"{x:.10g}", "", status_of(exc)))  # gap marker
    return 0


def cmd_eos(args, out) -> int:
    eos = eos_equation_of_state()
    if args.points:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("rho_over_rho0", "energy"))
        for i in range(1, args.points + 1):
            r = i / (args.points + 1)
            w.writerow((f"{r:.10g}", f"{eos.energy(r):.12g}"))
        return 0
    data = {"A2": eos.A2, "b": eos.b, "A1": float(eos.root.A[0]) + 0.0, "gamma": float(eos.root.gamma)}
    if args.format == "json":
        json.dump(data, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for k, v in data.items():
            out.write(f"{k} = {v:.15g}\n")
    return 0


# ------------------------------------------------------------------ parser


def _add_method_args(sp, need_method=True):
    sp.add_argument("input", help="series literal or corpus case JSON file")
    sp.add_argument("--method", required=need_method, choices=sorted(METHODS))
    sp.add_argument("--order", "-k", type=int, required=True)
    sp.add_argument("--beta", help="target critical exponent (decimal or p/q)")
    sp.add_argument("--mode", help="resolution mode (defaults per method)")
    sp.add_argument("--p", type=int, default=2, help="correction order for corrected-root")
    sp.add_argument("--conj", action="store_true", help="admit complex-conjugate factor pairs")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ssx", description="Extrapolate truncated series to large arguments.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("extrapolate", help="amplitude (or finite limit) of one approximant")
    _add_method_args(sp)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")

    sp = sub.add_parser("exponent", help="critical exponent from the series alone")
    sp.add_argument("input")
    sp.add_argument("--family", choices=("factor", "iterated-root", "corrected-root"), default="factor")
    sp.add_argument("--order", "-k", type=int, required=True)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--mode", choices=("constrained", "scale_fixed", "variational"))
    sp.add_argument("--conj", action="store_true")
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")

    sp = sub.add_parser("bench", help="run the corpus regression")
    sp.add_argument("--corpus-dir", help="directory of case files (default: bundled, or $SSX_CORPUS_DIR)")
    sp.add_argument("--families", help="comma-separated family names to include")
    sp.add_argument("--report", help="also write the CSV report to this path")
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")

    sp = sub.add_parser("curve", help="sample f*(x) on a log grid as CSV")
    _add_method_args(sp)
    sp.add_argument("--xmin", type=float, default=1e-2)
    sp.add_argument("--xmax", type=float, default=1e2)
    sp.add_argument("--points", type=int, default=50)

    sp = sub.add_parser("eos", help="closed-form equation of state")
    sp.add_argument("--points", type=int, default=0, help="emit energy samples over rho/rho0 in (0, 1)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


_COMMANDS = {
    "extrapolate": cmd_extrapolate,
    "exponent": cmd_exponent,
    "bench": cmd_bench,
    "curve": cmd_curve,
    "eos": cmd_eos,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"ssx {args.command}: {exc}\n")
        return 1


def run(argv) -> tuple:
    """Run ``main`` capturing stdout; returns ``(exit_code, text)``."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
