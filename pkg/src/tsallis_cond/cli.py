"""Command-line interface.

    tsallis-cond entropy STATE.json --q 2 [--json]
    tsallis-cond werner --x 0.5 --q 2 [--json]
    tsallis-cond curve --q-min 0.5 --q-max 1000 --points 120 --output curve.csv

State files are JSON documents::

    {"dims": [2, 2], "entries": [[re, im], [re, im], ...]}

with ``entries`` holding the ``(d_A d_B)**2`` matrix elements in row-major
order, composite index ``a * d_B + b``.

Exit codes: 0 success, 1 usage or parse error, 2 invalid state,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import criteria
from .classical import QIndex
from .errors import EntropyError, InvalidQ, NotDensityMatrix, OutOfRange, RootBracketFailure
from .quantum import DensityMatrix, quantum_conditional_tsallis, quantum_pseudoadditivity_residual, quantum_tsallis

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_STATE = 2
EXIT_NUMERICAL = 3

CURVE_HEADER = "q,x_star,s_at_one_third"


class UsageError(Exception):
    pass


class ParseError(UsageError):
    pass


def fmt(value: float) -> str:
    """15 significant digits, no locale, no negative zero."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if value == 0.0:
        value = 0.0
    return format(value, ".15g")


def parse_state(text: str, source: str = "<state>") -> DensityMatrix:
    """Parse a state document; raises ParseError with a location, or NotDensityMatrix."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object with 'dims' and 'entries'")
    for key in ("dims", "entries"):
        if key not in doc:
            raise ParseError(f"{source}: missing field '{key}'")
    dims = doc["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims)
    ):
        raise ParseError(f"{source}: field 'dims' must be two positive integers, got {dims!r}")
    entries = doc["entries"]
    side = dims[0] * dims[1]
    if not isinstance(entries, list):
        raise ParseError(f"{source}: field 'entries' must be a list of [re, im] pairs")
    if len(entries) != side * side:
        raise ParseError(
            f"{source}: field 'entries' has {len(entries)} items, expected {side * side} for dims {dims}"
        )
    values = np.empty(side * side, dtype=np.complex128)
    for k, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pair)
        ):
            raise ParseError(f"{source}: entries[{k}] must be a [re, im] pair of numbers, got {pair!r}")
        values[k] = complex(pair[0], pair[1])
    return DensityMatrix(values.reshape(side, side), (dims[0], dims[1]))


def dump_state(rho: DensityMatrix) -> str:
    entries = [[float(z.real), float(z.imag)] for z in rho.mat.ravel()]
    return json.dumps({"dims": list(rho.dims), "entries": entries}) + "\n"


def parse_q(text: str) -> QIndex:
    try:
        return QIndex(float(text))
    except ValueError as exc:
        raise InvalidQ(f"invalid q {text!r}: {exc}") from None


def _emit(rows: list[tuple[str, str, object]], as_json: bool, out) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps({key: value for key, _, value in rows}) + "\n")
        return
    width = max(len(label) for _, label, _ in rows)
    for _, label, value in rows:
        text = fmt(value) if isinstance(value, float) else str(value).lower()
        out.write(f"{label.ljust(width)}  {text}\n")


def cmd_entropy(path: str, q: str, as_json: bool = False, out=None) -> int:
    qi = parse_q(q)
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise UsageError(f"state file not found: {path}") from None
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    rho = parse_state(text, str(p))
    rows = [
        ("q", "q", qi.q),
        ("S_AB", "S_q(A,B)", quantum_tsallis(rho, qi)),
        ("S_A", "S_q(A)", quantum_tsallis(rho.marginal("A"), qi)),
        ("S_B", "S_q(B)", quantum_tsallis(rho.marginal("B"), qi)),
    ]
    if rho.is_bipartite:
        rows += [
            ("S_B_given_A", "S_q(B|A)", quantum_conditional_tsallis(rho, "A", qi)),
            ("S_A_given_B", "S_q(A|B)", quantum_conditional_tsallis(rho, "B", qi)),
            ("pseudoadditivity_residual", "pseudoadditivity residual", quantum_pseudoadditivity_residual(rho, qi)),
        ]
    _emit(rows, as_json, out)
    return EXIT_OK


def cmd_werner(x: float, q: str, as_json: bool = False, out=None) -> int:
    qi = parse_q(q)
    rho = criteria.werner_state(x)
    closed = criteria.werner_conditional_closed_form(x, qi)
    report = criteria.entropic_criterion(rho, qi)
    rows = [
        ("x", "x", float(x)),
        ("q", "q", qi.q),
        ("closed_form", "S_q(B|A) closed form", closed),
        ("pipeline", "S_q(B|A) from spectra", report.s_cond_BA),
        ("difference", "difference", report.s_cond_BA - closed),
        ("entropic_separable_hint", "entropic criterion satisfied", report.entropic_separable_hint),
        ("renyi2_hint", "Renyi alpha=2 criterion satisfied", report.renyi2_hint),
        ("ppt_verdict", "PPT satisfied", report.ppt_verdict),
        ("ppt_min_eigenvalue", "PPT minimum eigenvalue", report.ppt_min_eigenvalue),
        ("threshold_bell", "threshold a) Bell, x <", criteria.BELL_THRESHOLD),
        ("threshold_renyi2", "threshold b) Renyi alpha=2, x <", criteria.RENYI2_THRESHOLD),
        ("threshold_ppt", "threshold c) PPT, x <", criteria.PPT_THRESHOLD),
    ]
    _emit(rows, as_json, out)
    return EXIT_OK


def curve_rows(grid: list[float]) -> tuple[list[str], bool]:
    """CSV lines (header first) and whether any root bracket failed."""
    lines = [CURVE_HEADER]
    failed = False
    for q in grid:
        try:
            x_star = criteria.werner_threshold(q)
        except RootBracketFailure:
            x_star = math.nan
            failed = True
        s_third = criteria.werner_conditional_closed_form(1.0 / 3.0, q)
        lines.append(f"{fmt(q)},{fmt(x_star)},{fmt(s_third)}")
    return lines, failed


def cmd_curve(q_min: float, q_max: float, points: int, output: str, markers: bool = True) -> int:
    try:
        grid = criteria.figure_grid(q_min, q_max, points, markers=markers)
    except OutOfRange as exc:
        raise UsageError(str(exc)) from None
    lines, failed = curve_rows(grid)
    data = "\n".join(lines) + "\n"
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc}") from None
    if failed:
        print("error: root bracketing failed for at least one q (rows marked nan)", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tsallis-cond", description="Nonadditive conditional entropy and separability tests.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", help="entropies of a bipartite state file")
    p.add_argument("state", help="JSON state file")
    p.add_argument("--q", required=True, help="entropic index (1 selects the von Neumann branch)")
    p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("werner", help="criteria report for a Werner state")
    p.add_argument("--x", type=float, required=True, help="mixing parameter in [0, 1]")
    p.add_argument("--q", required=True, help="entropic index")
    p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("curve", help="write the x*(q) threshold curve as CSV")
    p.add_argument("--q-min", type=float, default=0.1)
    p.add_argument("--q-max", type=float, default=1000.0)
    p.add_argument("--points", type=int, default=120)
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--no-markers", action="store_true", help="do not add the exact grid points q=1 and q=2")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "entropy":
            return cmd_entropy(args.state, args.q, args.json)
        if args.command == "werner":
            return cmd_werner(args.x, args.q, args.json)
        return cmd_curve(args.q_min, args.q_max, args.points, args.output, markers=not args.no_markers)
    except (UsageError, InvalidQ, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotDensityMatrix as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID_STATE
    except EntropyError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
