"""Command-line front end.

JSON goes to stdout when it is not a terminal; a terminal gets aligned
plain text.  Exit status: 0 success, 1 bad input or usage, 2 a computation
that could not be carried out.
"""
from __future__ import annotations

import argparse
import json
import sys

from .classify import classify_tight_pairs
from .errors import ComputationError, DrgError, TrivialTheta
from .graph_params import detect_case, load_array
from .numeric import Tolerance, default_tolerance, format_scalar, parse_scalar
from .recovery import feasible_array_from_sequence, recover_intersection_numbers
from .sequences import pseudo_cosine_sequence
from .spectra import graph_eigenvalues, reduced_matrix_eigenvalues, snap
from .tightness import AnyReal, is_tight_pair


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _scalar_list(text: str) -> list:
    return [_scalar(part) for part in text.split(",") if part.strip()]


def _tolerance(text: str) -> Tolerance:
    try:
        return Tolerance.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=_tolerance, default=None,
                        help='absolute tolerance "T" or "rel=R,abs=A"')
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="approx", action="store_false",
                      help="rational arithmetic (default when the input allows it)")
    mode.add_argument("--approx", dest="approx", action="store_true",
                      help="floating-point arithmetic")
    common.set_defaults(approx=False)

    parser = _Parser(prog="drgtight", description="Tight pairs of distance-regular graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check an intersection array")
    p.add_argument("file")

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues, descending")
    p.add_argument("file")
    p.add_argument("--reduced", action="store_true", help="use the reduced case-II matrix")

    p = sub.add_parser("pcs", parents=[common], help="pseudo cosine sequence")
    p.add_argument("file")
    p.add_argument("--theta", type=_scalar, required=True)

    p = sub.add_parser("tight", parents=[common], help="direct tight-pair test")
    p.add_argument("file")
    p.add_argument("--theta", type=_scalar, required=True)
    p.add_argument("--theta2", type=_scalar, required=True)

    p = sub.add_parser("classify", parents=[common], help="classify all tight pairs")
    p.add_argument("file")
    p.add_argument("--candidates", default="auto", help='"auto" or a comma-separated list')

    p = sub.add_parser("recover", parents=[common], help="intersection numbers from a tight sequence")
    p.add_argument("file")
    p.add_argument("--theta", type=_scalar, required=True)
    p.add_argument("--epsilon", type=_scalar, required=True)
    p.add_argument("--cosine", action="store_true",
                   help="treat the sequence as a cosine sequence, which fixes c_D")

    p = sub.add_parser("feasible", parents=[common], help="array of a feasible sequence")
    p.add_argument("--sigma", type=_scalar_list, required=True)
    p.add_argument("--epsilon", type=_scalar, required=True)
    return parser


def _emit(doc, out, table: bool) -> None:
    if not table:
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if isinstance(doc, dict):
        width = max((len(k) for k in doc), default=0)
        for key, value in doc.items():
            if isinstance(value, list):
                value = ", ".join(json.dumps(v) if isinstance(v, dict) else str(v) for v in value)
            out.write(f"{key.ljust(width)}  {value}\n")
    else:
        out.write(f"{doc}\n")


def _maybe_float(value, approx: bool):
    return float(value) if approx else value


def _run(args, out, table: bool) -> None:
    tol = args.tol or default_tolerance()
    arr = None
    if hasattr(args, "file"):
        arr = load_array(args.file)
        if args.approx and arr.exact:
            arr = arr.as_float()

    if args.command == "validate":
        doc = arr.to_json()
        doc["k"] = format_scalar(arr.k)
        doc["a"] = [format_scalar(x) for x in arr.a]
        doc["case"] = detect_case(arr).value
        doc["warnings"] = list(arr.warnings)
        _emit(doc, out, table)

    elif args.command == "spectrum":
        if args.reduced:
            values = reduced_matrix_eigenvalues(arr, tol).values
        else:
            values = graph_eigenvalues(arr, tol).values
        if arr.exact:
            values = snap(arr, values, reduced=args.reduced)
        for v in values:
            out.write(format_scalar(v) + "\n")

    elif args.command == "pcs":
        s = pseudo_cosine_sequence(arr, _maybe_float(args.theta, args.approx))
        out.write(", ".join(format_scalar(x) for x in s.sigma) + "\n")

    elif args.command == "tight":
        s = pseudo_cosine_sequence(arr, _maybe_float(args.theta, args.approx))
        r = pseudo_cosine_sequence(arr, _maybe_float(args.theta2, args.approx))
        w = is_tight_pair(arr, s, r, tol)
        if w is None:
            out.write("not tight\n")
            return
        eps = "any" if isinstance(w.epsilon, AnyReal) else format_scalar(w.epsilon)
        _emit({"gamma": [format_scalar(x) for x in w.product], "psi": format_scalar(w.psi),
               "epsilon": eps}, out, table)

    elif args.command == "classify":
        if args.candidates.strip().lower() == "auto":
            candidates = None
        else:
            try:
                candidates = _scalar_list(args.candidates)
            except argparse.ArgumentTypeError as exc:
                raise UsageError(str(exc)) from None
            if args.approx:
                candidates = [float(x) for x in candidates]
        report = classify_tight_pairs(arr, candidates, tol)
        _emit(report.to_json(), out, table)

    elif args.command == "recover":
        s = pseudo_cosine_sequence(arr, _maybe_float(args.theta, args.approx))
        rec = recover_intersection_numbers(s, _maybe_float(args.epsilon, args.approx),
                                           cosine=args.cosine, tol=tol)
        _emit(rec.to_json(arr.name), out, table)

    elif args.command == "feasible":
        sigma = [_maybe_float(x, args.approx) for x in args.sigma]
        rec = feasible_array_from_sequence(sigma, _maybe_float(args.epsilon, args.approx), tol)
        _emit(rec.to_json(), out, table)


def main(argv=None) -> int:
    parser = build_parser()
    out, err = sys.stdout, sys.stderr
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"drgtight: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        _run(args, out, table=out.isatty())
    except (ComputationError, TrivialTheta) as exc:
        err.write(f"drgtight: computation failed: {exc}\n")
        return 2
    except (DrgError, UsageError, ValueError) as exc:
        err.write(f"drgtight: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
