"""Command-line front end.

Exit codes: 0 success; 1 verification or cross-path failure; 2 input or
parse error; 3 singularity / degenerate-weight error.  Diagnostics go to
stderr, one line per failure; results go to stdout or --out.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    DegenerateWeightError,
    MatrixParseError,
    PoleError,
    SingularMatrixError,
)
from .greville import WeightedProblem, bordering_inverse, weighted_pinv
from .matrices import RfMatrix, constant_matrix
from .matrixio import format_matrix, parse_matrix_file
from .poly_greville import PolyMatrix
from .poly_greville import bordering_inverse as poly_bordering_inverse
from .poly_greville import weighted_pinv as poly_weighted_pinv
from .verify import penrose_check


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_file(fh.read())


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _diag(message):
    print(message, file=sys.stderr)


def _cmd_compute(args):
    a = _load(args.a)
    m = _load(args.m) if args.m else RfMatrix.identity(a.rows)
    n = _load(args.n) if args.n else RfMatrix.identity(a.cols)
    problem = WeightedProblem(a, m, n)

    if args.path == "rational":
        x = weighted_pinv(problem)
    else:
        a_p = PolyMatrix.from_rf_matrix(a)
        m_p = PolyMatrix.from_rf_matrix(m)
        n_p = PolyMatrix.from_rf_matrix(n)
        x = poly_weighted_pinv(a_p, m_p, n_p).to_rf_matrix()
        if args.path == "both":
            x_rat = weighted_pinv(problem)
            if x_rat != x:
                for r in range(x.rows):
                    for c in range(x.cols):
                        if x[r, c] != x_rat[r, c]:
                            _diag(
                                f"computation paths disagree at entry ({r + 1}, {c + 1})"
                            )
                            return 1
            x = x_rat

    if args.verify:
        report = penrose_check(a, m, n, x)
        if not report.all_hold:
            tag, r, c, residual = report.first_failure
            _diag(f"verification failed: equation {tag} at ({r}, {c}), residual {residual}")
            return 1
    _emit(format_matrix(x), args.out)
    return 0


def _cmd_invert(args):
    n = _load(args.n)
    if args.path == "rational":
        inv = bordering_inverse(n)
    else:
        inv = poly_bordering_inverse(PolyMatrix.from_rf_matrix(n)).to_rf_matrix()
    _emit(format_matrix(inv), args.out)
    return 0


def _cmd_verify(args):
    a = _load(args.a)
    m = _load(args.m)
    n = _load(args.n)
    x = _load(args.x)
    report = penrose_check(a, m, n, x)
    if report.all_hold:
        print("all four weighted Penrose equations hold")
        return 0
    tag, r, c, residual = report.first_failure
    _diag(f"equation {tag} fails at ({r}, {c}), residual {residual}")
    return 1


def _cmd_eval(args):
    mat = _load(args.infile)
    from fractions import Fraction

    try:
        point = Fraction(args.at)
    except (ValueError, ZeroDivisionError):
        _diag(f"invalid evaluation point {args.at!r}: expected <p>/<q> or an integer")
        return 2
    values = mat.eval_at(point)
    _emit(format_matrix(constant_matrix(values)), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wmpinv",
        description="Exact weighted pseudoinverses of univariate rational "
        "and polynomial matrices, by column partitioning.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "compute", help="weighted pseudoinverse of a matrix file"
    )
    p.add_argument("--a", required=True, help="input matrix file")
    p.add_argument("--m", help="row weight file (identity when omitted)")
    p.add_argument("--n", help="column weight file (identity when omitted)")
    p.add_argument(
        "--path",
        choices=("rational", "poly", "both"),
        default="rational",
        help="computation path; 'both' requires polynomial inputs and "
        "fails unless the two paths agree",
    )
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.add_argument(
        "--verify",
        action="store_true",
        help="check the four weighted Penrose equations on the result",
    )
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("invert", help="inverse of a symmetric matrix file")
    p.add_argument("--n", required=True, help="input matrix file")
    p.add_argument("--path", choices=("rational", "poly"), default="rational")
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser(
        "verify", help="check the Penrose equations for a candidate inverse"
    )
    p.add_argument("--a", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--x", required=True, help="candidate inverse file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("eval", help="evaluate a matrix file at a rational point")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--at", required=True, help="evaluation point, <p>/<q> or integer")
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.set_defaults(func=_cmd_eval)

    return parser


def run_command(argv):
    """Dispatch a CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        _diag(f"parse error: {exc}")
        return 2
    except OSError as exc:
        _diag(f"i/o error: {exc}")
        return 2
    except PoleError as exc:
        _diag(f"evaluation error: {exc}")
        return 2
    except (SingularMatrixError, DegenerateWeightError) as exc:
        stage = getattr(exc, "stage", None)
        where = f" (stage {stage})" if stage else ""
        _diag(f"algebra error{where}: {exc}")
        return 3
    except (ValueError, TypeError) as exc:
        _diag(f"input error: {exc}")
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
