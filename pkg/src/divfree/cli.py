"""Command-line front end.

    divfree charpoly|det|adjugate|pfaffian|padj FILE [flags]
    divfree bench --sizes 10,16 [flags]
    divfree euler s2|s4|FILE

Exit codes: 0 success, 2 parse error, 3 validation error, 4 internal
consistency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import InternalConsistencyError, MatrixFormatError, ValidationError
from .euler import euler_form, gauss_bonnet_check, parse_curvature, sphere_curvature
from .faddeev import char_poly
from .matrices import SkewMatrix, format_matrix, parse_matrix, ring_from_tag, skew_symmetrize
from .pfaffian import pfaffian_fl
from . import bench as bench_mod

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_INTERNAL = 4


def build_parser():
    parser = argparse.ArgumentParser(
        prog="divfree",
        description="Division-free exact linear algebra: characteristic "
        "polynomials, determinants, adjugates, Pfaffians and Euler forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_compute(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="matrix file")
        p.add_argument("--ring", help="override the ring tag declared in the file")
        p.add_argument("--json", action="store_true", help="JSON output")
        if name in ("pfaffian", "padj"):
            p.add_argument("--j-form", choices=("standard", "alternative"),
                           default="standard")
            p.add_argument("--skew-symmetrize", action="store_true",
                           help="apply (A - A^T)/2 before validation")
            p.add_argument("--tolerance", type=float,
                           help="skew validation tolerance for float matrices")
        return p

    add_compute("charpoly", "characteristic polynomial coefficients")
    add_compute("det", "determinant")
    add_compute("adjugate", "adjugate matrix")
    add_compute("pfaffian", "Pfaffian of a skew-symmetric matrix")
    add_compute("padj", "Pfaff-adjugate of a skew-symmetric matrix")

    b = sub.add_parser("bench", help="reproducible Pfaffian benchmark (CSV)")
    b.add_argument("--sizes", required=True,
                   help="comma-separated matrix sizes, e.g. 10,16,20")
    b.add_argument("--ring", default="rational",
                   choices=("rational", "integer", "float"))
    b.add_argument("--algorithms", default="fl",
                   help="comma-separated subset of fl,matchings,laplace")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--threads", type=int, default=1,
                   help="BLAS thread pin recorded in the CSV")
    b.add_argument("--override-caps", action="store_true")
    b.add_argument("--output", "-o", help="CSV file (stdout if omitted)")

    e = sub.add_parser("euler", help="Euler form / Gauss-Bonnet report")
    e.add_argument("input", help="s2, s4, or a curvature file")
    e.add_argument("--json", action="store_true")
    return parser


def _load_matrix(args):
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(str(exc)) from None
    ring = ring_from_tag(args.ring) if args.ring else None
    return parse_matrix(text, ring=ring)


def _load_skew(args):
    matrix = _load_matrix(args)
    if getattr(args, "skew_symmetrize", False):
        return skew_symmetrize(matrix)
    tolerance = getattr(args, "tolerance", None)
    if matrix.ring.exact:
        return SkewMatrix.validated(matrix)
    return SkewMatrix.validated(matrix, tolerance=tolerance)


def _emit(args, text_value, json_value):
    if getattr(args, "json", False):
        print(json.dumps(json_value, sort_keys=True))
    else:
        print(text_value)


def _cmd_charpoly(args):
    matrix = _load_matrix(args)
    result = char_poly(matrix)
    ring = matrix.ring
    coeffs = [ring.format(c) for c in result.coefficients]
    _emit(args, ", ".join(coeffs),
          {"command": "charpoly", "ring": ring.tag, "n": matrix.n,
           "coefficients": coeffs})


def _cmd_det(args):
    matrix = _load_matrix(args)
    ring = matrix.ring
    cs = char_poly(matrix).coefficients
    value = cs[matrix.n] if matrix.n % 2 == 0 else -cs[matrix.n]
    _emit(args, ring.format(value),
          {"command": "det", "ring": ring.tag, "n": matrix.n,
           "value": ring.format(value)})


def _cmd_adjugate(args):
    matrix = _load_matrix(args)
    adj = char_poly(matrix).adjugate
    _emit(args, format_matrix(adj).rstrip("\n"),
          {"command": "adjugate", "ring": matrix.ring.tag, "n": matrix.n,
           "matrix": format_matrix(adj)})


def _cmd_pfaffian(args):
    skew = _load_skew(args)
    result = pfaffian_fl(skew, args.j_form)
    ring = skew.ring
    _emit(args, ring.format(result.value),
          {"command": "pfaffian", "ring": ring.tag, "n": skew.n,
           "j_form": args.j_form, "value": ring.format(result.value),
           "odd_dimension": result.odd_dimension})


def _cmd_padj(args):
    skew = _load_skew(args)
    result = pfaffian_fl(skew, args.j_form)
    if result.odd_dimension:
        raise ValidationError("the Pfaff-adjugate needs an even size")
    _emit(args, format_matrix(result.pfaff_adjugate).rstrip("\n"),
          {"command": "padj", "ring": skew.ring.tag, "n": skew.n,
           "j_form": args.j_form,
           "matrix": format_matrix(result.pfaff_adjugate)})


def _cmd_bench(args):
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        raise ValidationError("bad --sizes list %r" % args.sizes) from None
    algorithms = tuple(tok for tok in args.algorithms.split(",") if tok)
    records = bench_mod.run_pfaffian_bench(
        sizes,
        ring_tag=args.ring,
        algorithms=algorithms,
        reps=args.reps,
        seed=args.seed,
        threads=args.threads,
        override_caps=args.override_caps,
    )
    csv_text = bench_mod.records_to_csv(records, seed=args.seed)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)


def _cmd_euler(args):
    name = args.input.lower()
    if name in ("s2", "s4"):
        report = gauss_bonnet_check(int(name[1]))
        text = "\n".join([
            "sphere dimension: %d" % report.dimension,
            "top coefficient: %s" % report.top_coefficient,
            "volume: %r" % report.volume,
            "integral: %r" % report.integral,
            "expected (2*pi)^m * chi: %r" % report.expected,
            "relative difference: %r" % report.relative_difference,
        ])
        _emit(args, text,
              {"command": "euler", "example": name,
               "top_coefficient": str(report.top_coefficient),
               "integral": report.integral, "expected": report.expected,
               "relative_difference": report.relative_difference})
        return
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(str(exc)) from None
    curvature = parse_curvature(text)
    result = euler_form(curvature)
    ring = curvature.omega.ring
    lines = [
        "euler form: %s" % ring.format(result.form),
        "top coefficient: %s" % result.top_coefficient,
    ]
    payload = {"command": "euler", "form": ring.format(result.form),
               "top_coefficient": str(result.top_coefficient)}
    if result.gauss_bonnet_integral is not None:
        lines.append("integral: %r" % result.gauss_bonnet_integral)
        payload["integral"] = result.gauss_bonnet_integral
    _emit(args, "\n".join(lines), payload)


_COMMANDS = {
    "charpoly": _cmd_charpoly,
    "det": _cmd_det,
    "adjugate": _cmd_adjugate,
    "pfaffian": _cmd_pfaffian,
    "padj": _cmd_padj,
    "bench": _cmd_bench,
    "euler": _cmd_euler,
}


def _pin_threads(argv):
    # must happen before numpy first loads its BLAS
    if "--threads" in argv:
        try:
            count = argv[argv.index("--threads") + 1]
        except IndexError:
            return
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, count)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    _pin_threads(argv)
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except MatrixFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except InternalConsistencyError as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
