"""Command line interface.

Exit status: 0 on success, 1 on bad input, 2 when an enumeration guard
refuses the request (raise it with ``HOLODENSE_GUARD``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from holodense._guard import GuardExceeded
from holodense.curves import (
    LPoly,
    count_points_bruteforce,
    curve_place_counts,
    enumerate_affine_places,
    frobenius_traces,
    traces_and_counts,
    validate_curve,
)
from holodense.density import density_enclosure, generic_enclosure
from holodense.experiments import convergence_scan, reports_to_csv, reports_to_json, run_experiment
from holodense.fields import make_field


def parse_int_list(text: str) -> list:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def parse_curve(text: str):
    try:
        q, a, b = parse_int_list(text)
    except ValueError:
        raise ValueError(f"--curve expects Q,A,B, got {text!r}") from None
    return validate_curve(make_field(q), a, b)


def _target(args):
    if args.space == "rational":
        if args.q is None:
            raise ValueError("--q is required for the rational space")
        return make_field(args.q)
    if args.space == "elliptic":
        if args.curve is None:
            raise ValueError("--curve is required for the elliptic space")
        return parse_curve(args.curve)
    raise ValueError(f"space {args.space!r} has no empirical mode")


def cmd_density(args, out):
    if args.space == "rational":
        if args.q is None:
            raise ValueError("--q is required for the rational space")
        enc = density_enclosure(make_field(args.q).order, args.m, args.t)
    elif args.space == "elliptic":
        enc = density_enclosure(parse_curve(args.curve), args.m, args.t)
    else:
        if args.lpoly is None or args.removed is None or args.q is None:
            raise ValueError("--lpoly, --removed and --q are required for the generic space")
        L = LPoly(args.q, parse_int_list(args.lpoly))
        enc = generic_enclosure(L, parse_int_list(args.removed), args.m, args.t)
    out.write(json.dumps(enc.to_dict(args.digits)) + "\n")


def _emit_reports(reports, fmt, out):
    out.write(reports_to_csv(reports) if fmt == "csv" else reports_to_json(reports) + "\n")


def cmd_experiment(args, out):
    report = run_experiment(_target(args), args.n, args.m, args.mode, args.trials, args.seed, args.workers)
    _emit_reports([report], args.out, out)


def cmd_scan(args, out):
    if args.n_max < args.n_min:
        reports = []
    else:
        reports = convergence_scan(_target(args), range(args.n_min, args.n_max + 1), args.m, args.mode,
                                   args.trials, args.seed, args.workers)
    _emit_reports(reports, args.out, out)


def cmd_places(args, out):
    E = parse_curve(args.curve)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["degree", "x_rep", "y_rep"])
    for P in enumerate_affine_places(E, args.dmax):
        writer.writerow([P.degree, repr(P.point.x), repr(P.point.y)])


def cmd_count(args, out):
    E = parse_curve(args.curve)
    n1 = count_points_bruteforce(E, 1)
    counts = traces_and_counts(E, args.dmax, n1)
    traces = frobenius_traces(E, args.dmax, n1)
    places = curve_place_counts(E, args.dmax, n1)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["d", "N_d", "a_d", "B_d"])
    for d in range(args.dmax):
        writer.writerow([d + 1, counts[d], traces[d], places[d]])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="holodense", description="Densities of coprime tuples in holomorphy rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="exact density with a truncated Euler-product enclosure (JSON)")
    p.add_argument("--space", choices=("rational", "elliptic", "generic"), required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--curve", help="Q,A,B for y^2 = x^3 + Ax + B over F_Q")
    p.add_argument("--lpoly", help="L-polynomial coefficients c0,c1,...")
    p.add_argument("--removed", help="degrees of the removed places d1,d2,...")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, default=6, help="truncation degree (default 6)")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_density)

    def add_experiment_args(p):
        p.add_argument("--space", choices=("rational", "elliptic"), required=True)
        p.add_argument("--q", type=int)
        p.add_argument("--curve")
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--mode", choices=("exhaustive", "mc"), default="exhaustive")
        p.add_argument("--trials", type=int, default=10**4)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", choices=("csv", "json"), default="csv")

    p = sub.add_parser("experiment", help="one empirical density run")
    add_experiment_args(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("scan", help="empirical densities for n = n_min .. n_max")
    add_experiment_args(p)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("places", help="affine places up to a degree (CSV)")
    p.add_argument("--curve", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--out", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_places)

    p = sub.add_parser("count", help="N_d, a_d and affine place counts B_d")
    p.add_argument("--curve", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except GuardExceeded as exc:
        print(f"holodense: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"holodense: {exc}", file=sys.stderr)
        return 1
    out.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
