"""Command-line front end.

Verbs: build, verify, gram, norton, radical, certify, catalog.
Targets: m4a, m4b, dihedral:<TYPE>.  Parameters are exact rationals
("p/q" or integer strings; decimals are rejected).  --out writes a JSON
report, otherwise a human-readable summary is printed.  Exit codes:
0 = all checks pass, 1 = a check failed, 2 = usage or build error.
"""

from __future__ import annotations

import argparse
import sys

from . import certify as cert
from .catalog import DIHEDRAL_TYPES, dihedral
from .errors import AxiaError
from .m4 import build_m4a, build_m4b, specialize_m4a
from .scalars import format_rational, parse_rational
from .serialize import algebra_to_json, dump_json


def _parse_t(value):
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc))


def _parse_grid(value):
    return [_parse_t(part) for part in value.split(",")]


class UsageError(Exception):
    pass


def _build_target(target):
    if target == "m4a":
        built = build_m4a()
        return built.algebra, built.form
    if target == "m4b":
        built = build_m4b()
        return built.algebra, built.form
    if target.startswith("dihedral:"):
        name = target.split(":", 1)[1]
        if name not in DIHEDRAL_TYPES:
            raise UsageError(f"unknown dihedral type {name!r}; "
                             f"choose from {', '.join(DIHEDRAL_TYPES)}")
        d = dihedral(name)
        return d.algebra, d.form
    raise UsageError(f"unknown target {target!r}; expected m4a, m4b or "
                     f"dihedral:<TYPE>")


def _emit(report, out):
    if out:
        dump_json(report, out)
        return
    _print_human(report)


def _print_human(report, indent=""):
    if isinstance(report, dict) and "checks" in report:
        print(f"{indent}{report.get('target', 'report')}: "
              f"{'PASS' if report.get('pass') else 'FAIL'}")
        for c in report["checks"]:
            mark = "ok " if c["pass"] else "FAIL"
            print(f"{indent}  [{mark}] {c['name']}: expected {c['expected']}"
                  f", got {c['actual']}")
    elif isinstance(report, list):
        for item in report:
            _print_human(item, indent)
    elif isinstance(report, dict):
        print(indent + ", ".join(f"{k}={v}" for k, v in report.items()))
    else:
        print(f"{indent}{report}")


def _report_passes(report):
    if isinstance(report, dict):
        if "pass" in report:
            return bool(report["pass"])
        return all(_report_passes(v) for v in report.values()
                   if isinstance(v, (dict, list)))
    if isinstance(report, list):
        return all(_report_passes(item) for item in report)
    return True


# ---------------------------------------------------------------------------
# verb implementations
# ---------------------------------------------------------------------------

def _cmd_build(args):
    alg, form = _build_target(args.target)
    doc = algebra_to_json(alg, form)
    if args.out:
        dump_json(doc, args.out)
    else:
        print(f"{args.target}: dimension {alg.dim} over {alg.field.kind}")
        print("labels:", " ".join(alg.labels))
    return 0


def _cmd_verify(args):
    if args.target == "m4a":
        report = cert.verify_m4a()
    elif args.target == "m4b":
        report = cert.verify_m4b()
    elif args.target.startswith("dihedral:"):
        name = args.target.split(":", 1)[1]
        if name not in DIHEDRAL_TYPES:
            raise UsageError(f"unknown dihedral type {name!r}")
        report = cert.verify_dihedral(name)
    else:
        raise UsageError(f"unknown target {args.target!r}")
    _emit(report, args.out)
    return 0 if report["pass"] else 1


def _cmd_gram(args):
    det, diag = cert.gram_analysis()
    certs = cert.certify_psd_interval(diag)
    det_ok = det == cert.gram_det_closed_form()
    all_ok = det_ok and all(
        c.verdict != cert.IntervalCertificate.FAILS for c in certs)
    report = {
        "target": "gram",
        "determinant": str(det),
        "determinant_matches_closed_form": det_ok,
        "ldlt_diagonal": [str(d) for d in diag],
        "interval_certificates": [c.to_json() for c in certs],
        "pass": all_ok,
    }
    _emit(report, args.out)
    return 0 if all_ok else 1


def _cmd_radical(args):
    points = _points_from(args)
    report = [{"t0": format_rational(t0),
               "radical_dim": cert.radical_dimension(t0)} for t0 in points]
    _emit(report, args.out)
    return 0


def _cmd_norton(args):
    if args.symbolic:
        rep = cert.norton_symbolic()
        report = {"target": "norton-symbolic", "status": rep["status"],
                  "degree_cap": rep["degree_cap"],
                  "columns_processed": rep["columns_processed"],
                  "diagonal": [str(d) for d in rep["diagonal"]]}
        _emit(report, args.out)
        return 0
    points = _points_from(args)
    report = [{"t0": format_rational(t0), "norton_psd": cert.norton_check(t0)}
              for t0 in points]
    _emit(report, args.out)
    return 0


def _cmd_certify(args):
    what = args.what
    if what == "majorana":
        points = _points_from(args)
        report = [cert.majorana_certify(t0).to_json() for t0 in points]
        _emit(report, args.out)
        return 0
    if what == "quotient":
        points = _points_from(args)
        report = [cert.quotient_certify(t0) for t0 in points]
        _emit(report, args.out)
        return 0 if all(r.get("pass") for r in report) else 1
    if what == "v4a":
        report = cert.v4a_certify()
        _emit(report, args.out)
        return 0 if report["pass"] else 1
    if what == "grid":
        report = {"definiteness": cert.definiteness_report(),
                  "norton": cert.norton_grid_report()}
        _emit(report, args.out)
        return 0
    raise UsageError(f"unknown certification {what!r}")


def _cmd_catalog(args):
    if not args.type:
        report = [{"type": name, "dimension": dihedral(name).algebra.dim}
                  for name in DIHEDRAL_TYPES]
        _emit(report, args.out)
        return 0
    if args.type not in DIHEDRAL_TYPES:
        raise UsageError(f"unknown dihedral type {args.type!r}")
    d = dihedral(args.type)
    doc = algebra_to_json(d.algebra, d.form)
    if args.out:
        dump_json(doc, args.out)
    else:
        print(f"{args.type}: dimension {d.algebra.dim}, "
              f"labels {' '.join(d.algebra.labels)}")
    return 0


def _points_from(args):
    if getattr(args, "t", None) is not None:
        return [_parse_t(args.t)]
    if getattr(args, "grid", None) is not None:
        return _parse_grid(args.grid)
    raise UsageError("provide --t P/Q or --grid P/Q,P/Q,...")


# ---------------------------------------------------------------------------

def _make_parser():
    parser = argparse.ArgumentParser(
        prog="axia",
        description="Exact construction and certification of the axial "
                    "algebras of Monster type (dihedral catalog, M_4B, "
                    "M_4A over Q(t)).")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_out(p):
        p.add_argument("--out", help="write a JSON report to this path")

    p = sub.add_parser("build", help="construct an algebra")
    p.add_argument("target", help="m4a, m4b or dihedral:<TYPE>")
    add_out(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("target", help="m4a, m4b or dihedral:<TYPE>")
    add_out(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gram", help="symbolic Gram determinant, LDLT "
                                    "diagonal and interval certificates")
    add_out(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("radical", help="radical dimension of M(t0)")
    p.add_argument("--t", help="exact rational parameter p/q")
    p.add_argument("--grid", help="comma-separated rational list")
    add_out(p)
    p.set_defaults(func=_cmd_radical)

    p = sub.add_parser("norton", help="Norton-inequality verdicts")
    p.add_argument("--t", help="exact rational parameter p/q")
    p.add_argument("--grid", help="comma-separated rational list")
    p.add_argument("--symbolic", action="store_true",
                   help="symbolic LDLT over Q(t) (slow; degree-capped via "
                        "AXIA_DEGREE_CAP)")
    add_out(p)
    p.set_defaults(func=_cmd_norton)

    p = sub.add_parser("certify", help="certification reports")
    p.add_argument("what", choices=["majorana", "quotient", "v4a", "grid"])
    p.add_argument("--t", help="exact rational parameter p/q")
    p.add_argument("--grid", help="comma-separated rational list")
    add_out(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("catalog", help="list or export dihedral algebras")
    p.add_argument("type", nargs="?", help="dihedral type, e.g. 4A")
    add_out(p)
    p.set_defaults(func=_cmd_catalog)

    return parser


def run(argv) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
