"""Command-line front end.

Exit codes: 0 = certified / verified, 1 = unresolved or failed verification,
2 = usage error (argparse's default).
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import criteria, galois, newton, polynomials, survey

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glpcert",
        description="Exact irreducibility and Galois certification for the "
                    "generalized Laguerre family at negative integer parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="print a family member")
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--r", type=int)
    form = p_poly.add_mutually_exclusive_group()
    form.add_argument("--monic", action="store_true", help="monic integral form (default)")
    form.add_argument("--hurwitz", action="store_true", help="divided-power coefficients")
    form.add_argument("--alpha", type=str, help="rational parameter form, e.g. --alpha -5/2")

    p_pg = sub.add_parser("polygon", help="Newton polygon of the monic member at a prime")
    p_pg.add_argument("--n", type=int, required=True)
    p_pg.add_argument("--r", type=int, required=True)
    p_pg.add_argument("--p", type=int, required=True)
    p_pg.add_argument("--json", action="store_true")
    p_pg.add_argument("--plot", type=Path, help="write a figure of the polygon to this file")

    p_check = sub.add_parser("check", help="irreducibility certificate for one pair")
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--r", type=int, required=True)
    p_check.add_argument("--json", action="store_true")

    p_gal = sub.add_parser("galois", help="Galois lower-bound certificate for one pair")
    p_gal.add_argument("--n", type=int, required=True)
    p_gal.add_argument("--r", type=int, required=True)
    p_gal.add_argument("--json", action="store_true")

    p_disc = sub.add_parser("disc", help="closed-form discriminant and square test")
    p_disc.add_argument("--n", type=int, required=True)
    p_disc.add_argument("--r", type=int, required=True)

    p_scan = sub.add_parser("scan", help="survey a box of (n, r) pairs")
    p_scan.add_argument("--n-min", type=int, default=4)
    p_scan.add_argument("--n-max", type=int, default=48741)
    p_scan.add_argument("--r-min", type=int, default=0)
    p_scan.add_argument("--r-max", type=int, default=8)
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--out", type=Path, help="write the report/records here")
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.add_argument("--figures", type=Path, help="directory for report figures")

    p_tab = sub.add_parser("tables", help="re-verify the bundled reference tables")
    p_tab.add_argument("--verify", choices=("1", "2", "all"), default="all")

    p_mod = sub.add_parser("modexp", help="admissible-modification experiment")
    p_mod.add_argument("--n", type=int, default=3)
    p_mod.add_argument("--r-max", type=int, default=20)
    p_mod.add_argument("--b-bound", type=int, default=20)

    return parser


def _cmd_poly(args) -> int:
    if args.alpha is not None:
        alpha = Fraction(args.alpha)
        poly = polynomials.glp_alpha(args.n, alpha)
        print(poly)
        return 0
    if args.r is None:
        print("poly: --r is required unless --alpha is given", file=sys.stderr)
        return 2
    if args.hurwitz:
        f = polynomials.glp_hurwitz(args.n, args.r)
        print(" ".join(str(a) for a in f.hcoeffs))
        return 0
    print(polynomials.glp_monic(args.n, args.r))
    return 0


def _cmd_polygon(args) -> int:
    poly = polynomials.glp_monic(args.n, args.r)
    pg = newton.polygon_of_intpoly(poly, args.p)
    if args.json:
        print(pg.to_json())
    else:
        print(pg.to_text())
    if args.plot:
        from . import plotting

        points = [(j, newton.ord_p(c, args.p)) for j, c in enumerate(poly.coeffs) if c]
        plotting.polygon_figure(points, pg, args.plot,
                                title=f"n={args.n}, r={args.r}, p={args.p}")
        print(f"figure written to {args.plot}")
    return 0


def _cmd_check(args) -> int:
    if args.n == 0:
        print("degree 0: constant polynomial, nothing to certify")
        return 0
    cert = criteria.decide_irreducible(args.n, args.r)
    if args.json:
        print(json.dumps(cert.to_json_dict(), sort_keys=True))
    else:
        print(f"n={cert.n} r={cert.r} method={cert.method} witness={cert.witness}")
    return 0 if cert.resolved else 1


def _cmd_galois(args) -> int:
    if args.n == 0:
        print("degree 0: trivial Galois group")
        return 0
    icert = criteria.decide_irreducible(args.n, args.r) if args.n > 4 else None
    if icert is not None and not icert.resolved:
        print(f"irreducibility unresolved for n={args.n}, r={args.r}", file=sys.stderr)
        return 1
    gcert = galois.alternating_certificate(args.n, args.r)
    if args.json:
        print(json.dumps(gcert.to_json_dict(), sort_keys=True))
    else:
        print(f"n={gcert.n} r={gcert.r} conclusion={gcert.conclusion} "
              f"method={gcert.method} witness={gcert.witness}")
    return 0 if gcert.resolved else 1


def _cmd_disc(args) -> int:
    d = polynomials.discriminant_formula(args.n, args.r)
    square = galois.disc_is_square(args.n, args.r)
    print(f"disc = {d}")
    print(f"square = {square}")
    return 0


def _cmd_scan(args) -> int:
    report = survey.scan_box(n_min=args.n_min, n_max=args.n_max,
                             r_min=args.r_min, r_max=args.r_max,
                             workers=args.jobs)
    summary = survey.report_to_json_dict(report)
    if args.out:
        if args.format == "csv":
            with open(args.out, "w", newline="") as fh:
                survey.records_to_csv(report.records, fh)
            side = Path(args.out).with_suffix(".summary.json")
            side.write_text(json.dumps(summary, indent=2, sort_keys=True))
        else:
            Path(args.out).write_text(json.dumps(summary, indent=2, sort_keys=True))
    if args.figures:
        from . import plotting

        args.figures.mkdir(parents=True, exist_ok=True)
        scope = f"n{args.n_min}-{args.n_max}_r{args.r_min}-{args.r_max}"
        scan_methods = args.figures / f"scan_methods_{scope}.png"
        scan_exc = args.figures / f"scan_exceptional_{scope}.png"
        plotting.scan_method_figure(report, scan_methods)
        plotting.scan_exceptional_figure(report, scan_exc)
        print(f"figures written to {scan_methods} and {scan_exc}")
    print(f"pairs={report.total_pairs} exceptional={len(report.exceptional)} "
          f"table1={report.table_verdict} checksum={report.checksum}")
    unresolved = report.method_counts.get(criteria.METHOD_UNRESOLVED, 0)
    if unresolved:
        print(f"{unresolved} pairs unresolved", file=sys.stderr)
        return 1
    return 0


def _cmd_tables(args) -> int:
    ok = True
    if args.verify in ("1", "all"):
        rep = survey.verify_witness_table()
        passed = sum(1 for row in rep.rows if row.get("pass"))
        print(f"witness table: {passed}/{len(rep.rows)} rows pass")
        ok = ok and rep.passed
    if args.verify in ("2", "all"):
        rep = survey.verify_jordan_table()
        data_rows = [row for row in rep.rows if "q" in row]
        passed = sum(1 for row in data_rows if row.get("pass"))
        print(f"jordan table: {passed}/{len(data_rows)} rows pass "
              f"(derivation {rep.rows[-1].get('derivation', '?')})")
        ok = ok and rep.passed
    return 0 if ok else 1


def _cmd_modexp(args) -> int:
    result = survey.modification_experiment(n=args.n, r_max=args.r_max,
                                            b_bound=args.b_bound)
    print(f"tested={result['tested']} reducible={len(result['reducible'])} "
          f"family_ok={result['family_ok']}")
    for hit in result["reducible"]:
        print(f"reducible: {hit}")
    return 0 if not result["reducible"] and result["family_ok"] else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "poly": _cmd_poly,
        "polygon": _cmd_polygon,
        "check": _cmd_check,
        "galois": _cmd_galois,
        "disc": _cmd_disc,
        "scan": _cmd_scan,
        "tables": _cmd_tables,
        "modexp": _cmd_modexp,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
