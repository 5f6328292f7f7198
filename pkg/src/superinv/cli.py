"""Command line interface.

Exit codes: 0 success, 1 ``member`` verdict false, 2 usage or input error,
3 a theorem check or internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chars, gens, membership, superalg, weyl
from .poly import ParseError, PolyError, format_poly, parse_poly

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _frac(x: Fraction):
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _datum(args):
    return superalg.get(args.algebra)


def _poly(args, d):
    """Parse over the reduced coordinates, falling back to the full ones."""
    if d.full == d.vartable:
        return parse_poly(args.poly, d.vartable)
    return d.reduce(parse_poly(args.poly, d.full))


def cmd_roots(args):
    d = _datum(args)
    order = len(weyl.enumerate(d))
    tilde = [{"root": str(a), "nu": d.nu[a],
              "directions": [[_frac(x) for x in h] for h in d.cartan_dirs[a]]}
             for a in d.tilde_odd_pos]
    payload = {"algebra": d.name, "coordinates": list(d.vartable.names),
               "eliminated": {k: format_poly(v) for k, v in d.eliminated.items()},
               "weyl_order": order, "even_roots": len(d.even_roots),
               "odd_roots": len(d.odd_roots), "tilde_R_plus": tilde}
    lines = ["algebra: %s" % d.name,
             "coordinates: %s" % ", ".join(d.vartable.names)]
    for k, v in d.eliminated.items():
        lines.append("eliminated: %s = %s" % (k, format_poly(v)))
    lines.append("|W| = %d, even roots %d, odd roots %d" % (order, len(d.even_roots), len(d.odd_roots)))
    for t in tilde:
        lines.append("  %s  nu=%d  h=%s" % (t["root"], t["nu"],
                                              "; ".join("(" + ", ".join(h) + ")" for h in t["directions"])))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_dims(args):
    d = _datum(args)
    dims = [membership.graded_basis(d, k).dim for k in range(args.max_degree + 1)]
    _emit(args, {"dims": dims}, " ".join(str(x) for x in dims))
    return EXIT_OK


def cmd_member(args):
    d = _datum(args)
    v = membership.in_I(_poly(args, d), d)
    text = "ok" if v.ok else "\n".join(
        "fail: root %s, %s, remainder %s" % (f["root"], f["condition"], f["remainder"])
        for f in v.to_dict()["failures"])
    _emit(args, v.to_dict(), text)
    return EXIT_OK if v.ok else EXIT_FALSE


def cmd_gens(args):
    d = _datum(args)
    items = gens.generator_set(d, args.max_degree).to_list()
    rows = [{"name": it["name"], "degree": it["degree"], "poly": it["polynomial"]} for it in items
            if it["degree"] <= args.max_degree]
    _emit(args, rows, "\n".join("%s (deg %d): %s" % (r["name"], r["degree"], r["poly"]) for r in rows))
    return EXIT_OK


def cmd_check(args):
    d = _datum(args)
    oracle_dims = None
    if args.oracle:
        from . import oracle
        oracle_dims = {k: oracle.restrict_to_cartan(oracle.coadjoint_invariants(args.algebra, k)).dim
                       for k in range(min(args.max_degree, args.oracle_max_degree) + 1)}
    reports = membership.check_main_theorem(d, args.max_degree, oracle_dims)
    rows = []
    for r in reports:
        row = {"degree": r.degree, "dim_intersection": r.intersection,
               "dim_closed_form": r.closed_form, "equal": r.agree}
        if r.oracle is not None:
            row["dim_oracle"] = r.oracle
        rows.append(row)
    text = "\n".join("deg %d: intersection %d, closed form %s%s  %s" % (
        r["degree"], r["dim_intersection"], r["dim_closed_form"],
        (", oracle %d" % r["dim_oracle"]) if "dim_oracle" in r else "",
        "equal" if r["equal"] else "MISMATCH") for r in rows)
    _emit(args, rows, text)
    return EXIT_OK if all(r["equal"] for r in rows) else EXIT_VIOLATION


def cmd_oracle(args):
    from . import oracle
    v = oracle.oracle_check(args.algebra, args.degree)
    payload = {"dim_invariants": v.dim_invariants, "dim_restricted": v.dim_restricted,
               "matches_membership": v.matches_membership}
    _emit(args, payload, "invariants %d, restricted %d, membership %d, %s" % (
        v.dim_invariants, v.dim_restricted, v.dim_membership,
        "match" if v.matches_membership else "MISMATCH"))
    return EXIT_OK if v.matches_membership else EXIT_VIOLATION


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError("--n expects comma separated integers") from None


def _solver(args, fn):
    try:
        cs = fn(args.k, _ints(args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = [_frac(c) for c in cs]
    _emit(args, {"coefficients": out}, " ".join(out))
    return EXIT_OK


def cmd_sinh(args):
    return _solver(args, chars.sinh_solver)


def cmd_cosh(args):
    return _solver(args, chars.cosh_solver)


def cmd_pq(args):
    d = _datum(args)
    try:
        p = gens.express_PQ(_poly(args, d), d)
    except gens.GeneratorError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"P": format_poly(p), "Q": format_poly(gens.odd_root_product(d, True))
                 if d.tilde_odd_pos else "1", "in_I": True}, format_poly(p))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="superinv",
                                 description="Invariant polynomials on Lie superalgebras.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, fn, algebra=True, help=None):
        p = sub.add_parser(name, help=help)
        if algebra:
            p.add_argument("algebra")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("roots", cmd_roots, help="root datum summary")
    add("dims", cmd_dims, help="graded dimensions of I(h*)").add_argument(
        "--max-degree", type=int, default=6)
    add("member", cmd_member, help="membership test").add_argument("--poly", required=True)
    add("gens", cmd_gens, help="closed-form generators").add_argument(
        "--max-degree", type=int, default=6)
    p = add("check-theorem", cmd_check, help="intersection vs closed form (vs oracle)")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-max-degree", type=int, default=3)
    add("oracle", cmd_oracle, help="coadjoint invariants vs membership").add_argument(
        "--degree", type=int, required=True)
    for name, fn in (("sinh-solve", cmd_sinh), ("cosh-solve", cmd_cosh)):
        p = add(name, fn, algebra=False)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", required=True)
    add("pq", cmd_pq, help="P = Q f").add_argument("--poly", required=True)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for attr in ("max_degree", "degree"):
        if getattr(args, attr, 0) is not None and getattr(args, attr, 0) < 0:
            print("error: degree must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (superalg.CatalogError, UsageError, PolyError, weyl.GroupTooLarge) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except gens.TheoremViolation as exc:
        print("theorem violation: %s" % exc, file=sys.stderr)
        return EXIT_VIOLATION
    except Exception as exc:  # oracle cap and injectivity findings
        from . import oracle
        if isinstance(exc, oracle.InjectivityViolation):
            print("injectivity violation: %s" % exc, file=sys.stderr)
            return EXIT_VIOLATION
        if isinstance(exc, oracle.OracleError):
            print("error: %s" % exc, file=sys.stderr)
            return EXIT_USAGE
        raise


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
