"""Command-line surface: exact products, factorizations, scans and reports.

Exit codes: 0 success, 2 parse error (bad polynomial/subgroup text or
flags), 3 resource cap exceeded, 4 internal invariant violation.
All numeric output is exact unless the subcommand is explicitly analytic
(mahler, growth references, density sums).
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import analytics, lattice, products, symbolic
from .cache import ResultCache, poly_key
from .errors import ParseError, TorusDivError
from .laurent import format_poly, parse_poly
from .lattice import mu_torus, parse_group
from .numth import primes_up_to
from .products import FactoredProduct


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusdiv",
        description="Exact divisibility sequences of Laurent polynomials "
        "over torsion subgroups of the N-torus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=False):
        p.add_argument("--json", action="store_true", help="emit JSON to stdout")
        p.add_argument("--csv", action="store_true", help="emit CSV to stdout")
        p.add_argument(
            "--out", metavar="DIR", help="write CSV and PNG reports into DIR"
        )
        p.add_argument("--cache", metavar="DIR", help="enable the result cache")
        p.add_argument(
            "--threads", type=int, default=1, help="worker pool size for scans"
        )
        p.add_argument(
            "--max-elements",
            type=int,
            default=lattice.MAX_ELEMENTS,
            help="resource cap on enumerated subgroup elements",
        )
        p.add_argument("--arity", type=int, help="force the number of variables")
        if group:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--n", type=int, help="use the full group mu_n^N")
            g.add_argument(
                "--group",
                help='subgroup literal, e.g. "N=2;m=4;gens=(1,2)(0,2)"',
            )

    p = sub.add_parser("w", help="product of f over a finite subgroup")
    p.add_argument("poly")
    common(p, group=True)

    p = sub.add_parser(
        "factor",
        help="conjugate-orbit factor table of the subgroup product",
        epilog="CSV columns: order, subgroup, point, value, exponent, vanished",
    )
    p.add_argument("poly")
    common(p, group=True)

    p = sub.add_parser(
        "ra",
        help="ranks of apparition of a prime",
        epilog="CSV columns: p, order, subgroup",
    )
    p.add_argument("poly")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    common(p)

    p = sub.add_parser(
        "zsig",
        help="primitive parts and the Zsigmondy set",
        epilog="CSV columns: order, subgroup, primitive_part, in_zsigmondy_set",
    )
    p.add_argument("poly")
    p.add_argument("--max-order", type=int, required=True)
    common(p)

    p = sub.add_parser(
        "growth",
        help="exact product growth against the Mahler measure",
        epilog="CSV columns: n, sign, bit_length, log_abs, normalized, "
        "had_zeros, factored_head",
    )
    p.add_argument("poly")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--refine", type=int, default=analytics.DEFAULT_REFINEMENT)
    common(p)

    p = sub.add_parser(
        "mahler",
        help="Mahler measure by torus quadrature",
        epilog="CSV columns: refinement, nodes, value, error_indicator",
    )
    p.add_argument("poly")
    p.add_argument("--refine", type=int, default=analytics.DEFAULT_REFINEMENT)
    common(p)

    p = sub.add_parser(
        "ptfamily",
        help="the X + 1/X + Y + 1/Y + T family",
        epilog="CSV columns: n, deg_w, deg_b, gcd_deg, gcd_bound, "
        "free_orbits, fourth_power",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--check",
        choices=["w", "eighth-power", "orbit-count", "gcd", "fourth-power", "all"],
        default="all",
    )
    common(p)

    p = sub.add_parser(
        "romanoff",
        help="desk-checkable inequalities behind the apparition estimate",
    )
    p.add_argument("poly")
    p.add_argument("--x", type=int, required=True, help="subgroup order bound")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--p-bound", type=int, default=50)
    common(p)

    p = sub.add_parser(
        "density",
        help="primes with a small rank of apparition",
        epilog="CSV columns: prime",
    )
    p.add_argument("poly")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--p-bound", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    common(p)

    return parser


def _parse_poly_arg(args):
    return parse_poly(args.poly, arity=args.arity)


def _resolve_group(args, arity: int):
    if getattr(args, "n", None) is not None:
        if args.n < 1:
            raise ParseError("--n must be positive")
        return mu_torus(arity, args.n), f"n={args.n}"
    sub = parse_group(args.group)
    if sub.arity != arity:
        raise ParseError(
            f"subgroup arity {sub.arity} does not match polynomial arity {arity}"
        )
    return sub, sub.serialize()


def _cache_for(args):
    return ResultCache(args.cache) if args.cache else None


def _cached(args, key_parts, compute):
    cache = _cache_for(args)
    if cache is None:
        return compute()
    key = tuple(key_parts)
    hit = cache.get(key)
    if hit is not None:
        return hit
    value = compute()
    cache.put(key, value)
    return value


def _emit(args, payload: dict, text: str, csv_text: str | None = None) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif args.csv and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        print(text)


def _outdir_write(args, name: str, csv_text: str | None, figure_fn=None):
    if not args.out:
        return
    os.makedirs(args.out, exist_ok=True)
    if csv_text is not None:
        from .report import write_text

        write_text(os.path.join(args.out, f"{name}.csv"), csv_text)
    if figure_fn is not None:
        figure_fn(os.path.join(args.out, f"{name}.png"))


# ------------------------------------------------------------------ commands


def _cmd_w(args) -> int:
    f = _parse_poly_arg(args)
    sub, group_key = _resolve_group(args, f.arity)

    def compute():
        if getattr(args, "n", None) is not None:
            value = products.torus_product(f, args.n, cap=args.max_elements)
        else:
            value = products.subgroup_product(f, sub, cap=args.max_elements)
        fp = FactoredProduct.from_integer(value)
        return {
            "poly": format_poly(f),
            "group": group_key,
            "value": str(value),
            "factored": str(fp),
            "factorization": fp.to_json(),
        }

    payload = _cached(args, [poly_key(f), group_key, "w"], compute)
    _emit(args, payload, f"{payload['value']} = {payload['factored']}")
    return 0


def _cmd_factor(args) -> int:
    f = _parse_poly_arg(args)
    sub, group_key = _resolve_group(args, f.arity)

    def compute():
        rows = products.factor_by_orbits(f, sub, cap=args.max_elements)
        return {
            "poly": format_poly(f),
            "group": group_key,
            "rows": [
                {
                    "order": r.subgroup.order,
                    "subgroup": r.subgroup.serialize(),
                    "point": str(r.point),
                    "value": str(r.value),
                    "exponent": r.exponent,
                    "vanished": r.vanished,
                }
                for r in rows
            ],
        }

    payload = _cached(args, [poly_key(f), group_key, "factor"], compute)
    from .report import rows_to_csv

    csv_text = rows_to_csv(
        ["order", "subgroup", "point", "value", "exponent", "vanished"],
        [
            [r["order"], r["subgroup"], r["point"], r["value"], r["exponent"], r["vanished"]]
            for r in payload["rows"]
        ],
    )
    lines = [
        f"{r['order']:>6}  {r['value']:>16}^{r['exponent']}"
        + ("  (vanished)" if r["vanished"] else "")
        + f"  {r['subgroup']}"
        for r in payload["rows"]
    ]
    _emit(args, payload, "\n".join([" order  value^exponent  subgroup"] + lines), csv_text)
    _outdir_write(args, "factor", csv_text)
    return 0


def _cmd_ra(args) -> int:
    f = _parse_poly_arg(args)

    def compute():
        records = analytics.ra_scan(f, args.p, args.max_order)
        return {
            "poly": format_poly(f),
            "p": args.p,
            "max_order": args.max_order,
            "records": [
                {"p": r.p, "order": r.order, "subgroup": r.subgroup.serialize()}
                for r in records
            ],
        }

    payload = _cached(
        args, [poly_key(f), f"p={args.p};max={args.max_order}", "ra"], compute
    )
    from .report import ra_figure, rows_to_csv

    csv_text = rows_to_csv(
        ["p", "order", "subgroup"],
        [[r["p"], r["order"], r["subgroup"]] for r in payload["records"]],
    )
    row_lines = [
        f"  order {r['order']:>4}  {r['subgroup']}" for r in payload["records"]
    ] or ["  none"]
    text = "\n".join(
        [f"ranks of apparition for p={args.p} (order <= {args.max_order}):"]
        + row_lines
    )
    from types import SimpleNamespace

    recs = [SimpleNamespace(order=r["order"]) for r in payload["records"]]
    _emit(args, payload, text, csv_text)
    _outdir_write(args, "ra", csv_text, lambda p: ra_figure(recs, p, args.p))
    return 0


def _cmd_zsig(args) -> int:
    f = _parse_poly_arg(args)

    def compute():
        records = analytics.zsig_scan(f, args.max_order)
        return {
            "poly": format_poly(f),
            "max_order": args.max_order,
            "records": [
                {
                    "order": r.subgroup.order,
                    "subgroup": r.subgroup.serialize(),
                    "primitive_part": str(r.primitive_part),
                    "primitive_part_json": r.primitive_part.to_json(),
                    "in_zsigmondy_set": r.in_zsigmondy_set,
                }
                for r in records
            ],
        }

    payload = _cached(
        args, [poly_key(f), f"max={args.max_order}", "zsig"], compute
    )
    from .report import rows_to_csv

    csv_text = rows_to_csv(
        ["order", "subgroup", "primitive_part", "in_zsigmondy_set"],
        [
            [r["order"], r["subgroup"], r["primitive_part"], r["in_zsigmondy_set"]]
            for r in payload["records"]
        ],
    )
    in_set = [r for r in payload["records"] if r["in_zsigmondy_set"]]
    text = "\n".join(
        [
            f"scanned {len(payload['records'])} cyclic subgroups; "
            f"{len(in_set)} without a primitive prime divisor"
        ]
        + [f"  order {r['order']:>4}  {r['subgroup']}" for r in in_set]
    )
    _emit(args, payload, text, csv_text)
    if args.out:
        records = analytics.zsig_scan(f, args.max_order)
        from .report import zsig_figure

        _outdir_write(args, "zsig", csv_text, lambda p: zsig_figure(records, p))
    return 0


def _cmd_growth(args) -> int:
    f = _parse_poly_arg(args)

    def compute():
        report = analytics.growth_experiment(
            f, args.n_max, refinement=args.refine
        )
        return {
            "poly": format_poly(f),
            "reference_log_mahler": report.reference_log_mahler,
            "rows": [
                {
                    "n": r.n,
                    "sign": r.sign,
                    "bit_length": r.bit_length,
                    "log_abs": r.log_abs,
                    "normalized": r.normalized,
                    "had_zeros": r.had_zeros,
                    "factored_head": r.factored_head,
                }
                for r in report.rows
            ],
        }

    payload = _cached(
        args,
        [poly_key(f), f"nmax={args.n_max};refine={args.refine}", "growth"],
        compute,
    )
    from types import SimpleNamespace

    report = SimpleNamespace(
        rows=[SimpleNamespace(**r) for r in payload["rows"]],
        reference_log_mahler=payload["reference_log_mahler"],
    )
    from .report import growth_figure, rows_to_csv

    csv_text = rows_to_csv(
        ["n", "sign", "bit_length", "log_abs", "normalized", "had_zeros", "factored_head"],
        [
            [r.n, r.sign, r.bit_length, f"{r.log_abs:.12g}", f"{r.normalized:.12g}", r.had_zeros, r.factored_head]
            for r in report.rows
        ],
    )
    last = report.rows[-1]
    text = (
        f"n={last.n}: |W_n|^(1/n^{f.arity}) = {math.exp(last.normalized):.6f}, "
        f"Mahler reference = {math.exp(report.reference_log_mahler):.6f}"
    )
    _emit(args, payload, text, csv_text)
    _outdir_write(args, "growth", csv_text, lambda p: growth_figure(report, p))
    return 0


def _cmd_mahler(args) -> int:
    f = _parse_poly_arg(args)
    levels = list(range(1, args.refine + 1))

    def compute():
        estimates = [analytics.mahler(f, refinement=r) for r in levels]
        final = estimates[-1]
        out = {
            "poly": format_poly(f),
            "value": final.value,
            "nodes": final.samples_or_nodes,
            "error_indicator": final.error_indicator,
            "converged": final.converged,
            "levels": [
                [r, e.samples_or_nodes, e.value, e.error_indicator]
                for r, e in zip(levels, estimates)
            ],
        }
        if f.arity == 1:
            out["root_formula"] = analytics.mahler_root_formula(f)
        return out

    payload = _cached(
        args, [poly_key(f), f"refine={args.refine}", "mahler"], compute
    )
    final_value = payload["value"]
    from .report import mahler_figure, rows_to_csv

    csv_text = rows_to_csv(
        ["refinement", "nodes", "value", "error_indicator"],
        [
            [r, nodes, f"{v:.12g}", f"{e:.6g}"]
            for r, nodes, v, e in payload["levels"]
        ],
    )
    _emit(args, payload, f"{final_value:.4f}", csv_text)
    _outdir_write(
        args,
        "mahler",
        csv_text,
        lambda p: mahler_figure(
            [row[0] for row in payload["levels"]],
            [row[2] for row in payload["levels"]],
            [row[3] for row in payload["levels"]],
            p,
        ),
    )
    return 0


def _cmd_ptfamily(args) -> int:
    n = args.n

    def compute():
        out = {"n": n, "check": args.check}
        if args.check in ("w", "all"):
            w = symbolic.pt_w(n)
            out["deg_w"] = w.degree_in("T")
            out["w"] = str(w)
        if args.check in ("eighth-power", "all"):
            a, b = symbolic.pt_eighth_power(n)
            out["deg_b"] = b.degree_in("T")
            out["b"] = str(b)
            out["eighth_power_divides"] = True
        if args.check in ("orbit-count", "all"):
            st = symbolic.pt_orbit_stats(n)
            out["free_orbits"] = st.free_orbits
            out["free_points"] = st.free_points
            out["stabilized_points"] = st.stabilized_points
        if args.check in ("gcd", "all"):
            g, d = symbolic.pt_gcd_lower_bound(n)
            out["gcd_deg"] = d
            out["gcd_bound"] = 2 * n - 1 if n % 2 else 2 * n - 2
            out["shift_identity"] = symbolic.pt_shift_identity_check()
        if args.check in ("fourth-power", "all"):
            ok, reason = symbolic.pt_fourth_power_check(n)
            out["fourth_power"] = ok
            out["fourth_power_reason"] = reason
        return out

    payload = _cached(args, ["ptfamily", f"n={n}", args.check], compute)
    lines = [f"family checks at n = {n}:"]
    for key in (
        "deg_w",
        "deg_b",
        "eighth_power_divides",
        "free_orbits",
        "free_points",
        "gcd_deg",
        "gcd_bound",
        "shift_identity",
        "fourth_power",
    ):
        if key in payload:
            lines.append(f"  {key} = {payload[key]}")
    from .report import ptfamily_figure, rows_to_csv

    csv_text = None
    if args.out or args.csv:
        rows = []
        for k in range(1, n + 1):
            a, b = symbolic.pt_eighth_power(k)
            g, d = symbolic.pt_gcd_lower_bound(k)
            st = symbolic.pt_orbit_stats(k)
            ok, _ = symbolic.pt_fourth_power_check(k) if k <= 6 else (None, "")
            rows.append(
                (
                    k,
                    k * k,
                    b.degree_in("T"),
                    d,
                    2 * k - 1 if k % 2 else 2 * k - 2,
                    st.free_orbits,
                    ok,
                )
            )
        csv_text = rows_to_csv(
            ["n", "deg_w", "deg_b", "gcd_deg", "gcd_bound", "free_orbits", "fourth_power"],
            rows,
        )
        _outdir_write(
            args,
            "ptfamily",
            csv_text,
            lambda p: ptfamily_figure([(r[0], r[1], r[2], r[3], r[4]) for r in rows], p),
        )
    _emit(args, payload, "\n".join(lines), csv_text)
    return 0


def _parallel_map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _cmd_romanoff(args) -> int:
    f = _parse_poly_arg(args)

    def compute():
        rep = analytics.romanoff_audit(f, args.x, args.eps, p_bound=args.p_bound)
        return {
            "poly": format_poly(f),
            "x_bound": rep.x_bound,
            "eps": rep.eps,
            "coeff_bound_log": rep.coeff_bound_log,
            "sup_log_estimate": rep.sup_log_estimate,
            "log_total_product": rep.log_total_product,
            "weighted_subgroup_count": rep.weighted_subgroup_count,
            "inequality_holds_exact": rep.inequality_holds_exact,
            "partial_sum": rep.partial_sum,
            "theorem_bound_main": rep.theorem_bound_main,
            "empirical_constant": rep.empirical_constant,
            "d_multiplicity_reading": rep.d_multiplicity_reading,
            "d_single_reading": rep.d_single_reading,
            "scanned_primes": [list(t) for t in rep.scanned_primes],
        }

    payload = _cached(
        args,
        [poly_key(f), f"x={args.x};eps={args.eps};pb={args.p_bound}", "romanoff"],
        compute,
    )
    from types import SimpleNamespace

    report = SimpleNamespace(**{k: v for k, v in payload.items() if k != "poly"})
    text = "\n".join(
        [
            f"sup log|f| estimate {report.sup_log_estimate:.4f} <= "
            f"log coeff 1-norm {report.coeff_bound_log:.4f}",
            f"log|A({report.x_bound})| = {report.log_total_product:.4f} <= "
            f"{report.coeff_bound_log:.4f} * {report.weighted_subgroup_count} "
            f"(exact check: {report.inequality_holds_exact})",
            f"partial apparition sum {report.partial_sum:.4f} vs "
            f"(N+1)/eps = {report.theorem_bound_main:.4f} "
            f"(empirical constant {report.empirical_constant:.4f})",
            f"weight sum readings: per pair {report.d_multiplicity_reading:.4f}, "
            f"per prime {report.d_single_reading:.4f}",
        ]
    )
    _emit(args, payload, text)
    return 0


def _cmd_density(args) -> int:
    f = _parse_poly_arg(args)

    def compute():
        primes = primes_up_to(args.p_bound)

        def probe(p):
            bound = min(args.max_order, int(math.floor(p**args.theta)))
            if bound < 1:
                return p, False
            return p, bool(analytics.ra_scan(f, p, bound))

        results = _parallel_map(probe, primes, args.threads)
        hits = [p for p, ok in results if ok]
        return {
            "poly": format_poly(f),
            "theta": args.theta,
            "p_bound": args.p_bound,
            "max_order": args.max_order,
            "primes_in_set": hits,
            "partial_log_sum": sum(math.log(p) / p for p in hits),
            "density_bound": (f.arity + 1) * args.theta,
        }

    payload = _cached(
        args,
        [
            poly_key(f),
            f"theta={args.theta};pb={args.p_bound};max={args.max_order}",
            "density",
        ],
        compute,
    )
    hits = payload["primes_in_set"]
    partial = payload["partial_log_sum"]
    from .report import density_figure, rows_to_csv

    csv_text = rows_to_csv(["prime"], [[p] for p in hits])
    text = (
        f"{len(hits)} of {len(primes_up_to(args.p_bound))} primes have a "
        f"rank of apparition of "
        f"order <= p^{args.theta}; partial log sum {partial:.4f} "
        f"(density bound {(f.arity + 1) * args.theta:.2f})"
    )

    class _D:
        primes_in_set = hits
        partial_log_sum = partial
        density_bound = (f.arity + 1) * args.theta

    _emit(args, payload, text, csv_text)
    _outdir_write(args, "density", csv_text, lambda p: density_figure(_D, p))
    return 0


_COMMANDS = {
    "w": _cmd_w,
    "factor": _cmd_factor,
    "ra": _cmd_ra,
    "zsig": _cmd_zsig,
    "growth": _cmd_growth,
    "mahler": _cmd_mahler,
    "ptfamily": _cmd_ptfamily,
    "romanoff": _cmd_romanoff,
    "density": _cmd_density,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TorusDivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
