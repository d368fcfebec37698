"""Command line interface.

Exit codes: 0 on success, 1 on a computation error (a JSON error object is
printed), 2 on a usage error.  Output is JSON with --json, aligned text otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib.resources import files
from pathlib import Path
from typing import Sequence

from .combinatorics import QPolynomial, format_partition, format_rpartition, pad, strip
from .descent_monomials import format_monomial, parse_monomial, project_to_quotient, straighten_full
from .oracle import build_quotient, decompose, refined_component
from .points_ideal import compute_t_ideal, load_point_file
from .representations import (
    frob_ribbon_product,
    frob_rnk_rho,
    graded_mult_gf,
    graded_mult_gf_wreath,
    multiplicity_rnk,
    multiplicity_snk,
    multiplicity_table,
    ribbon_data,
)
from .symfunc import omega
from .tableaux import count_syt_descents_between


class UsageError(Exception):
    pass


def parse_csv(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_rpartition(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(strip(parse_csv(c)) for c in text.split(";"))


def max_workers() -> int:
    cap = os.environ.get("COINV_MAX_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"COINV_MAX_THREADS must be an integer, got {cap!r}") from None
    return n


def _shape_text(shape, r: int) -> str:
    return format_rpartition(shape) if r > 1 else format_partition(shape)


def _shape_json(shape, r: int):
    return [list(c) for c in shape] if r > 1 else list(shape)


def _rows(pairs: Sequence[tuple[str, str]]) -> str:
    if not pairs:
        return ""
    width = max(len(a) for a, _ in pairs)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in pairs)


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, text)

def cmd_mult(args):
    n, k, r = args.n, args.k, args.r
    rho = parse_csv(args.rho)
    if len(strip(rho)) > n:
        raise ValueError(f"rho {format_partition(rho)} has more than {n} parts")
    rho = pad(strip(rho), n)
    if args.all:
        table = multiplicity_table(n, k, rho, r)
        payload = table.to_json()
        rows = [(_shape_text(la, r), str(v)) for la, v in sorted(table.nonzero().items(), reverse=True)]
        return payload, _rows(rows) or "0"
    if args.lambda_bar is not None:
        la_bar = parse_rpartition(args.lambda_bar)
        if r == 1 and len(la_bar) == 1:
            value, shape = multiplicity_rnk(n, k, rho, la_bar[0]), list(la_bar[0])
        else:
            value, shape = multiplicity_snk(n, k, r, rho, la_bar), [list(c) for c in la_bar]
    else:
        la = strip(parse_csv(args.la))
        if r != 1:
            raise UsageError("--lambda needs r = 1; use --lambda-bar for r > 1")
        value, shape = multiplicity_rnk(n, k, rho, la), list(la)
    payload = {"n": n, "k": k, "r": r, "rho": list(rho), "shape": shape, "mult": value}
    return payload, str(value)


def cmd_frob(args):
    n, k = args.n, args.k
    rho = pad(strip(parse_csv(args.rho)), n)
    payload = {"n": n, "k": k, "rho": list(rho), "method": "ribbon" if args.ribbon else "tableaux", "omega": args.omega}
    if args.ribbon:
        expansion = frob_ribbon_product(n, k, rho)
        data = ribbon_data(n, k, rho)
        payload["ribbon"] = {"d": list(data.gaps), "p": data.p, "rows": list(data.rows)}
    else:
        expansion = frob_rnk_rho(n, k, rho)
    if args.omega:
        expansion = omega(expansion)
    payload["frob"] = expansion.to_json()
    text = " + ".join(f"{c}*s{format_partition(la)}" for la, c in expansion.items()) or "0"
    return payload, text


def cmd_gf(args):
    n, k, r = args.n, args.k, args.r
    if args.lambda_bar is not None:
        la_bar = parse_rpartition(args.lambda_bar)
        if r == 1 and len(la_bar) == 1:
            poly, shape = graded_mult_gf(n, k, la_bar[0]), list(la_bar[0])
        else:
            poly, shape = graded_mult_gf_wreath(n, k, r, la_bar), [list(c) for c in la_bar]
    else:
        if r != 1:
            raise UsageError("--lambda needs r = 1; use --lambda-bar for r > 1")
        la = strip(parse_csv(args.la))
        if sum(la) != n:
            raise ValueError(f"shape {format_partition(la)} is not a partition of {n}")
        poly, shape = graded_mult_gf(n, k, la), list(la)
    return {"n": n, "k": k, "r": r, "shape": shape, "qpoly": list(poly.coeffs)}, repr(poly)


def cmd_straighten(args):
    n, k, r = args.n, args.k, args.r
    m = parse_monomial(args.monomial, n)
    expansion = straighten_full(m, n, k, r)
    quotient = project_to_quotient(m, n, k, r)
    terms = [{**e.to_json(), "coeff": c} for e, c in sorted(expansion.items())]
    payload = {
        "n": n, "k": k, "r": r, "monomial": list(m),
        "expansion": terms,
        "quotient": [{**e.to_json(), "coeff": c} for e, c in sorted(quotient.items())],
    }
    lines = [f"{format_monomial(m)} ="]
    lines += [f"  {c:+d} * {e}" for e, c in sorted(expansion.items())]
    return payload, "\n".join(lines)


def cmd_oracle_build(args):
    from .oracle.quotient import component_partitions

    r = args.r
    q = build_quotient(args.n, args.k, r, degree_cap=args.max_degree)
    hilbert = q.hilbert()
    components = []
    for rho in component_partitions(q):
        comp = refined_component(q, rho)
        if not comp.dimension:
            continue
        mults = decompose(q, rho, comp)
        components.append({
            "rho": list(rho),
            "dim": comp.dimension,
            "multiplicities": {_shape_text(la if r > 1 else la[0], r): v for la, v in mults.items() if v},
        })
    payload = {
        "n": args.n, "k": args.k, "r": r,
        "top_degree": q.top_degree,
        "hilbert": hilbert,
        "dimension": sum(hilbert),
        "standard_monomials": [[list(m) for m in q.standard_monomials(d)] for d in range(q.top_degree + 1)],
        "components": components,
    }
    text = f"hilbert {repr(QPolynomial(hilbert))}\ndimension {sum(hilbert)}\ncomponents {len(components)}"
    return payload, text


def _verify_cells(n: int, k: int, r: int, rhos: list[tuple[int, ...]]) -> list[dict]:
    q = build_quotient(n, k, r)
    bad = []
    for rho in rhos:
        for label, value in decompose(q, rho).items():
            if r == 1:
                expected = multiplicity_rnk(n, k, rho, label[0])
            else:
                expected = multiplicity_snk(n, k, r, rho, label)
            if value != expected:
                bad.append({"k": k, "rho": list(rho), "shape": _shape_json(label if r > 1 else label[0], r),
                            "oracle": value, "formula": expected})
    return bad


def cmd_oracle_verify(args):
    from .oracle.quotient import component_partitions

    n, r = args.n, args.r
    ks = [args.k] if args.k else list(range(1, n + 1))
    jobs = []
    for k in ks:
        rhos = list(component_partitions(build_quotient(n, k, r)))
        jobs.append((k, rhos))
    workers = min(max_workers(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_cells, [n] * len(jobs), [k for k, _ in jobs], [r] * len(jobs),
                                    [rhos for _, rhos in jobs]))
    else:
        results = [_verify_cells(n, k, r, rhos) for k, rhos in jobs]
    mismatches = [m for part in results for m in part]
    cells = sum(len(rhos) for _, rhos in jobs)
    payload = {"n": n, "r": r, "k": ks, "components": cells, "mismatches": mismatches, "ok": not mismatches}
    text = f"checked {cells} components for k in {ks}: " + ("ok" if not mismatches else f"{len(mismatches)} mismatches")
    return payload, text


def _resolve_input(name: str):
    path = Path(name)
    if path.exists():
        return path
    packaged = files("coinv") / "data" / path.name
    if packaged.is_file():
        return packaged
    raise FileNotFoundError(f"no such point-set file: {name}")


def cmd_points_tideal(args):
    pts = load_point_file(_resolve_input(args.input))
    result = compute_t_ideal(pts, one_per_step=args.one_per_step)
    payload = {"points": len(pts), "mode": "one-per-step" if args.one_per_step else "batched", **result.to_json()}
    return payload, f"|X| = {len(pts)}\nhilbert {result.hilbert!r}"


def cmd_tableaux_count(args):
    shape = strip(parse_csv(args.shape))
    lo, hi = frozenset(parse_csv(args.des_lo)), frozenset(parse_csv(args.des_hi))
    count = count_syt_descents_between(shape, lo, hi)
    return {"shape": list(shape), "des_lo": sorted(lo), "des_hi": sorted(hi), "count": count}, str(count)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="coinv", description="Refined (n,k) coinvariant algebra computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", parents=[common], help="multiplicity of an irreducible in a refined component")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--rho", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="la")
    g.add_argument("--lambda-bar", dest="lambda_bar")
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("frob", parents=[common], help="Frobenius image of a refined component")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--ribbon", action="store_true", help="use the ribbon times h product")
    p.add_argument("--omega", action="store_true", help="apply omega to the result")
    p.set_defaults(func=cmd_frob)

    p = sub.add_parser("gf", parents=[common], help="graded multiplicity generating function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="la")
    g.add_argument("--lambda-bar", dest="lambda_bar")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("straighten", parents=[common], help="expand a monomial in the descent basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--monomial", required=True)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("oracle", help="brute-force quotient computations")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("build", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--r", type=int, default=1)
    q.add_argument("--max-degree", type=int, default=None)
    q.set_defaults(func=cmd_oracle_build)
    q = osub.add_parser("verify", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, default=None, help="omit to sweep every k <= n")
    q.add_argument("--r", type=int, default=1)
    q.set_defaults(func=cmd_oracle_verify)

    p = sub.add_parser("points", help="top-degree ideals of point sets")
    psub = p.add_subparsers(dest="points_command", required=True)
    q = psub.add_parser("tideal", parents=[common])
    q.add_argument("--input", required=True, help="JSON point-set file, or the name of a bundled one")
    q.add_argument("--one-per-step", action="store_true", help="add one null vector per iteration")
    q.set_defaults(func=cmd_points_tideal)

    p = sub.add_parser("tableaux", help="tableau counts")
    tsub = p.add_subparsers(dest="tableaux_command", required=True)
    q = tsub.add_parser("count", parents=[common])
    q.add_argument("--shape", required=True)
    q.add_argument("--des-lo", default="")
    q.add_argument("--des-hi", required=True)
    q.set_defaults(func=cmd_tableaux_count)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"coinv: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError, OSError, KeyError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if args.func is cmd_oracle_verify and not payload["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
