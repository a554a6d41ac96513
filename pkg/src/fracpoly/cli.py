"""``fracpoly`` command line.

Exit codes: 0 success, 1 failed check, 2 usage or input error, 3 resource limit.
JSON output writes every integer as a decimal string; the top-level
``"numeric"`` flag is true when all of them fit in 53 bits.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import counting, ehrhart, normality, polytope, signed_perm
from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .graph import Graph, GraphError, GraphFormatError, from_edge_list, is_bipartite, parse_family
from .polynomial import Polynomial, interpolate, is_symmetric, is_unimodal, render

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class CheckFailed(Exception):
    pass


@dataclass
class RunConfig:
    graph: Graph
    fmt: str = "json"
    engine: str = "auto"
    limits: Limits = field(default_factory=lambda: DEFAULT_LIMITS)
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------- output


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Polynomial):
        return [_jsonable(c) for c in x.coeffs]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _fits_53_bits(x) -> bool:
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return True
    if isinstance(x, int):
        return abs(x) < 2**53
    if isinstance(x, Fraction):
        return abs(x.numerator) < 2**53 and x.denominator < 2**53
    if isinstance(x, Polynomial):
        return all(_fits_53_bits(c) for c in x.coeffs)
    if isinstance(x, dict):
        return all(_fits_53_bits(v) for v in x.values())
    if isinstance(x, (list, tuple)):
        return all(_fits_53_bits(v) for v in x)
    return True


def to_json(result: dict) -> str:
    body = _jsonable(result)
    body["numeric"] = _fits_53_bits(result)
    return json.dumps(body, sort_keys=True, indent=2)


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, Polynomial):
        return render(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text_value(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def to_text(result: dict) -> str:
    lines = []
    for k, v in sorted(result.items()):
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{k}:")
            lines.extend(f"  - {_text_value(x)}" for x in v)
        else:
            lines.append(f"{k}: {_text_value(v)}")
    return "\n".join(lines)


def emit(result: dict, cfg: RunConfig, out=None):
    out = out or sys.stdout
    print(to_json(result) if cfg.fmt == "json" else to_text(result), file=out)


# ---------------------------------------------------------------- commands


def _graph_info(g: Graph) -> dict:
    return {"d": g.d, "edges": [list(e) for e in g.sorted_edges()]}


def cmd_count(cfg: RunConfig) -> dict:
    req = counting.CountRequest(cfg.options["kind"], cfg.graph, cfg.options["n"])
    engine = cfg.engine
    if engine == "auto":
        engine = "transfer" if counting.path_or_cycle(cfg.graph) else "dfs"
    dfs = counting.count_dfs(req, cfg.limits) if engine in ("dfs", "both") else None
    transfer = counting.count_transfer(req) if engine in ("transfer", "both") else None
    if dfs is not None and transfer is not None and dfs != transfer:
        raise CheckFailed(f"count engines disagree: dfs={dfs} transfer={transfer}")
    return {
        "graph": _graph_info(cfg.graph),
        "kind": req.kind,
        "n": req.n,
        "engine": engine,
        "count": dfs if dfs is not None else transfer,
        "dfs": dfs,
        "transfer": transfer,
    }


def _ehrhart_core(cfg: RunConfig) -> dict:
    g = cfg.graph
    counts = counting.frac_counts(g, 2 * g.d + 1, cfg.engine, cfg.limits)
    delta = ehrhart.delta_from_counts(counts[0::2][: g.d + 1], g.d)
    direct = ehrhart.series_numerator_direct(g, counts=counts)
    theorem = ehrhart.series_numerator_theorem(delta)
    return {
        "graph": _graph_info(g),
        "delta": list(delta),
        "numerator": direct,
        "numerator_theorem": theorem,
        "checks": {
            "direct_equals_theorem": direct == theorem,
            "symmetric": is_symmetric(direct),
            "unimodal": is_unimodal(direct),
            "alt_increasing": ehrhart.is_alternatingly_increasing(delta),
            "degree": direct.degree == 2 * g.d - 1,
        },
    }


def cmd_delta(cfg: RunConfig) -> dict:
    return _ehrhart_core(cfg)


def cmd_series(cfg: RunConfig) -> dict:
    result = _ehrhart_core(cfg)
    if not result["checks"]["direct_equals_theorem"]:
        raise CheckFailed("direct numerator differs from the interleaved h*-vector")
    return result


def cmd_quasi(cfg: RunConfig) -> dict:
    qp = ehrhart.quasi_polynomial(cfg.graph, cfg.engine, cfg.limits)
    return {
        "graph": _graph_info(cfg.graph),
        "even": list(qp.even.coeffs),
        "odd": list(qp.odd.coeffs),
        "parts_equal": qp.even == qp.odd,
        "bipartite": is_bipartite(cfg.graph)[0],
    }


def cmd_reciprocity(cfg: RunConfig) -> dict:
    g = cfg.graph
    qp = ehrhart.quasi_polynomial(g, cfg.engine, cfg.limits)
    ehr = ehrhart.ehrhart_polynomial_p(g, cfg.engine, cfg.limits)
    rows = []
    for k in cfg.options.get("ks", range(4)):
        a, b, c = ehrhart.reciprocity_values(g, k, qp=qp, ehr_p=ehr)
        rows.append({"k": k, "odd": a, "even_side": b, "p_side": c,
                     "equal": a == b == c and a.denominator == 1})
    passed = all(r["equal"] for r in rows)
    if not passed:
        raise CheckFailed("reciprocity failed")
    return {"graph": _graph_info(g), "rows": rows, "passed": passed}


def cmd_descent(cfg: RunConfig) -> dict:
    g = cfg.graph
    minus, plus = signed_perm.split_polynomials(g, cfg.limits)
    result = {"graph": _graph_info(g), "descent": minus + plus}
    if cfg.options.get("split"):
        result["d_minus"] = minus
        result["d_plus"] = plus
    return result


def stream_members(cfg: RunConfig, out=None):
    out = out or sys.stdout
    for w in signed_perm.pi_members(cfg.graph, cfg.limits):
        print(" ".join(str(a) for a in w), signed_perm.descent_count(w), file=out)


def cmd_vertices(cfg: RunConfig) -> dict:
    g = cfg.graph
    kind = cfg.options.get("kind", "frac")
    doubled = cfg.options.get("doubled", False)
    if kind == "dual":
        pts = [polytope.HalfIntPoint.from_integers(v) for v in polytope.q_dual_vertices(g)]
    elif kind == "q":
        pts = polytope.q_vertices(g, cfg.limits)
    else:
        pts = polytope.frac_vertices(g, cfg.limits)
    if doubled:
        rendered = [list(p.doubled) for p in pts]
    else:
        rendered = [[Fraction(c, 2) for c in p.doubled] for p in pts]
    return {
        "graph": _graph_info(g),
        "kind": kind,
        "doubled": doubled,
        "vertices": rendered,
        "lattice": polytope.is_lattice_polytope(pts),
    }


def cmd_normality(cfg: RunConfig) -> dict:
    g = cfg.graph
    bip, _ = is_bipartite(g)
    witness = None
    if not bip:
        w = normality.odd_cycle_witness(g, cfg.limits)
        witness = {"u": list(w.u), "cycle": list(w.cycle), "k": w.k, "member": w.member,
                   "halves_exactly": w.halves_exactly}
    report = normality.normality_check_up_to(g, cfg.options.get("max_degree", 3), cfg.limits)
    try:
        tu = normality.is_totally_unimodular(normality.incidence_with_negative_identity(g), cfg.limits)
    except ResourceLimitError:
        tu = None
    return {
        "graph": _graph_info(g),
        "bipartite": bip,
        "witness": witness,
        "checked_up_to": report["checked_up_to"],
        "violations": [list(v) for v in report["violations"]],
        "summary": report["summary"],
        "tu": tu,
        "gorenstein_fano": normality.gorenstein_fano_check(g, cfg.limits),
    }


# ---------------------------------------------------------------- verify


def _check(name, statement, fn):
    try:
        passed, detail = fn()
        status = "pass" if passed else "fail"
    except ResourceLimitError as exc:
        status, detail = "skipped", str(exc)
    except (ArithmeticError, AssertionError, ValueError) as exc:
        status, detail = "fail", f"{type(exc).__name__}: {exc}"
    return {"name": name, "statement": statement, "status": status, "detail": detail}


def verify_graph(g: Graph, engine: str = "auto", limits: Limits = DEFAULT_LIMITS,
                 max_degree: int = 3) -> list[dict]:
    """Every cross-check that applies to ``g``, as a list of check records."""
    d = g.d
    counts = counting.frac_counts(g, 2 * d + 1, engine, limits)
    delta = ehrhart.delta_from_counts(counts[0::2][: d + 1], d)
    direct = ehrhart.series_numerator_direct(g, counts=counts)
    theorem = ehrhart.series_numerator_theorem(delta)
    bip, _ = is_bipartite(g)
    checks = []

    checks.append(_check(
        "numerator_direct_vs_interleaved",
        "series numerator of FRAC(G) over (1-t^2)^(d+1) equals delta(P,t^2) + t^(2d-1) delta(P,1/t^2)",
        lambda: (direct == theorem, render(direct)),
    ))
    checks.append(_check(
        "numerator_symmetric_unimodal",
        "numerator has degree 2d-1 and is symmetric and unimodal",
        lambda: (direct.degree == 2 * d - 1 and is_symmetric(direct) and is_unimodal(direct),
                 f"degree {direct.degree}"),
    ))
    checks.append(_check(
        "delta_alternatingly_increasing",
        "h*-vector of P(G) satisfies d_0 <= d_{d-1} <= d_1 <= d_{d-2} <= ...",
        lambda: (ehrhart.is_alternatingly_increasing(delta), str(list(delta))),
    ))

    def descent_vs_count():
        poly = signed_perm.descent_polynomial_pi(g, limits)
        return poly == delta.polynomial(), render(poly)

    checks.append(_check(
        "descent_polynomial_equals_delta",
        "descent polynomial of Pi(G) equals the h*-polynomial of P(G)",
        descent_vs_count,
    ))

    def split_shape():
        minus, plus = signed_perm.split_polynomials(g, limits)
        b = plus.divide_by_t()
        ok = (minus.degree == d - 1 and b.degree == d - 2 and is_symmetric(minus) and is_symmetric(b)
              and is_unimodal(minus) and is_unimodal(b))
        return ok, f"a = {render(minus)}; b = {render(b)}"

    checks.append(_check(
        "descent_split_symmetric",
        "delta(P,t) = a(t) + t b(t) with a, b symmetric unimodal of degrees d-1, d-2",
        split_shape,
    ))

    qp = ehrhart.quasi_polynomial(g, counts=counts)
    ehr = _p_polynomial(counts, d)

    def reciprocity():
        vals = [ehrhart.reciprocity_values(g, k, qp=qp, ehr_p=ehr) for k in range(4)]
        ok = all(a == b == c and a.denominator == 1 for a, b, c in vals)
        return ok, str([str(v[0]) for v in vals])

    checks.append(_check(
        "reciprocity",
        "i_odd(FRAC,2k+1) = (-1)^d i_even(FRAC,-2k-4) = (-1)^d i(P,-k-2) for k = 0..3",
        reciprocity,
    ))

    def lattice_equivalence():
        frac_lat = polytope.is_lattice_polytope(polytope.frac_vertices(g, limits))
        q_lat = polytope.is_lattice_polytope(polytope.q_vertices(g, limits))
        ok = frac_lat == q_lat == bip
        if bip:
            ok = ok and qp.even == qp.odd
        return ok, f"bipartite={bip} frac_lattice={frac_lat} q_lattice={q_lat}"

    checks.append(_check(
        "bipartite_lattice_equivalence",
        "G bipartite <=> FRAC(G) lattice <=> Q(G) lattice; bipartite => even and odd parts agree",
        lattice_equivalence,
    ))

    def fano():
        interior = polytope.interior_lattice_points(polytope.q_polytope(g))
        dual = polytope.q_dual_vertices(g)
        return interior == [tuple([0] * d)] and len(set(dual)) == len(g.edges) + d, f"interior={interior}"

    checks.append(_check(
        "q_fano_dual_lattice",
        "origin is the unique interior lattice point of Q(G); polar vertices are e_i+e_j and -e_i",
        fano,
    ))

    if bip:
        def normal():
            report = normality.normality_check_up_to(g, max_degree, limits)
            tu = normality.is_totally_unimodular(normality.incidence_with_negative_identity(g), limits)
            return report["normal_up_to_degree"] and tu, report["summary"] + f"; tu={tu}"

        checks.append(_check(
            "polar_normal_bounded",
            "G bipartite => [A_G | -E] totally unimodular and polar of Q(G) normal (checked up to a degree)",
            normal,
        ))
    else:
        def witness():
            w = normality.odd_cycle_witness(g, limits)
            return (not w.member) and w.halves_exactly, f"u={w.u}"

        checks.append(_check(
            "polar_not_normal_witness",
            "odd cycle => (k+1)e_{d+1} + sum of cycle unit vectors is in the cone but not the semigroup",
            witness,
        ))

    if len(g.edges) == d * (d - 1) // 2:
        checks.append(_check(
            "complete_graph_closed_form",
            "K_d: numerator b_i = A(d, floor(i/2)) + d A(d-1, floor((i-1)/2))",
            lambda: (ehrhart.complete_graph_numerator(d) == direct
                     and ehrhart.complete_graph_delta(d) == delta, render(ehrhart.complete_graph_numerator(d))),
        ))
    return checks


def _p_polynomial(counts, d):
    return interpolate([(n, counts[2 * n]) for n in range(d + 1)], d)


def cmd_verify(cfg: RunConfig) -> dict:
    checks = verify_graph(cfg.graph, cfg.engine, cfg.limits, cfg.options.get("max_degree", 3))
    passed = all(c["status"] != "fail" for c in checks)
    result = {"graph": _graph_info(cfg.graph), "checks": checks, "passed": passed}
    if not passed:
        first = next(c for c in checks if c["status"] == "fail")
        raise CheckFailed(f"check {first['name']} failed: {first['detail']}", result)
    return result


COMMANDS = {
    "count": cmd_count,
    "delta": cmd_delta,
    "series": cmd_series,
    "quasi": cmd_quasi,
    "reciprocity": cmd_reciprocity,
    "descent": cmd_descent,
    "vertices": cmd_vertices,
    "normality": cmd_normality,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------- parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="graph file: 'd m' then m lines 'i j'")
    src.add_argument("--family", metavar="SPEC", help="complete:4, cycle:7, path:5, complete_bipartite:2,3")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--engine", choices=("auto", "dfs", "transfer", "both"), default="auto")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $FRACPOLY_THREADS or 1)")
    common.add_argument("--limit-d", type=int, default=None,
                        help=f"largest d for signed-permutation enumeration (default {DEFAULT_LIMITS.descent_d})")

    parser = argparse.ArgumentParser(prog="fracpoly", description="Ehrhart data of fractional stable set polytopes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="lattice points of n*FRAC, n*P or n*Q")
    p.add_argument("--kind", choices=counting.KINDS, default="frac")
    p.add_argument("--n", type=int, required=True)
    sub.add_parser("delta", parents=[common], help="h*-vector of P(G) = 2 FRAC(G)")
    sub.add_parser("series", parents=[common], help="Ehrhart series numerator of FRAC(G)")
    sub.add_parser("quasi", parents=[common], help="even and odd constituents of i(FRAC(G), n)")
    p = sub.add_parser("reciprocity", parents=[common], help="odd/even reciprocity values")
    p.add_argument("--k", type=int, action="append", dest="ks", help="k to check (repeatable; default 0..3)")
    p = sub.add_parser("descent", parents=[common], help="descent polynomial of Pi(G)")
    p.add_argument("--split", action="store_true", help="also report the parts ending negative/positive")
    p.add_argument("--list", action="store_true", help="stream the words of Pi(G) with descent counts")
    p = sub.add_parser("vertices", parents=[common], help="vertices of FRAC(G), Q(G) or the polar of Q(G)")
    p.add_argument("--kind", choices=("frac", "q", "dual"), default="frac")
    p.add_argument("--doubled", action="store_true", help="emit doubled integer coordinates")
    for name in ("normality", "verify"):
        p = sub.add_parser(name, parents=[common],
                           help="normality report" if name == "normality" else "run every cross-check")
        p.add_argument("--max-degree", type=int, default=3)
    return parser


def load_graph(args) -> Graph:
    if args.family:
        return parse_family(args.family)
    try:
        text = Path(args.graph).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {args.graph}: {exc}") from None
    return from_edge_list(text)


def config_from_args(args) -> RunConfig:
    limits = DEFAULT_LIMITS
    if args.threads is not None:
        if args.threads < 1:
            raise GraphFormatError("--threads must be positive")
        limits = limits.with_(workers=args.threads)
    if args.limit_d is not None:
        if args.limit_d < 1:
            raise GraphFormatError("--limit-d must be positive")
        limits = limits.with_(descent_d=args.limit_d)
    options = {}
    for key in ("kind", "n", "ks", "split", "list", "doubled", "max_degree"):
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    if "n" in options and options["n"] < 0:
        raise GraphFormatError("--n must be nonnegative")
    return RunConfig(load_graph(args), args.format, args.engine, limits, options)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "descent" and cfg.options.get("list"):
            stream_members(cfg)
            return EXIT_OK
        emit(COMMANDS[args.command](cfg), cfg)
    except (GraphFormatError, GraphError) as exc:
        print(f"fracpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"fracpoly: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CheckFailed as exc:
        if len(exc.args) > 1:
            emit(exc.args[1], cfg)
        print(f"fracpoly: check failed: {exc.args[0]}", file=sys.stderr)
        return EXIT_CHECK
    except counting.WrongFamilyError as exc:
        print(f"fracpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
