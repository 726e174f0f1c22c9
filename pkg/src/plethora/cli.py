"""Command-line surface: every operation plus the verification suites.

Exit codes: 0 on success or a passing verification, 1 on a verification
failure, 2 on malformed input, guard violations, or precondition failures
(with a one-line diagnostic naming the problem).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chromgraph import WeightedGraph, cs_coloring_sum, csf, h_in_csf_basis
from .errors import PreconditionError
from .exactalg import BiPoly, TSeries
from .genfun import (
    CycleType,
    GeometricSeries,
    charvar_full_from_irr,
    charvar_irr_from_full,
    conf_ordered_epoly,
    equiv_config_epoly,
    ordered_sign_series,
    pe_product_formula,
    pe_via_coloring,
    pe_via_hn,
    unordered_config_series,
)
from .hodge import HodgeDiamond, abc_decompose, birational_reduce, e_polynomial
from .verify import run_suite

DEFAULT_ORDER = 4


def _read_source(path_or_inline: str | None, inline: str | None, kind: str) -> str:
    if (path_or_inline is None) == (inline is None):
        raise PreconditionError(f"give exactly one of a {kind} file path or --inline JSON")
    if inline is not None:
        return inline
    try:
        return Path(path_or_inline).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read {kind} file: {exc}") from exc


def _load_diamond(args: argparse.Namespace) -> HodgeDiamond:
    if args.diamond is not None:
        if args.inline is not None:
            raise PreconditionError("give either --diamond or --inline, not both")
        name = args.diamond
        if name in ("P1", "P2", "elliptic"):
            return HodgeDiamond.named(name)
        return HodgeDiamond.from_json(_read_source(name, None, "diamond"))
    if args.inline is not None:
        return HodgeDiamond.from_json(args.inline)
    raise PreconditionError("a diamond is required (--diamond NAME_OR_PATH or --inline JSON)")


def _load_graph(args: argparse.Namespace) -> WeightedGraph:
    return WeightedGraph.from_json(_read_source(args.graph, args.inline, "graph"))


def _load_series(args: argparse.Namespace) -> TSeries:
    return TSeries.from_json(_read_source(args.series, args.inline, "series"))


def _emit_series(series: TSeries, fmt: str) -> None:
    if fmt == "json":
        print(series.to_json())
    else:
        print(f"order {series.order}")
        for k, c in enumerate(series.coeffs()):
            print(f"t^{k}: {c}")


def _emit_poly(poly: BiPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"poly": str(poly)}))
    else:
        print(poly)


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")


def _add_inline(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--inline", help="inline JSON input")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethora", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("pe", help="plethystic exponential of a diamond or polynomial")
    sp.add_argument("--diamond", help='built-in name ("P1", "P2", "elliptic") or diamond JSON path')
    sp.add_argument("--poly", help="polynomial text, e.g. '1 + u*v'")
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sp.add_argument("--method", choices=("product", "hn", "coloring"), default="product")
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("pl", help="plethystic logarithm of a series")
    sp.add_argument("--series", help="series JSON path")
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("csf", help="chromatic symmetric function of a graph")
    sp.add_argument("--graph", help="graph JSON path")
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("color-sum", help="signed coloring sum of a graph against a polynomial")
    sp.add_argument("--graph", help="graph JSON path")
    sp.add_argument("--poly", required=True, help="polynomial text with integer coefficients")
    sp.add_argument("--t-power", type=int, default=1)
    sp.add_argument("--order", type=int, default=None)
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("conf", help="configuration-space polynomials and series")
    sp.add_argument("--diamond", help="built-in name or diamond JSON path")
    sp.add_argument("--mode", choices=("ordered", "sign", "unordered", "equivariant"), required=True)
    sp.add_argument("--n", type=int, help="number of points (ordered mode)")
    sp.add_argument("--cycle-type", help="comma-separated cycle lengths, e.g. '2,1' (equivariant mode)")
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("charvar", help="full/irreducible series conversions")
    sp.add_argument("--direction", choices=("full-from-irr", "irr-from-full"), required=True)
    sp.add_argument("--series", help="series JSON path")
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("abc", help="generator-coordinate decomposition of a diamond")
    sp.add_argument("--diamond", help="built-in name or diamond JSON path")
    sp.add_argument("--birational", action="store_true", help="set C = 0 after decomposing")
    _add_inline(sp)
    _add_format(sp)

    sp = subs.add_parser("basis", help="h_n coefficients over a chromatic graph-family basis")
    sp.add_argument("--family", required=True, help='"path", "complete", or a JSON path with a list of graphs')
    sp.add_argument("--n", type=int, required=True)
    _add_format(sp)

    sp = subs.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", help=f"suite name or 'all'")
    sp.add_argument("--order", type=int, default=None)

    return parser


def _cmd_pe(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise PreconditionError("order must be >= 0")
    if args.poly is not None:
        if args.diamond is not None or args.inline is not None:
            raise PreconditionError("give either --poly or a diamond, not both")
        f = BiPoly.parse(args.poly)
        if args.method == "product":
            entries: dict[tuple[int, int], int] = {}
            for (a, b), c in f.items():
                if c.denominator != 1:
                    raise PreconditionError("product method needs integer coefficients")
                entries[(a, b)] = c.numerator
            from .exactalg import expand_product_of_powers

            series = expand_product_of_powers(
                [(BiPoly.monomial(a, b), 1, -c) for (a, b), c in entries.items()], args.order
            )
        elif args.method == "hn":
            series = pe_via_hn(f, args.order)
        else:
            series = pe_via_coloring(f, args.order)
    else:
        d = _load_diamond(args)
        if args.method == "product":
            series = pe_product_formula(d, args.order)
        elif args.method == "hn":
            series = pe_via_hn(e_polynomial(d), args.order)
        else:
            series = pe_via_coloring(e_polynomial(d), args.order)
    _emit_series(series, args.format)
    return 0


def _cmd_pl(args: argparse.Namespace) -> int:
    full = GeometricSeries(_load_series(args), "full")
    _emit_series(charvar_irr_from_full(full).series, args.format)
    return 0


def _cmd_csf(args: argparse.Namespace) -> int:
    result = csf(_load_graph(args))
    if args.format == "json":
        print(result.to_json())
    else:
        print(result)
    return 0


def _cmd_color_sum(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    f = BiPoly.parse(args.poly)
    series = cs_coloring_sum(g, f, args.t_power, args.order)
    _emit_series(series, args.format)
    return 0


def _cmd_conf(args: argparse.Namespace) -> int:
    d = _load_diamond(args)
    e = e_polynomial(d)
    if args.mode == "ordered":
        if args.n is None:
            raise PreconditionError("ordered mode needs --n")
        _emit_poly(conf_ordered_epoly(e, args.n), args.format)
    elif args.mode == "equivariant":
        if args.cycle_type is None:
            raise PreconditionError("equivariant mode needs --cycle-type")
        try:
            parts = tuple(sorted((int(x) for x in args.cycle_type.split(",")), reverse=True))
        except ValueError as exc:
            raise PreconditionError(f"malformed cycle type {args.cycle_type!r}") from exc
        _emit_poly(equiv_config_epoly(e, CycleType.from_partition(parts)), args.format)
    elif args.mode == "sign":
        _emit_series(ordered_sign_series(d, args.order), args.format)
    else:
        _emit_series(unordered_config_series(d, args.order), args.format)
    return 0


def _cmd_charvar(args: argparse.Namespace) -> int:
    series = _load_series(args)
    if args.direction == "full-from-irr":
        result = charvar_full_from_irr(GeometricSeries(series, "irreducible"))
    else:
        result = charvar_irr_from_full(GeometricSeries(series, "full"))
    _emit_series(result.series, args.format)
    return 0


def _cmd_abc(args: argparse.Namespace) -> int:
    d = _load_diamond(args)
    result = abc_decompose(d)
    if args.birational:
        result = birational_reduce(result)
    if args.format == "json":
        print(
            json.dumps(
                {"terms": [{"A": k[0], "B": k[1], "C": k[2], "coeff": str(c)} for k, c in result.items()]}
            )
        )
    else:
        print(result)
    return 0


def _cmd_basis(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise PreconditionError("basis degree must be >= 1")
    if args.family == "path":
        family = [WeightedGraph.path(k) for k in range(1, args.n + 1)]
    elif args.family == "complete":
        family = [WeightedGraph.complete(k) for k in range(1, args.n + 1)]
    else:
        try:
            entries = json.loads(Path(args.family).read_text())
        except OSError as exc:
            raise PreconditionError(f"cannot read family file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed family JSON: {exc}") from exc
        family = [WeightedGraph.from_json(json.dumps(entry)) for entry in entries]
    coeffs = h_in_csf_basis(args.n, family)
    ordered = sorted(coeffs.items(), key=lambda kv: kv[0], reverse=True)
    if args.format == "json":
        print(json.dumps({"coefficients": [{"partition": list(p), "coeff": str(c)} for p, c in ordered]}))
    else:
        for parts, c in ordered:
            print(f"[{','.join(map(str, parts))}]: {c}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_suite(args.suite, args.order)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    failures = 0
    for r in results:
        if r.passed:
            print(f"PASS {r.suite}: {r.name}")
        else:
            failures += 1
            print(f"FAIL {r.suite}: {r.name} -- {r.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "pe": _cmd_pe,
    "pl": _cmd_pl,
    "csf": _cmd_csf,
    "color-sum": _cmd_color_sum,
    "conf": _cmd_conf,
    "charvar": _cmd_charvar,
    "abc": _cmd_abc,
    "basis": _cmd_basis,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
