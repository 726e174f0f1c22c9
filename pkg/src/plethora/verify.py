"""Named verification suites: the identity web run end to end.

Each suite returns a list of CheckResult; a check that fails carries its
first counterexample in the detail field.  Suites are deterministic and
side-effect free (randomized inputs use fixed seeds).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .chromgraph import (
    WeightedGraph,
    acyclic_orientations,
    chromatic_polynomial,
    cs_coloring_sum,
    csf,
    csf_basis_matrix,
    csf_bruteforce,
    h_in_csf_basis,
)
from .exactalg import BiPoly, TSeries
from .genfun import (
    CycleType,
    conf_ordered_epoly,
    equiv_config_epoly,
    ordered_sign_series,
    pe,
    pe_from_generator_decomposition,
    pe_product_formula,
    pe_via_coloring,
    pe_via_hn,
    pl,
    unordered_config_series,
    unordered_config_symmetrization,
)
from .hodge import (
    HodgeDiamond,
    abc_decompose,
    abc_sequences,
    birational_reduce,
    e_polynomial,
    expand_power_sums_two_vars,
    r_generator,
    r_in_abc,
    serre_duality_power_sum_relation,
    two_var_power_sum_expand,
)
from .symfun import (
    SymFun,
    e_to_p,
    expand_in_variables,
    h_to_p,
    partitions_of,
    pleth_alphabet,
    pleth_concrete,
    pleth_schur_via_jt,
    s_to_p,
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, passed, "" if passed else detail)


_NAMED_DIAMONDS = ("P1", "P2", "elliptic")


def _random_symmetric_diamond(rng: random.Random, n: int) -> HodgeDiamond:
    table: dict[tuple[int, int], int] = {}
    for p in range(n + 1):
        for q in range(p + 1):
            if p + q <= n:
                m = rng.randint(1, 2)
                for key in {(p, q), (q, p), (n - p, n - q), (n - q, n - p)}:
                    table[key] = m
    return HodgeDiamond(n, table)


def suite_three_way(order: int = 3) -> list[CheckResult]:
    out = []
    for name in _NAMED_DIAMONDS:
        d = HodgeDiamond.named(name)
        f = e_polynomial(d)
        product = pe_product_formula(d, order)
        via_hn = pe_via_hn(f, order)
        via_color = pe_via_coloring(f, order)
        definition = pe(TSeries.term(f, 1, order))
        bad = next(
            (
                k
                for k in range(order + 1)
                if not (product.coeff(k) == via_hn.coeff(k) == via_color.coeff(k) == definition.coeff(k))
            ),
            None,
        )
        out.append(
            _result(
                "three-way",
                f"{name} order {order}",
                bad is None,
                f"t^{bad}: product {product.coeff(bad)} | h_n {via_hn.coeff(bad)} | coloring {via_color.coeff(bad)}"
                if bad is not None
                else "",
            )
        )
    return out


def suite_golden_pe(order: int = 5) -> list[CheckResult]:
    series = pe_via_hn(BiPoly.parse("1 + u*v"), order)
    out = []
    for k in range(order + 1):
        expect = BiPoly({(j, j): 1 for j in range(k + 1)})
        out.append(
            _result(
                "golden-pe",
                f"coefficient of t^{k}",
                series.coeff(k) == expect,
                f"got {series.coeff(k)}, expected {expect}",
            )
        )
    return out


_ORACLE_POLYS = ("1 + u*v", "-1 - u*v", "1 - u + 2*u*v")


def suite_coloring_oracle(order: int | None = None) -> list[CheckResult]:
    graphs = [
        ("P3", WeightedGraph.path(3)),
        ("K3", WeightedGraph.complete(3)),
        ("C4", WeightedGraph.cycle(4)),
        ("K4", WeightedGraph.complete(4)),
        ("P2 weights (1,2)", WeightedGraph.path(2, weights=[1, 2])),
    ]
    out = []
    for gname, g in graphs:
        n = g.total_weight()
        for ftext in _ORACLE_POLYS:
            f = BiPoly.parse(ftext)
            lhs = cs_coloring_sum(g, f, 1, n)
            rhs = pleth_concrete(csf(g), f, 1, n)
            out.append(
                _result(
                    "coloring-oracle",
                    f"{gname} against {ftext}",
                    lhs == rhs,
                    f"coloring sum {lhs} != plethysm {rhs}",
                )
            )
    return out


def suite_graph_identities(order: int = 6) -> list[CheckResult]:
    out = []
    for n in range(1, order + 1):
        lhs = csf(WeightedGraph.complete(n))
        rhs = e_to_p(n) * factorial(n)
        out.append(_result("graph-identities", f"complete graph csf n={n}", lhs == rhs, f"{lhs} != {rhs}"))
    for gname, g in (("P3", WeightedGraph.path(3)), ("C4", WeightedGraph.cycle(4)), ("K4", WeightedGraph.complete(4))):
        count = len(acyclic_orientations(g))
        chi = abs(chromatic_polynomial(g, -1))
        out.append(
            _result(
                "graph-identities",
                f"orientation count of {gname}",
                count == chi,
                f"{count} orientations vs |chi(-1)| = {chi}",
            )
        )
        specialized = expand_in_variables(csf(g), 3)
        brute = csf_bruteforce(g, 3)
        out.append(
            _result(
                "graph-identities",
                f"csf specialization of {gname} at 3 variables",
                specialized == {k: Fraction(v) for k, v in brute.items()},
                "subset expansion disagrees with coloring enumeration",
            )
        )
    g1, g2 = WeightedGraph.path(2), WeightedGraph.complete(3)
    union = WeightedGraph(5, [(0, 1), (2, 3), (2, 4), (3, 4)])
    out.append(
        _result(
            "graph-identities",
            "disjoint union csf multiplicativity",
            csf(union) == csf(g1) * csf(g2),
            "csf of a disjoint union is not the product",
        )
    )
    return out


def suite_newton_plethysm(order: int = 8) -> list[CheckResult]:
    out = []
    ok = True
    detail = ""
    for n in range(1, order + 1):
        rhs = SymFun.zero()
        for i in range(1, n + 1):
            rhs = rhs + h_to_p(n - i) * SymFun.power_sum(i)
        if h_to_p(n) * n != rhs:
            ok, detail = False, f"failed at n={n}"
            break
    out.append(_result("newton-plethysm", f"newton recurrence n <= {order}", ok, detail))

    f, g = BiPoly.parse("1 + u*v"), BiPoly.parse("u + v")
    ok, detail = True, ""
    for n in range(7):
        lhs = pleth_alphabet(h_to_p(n), f + g)
        rhs = BiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + pleth_alphabet(h_to_p(k), f) * pleth_alphabet(h_to_p(n - k), g)
        if lhs != rhs:
            ok, detail = False, f"failed at n={n}: {lhs} != {rhs}"
            break
    out.append(_result("newton-plethysm", "sum rule n <= 6", ok, detail))

    ok, detail = True, ""
    for n in range(5):
        lhs = pleth_alphabet(h_to_p(n), f * g)
        rhs = BiPoly.zero()
        for parts in partitions_of(n):
            rhs = rhs + pleth_alphabet(s_to_p(parts), f) * pleth_alphabet(s_to_p(parts), g)
        if lhs != rhs:
            ok, detail = False, f"failed at n={n}"
            break
    out.append(_result("newton-plethysm", "product rule n <= 4", ok, detail))

    ok, detail = True, ""
    base = BiPoly.parse("1 + u*v")
    for m in range(1, 4):
        for r in range(6):
            lhs = pleth_alphabet(h_to_p(r), base * m)
            rhs = BiPoly.zero()
            for comp in _compositions(r, m):
                term = BiPoly.one()
                for i in comp:
                    term = term * pleth_alphabet(h_to_p(i), base)
                rhs = rhs + term
            if lhs != rhs:
                ok, detail = False, f"failed at m={m}, r={r}"
                break
        if not ok:
            break
    out.append(_result("newton-plethysm", "multinomial rule m <= 3, r <= 5", ok, detail))

    ok, detail = True, ""
    for r in range(order + 1):
        value = pleth_alphabet(h_to_p(r), BiPoly.const(2))
        if value != BiPoly.const(r + 1):
            ok, detail = False, f"h_{r} of 2 gave {value}"
            break
    out.append(_result("newton-plethysm", f"h_r of 2 equals r + 1, r <= {order}", ok, detail))

    ok, detail = True, ""
    for n in range(1, 7):
        pn = BiPoly.monomial(n, 0) + BiPoly.monomial(0, n)
        lhs = pleth_alphabet(h_to_p(n), pn + BiPoly.const(2))
        rhs = BiPoly.zero()
        for a in range(n + 1):
            rhs = rhs + pleth_alphabet(h_to_p(a), pn) * (n - a + 1)
        if lhs != rhs:
            ok, detail = False, f"failed at n={n}"
            break
    out.append(_result("newton-plethysm", "power-sum-plus-2 identity n <= 6", ok, detail))

    ok, detail = True, ""
    for ftext in ("1 + u*v", "1 + u + v + u*v"):
        g2 = BiPoly.parse(ftext)
        order6 = 6
        psi = TSeries.zero(order6)
        for i in range(1, order6 + 1):
            psi = psi + TSeries.term(g2.substitute_powers(i), i, order6) * Fraction(1, i)
        from .exactalg import series_exp

        if series_exp(psi) != pe_via_hn(g2, order6):
            ok, detail = False, f"exp route differs for {ftext}"
            break
    out.append(_result("newton-plethysm", "exponential compatibility", ok, detail))

    ok, detail = True, ""
    for parts in ((2, 1), (2, 2), (3, 1), (1, 1, 1)):
        jt = pleth_schur_via_jt(parts, f, 1, sum(parts))
        direct = pleth_concrete(s_to_p(parts), f, 1, sum(parts))
        if jt != direct:
            ok, detail = False, f"determinant route differs at {parts}"
            break
    out.append(_result("newton-plethysm", "schur determinant route", ok, detail))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def suite_config(order: int = 3) -> list[CheckResult]:
    out = []
    e1 = e_polynomial(HodgeDiamond.named("P1"))
    ok, detail = True, ""
    for n in range(1, 5):
        if equiv_config_epoly(e1, CycleType.identity(n)) != conf_ordered_epoly(e1, n):
            ok, detail = False, f"failed at n={n}"
            break
    out.append(_result("config", "identity cycle type equals falling factorial n <= 4", ok, detail))

    elliptic = HodgeDiamond.named("elliptic")
    f = e_polynomial(elliptic)
    signs = ordered_sign_series(elliptic, order)
    en_route = TSeries.zero(order)
    for n in range(order + 1):
        en_route = en_route + pleth_concrete(e_to_p(n), f, 1, order)
    out.append(
        _result(
            "config",
            f"elliptic sign series matches elementary route to order {order}",
            signs == en_route,
            f"{signs} != {en_route}",
        )
    )
    coloring_route = TSeries.one(order)
    for n in range(1, order + 1):
        coloring_route = coloring_route + cs_coloring_sum(
            WeightedGraph.complete(n), f, 1, order
        ) * Fraction(1, factorial(n))
    out.append(
        _result(
            "config",
            "elliptic sign series matches sign-reversed coloring route",
            signs == coloring_route,
            f"{signs} != {coloring_route}",
        )
    )

    doubled = HodgeDiamond(1, {(0, 0): 2, (1, 1): 2, (1, 0): 1, (0, 1): 1})
    for name, d in [(n, HodgeDiamond.named(n)) for n in _NAMED_DIAMONDS] + [("doubled", doubled)]:
        series = unordered_config_series(d, order)
        e = e_polynomial(d)
        bad = next(
            (n for n in range(order + 1) if series.coeff(n) != unordered_config_symmetrization(e, n)),
            None,
        )
        out.append(
            _result(
                "config",
                f"unordered series of {name} matches symmetrization to order {order}",
                bad is None,
                f"t^{bad}: {series.coeff(bad)} != {unordered_config_symmetrization(e, bad)}"
                if bad is not None
                else "",
            )
        )
    u2 = unordered_config_series(HodgeDiamond.named("P1"), 2).coeff(2)
    out.append(
        _result(
            "config",
            "distinct unordered pairs on the line at t^2",
            u2 == BiPoly.monomial(2, 2),
            f"got {u2}",
        )
    )
    return out


def suite_charvar_roundtrip(order: int = 6) -> list[CheckResult]:
    rng = random.Random(20240601)
    out = []
    ok, detail = True, ""
    for trial in range(20):
        coeffs = [BiPoly.zero()]
        for _ in range(order):
            terms = {(rng.randrange(3), rng.randrange(3)): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))}
            coeffs.append(BiPoly(terms))
        f = TSeries(order, coeffs)
        g = TSeries.one(order) + TSeries(order, [BiPoly.zero()] + list(f.coeffs())[1:])
        if pl(pe(f)) != f or pe(pl(g)) != g:
            ok, detail = False, f"trial {trial}: f = {f}"
            break
    out.append(_result("charvar-roundtrip", f"20 random roundtrips at order {order}", ok, detail))
    return out


def suite_abc(order: int = 8) -> list[CheckResult]:
    out = []
    ok, detail = True, ""
    for s in range(order + 1):
        a_exp = abc_sequences(s, "A_s").expand()
        t_exp = abc_sequences(s, "T_r").expand()
        want_a = {s: BiPoly.monomial(s, 0) + BiPoly.monomial(0, s)} if s else {0: BiPoly.const(2)}
        want_t = {s: BiPoly.one() + BiPoly.monomial(s, s)} if s else {0: BiPoly.const(2)}
        if a_exp != want_a or t_exp != want_t:
            ok, detail = False, f"failed at index {s}"
            break
    out.append(_result("abc", f"A and T sequences expand correctly to {order}", ok, detail))

    ok, detail = True, ""
    for n in range(6):
        for p in range(n + 1):
            for q in range(p + 1):
                if p + q > n:
                    continue
                r = r_generator(p, q, n)
                if r_in_abc(p, q, n).expand() != {r.z_power: r.poly}:
                    ok, detail = False, f"failed at ({p}, {q}, {n})"
                    break
    out.append(_result("abc", "four-term generators factor through A, C, T for n <= 5", ok, detail))

    out.append(_result("abc", "rational generating identity to order 8", *_abc_genfun_check(8)))

    diamonds = [(n, HodgeDiamond.named(n)) for n in _NAMED_DIAMONDS]
    diamonds.append(("random n=3", _random_symmetric_diamond(random.Random(11), 3)))
    for name, d in diamonds:
        try:
            q = abc_decompose(d)  # raises if the expansion does not round-trip
            out.append(_result("abc", f"decomposition round trip for {name}", True, ""))
        except AssertionError as exc:
            out.append(_result("abc", f"decomposition round trip for {name}", False, str(exc)))
            continue
        if name == "P2":
            from .hodge import ABCPoly

            reduced = birational_reduce(q)
            out.append(
                _result(
                    "abc",
                    "birational reduction of the degree-two decomposition",
                    reduced == ABCPoly({(2, 0, 0): 1}),
                    f"got {reduced}",
                )
            )
    return out


def _abc_genfun_check(w: int) -> tuple[bool, str]:
    """(Bw - Cw^2 - 1) * sum A_s w^s == Bw - 2 and the A<->T twin, to order w."""
    from .hodge import ABCPoly

    for which, gen in (("A_s", ABCPoly.gen("B")), ("T_r", ABCPoly.gen("A"))):
        seq = [abc_sequences(s, which) for s in range(w + 1)]
        c = ABCPoly.gen("C")
        for k in range(w + 1):
            value = -seq[k]
            if k >= 1:
                value = value + gen * seq[k - 1]
            if k >= 2:
                value = value - c * seq[k - 2]
            expected = ABCPoly.const(-2) if k == 0 else (gen if k == 1 else ABCPoly.zero())
            if value != expected:
                return False, f"{which} generating identity fails at w^{k}"
    return True, ""


def suite_basis(order: int = 5) -> list[CheckResult]:
    out = []
    for fname, family in (
        ("path", [WeightedGraph.path(k) for k in range(1, order + 1)]),
        ("complete", [WeightedGraph.complete(k) for k in range(1, order + 1)]),
    ):
        ok, detail = True, ""
        for d in range(1, order + 1):
            try:
                csf_basis_matrix(family, d)
            except ValueError as exc:
                ok, detail = False, f"degree {d}: {exc}"
                break
        out.append(_result("basis", f"{fname} family matrix invertible d <= {order}", ok, detail))
        ok, detail = True, ""
        for n in range(1, order + 1):
            try:
                h_in_csf_basis(n, family)
            except (ValueError, AssertionError) as exc:
                ok, detail = False, f"degree {n}: {exc}"
                break
        out.append(_result("basis", f"h_n round trip in {fname} family n <= {order}", ok, detail))
    return out


def suite_serre_duality(order: int = 0) -> list[CheckResult]:
    out = []
    for name in _NAMED_DIAMONDS:
        left, right = serre_duality_power_sum_relation(HodgeDiamond.named(name))
        out.append(
            _result(
                "serre-duality",
                f"power-sum relation for {name}",
                left == right,
                f"{left} != {right}",
            )
        )
    mixed = BiPoly.parse("u*v^2 + u^2*v")
    expanded = two_var_power_sum_expand(mixed)
    expected = SymFun({(2, 1): 1, (3,): -1})
    out.append(
        _result(
            "serre-duality",
            "mixed monomial pair expands to p2 p1 - p3",
            expanded == expected and expand_power_sums_two_vars(expanded) == mixed,
            f"got {expanded}",
        )
    )
    return out


def suite_generator_closure(order: int = 3) -> list[CheckResult]:
    out = []
    diamonds = [(n, HodgeDiamond.named(n)) for n in _NAMED_DIAMONDS]
    diamonds.append(("random n=3", _random_symmetric_diamond(random.Random(5), 3)))
    for name, d in diamonds:
        rebuilt = pe_from_generator_decomposition(d, order)
        direct = pe_via_hn(e_polynomial(d), order)
        out.append(
            _result(
                "generator-closure",
                f"reconstruction for {name} to order {order}",
                rebuilt == direct,
                f"{rebuilt} != {direct}",
            )
        )
    return out


SUITES = {
    "three-way": suite_three_way,
    "golden-pe": suite_golden_pe,
    "coloring-oracle": suite_coloring_oracle,
    "graph-identities": suite_graph_identities,
    "newton-plethysm": suite_newton_plethysm,
    "config": suite_config,
    "charvar-roundtrip": suite_charvar_roundtrip,
    "abc": suite_abc,
    "basis": suite_basis,
    "serre-duality": suite_serre_duality,
    "generator-closure": suite_generator_closure,
}


def run_suite(name: str, order: int | None = None) -> list[CheckResult]:
    if name == "all":
        results: list[CheckResult] = []
        for suite in SUITES.values():
            results.extend(suite() if order is None else suite(order))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; know {sorted(SUITES)} and 'all'")
    suite = SUITES[name]
    return suite() if order is None else suite(order)
