import random
from fractions import Fraction
from math import factorial

import pytest

from plethora.errors import PreconditionError
from plethora.exactalg import BiPoly, TSeries, expand_product_of_powers
from plethora.chromgraph import WeightedGraph, cs_coloring_sum
from plethora.genfun import (
    CycleType,
    GeometricSeries,
    alpha_j,
    charvar_full_from_irr,
    charvar_irr_from_full,
    conf_ordered_epoly,
    equiv_config_epoly,
    mobius,
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
from plethora.hodge import HodgeDiamond, e_polynomial
from plethora.symfun import e_to_p, pleth_concrete


def P(text):
    return BiPoly.parse(text)


DIAMONDS = [HodgeDiamond.named(n) for n in ("P1", "P2", "elliptic")]


def test_mobius():
    values = [mobius(m) for m in range(1, 13)]
    assert values == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    with pytest.raises(PreconditionError):
        mobius(0)


def test_pe_basics():
    assert pe(TSeries.zero(3)) == TSeries.one(3)
    geometric = pe(TSeries.term(BiPoly.one(), 1, 3))
    assert geometric == TSeries(3, [BiPoly.one()] * 4)
    series = pe(TSeries.term(P("1 + u*v"), 1, 2))
    assert [str(c) for c in series.coeffs()] == ["1", "1 + u*v", "1 + u*v + u^2*v^2"]
    with pytest.raises(PreconditionError):
        pe(TSeries.one(2))


def test_pl_basics():
    assert pl(TSeries.one(3)) == TSeries.zero(3)
    geometric = expand_product_of_powers([(BiPoly.one(), 1, -1)], 4)
    assert pl(geometric) == TSeries.term(BiPoly.one(), 1, 4)
    with pytest.raises(PreconditionError):
        pl(TSeries.zero(2))


def test_pe_group_homomorphism():
    rng = random.Random(101)
    for _ in range(10):
        f = TSeries(4, [BiPoly.zero()] + [random_poly(rng) for _ in range(4)])
        g = TSeries(4, [BiPoly.zero()] + [random_poly(rng) for _ in range(4)])
        assert pe(f + g) == pe(f) * pe(g)


def random_poly(rng):
    return BiPoly({(rng.randrange(3), rng.randrange(3)): rng.randint(-2, 2) for _ in range(2)})


def test_pe_pl_roundtrip():
    rng = random.Random(55)
    for _ in range(20):
        f = TSeries(6, [BiPoly.zero()] + [random_poly(rng) for _ in range(6)])
        assert pl(pe(f)) == f
        g = TSeries.one(6) + TSeries(6, [BiPoly.zero()] + list(f.coeffs())[1:])
        assert pe(pl(g)) == g


def test_three_routes_agree():
    for d in DIAMONDS:
        f = e_polynomial(d)
        product = pe_product_formula(d, 3)
        assert product == pe_via_hn(f, 3)
        assert product == pe_via_coloring(f, 3)
        assert product == pe(TSeries.term(f, 1, 3))


def test_golden_pe_coefficients():
    series = pe_product_formula(HodgeDiamond.named("P1"), 5)
    for k in range(6):
        assert series.coeff(k) == BiPoly({(j, j): 1 for j in range(k + 1)})


def test_pe_via_hn_coefficients_are_h_plethysms():
    f = P("1 + u + v + u*v")
    series = pe_via_hn(f, 3)
    from plethora.symfun import h_to_p

    for n in range(4):
        assert series.coeff(n) == pleth_concrete(h_to_p(n), f, 1, n).coeff(n)


def test_pe_via_coloring_term():
    # the degree-2 term of the coloring route is the hand-enumerated K_2 sum
    f = P("1 + u*v")
    sum_k2 = cs_coloring_sum(WeightedGraph.complete(2), -f, 1, 2)
    term = sum_k2.coeff(2) * Fraction(1, 2)
    assert term == P("1 + u*v + u^2*v^2")
    assert pe_via_coloring(f, 2).coeff(2) == term


def test_conf_ordered():
    e = e_polynomial(HodgeDiamond.named("P1"))
    assert conf_ordered_epoly(e, 0) == BiPoly.one()
    assert conf_ordered_epoly(e, 1) == e
    assert conf_ordered_epoly(e, 2) == P("u*v + u^2*v^2")


def test_alpha_j():
    e = e_polynomial(HodgeDiamond.named("P1"))
    assert alpha_j(e, 1) == e
    assert alpha_j(e, 2) == P("u^2*v^2 - u*v")
    assert alpha_j(e, 4) == e.substitute_powers(4) - e.substitute_powers(2)


def test_equiv_config():
    e = e_polynomial(HodgeDiamond.named("P1"))
    for n in range(1, 5):
        assert equiv_config_epoly(e, CycleType.identity(n)) == conf_ordered_epoly(e, n)
    assert equiv_config_epoly(e, CycleType.from_partition((2,))) == alpha_j(e, 2)
    assert equiv_config_epoly(e, CycleType.from_partition((2, 1))) == e * alpha_j(e, 2)


def test_cycle_type():
    ct = CycleType.from_partition((3, 2, 2, 1))
    assert ct.n == 8 and ct.partition() == (3, 2, 2, 1)
    assert ct.class_size() == factorial(8) // 24  # z = 3 * 2^2*2! * 1 = 24
    with pytest.raises(PreconditionError):
        CycleType.from_partition(())


def test_ordered_sign_series():
    series = ordered_sign_series(HodgeDiamond.named("P1"), 2)
    assert [str(c) for c in series.coeffs()] == ["1", "1 + u*v", "u*v"]
    assert ordered_sign_series(HodgeDiamond(0, {}), 3) == TSeries.one(3)
    # elementary route: coefficients are e_n plethysms of the polynomial
    for d in DIAMONDS:
        f = e_polynomial(d)
        series = ordered_sign_series(d, 3)
        route = TSeries.zero(3)
        for n in range(4):
            route = route + pleth_concrete(e_to_p(n), f, 1, 3)
        assert series == route
        # sign-reversed coloring route
        coloring = TSeries.one(3)
        for n in range(1, 4):
            coloring = coloring + cs_coloring_sum(WeightedGraph.complete(n), f, 1, 3) * Fraction(
                1, factorial(n)
            )
        assert series == coloring
        # t -> -t matches the inverse of the plethystic exponential
        assert series.negate_t() * pe_via_hn(f, 3) == TSeries.one(3)


def test_unordered_config_series():
    P1 = HodgeDiamond.named("P1")
    series = unordered_config_series(P1, 3)
    assert series.coeff(0) == BiPoly.one()
    assert series.coeff(1) == P("1 + u*v")
    # t^2: unordered distinct pairs exclude the diagonal, so the coefficient
    # plus the polynomial of the line itself is the degree-two polynomial
    assert series.coeff(2) == P("u^2*v^2")
    assert series.coeff(2) + e_polynomial(P1) == e_polynomial(HodgeDiamond.named("P2"))
    assert unordered_config_series(HodgeDiamond(0, {}), 2) == TSeries.one(2)


def test_unordered_matches_symmetrization():
    doubled = HodgeDiamond(1, {(0, 0): 2, (1, 1): 2, (1, 0): 1, (0, 1): 1})
    for d in DIAMONDS + [doubled]:
        e = e_polynomial(d)
        series = unordered_config_series(d, 3)
        for n in range(4):
            assert series.coeff(n) == unordered_config_symmetrization(e, n), (d, n)


def test_charvar_directions():
    irr = GeometricSeries(TSeries.term(P("1 + u*v"), 1, 3), "irreducible")
    full = charvar_full_from_irr(irr)
    assert full.role == "full"
    assert full.series == pe_product_formula(HodgeDiamond.named("P1"), 3)
    back = charvar_irr_from_full(full)
    assert back.role == "irreducible" and back.series == irr.series
    assert charvar_full_from_irr(GeometricSeries(TSeries.zero(3), "irreducible")).series == TSeries.one(3)
    geometric = expand_product_of_powers([(BiPoly.one(), 1, -1)], 4)
    assert charvar_irr_from_full(GeometricSeries(geometric, "full")).series == TSeries.term(
        BiPoly.one(), 1, 4
    )
    with pytest.raises(PreconditionError):
        charvar_full_from_irr(GeometricSeries(TSeries.one(2), "irreducible"))
    with pytest.raises(PreconditionError):
        charvar_irr_from_full(GeometricSeries(TSeries.zero(2), "full"))
    with pytest.raises(PreconditionError):
        GeometricSeries(TSeries.zero(2), "unknown")


def test_generator_closure():
    for d in DIAMONDS:
        assert pe_from_generator_decomposition(d, 3) == pe_via_hn(e_polynomial(d), 3)
    rng = random.Random(5)
    table = {}
    for p in range(4):
        for q in range(p + 1):
            if p + q <= 3:
                m = rng.randint(1, 2)
                for key in {(p, q), (q, p), (3 - p, 3 - q), (3 - q, 3 - p)}:
                    table[key] = m
    d = HodgeDiamond(3, table)
    assert pe_from_generator_decomposition(d, 3) == pe_via_hn(e_polynomial(d), 3)
