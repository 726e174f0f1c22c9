import random
from fractions import Fraction

import pytest

from plethora.errors import PreconditionError, StateLimitError
from plethora.exactalg import BiPoly, TSeries
from plethora.chromgraph import (
    SignedVarList,
    WeightedGraph,
    acyclic_orientations,
    chromatic_polynomial,
    coloring_sum_over,
    cs_coloring_sum,
    csf,
    csf_basis_matrix,
    csf_bruteforce,
    h_in_csf_basis,
    var_multiset,
)
from plethora.symfun import SymFun, e_to_p, expand_in_variables, h_to_p, partitions_of, pleth_concrete


def chromatic_dc(n, edges, k):
    """Deletion-contraction oracle for the chromatic polynomial."""
    edges = [tuple(sorted(e)) for e in edges]
    if not edges:
        return k**n
    i, j = edges[0]
    deleted = chromatic_dc(n, edges[1:], k)
    # contract j into i: relabel j -> i, drop loops, dedupe
    merged = set()
    for a, b in edges[1:]:
        a = i if a == j else (a - 1 if a > j else a)
        b = i if b == j else (b - 1 if b > j else b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return deleted - chromatic_dc(n - 1, sorted(merged), k)


def test_graph_validation():
    with pytest.raises(PreconditionError):
        WeightedGraph(2, [(0, 0)])
    with pytest.raises(PreconditionError):
        WeightedGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(PreconditionError):
        WeightedGraph(2, [(0, 2)])
    with pytest.raises(PreconditionError):
        WeightedGraph(2, weights=[1])
    g = WeightedGraph.from_json('{"n": 3, "edges": [[2, 1]], "weights": [1, 2, 1]}')
    assert g.edges == ((1, 2),) and g.weights == (1, 2, 1)
    assert WeightedGraph.from_json(g.to_json()) == g


def test_csf_examples():
    assert csf(WeightedGraph(1)) == SymFun({(1,): 1})
    assert csf(WeightedGraph.complete(3)) == SymFun({(3,): 2, (2, 1): -3, (1, 1, 1): 1})
    assert csf(WeightedGraph.complete(3)) == e_to_p(3) * 6
    assert csf(WeightedGraph(1, weights=[3])) == SymFun({(3,): 1})


def test_csf_against_bruteforce():
    battery = [
        WeightedGraph.path(3),
        WeightedGraph.complete(3),
        WeightedGraph.cycle(4),
        WeightedGraph.path(2, weights=[1, 2]),
        WeightedGraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)], weights=[2, 1, 1, 1]),
    ]
    for g in battery:
        for k in (2, 3):
            brute = {key: Fraction(c) for key, c in csf_bruteforce(g, k).items()}
            assert brute == expand_in_variables(csf(g), k), g
    rng = random.Random(17)
    for _ in range(5):
        n = rng.randint(2, 4)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = WeightedGraph(n, edges, [rng.randint(1, 2) for _ in range(n)])
        brute = {key: Fraction(c) for key, c in csf_bruteforce(g, 3).items()}
        assert brute == expand_in_variables(csf(g), 3)


def test_csf_bruteforce_counts():
    assert sum(csf_bruteforce(WeightedGraph.complete(3), 3).values()) == 6
    assert sum(csf_bruteforce(WeightedGraph.path(3), 2).values()) == 2


def test_chromatic_polynomial():
    K3, C4 = WeightedGraph.complete(3), WeightedGraph.cycle(4)
    assert chromatic_polynomial(K3, 3) == 6
    assert chromatic_polynomial(C4, 2) == 2
    assert abs(chromatic_polynomial(C4, -1)) == 14
    for g in (K3, C4, WeightedGraph.path(4), WeightedGraph.complete(4)):
        for k in (-1, 0, 1, 2, 3, 4):
            assert chromatic_polynomial(g, k) == chromatic_dc(g.n, list(g.edges), k), (g, k)


def test_acyclic_orientations():
    assert len(acyclic_orientations(WeightedGraph.complete(3))) == 6
    assert acyclic_orientations(WeightedGraph(3)) == [()]
    assert len(acyclic_orientations(WeightedGraph.cycle(4))) == 14
    for g in (WeightedGraph.path(3), WeightedGraph.cycle(4), WeightedGraph.complete(4)):
        assert len(acyclic_orientations(g)) == abs(chromatic_polynomial(g, -1))
    # deterministic order, no directed cycles ever
    first = acyclic_orientations(WeightedGraph.complete(3))
    assert first == acyclic_orientations(WeightedGraph.complete(3))


def test_var_multiset():
    vm = var_multiset(BiPoly.parse("1 + u*v"))
    assert [(s.a, s.b, s.sign) for s in vm.entries] == [(0, 0, 1), (1, 1, 1)]
    vm = var_multiset(-BiPoly.parse("1 + u*v"))
    assert [(s.a, s.b, s.sign) for s in vm.entries] == [(0, 0, -1), (1, 1, -1)]
    vm = var_multiset(BiPoly.parse("1 - u + 2*u*v"))
    assert [(s.a, s.b, s.sign) for s in vm.entries] == [(0, 0, 1), (1, 0, -1), (1, 1, 1), (1, 1, 1)]
    with pytest.raises(PreconditionError):
        var_multiset(BiPoly.parse("1/2*u"))


def test_coloring_sum_hand_values():
    K2 = WeightedGraph.complete(2)
    assert cs_coloring_sum(K2, -BiPoly.parse("1 + u*v"), 1, 2).coeff(2) == BiPoly.parse(
        "2 + 2*u*v + 2*u^2*v^2"
    )
    assert cs_coloring_sum(K2, BiPoly.parse("1 + u*v"), 1, 2).coeff(2) == BiPoly.parse("2*u*v")
    f = BiPoly.parse("1 - u + 2*u*v")
    assert cs_coloring_sum(WeightedGraph(1), f, 1, 1) == TSeries.term(f, 1, 1)


def test_coloring_sum_equals_plethysm():
    polys = [BiPoly.parse(t) for t in ("1 + u*v", "-1 - u*v", "1 - u + 2*u*v", "2*u*v", "1 + u + v + u*v")]
    graphs = [
        WeightedGraph.path(3),
        WeightedGraph.complete(3),
        WeightedGraph.cycle(4),
        WeightedGraph.complete(4),
        WeightedGraph.path(2, weights=[1, 2]),
        WeightedGraph(3, [(0, 1)], weights=[2, 1, 3]),
    ]
    for g in graphs:
        for f in polys:
            order = g.total_weight()
            assert cs_coloring_sum(g, f, 1, order) == pleth_concrete(csf(g), f, 1, order), (g, str(f))


def test_coloring_sum_order_independence():
    g = WeightedGraph.complete(3)
    f = BiPoly.parse("1 - u + 2*u*v")
    base = var_multiset(f, 1)
    reference = coloring_sum_over(g, base, 3)
    rng = random.Random(2)
    entries = list(base.entries)
    for _ in range(6):
        rng.shuffle(entries)
        shuffled = SignedVarList(tuple(entries), 1)
        assert coloring_sum_over(g, shuffled, 3) == reference


def test_coloring_sum_guard(monkeypatch):
    big = WeightedGraph.complete(6)
    f = BiPoly.parse("1 + u + v + u*v + u^2*v^2 + u^2*v + u*v^2 + u^2 + v^2 + 1/1*u^3")
    monkeypatch.setenv("PLETHORA_MAX_STATES", "1000")
    with pytest.raises(StateLimitError):
        cs_coloring_sum(big, f, 1, 6)
    monkeypatch.delenv("PLETHORA_MAX_STATES")
    monkeypatch.setenv("PLETHORA_MAX_STATES", "not a number")
    with pytest.raises(PreconditionError):
        csf_bruteforce(WeightedGraph.path(2), 2)


def test_bruteforce_guard():
    with pytest.raises(StateLimitError):
        csf_bruteforce(WeightedGraph.path(20), 8)


def test_basis_matrix_paths_d2():
    family = [WeightedGraph.path(1), WeightedGraph.path(2)]
    matrix = csf_basis_matrix(family, 2)
    cols = {parts: i for i, parts in enumerate(partitions_of(2))}
    # row for (2) is the two-vertex path: p_1^2 - p_2; row for (1,1) is two dots
    assert matrix[0][cols[(1, 1)]] == 1 and matrix[0][cols[(2,)]] == -1
    assert matrix[1][cols[(1, 1)]] == 1 and matrix[1][cols[(2,)]] == 0
    complete = csf_basis_matrix([WeightedGraph.complete(1), WeightedGraph.complete(2)], 2)
    assert complete == matrix  # K_2 and P_2 coincide


def test_basis_matrix_rejections():
    with pytest.raises(PreconditionError):
        csf_basis_matrix([WeightedGraph.path(1), WeightedGraph(2)], 2)  # disconnected
    with pytest.raises(PreconditionError):
        csf_basis_matrix([WeightedGraph.path(1)], 2)  # missing size
    with pytest.raises(PreconditionError):
        csf_basis_matrix([WeightedGraph.path(1), WeightedGraph.path(2, weights=[2, 1])], 2)


def test_h_in_csf_basis():
    assert h_in_csf_basis(1, [WeightedGraph.path(1)]) == {(1,): 1}
    coeffs = h_in_csf_basis(2, [WeightedGraph.complete(k) for k in (1, 2)])
    assert coeffs == {(1, 1): 1, (2,): Fraction(-1, 2)}
    # round trips for the path family up to degree 4
    for n in range(1, 5):
        family = [WeightedGraph.path(k) for k in range(1, n + 1)]
        coeffs = h_in_csf_basis(n, family)
        rebuilt = SymFun.zero()
        for parts, c in coeffs.items():
            x = SymFun.one()
            for part in parts:
                x = x * csf(WeightedGraph.path(part))
            rebuilt = rebuilt + x * c
        assert rebuilt == h_to_p(n)


def test_csf_disjoint_union_multiplicative():
    union = WeightedGraph(5, [(0, 1), (1, 2), (3, 4)], weights=[1, 2, 1, 1, 1])
    left = WeightedGraph(3, [(0, 1), (1, 2)], weights=[1, 2, 1])
    right = WeightedGraph.path(2)
    assert csf(union) == csf(left) * csf(right)
