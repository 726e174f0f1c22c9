"""Weighted graphs, chromatic symmetric functions, and signed coloring sums.

The chromatic symmetric function of a weighted graph is computed by the
edge-subset expansion

    X_(G,w) = sum over S subset of E of (-1)^|S| p_(component weights of S)

which beats coloring enumeration for small dense graphs; the coloring
definition is kept as `csf_bruteforce` so both routes stay testable against
each other.

`cs_coloring_sum` realizes the plethysm of X_(G,w) against a polynomial f as
a sum over pairs (acyclic orientation, order-compatible coloring by the
signed variables of f), and must agree with the power-sum route exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import MAX_EDGE_SUBSETS, PreconditionError, StateLimitError, check_states
from .exactalg import BiPoly, TSeries
from .symfun import Partition, SymFun, h_to_p, partitions_of


@dataclass(frozen=True)
class WeightedGraph:
    """Finite simple graph on vertices 0..n-1 with positive integer weights."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), weights: Sequence[int] | None = None):
        if n < 1:
            raise PreconditionError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise PreconditionError(f"loop at vertex {i} not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise PreconditionError(f"edge ({i}, {j}) out of range for {n} vertices")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise PreconditionError(f"duplicate edge {key}")
            seen.add(key)
        if weights is None:
            ws = (1,) * n
        else:
            ws = tuple(int(w) for w in weights)
            if len(ws) != n or any(w < 1 for w in ws):
                raise PreconditionError("weights must list one positive int per vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "weights", ws)

    def total_weight(self) -> int:
        return sum(self.weights)

    def is_connected(self) -> bool:
        parent = list(range(self.n))
        for i, j in self.edges:
            _union(parent, i, j)
        return len({_find(parent, v) for v in range(self.n)}) == 1

    @classmethod
    def complete(cls, n: int, weights: Sequence[int] | None = None) -> "WeightedGraph":
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weights)

    @classmethod
    def path(cls, n: int, weights: Sequence[int] | None = None) -> "WeightedGraph":
        return cls(n, [(i, i + 1) for i in range(n - 1)], weights)

    @classmethod
    def cycle(cls, n: int) -> "WeightedGraph":
        if n < 3:
            raise PreconditionError("cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    def to_json(self) -> str:
        data: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if any(w != 1 for w in self.weights):
            data["weights"] = list(self.weights)
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "WeightedGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed graph JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data:
            raise PreconditionError('graph JSON needs an "n" field')
        return cls(data["n"], data.get("edges", ()), data.get("weights"))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], a: int, b: int) -> None:
    parent[_find(parent, a)] = _find(parent, b)


# -- chromatic symmetric function ---------------------------------------------


def csf(g: WeightedGraph) -> SymFun:
    """X_(G,w) in the power-sum basis, by edge-subset inclusion-exclusion."""
    m = len(g.edges)
    if 2**m > MAX_EDGE_SUBSETS:
        raise StateLimitError(f"2^{m} edge subsets over the limit of {MAX_EDGE_SUBSETS}")
    acc: dict[Partition, int] = {}
    for mask in range(2**m):
        parent = list(range(g.n))
        bits = 0
        for idx in range(m):
            if mask >> idx & 1:
                bits += 1
                _union(parent, *g.edges[idx])
        comp_weight: dict[int, int] = {}
        for v in range(g.n):
            root = _find(parent, v)
            comp_weight[root] = comp_weight.get(root, 0) + g.weights[v]
        key = tuple(sorted(comp_weight.values(), reverse=True))
        acc[key] = acc.get(key, 0) + (-1) ** bits
    return SymFun({k: Fraction(c) for k, c in acc.items() if c})


def csf_bruteforce(g: WeightedGraph, k: int) -> dict[tuple[int, ...], int]:
    """Sum over proper colorings with k colors of prod x_color(v)^weight(v).

    Returns exponent-tuple -> count, the same shape as
    symfun.expand_in_variables, so the two routes compare directly.
    """
    if k < 1:
        raise PreconditionError("csf_bruteforce needs k >= 1")
    check_states(k**g.n, f"brute-force coloring of {g.n} vertices with {k} colors")
    out: dict[tuple[int, ...], int] = {}
    for coloring in product(range(k), repeat=g.n):
        if any(coloring[i] == coloring[j] for i, j in g.edges):
            continue
        exps = [0] * k
        for v, color in enumerate(coloring):
            exps[color] += g.weights[v]
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return out


def chromatic_polynomial(g: WeightedGraph, k: int) -> int:
    """Proper-coloring count with k colors; defined for any integer k by the
    subset expansion, so formal values like k = -1 work too."""
    total = Fraction(0)
    for parts, c in csf(g).items():
        total += c * k ** len(parts)
    if total.denominator != 1:
        raise AssertionError("chromatic polynomial must be an integer")
    return int(total)


# -- acyclic orientations ------------------------------------------------------


Orientation = tuple[tuple[int, int], ...]


def _is_acyclic(n: int, arcs: Orientation) -> bool:
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def acyclic_orientations(g: WeightedGraph) -> list[Orientation]:
    """All acyclic orientations, ordered by the direction bitmask over sorted edges."""
    m = len(g.edges)
    if 2**m > MAX_EDGE_SUBSETS:
        raise StateLimitError(f"2^{m} orientations over the limit of {MAX_EDGE_SUBSETS}")
    out: list[Orientation] = []
    for mask in range(2**m):
        arcs = tuple(
            (j, i) if mask >> idx & 1 else (i, j) for idx, (i, j) in enumerate(g.edges)
        )
        if _is_acyclic(g.n, arcs):
            out.append(arcs)
    return out


# -- signed variables and the coloring sum ------------------------------------


@dataclass(frozen=True)
class SignedVar:
    """One signed monomial u^a*v^b; copies in a SignedVarList are distinct."""

    a: int
    b: int
    sign: int


@dataclass(frozen=True)
class SignedVarList:
    """Ordered signed variables of a polynomial, copies with multiplicity."""

    entries: tuple[SignedVar, ...]
    t_power: int


def var_multiset(f: BiPoly, t_power: int = 1) -> SignedVarList:
    """Signed variables of f: |c| copies of each monomial, sign = sgn(c).

    The fixed total order is graded lexicographic on the exponents with
    negative copies before positive ones at the same monomial; the coloring
    sum is order-independent, but a definite order keeps runs deterministic.
    """
    if t_power < 0:
        raise PreconditionError("t_power must be >= 0")
    entries: list[SignedVar] = []
    for (a, b), c in f.items():
        if c.denominator != 1:
            raise PreconditionError(f"signed variables need integer coefficients, got {c} on u^{a}*v^{b}")
        sign = 1 if c > 0 else -1
        entries.extend(SignedVar(a, b, sign) for _ in range(abs(c.numerator)))
    entries.sort(key=lambda s: (s.a + s.b, s.a, s.b, s.sign))
    return SignedVarList(tuple(entries), t_power)


def _compatible_colorings(g: WeightedGraph, arcs: Orientation, nvars: int, signs: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Maps vertex -> variable index obeying the orientation and sign rules."""
    for kappa in product(range(nvars), repeat=g.n):
        ok = True
        for a, b in arcs:
            ia, ib = kappa[a], kappa[b]
            if ia > ib or (ia == ib and signs[ia] == 1):
                ok = False
                break
        if ok:
            yield kappa


def coloring_sum_over(g: WeightedGraph, svl: SignedVarList, order: int) -> TSeries:
    """Coloring sum against an explicit signed-variable list.

    The value does not depend on how the list is ordered (only on its
    multiset of signed monomials); taking the list explicitly lets that
    independence be tested directly.
    """
    orientations = acyclic_orientations(g)
    nvars = len(svl.entries)
    check_states(len(orientations) * max(nvars, 1) ** g.n, "orientation-coloring enumeration")
    k_total = g.total_weight() * svl.t_power
    signs = [s.sign for s in svl.entries]
    acc: dict[tuple[int, int], int] = {}
    for arcs in orientations:
        for kappa in _compatible_colorings(g, arcs, nvars, signs):
            sign = 1
            ea = eb = 0
            for v, idx in enumerate(kappa):
                sv = svl.entries[idx]
                sign *= sv.sign
                ea += sv.a * g.weights[v]
                eb += sv.b * g.weights[v]
            acc[(ea, eb)] = acc.get((ea, eb), 0) + sign
    poly = BiPoly({key: Fraction(c) for key, c in acc.items()})
    return TSeries.term(poly, k_total, order) if k_total <= order else TSeries.zero(order)


def cs_coloring_sum(g: WeightedGraph, f: BiPoly, t_power: int = 1, order: int | None = None) -> TSeries:
    """Sum over (acyclic orientation, compatible coloring) pairs.

    Each vertex v colored by a signed variable contributes
    sign * (monomial)^weight(v); along every arc the coloring must be weakly
    increasing in the variable order, with equality (the same copy) forbidden
    across an edge when the variable is positive.  Equals the power-sum
    plethysm of csf(g) against f*t^t_power.
    """
    if t_power == 0 and f.constant_term():
        raise PreconditionError("coloring-sum argument must have zero constant term when t_power is 0")
    svl = var_multiset(f, t_power)
    if order is None:
        order = g.total_weight() * t_power
    return coloring_sum_over(g, svl, order)


# -- chromatic-symmetric-function bases ---------------------------------------


def _family_by_size(family: Sequence[WeightedGraph], d: int) -> dict[int, WeightedGraph]:
    by_size: dict[int, WeightedGraph] = {}
    for g in family:
        if any(w != 1 for w in g.weights):
            raise PreconditionError("basis family graphs must have unit weights")
        if g.n in by_size:
            raise PreconditionError(f"two family graphs with {g.n} vertices")
        if not g.is_connected():
            raise PreconditionError(f"family graph with {g.n} vertices is not connected")
        by_size[g.n] = g
    missing = [k for k in range(1, d + 1) if k not in by_size]
    if missing:
        raise PreconditionError(f"family is missing connected graphs with {missing} vertices")
    return by_size


def csf_basis_matrix(family: Sequence[WeightedGraph], d: int) -> list[list[Fraction]]:
    """Square matrix of X of the disjoint union G_L over p_M, for L, M partitions of d.

    Rows and columns both follow partitions_of(d) order; raises if singular.
    """
    if d < 1:
        raise PreconditionError("basis degree must be >= 1")
    by_size = _family_by_size(family, d)
    col_index = {parts: i for i, parts in enumerate(partitions_of(d))}
    csf_by_size = {k: csf(g) for k, g in by_size.items()}
    matrix: list[list[Fraction]] = []
    for parts in partitions_of(d):
        x = SymFun.one()
        for part in parts:
            x = x * csf_by_size[part]
        row = [Fraction(0)] * len(col_index)
        for mu, c in x.items():
            row[col_index[mu]] = c
        matrix.append(row)
    _solve_exact([row[:] for row in matrix], None)  # invertibility check
    return matrix


def h_in_csf_basis(n: int, family: Sequence[WeightedGraph]) -> dict[Partition, Fraction]:
    """Coefficients c_L with h_n = sum c_L * X of the disjoint union G_L."""
    matrix = csf_basis_matrix(family, n)
    parts_list = partitions_of(n)
    h = h_to_p(n)
    rhs = [h.coeff(mu) for mu in parts_list]
    transposed = [[matrix[r][c] for r in range(len(parts_list))] for c in range(len(parts_list))]
    solution = _solve_exact(transposed, rhs)
    coeffs = {parts: c for parts, c in zip(parts_list, solution) if c}
    # round trip: expand back to power sums and compare
    by_size = _family_by_size(list(family), n)
    check = SymFun.zero()
    for parts, c in coeffs.items():
        x = SymFun.one()
        for part in parts:
            x = x * csf(by_size[part])
        check = check + x * c
    if check != h:
        raise AssertionError("basis coefficients failed the round trip")
    return coeffs


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction] | None) -> list[Fraction]:
    """Gaussian elimination over Fraction; raises PreconditionError if singular."""
    n = len(matrix)
    b = [Fraction(x) for x in rhs] if rhs is not None else [Fraction(0)] * n
    a = [[Fraction(x) for x in row] for row in matrix]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise PreconditionError("singular basis matrix (family does not give a basis)")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                b[r] -= factor * b[col]
    return b
