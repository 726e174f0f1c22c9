"""Plethystic exponential and logarithm, and every generating-function identity.

The plethystic exponential of a series f with zero constant term is

    PE[f] = exp( sum over m >= 1 of f(u^m, v^m, t^m) / m )

and its inverse applies the Moebius function:

    PL[g] = sum over m >= 1 of mu(m)/m * log(g)(u^m, v^m, t^m).

For a polynomial f attached to t, PE[f t] is computable three independent
ways: as a product of geometric factors over the monomials of f, as the sum
of complete-homogeneous plethysms h_n against f, and as an alternating sum
of signed coloring sums over complete graphs.  All three must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chromgraph import WeightedGraph, cs_coloring_sum
from .errors import PreconditionError
from .exactalg import BiPoly, TSeries, expand_product_of_powers, series_exp, series_log
from .hodge import HodgeDiamond, abc_decompose, e_polynomial
from .symfun import (
    Partition,
    SymFun,
    check_partition,
    h_to_p,
    partitions_of,
    pleth_alphabet,
    pleth_concrete,
    z_of,
)


@lru_cache(maxsize=None)
def mobius(m: int) -> int:
    """Moebius function by trial-division factorization."""
    if m < 1:
        raise PreconditionError("mobius needs m >= 1")
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        else:
            p += 1
    if m > 1:
        result = -result
    return result


def pe(f: TSeries) -> TSeries:
    """Plethystic exponential; needs a zero constant coefficient."""
    if not f.coeff(0).is_zero():
        raise PreconditionError("plethystic exponential needs a zero constant term")
    order = f.order
    psi = TSeries.zero(order)
    for m in range(1, order + 1):
        psi = psi + f.power_substitute(m) * Fraction(1, m)
    return series_exp(psi)


def pl(g: TSeries) -> TSeries:
    """Plethystic logarithm; needs constant coefficient exactly 1."""
    if g.coeff(0) != BiPoly.one():
        raise PreconditionError("plethystic logarithm needs constant term 1")
    order = g.order
    log_g = series_log(g)
    result = TSeries.zero(order)
    for m in range(1, order + 1):
        result = result + log_g.power_substitute(m) * Fraction(mobius(m), m)
    return result


# -- three routes to PE of a polynomial ---------------------------------------


def pe_product_formula(d: HodgeDiamond, order: int) -> TSeries:
    """Product of (1 - u^p v^q t)^(-multiplicity) over the diamond's entries."""
    factors = [(BiPoly.monomial(p, q), 1, -m) for p, q, m in d.h]
    return expand_product_of_powers(factors, order)


def pe_via_hn(f: BiPoly, order: int) -> TSeries:
    """Sum over n of the complete-homogeneous plethysm h_n against f*t."""
    result = TSeries.zero(order)
    for n in range(order + 1):
        result = result + pleth_concrete(h_to_p(n), f, 1, order)
    return result


def pe_via_coloring(f: BiPoly, order: int) -> TSeries:
    """Alternating sum of signed coloring sums of complete graphs against -f."""
    result = TSeries.one(order)
    for n in range(1, order + 1):
        contrib = cs_coloring_sum(WeightedGraph.complete(n), -f, 1, order)
        result = result + contrib * Fraction((-1) ** n, factorial(n))
    return result


# -- configuration spaces ------------------------------------------------------


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation: multiplicities n_j of j-cycles."""

    n: int
    counts: tuple[tuple[int, int], ...]  # (cycle length j, multiplicity n_j)

    @classmethod
    def from_partition(cls, parts: Partition) -> "CycleType":
        parts = check_partition(parts)
        if not parts:
            raise PreconditionError("cycle type needs a nonempty partition")
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls(sum(parts), tuple(sorted(counts.items())))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        if n < 1:
            raise PreconditionError("cycle type needs n >= 1")
        return cls(n, ((1, n),))

    def partition(self) -> Partition:
        out: list[int] = []
        for j, nj in self.counts:
            out.extend([j] * nj)
        return tuple(sorted(out, reverse=True))

    def class_size(self) -> int:
        """Number of permutations of this cycle type."""
        z = z_of(self.partition())
        return factorial(self.n) // int(z)


def conf_ordered_epoly(e: BiPoly, n: int) -> BiPoly:
    """Falling factorial e(e-1)...(e-(n-1)): ordered distinct n-tuples."""
    if n < 0:
        raise PreconditionError("conf_ordered_epoly needs n >= 0")
    result = BiPoly.one()
    for k in range(n):
        result = result * (e - BiPoly.const(k))
    return result


def alpha_j(e: BiPoly, j: int) -> BiPoly:
    """Moebius-weighted sum of power substitutions over the divisors of j."""
    if j < 1:
        raise PreconditionError("alpha_j needs j >= 1")
    result = BiPoly.zero()
    for d in range(1, j + 1):
        if j % d == 0:
            mu = mobius(j // d)
            if mu:
                result = result + e.substitute_powers(d) * mu
    return result


def equiv_config_epoly(e: BiPoly, sigma: CycleType) -> BiPoly:
    """Equivariant polynomial of the ordered configuration space at a cycle type:
    product over cycle lengths j of the j-step falling factorial of alpha_j."""
    result = BiPoly.one()
    for j, nj in sigma.counts:
        aj = alpha_j(e, j)
        for i in range(nj):
            result = result * (aj - BiPoly.const(i * j))
    return result


def ordered_sign_series(d: HodgeDiamond, order: int) -> TSeries:
    """Product of (1 + u^p v^q t)^multiplicity: the sign-character series of
    ordered configuration spaces."""
    factors = [(BiPoly.monomial(p, q, -1), 1, m) for p, q, m in d.h]
    return expand_product_of_powers(factors, order)


def unordered_config_series(d: HodgeDiamond, order: int) -> TSeries:
    """Product of ((1 - u^p v^q t^2)/(1 - u^p v^q t))^multiplicity: the series
    of unordered distinct-point configuration spaces."""
    factors: list[tuple[BiPoly, int, int]] = []
    for p, q, m in d.h:
        factors.append((BiPoly.monomial(p, q), 2, m))
        factors.append((BiPoly.monomial(p, q), 1, -m))
    return expand_product_of_powers(factors, order)


def unordered_config_symmetrization(e: BiPoly, n: int) -> BiPoly:
    """Average of equiv_config_epoly over all cycle types, weighted by class
    size: the independent oracle for the unordered series coefficients."""
    if n == 0:
        return BiPoly.one()
    total = BiPoly.zero()
    for parts in partitions_of(n):
        sigma = CycleType.from_partition(parts)
        total = total + equiv_config_epoly(e, sigma) * sigma.class_size()
    return total * Fraction(1, factorial(n))


# -- character-variety series --------------------------------------------------


@dataclass(frozen=True)
class GeometricSeries:
    """A truncated series tagged with its role in the full/irreducible pairing."""

    series: TSeries
    role: str  # "full", "irreducible", or "generic"

    def __post_init__(self):
        if self.role not in ("full", "irreducible", "generic"):
            raise PreconditionError(f"unknown series role {self.role!r}")


def charvar_full_from_irr(irr: GeometricSeries, order: int | None = None) -> GeometricSeries:
    """Full-series from irreducible-series direction: PE of the input."""
    s = irr.series if order is None else irr.series.truncate(order)
    if not s.coeff(0).is_zero():
        raise PreconditionError("irreducible series must have zero constant term")
    return GeometricSeries(pe(s), "full")


def charvar_irr_from_full(full: GeometricSeries, order: int | None = None) -> GeometricSeries:
    """Irreducible-series from full-series direction: PL of the input."""
    s = full.series if order is None else full.series.truncate(order)
    if s.coeff(0) != BiPoly.one():
        raise PreconditionError("full series must have constant term 1")
    return GeometricSeries(pl(s), "irreducible")


# -- generator closure ----------------------------------------------------------


def _add_rule_table(left: list[BiPoly], right: list[BiPoly]) -> list[BiPoly]:
    """h_k of a sum argument: h_k(F+G) = sum over i of h_i(F) h_(k-i)(G)."""
    order = len(left) - 1
    return [
        sum((left[i] * right[k - i] for i in range(1, k + 1)), left[0] * right[k])
        for k in range(order + 1)
    ]


def _sum_rule_table(total: list[BiPoly], known: list[BiPoly]) -> list[BiPoly]:
    """Solve h_k(F+G) = sum h_i(F) h_(k-i)(G) for the G table, given F and F+G."""
    order = len(total) - 1
    out = [BiPoly.one()]
    for k in range(1, order + 1):
        value = total[k]
        for i in range(1, k + 1):
            value = value - known[i] * out[k - i]
        out.append(value)
    return out


def _negate_table(table: list[BiPoly]) -> list[BiPoly]:
    """Table of h_k against the formal negative of an argument, by sum-rule
    inversion of h_k(F + (-F)) = delta_(k,0)."""
    order = len(table) - 1
    out = [BiPoly.one()]
    for k in range(1, order + 1):
        value = BiPoly.zero()
        for i in range(1, k + 1):
            value = value - table[i] * out[k - i]
        out.append(value)
    return out


def _schur_from_table(parts: Partition, table: list[BiPoly]) -> BiPoly:
    """Schur-plethysm value from an h-plethysm table via the h-determinant."""
    n = len(parts)

    def entry(k: int) -> BiPoly:
        if k < 0 or k >= len(table):
            return BiPoly.zero()
        return table[k]

    from .symfun import _leibniz_det

    rows = [[entry(parts[j] + i - j) for j in range(n)] for i in range(n)]
    return _leibniz_det(rows, BiPoly.zero())


def _product_rule_table(left: list[BiPoly], right: list[BiPoly]) -> list[BiPoly]:
    """h_k of a product argument from the two factor tables, via the Schur sum
    h_k(FG) = sum over partitions L of k of s_L(F) s_L(G)."""
    order = len(left) - 1
    out = [BiPoly.one()]
    for k in range(1, order + 1):
        value = BiPoly.zero()
        for parts in partitions_of(k):
            value = value + _schur_from_table(parts, left) * _schur_from_table(parts, right)
        out.append(value)
    return out


def pe_from_generator_decomposition(d: HodgeDiamond, order: int) -> TSeries:
    """Rebuild PE of a symmetric diamond from the three generator expansions.

    Only the h-plethysm tables of the three built-in diamonds enter, combined
    through the sum and product rules: the table for u+v comes from the
    elliptic-curve and degree-one tables, the table for uv from the squared
    degree-one table and the degree-two table, and the diamond's generator
    decomposition stitches the monomial tables together (negative integer
    coefficients via sum-rule inversion).  Must equal pe_via_hn exactly.
    """
    decomposition = abc_decompose(d)

    def base_table(poly: BiPoly) -> list[BiPoly]:
        return [pleth_alphabet(h_to_p(k), poly) for k in range(order + 1)]

    table_a = base_table(e_polynomial(HodgeDiamond.named("P1")))
    table_elliptic = base_table(e_polynomial(HodgeDiamond.named("elliptic")))
    table_p2 = base_table(e_polynomial(HodgeDiamond.named("P2")))
    table_b = _sum_rule_table(table_elliptic, table_a)  # u+v = elliptic minus degree-one
    table_a_sq = _product_rule_table(table_a, table_a)
    table_c = _sum_rule_table(table_a_sq, table_p2)  # uv = (degree-one)^2 minus degree-two

    empty_table = [BiPoly.one()] + [BiPoly.zero()] * order  # zero argument, add-rule unit
    unit_table = [BiPoly.one()] * (order + 1)  # constant-1 argument, product-rule unit
    total = empty_table
    for (al, be, ga), coeff in decomposition.items():
        if coeff.denominator != 1:
            raise AssertionError("generator decomposition should have integer coefficients")
        mono_table = unit_table
        for tab, exp in ((table_a, al), (table_b, be), (table_c, ga)):
            for _ in range(exp):
                mono_table = _product_rule_table(mono_table, tab)
        count = coeff.numerator
        if count < 0:
            mono_table = _negate_table(mono_table)
            count = -count
        for _ in range(count):
            total = _add_rule_table(total, mono_table)
    return TSeries(order, total)
