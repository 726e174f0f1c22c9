"""Symmetric functions in the power-sum basis, with exact plethysm.

A symmetric function is stored as a finite map

    partition -> Fraction      meaning   sum of c * p_partition

where a partition is a weakly decreasing tuple of positive ints and
p_(l1,...,lr) = p_l1 * ... * p_lr.  The empty partition stands for the
constant 1, so constants and mixed-degree combinations are representable.

Plethysm is a monomial map in this basis: p_n acts on p_m by p_(nm), on a
constant by the identity, additively and multiplicatively otherwise.  The
classical base changes (complete homogeneous, elementary, Schur) all convert
into power sums here:

    h_n = sum over partitions L of n of  p_L / z_L
    e_n = sum over partitions L of n of  (-1)^(n - len(L)) p_L / z_L
    s_L = det( h_(L_j + i - j) )        (entries 0 for negative subscripts)

with z_L = prod over part sizes i of i^m_i * m_i!.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Mapping, Union

import json

from .errors import PreconditionError
from .exactalg import BiPoly, Scalar, TSeries

Partition = tuple[int, ...]


def check_partition(parts: Partition) -> Partition:
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise PreconditionError(f"partition parts must be positive: {parts}")
        if i and parts[i - 1] < p:
            raise PreconditionError(f"partition parts must be weakly decreasing: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order: (n) first, (1,..,1) last."""
    if n < 0:
        raise PreconditionError("partitions_of needs n >= 0")

    def gen(remaining: int, max_part: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def z_of(parts: Partition) -> Fraction:
    """Centralizer order z = prod i^m_i * m_i! over part multiplicities m_i."""
    parts = check_partition(parts)
    z = 1
    for i, m in Counter(parts).items():
        z *= i**m * factorial(m)
    return Fraction(z)


def _sorted_merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class SymFun:
    """Rational combination of power-sum products p_partition.  Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Scalar] | None = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for parts, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[check_partition(parts)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "SymFun":
        return cls()

    @classmethod
    def one(cls) -> "SymFun":
        return cls({(): 1})

    @classmethod
    def const(cls, c: Scalar) -> "SymFun":
        return cls({(): Fraction(c)})

    @classmethod
    def power_sum(cls, n: int) -> "SymFun":
        if n < 1:
            raise PreconditionError("power sum index must be >= 1")
        return cls({(n,): 1})

    def items(self) -> Iterator[tuple[Partition, Fraction]]:
        """Terms ordered by degree, then reverse lexicographically."""
        for parts in sorted(self._terms, key=lambda q: (sum(q), tuple(-p for p in q))):
            yield parts, self._terms[parts]

    def coeff(self, parts: Partition) -> Fraction:
        return self._terms.get(check_partition(parts), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return SymFun(out)

    def __sub__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return SymFun(out)

    def __neg__(self) -> "SymFun":
        return SymFun({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: Union["SymFun", Scalar]) -> "SymFun":
        if isinstance(other, (int, Fraction)):
            return SymFun({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, SymFun):
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for la, c1 in self._terms.items():
            for mu, c2 in other._terms.items():
                key = _sorted_merge(la, mu)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymFun(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SymFun":
        if n < 0:
            raise PreconditionError("SymFun power must be nonnegative")
        result = SymFun.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymFun) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for parts, c in self.items():
            mono = "p[" + ",".join(map(str, parts)) + "]" if parts else ""
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SymFun({self})"

    def to_json(self) -> str:
        return json.dumps(
            {"terms": [{"partition": list(parts), "coeff": str(c)} for parts, c in self.items()]}
        )

    @classmethod
    def from_json(cls, text: str) -> "SymFun":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed symmetric-function JSON: {exc}") from exc
        if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
            raise PreconditionError('symmetric-function JSON needs a "terms" list')
        out: dict[Partition, Fraction] = {}
        for entry in data["terms"]:
            parts = check_partition(tuple(entry["partition"]))
            out[parts] = out.get(parts, Fraction(0)) + Fraction(entry["coeff"])
        return cls(out)


# -- classical bases ---------------------------------------------------------


@lru_cache(maxsize=None)
def h_to_p(n: int) -> SymFun:
    """Complete homogeneous h_n in the power-sum basis."""
    if n < 0:
        raise PreconditionError("h_to_p needs n >= 0")
    return SymFun({parts: Fraction(1) / z_of(parts) for parts in partitions_of(n)})


@lru_cache(maxsize=None)
def e_to_p(n: int) -> SymFun:
    """Elementary e_n in the power-sum basis (sign (-1)^(n - number of parts))."""
    if n < 0:
        raise PreconditionError("e_to_p needs n >= 0")
    return SymFun(
        {parts: Fraction((-1) ** (n - len(parts))) / z_of(parts) for parts in partitions_of(n)}
    )


def _h_or_zero(k: int) -> SymFun:
    return h_to_p(k) if k >= 0 else SymFun.zero()


def _leibniz_det(rows: list[list], zero):
    """Determinant by permutation expansion; works over any ring with + and *."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        total = total + (-prod if inversions % 2 else prod)
    return total


def s_to_p(parts: Partition) -> SymFun:
    """Schur function via the h-determinant det(h_(L_j + i - j)), in power sums."""
    parts = check_partition(parts)
    if not parts:
        return SymFun.one()
    n = len(parts)
    rows = [[_h_or_zero(parts[j] + i - j) for j in range(n)] for i in range(n)]
    return _leibniz_det(rows, SymFun.zero())


# -- plethysm ----------------------------------------------------------------


def _p_on(n: int, g: SymFun) -> SymFun:
    """p_n plethysm g: scale every partition by n, fix the constant term."""
    out: dict[Partition, Fraction] = {}
    for parts, c in g._terms.items():
        key = tuple(p * n for p in parts)
        out[key] = out.get(key, Fraction(0)) + c
    return SymFun(out)


def pleth_abstract(f: SymFun, g: SymFun) -> SymFun:
    """Plethysm f(g) inside the power-sum basis."""
    result = SymFun.zero()
    for parts, c in f._terms.items():
        term = SymFun.const(c)
        for part in parts:
            term = term * _p_on(part, g)
        result = result + term
    return result


def pleth_alphabet(f: SymFun, g: BiPoly) -> BiPoly:
    """Plethysm of f against a two-variable polynomial treated as an alphabet.

    p_k acts by substituting u -> u^k, v -> v^k; the result is exact for any
    rational coefficients in g.
    """
    result = BiPoly.zero()
    for parts, c in f._terms.items():
        term = BiPoly.const(c)
        for part in parts:
            term = term * g.substitute_powers(part)
        result = result + term
    return result


def _check_concrete_argument(g: BiPoly, t_power: int) -> None:
    if t_power < 0:
        raise PreconditionError("t_power must be >= 0")
    if t_power == 0 and g.constant_term():
        raise PreconditionError("concrete plethysm argument must have zero constant term")


def pleth_concrete(f: SymFun, g: BiPoly, t_power: int, order: int) -> TSeries:
    """Plethysm of f against g*t^t_power, truncated at the given order in t."""
    _check_concrete_argument(g, t_power)
    coeffs = [BiPoly.zero() for _ in range(order + 1)]
    for parts, c in f._terms.items():
        k = sum(parts) * t_power
        if k > order:
            continue
        term = BiPoly.const(c)
        for part in parts:
            term = term * g.substitute_powers(part)
        coeffs[k] = coeffs[k] + term
    return TSeries(order, coeffs)


def pleth_schur_via_jt(parts: Partition, g: BiPoly, t_power: int, order: int) -> TSeries:
    """Schur-plethysm as the determinant with entries h_(L_j + i - j) applied to g*t^t_power.

    Agrees with pleth_concrete(s_to_p(parts), ...); kept as an independent route.
    """
    parts = check_partition(parts)
    _check_concrete_argument(g, t_power)
    if not parts:
        return TSeries.one(order)
    n = len(parts)

    def entry(k: int) -> TSeries:
        if k < 0:
            return TSeries.zero(order)
        return pleth_concrete(h_to_p(k), g, t_power, order)

    rows = [[entry(parts[j] + i - j) for j in range(n)] for i in range(n)]
    return _leibniz_det(rows, TSeries.zero(order))


# -- finite-variable expansion (oracle support) -------------------------------


def expand_in_variables(f: SymFun, k: int) -> dict[tuple[int, ...], Fraction]:
    """Evaluate at x_1..x_k (rest 0): exponent-tuple -> coefficient map."""
    if k < 1:
        raise PreconditionError("expand_in_variables needs k >= 1")
    total: dict[tuple[int, ...], Fraction] = {}
    for parts, c in f._terms.items():
        dist: dict[tuple[int, ...], Fraction] = {(0,) * k: c}
        for part in parts:
            nxt: dict[tuple[int, ...], Fraction] = {}
            for exps, val in dist.items():
                for i in range(k):
                    key = exps[:i] + (exps[i] + part,) + exps[i + 1 :]
                    nxt[key] = nxt.get(key, Fraction(0)) + val
            dist = nxt
        for exps, val in dist.items():
            total[exps] = total.get(exps, Fraction(0)) + val
    return {exps: val for exps, val in total.items() if val}
