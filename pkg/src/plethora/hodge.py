"""Hodge diamonds, E-polynomials, generator coordinates, and duality expansions.

A diamond is a dimension n plus a table of positive multiplicities h[p][q].
Its unsigned polynomial is sum h^(p,q) u^p v^q and the signed Serre form
substitutes -u, -v.  Diamonds satisfying both classical symmetries

    h^(p,q) = h^(q,p)          (swap)
    h^(p,q) = h^(n-p,n-q)      (dual)

decompose over the generator coordinates

    A = (1 + uv) z      B = (u + v) z      C = uv z^2

through the four-term orbit generators

    R(p,q,n) = (u^p v^q + u^q v^p + u^(n-p) v^(n-q) + u^(n-q) v^(n-p)) z^n
             = A_(p-q) * C^min(q, n-p) * T_|n-p-q|

where A_s and T_r follow the recursions A_s = B*A_(s-1) - C*A_(s-2) and
T_r = A*T_(r-1) - C*T_(r-2) with seeds A_0 = T_0 = 2, A_1 = B, T_1 = A.
Setting C = 0 is the birational reduction.

The two-variable power-sum expansion writes any u<->v symmetric polynomial
in terms of p_r = u^r + v^r via

    u^r v^s + u^s v^r = p_r p_s - p_(r+s)        (r > s >= 1)
    (uv)^m            = (p_1^2/2 - p_2/2)^m

and certifies the duality relation structurally in that basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Union

from .errors import PreconditionError
from .exactalg import BiPoly, Scalar
from .symfun import SymFun


@dataclass(frozen=True)
class HodgeDiamond:
    """Dimension plus multiplicity table; entries present are >= 1."""

    dim: int
    h: tuple[tuple[int, int, int], ...]  # (p, q, multiplicity), sorted

    def __init__(self, dim: int, h: Mapping[tuple[int, int], int]):
        if dim < 0:
            raise PreconditionError("diamond dimension must be >= 0")
        table: dict[tuple[int, int], int] = {}
        for (p, q), mult in h.items():
            if not (0 <= p <= dim and 0 <= q <= dim):
                raise PreconditionError(f"index ({p}, {q}) outside [0, {dim}]^2")
            if mult < 1:
                raise PreconditionError(f"multiplicity at ({p}, {q}) must be >= 1")
            table[(int(p), int(q))] = int(mult)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "h", tuple(sorted((p, q, m) for (p, q), m in table.items())))

    def table(self) -> dict[tuple[int, int], int]:
        return {(p, q): m for p, q, m in self.h}

    def multiplicity(self, p: int, q: int) -> int:
        return self.table().get((p, q), 0)

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "h": [list(entry) for entry in self.h]})

    @classmethod
    def from_json(cls, text: str) -> "HodgeDiamond":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed diamond JSON: {exc}") from exc
        if not isinstance(data, dict) or "dim" not in data or "h" not in data:
            raise PreconditionError('diamond JSON needs "dim" and "h" fields')
        return cls(data["dim"], {(p, q): m for p, q, m in data["h"]})

    @classmethod
    def named(cls, name: str) -> "HodgeDiamond":
        try:
            return _BUILTINS[name]()
        except KeyError:
            raise PreconditionError(f"unknown diamond name {name!r}; know {sorted(_BUILTINS)}") from None


def projective_line() -> HodgeDiamond:
    return HodgeDiamond(1, {(0, 0): 1, (1, 1): 1})


def projective_plane() -> HodgeDiamond:
    return HodgeDiamond(2, {(0, 0): 1, (1, 1): 1, (2, 2): 1})


def elliptic_curve() -> HodgeDiamond:
    return HodgeDiamond(1, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})


_BUILTINS = {"P1": projective_line, "P2": projective_plane, "elliptic": elliptic_curve}


def e_polynomial(d: HodgeDiamond, signed: bool = False) -> BiPoly:
    """Sum of h^(p,q) u^p v^q, or the signed form with (-u)^p (-v)^q."""
    terms: dict[tuple[int, int], Fraction] = {}
    for p, q, m in d.h:
        c = Fraction(-m if signed and (p + q) % 2 else m)
        terms[(p, q)] = c
    return BiPoly(terms)


def scissor_sum(e1: BiPoly, e2: BiPoly) -> BiPoly:
    """Cut-and-paste additivity at the polynomial level."""
    return e1 + e2


def validate_symmetries(d: HodgeDiamond) -> dict[str, bool]:
    table = d.table()
    n = d.dim
    swap = all(table.get((q, p), 0) == m for (p, q), m in table.items())
    dual = all(table.get((n - p, n - q), 0) == m for (p, q), m in table.items())
    return {"hodge_symmetric": swap, "serre_dual": dual}


def serre_dual_transform(f: BiPoly, n: int) -> BiPoly:
    """Reverse exponents (a, b) -> (n-a, n-b); an involution on degree-<=n polys."""
    out: dict[tuple[int, int], Fraction] = {}
    for (a, b), c in f.items():
        if a > n or b > n:
            raise PreconditionError(f"term u^{a}*v^{b} exceeds dual degree {n}")
        out[(n - a, n - b)] = c
    return BiPoly(out)


# -- generator coordinates -----------------------------------------------------


@dataclass(frozen=True)
class GradedPoly:
    """A two-variable polynomial carrying a z-grading exponent."""

    poly: BiPoly
    z_power: int

    def __str__(self) -> str:
        return f"({self.poly})*z^{self.z_power}"


def r_generator(p: int, q: int, n: int) -> GradedPoly:
    """Four-term orbit generator; duplicate monomials add (degenerate orbits
    keep multiplicity 2 or 4)."""
    if not (0 <= q <= p <= n and p + q <= n):
        raise PreconditionError(f"need 0 <= q <= p <= n and p + q <= n, got ({p}, {q}, {n})")
    poly = (
        BiPoly.monomial(p, q)
        + BiPoly.monomial(q, p)
        + BiPoly.monomial(n - p, n - q)
        + BiPoly.monomial(n - q, n - p)
    )
    return GradedPoly(poly, n)


class ABCPoly:
    """Polynomial in the generators A, B, C with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], Scalar] | None = None):
        clean: dict[tuple[int, int, int], Fraction] = {}
        if terms:
            for key, c in terms.items():
                al, be, ga = (int(x) for x in key)
                if al < 0 or be < 0 or ga < 0:
                    raise PreconditionError(f"negative exponent in ABC term {key}")
                c = Fraction(c)
                if c:
                    clean[(al, be, ga)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "ABCPoly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "ABCPoly":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def gen(cls, name: str) -> "ABCPoly":
        try:
            key = {"A": (1, 0, 0), "B": (0, 1, 0), "C": (0, 0, 1)}[name]
        except KeyError:
            raise PreconditionError(f"unknown generator {name!r}") from None
        return cls({key: 1})

    def items(self) -> Iterator[tuple[tuple[int, int, int], Fraction]]:
        """Terms ordered by z-degree, then descending A and B exponents."""
        for key in sorted(self._terms, key=lambda k: (k[0] + k[1] + 2 * k[2], -k[0], -k[1])):
            yield key, self._terms[key]

    def coeff(self, al: int, be: int, ga: int) -> Fraction:
        return self._terms.get((al, be, ga), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "ABCPoly") -> "ABCPoly":
        if not isinstance(other, ABCPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return ABCPoly(out)

    def __sub__(self, other: "ABCPoly") -> "ABCPoly":
        if not isinstance(other, ABCPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return ABCPoly(out)

    def __neg__(self) -> "ABCPoly":
        return ABCPoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: Union["ABCPoly", Scalar]) -> "ABCPoly":
        if isinstance(other, (int, Fraction)):
            return ABCPoly({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, ABCPoly):
            return NotImplemented
        out: dict[tuple[int, int, int], Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ABCPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ABCPoly":
        if n < 0:
            raise PreconditionError("ABCPoly power must be nonnegative")
        result = ABCPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ABCPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (al, be, ga), c in self.items():
            mono = "*".join(
                (["A" if al == 1 else f"A^{al}"] if al else [])
                + (["B" if be == 1 else f"B^{be}"] if be else [])
                + (["C" if ga == 1 else f"C^{ga}"] if ga else [])
            )
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
        return f"ABCPoly({self})"

    def expand(self) -> dict[int, BiPoly]:
        """Expansion into (u, v, z): map z-degree -> coefficient polynomial."""
        a_val = BiPoly.parse("1 + u*v")
        b_val = BiPoly.parse("u + v")
        c_val = BiPoly.monomial(1, 1)
        out: dict[int, BiPoly] = {}
        for (al, be, ga), c in self._terms.items():
            zdeg = al + be + 2 * ga
            poly = a_val**al * b_val**be * c_val**ga * c
            out[zdeg] = out.get(zdeg, BiPoly.zero()) + poly
        return {z: p for z, p in out.items() if not p.is_zero()}


@lru_cache(maxsize=None)
def abc_sequences(s: int, which: str) -> ABCPoly:
    """A_s (expands to (u^s + v^s) z^s) or T_s (expands to (1 + u^s v^s) z^s).

    Seeds: index 0 is the constant 2, forced by the recursion at index 2.
    """
    if s < 0:
        raise PreconditionError("sequence index must be >= 0")
    if which not in ("A_s", "T_r"):
        raise PreconditionError(f'sequence name must be "A_s" or "T_r", got {which!r}')
    if s == 0:
        return ABCPoly.const(2)
    first, step = ("B", "B") if which == "A_s" else ("A", "A")
    if s == 1:
        return ABCPoly.gen(first)
    return (
        ABCPoly.gen(step) * abc_sequences(s - 1, which)
        - ABCPoly.gen("C") * abc_sequences(s - 2, which)
    )


def _orbit_reps(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(n + 1) for q in range(p + 1) if p + q <= n]


def r_in_abc(p: int, q: int, n: int) -> ABCPoly:
    """The generator R(p,q,n) in A/B/C coordinates: A_(p-q) C^min(q,n-p) T_|n-p-q|."""
    if not (0 <= q <= p <= n and p + q <= n):
        raise PreconditionError(f"need 0 <= q <= p <= n and p + q <= n, got ({p}, {q}, {n})")
    return (
        abc_sequences(p - q, "A_s")
        * ABCPoly.gen("C") ** min(q, n - p)
        * abc_sequences(abs(n - p - q), "T_r")
    )


def abc_decompose(d: HodgeDiamond) -> ABCPoly:
    """Write the diamond's graded polynomial as a polynomial in A, B, C.

    Each symmetry orbit {(p,q), (q,p), (n-p,n-q), (n-q,n-p)} is represented
    by its member with q <= p and p + q <= n; the orbit contributes
    multiplicity * |orbit| / 4 times the four-term generator, and the
    degenerate-orbit factors A_0 = T_0 = 2 cancel the fractions.
    """
    flags = validate_symmetries(d)
    if not (flags["hodge_symmetric"] and flags["serre_dual"]):
        raise PreconditionError("diamond must satisfy both symmetries to decompose")
    n = d.dim
    table = d.table()
    result = ABCPoly.zero()
    for p, q in _orbit_reps(n):
        mult = table.get((p, q), 0)
        if not mult:
            continue
        orbit = {(p, q), (q, p), (n - p, n - q), (n - q, n - p)}
        result = result + r_in_abc(p, q, n) * Fraction(mult * len(orbit), 4)
    expanded = result.expand()
    expected = e_polynomial(d, signed=False)
    if expanded != ({n: expected} if not expected.is_zero() else {}):
        raise AssertionError("generator decomposition failed to round-trip")
    return result


def birational_reduce(f: ABCPoly) -> ABCPoly:
    """Set C = 0: drop every term with a positive C exponent."""
    return ABCPoly({key: c for key, c in f._terms.items() if key[2] == 0})


# -- two-variable power sums ---------------------------------------------------


_UV = SymFun({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})  # uv as a power-sum combo


def two_var_power_sum_expand(f: BiPoly) -> SymFun:
    """Write a u<->v symmetric polynomial in power sums p_r = u^r + v^r.

    Canonical rules: a constant stays constant; u^a + v^a becomes p_a;
    u^a v^b + u^b v^a becomes p_a p_b - p_(a+b) for a > b >= 1; and the
    diagonal (uv)^a becomes the a-th power of p_1^2/2 - p_2/2.
    """
    if f != f.swap_vars():
        raise PreconditionError("polynomial is not symmetric under swapping u and v")
    result = SymFun.zero()
    for (a, b), c in f.items():
        if a < b:
            continue  # mirror term handled with its partner
        if a == b:
            if a == 0:
                result = result + SymFun.const(c)
            else:
                result = result + _UV**a * c
        elif b == 0:
            result = result + SymFun({(a,): c})
        else:
            result = result + SymFun({(a, b): c, (a + b,): -c})
    return result


def expand_power_sums_two_vars(f: SymFun) -> BiPoly:
    """Evaluate a power-sum expression with p_r = u^r + v^r (round-trip check)."""
    result = BiPoly.zero()
    for parts, c in f.items():
        term = BiPoly.const(c)
        for part in parts:
            term = term * (BiPoly.monomial(part, 0) + BiPoly.monomial(0, part))
        result = result + term
    return result


def serre_duality_power_sum_relation(d: HodgeDiamond) -> tuple[SymFun, SymFun]:
    """Both sides of the exponent-reversal identity, expanded in power sums.

    Structural equality of the pair certifies the duality relation in the
    power-sum basis (and through any chromatic basis, degree by degree).
    """
    flags = validate_symmetries(d)
    if not flags["serre_dual"]:
        raise PreconditionError("diamond is not Serre-dual")
    if not flags["hodge_symmetric"]:
        raise PreconditionError("diamond is not Hodge-symmetric")
    bar_e = e_polynomial(d, signed=False)
    lhs = serre_dual_transform(bar_e, d.dim)
    left = two_var_power_sum_expand(lhs)
    right = two_var_power_sum_expand(bar_e)
    if expand_power_sums_two_vars(left) != lhs or expand_power_sums_two_vars(right) != bar_e:
        raise AssertionError("power-sum expansion failed to round-trip")
    return left, right
