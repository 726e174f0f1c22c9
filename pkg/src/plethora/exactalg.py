"""Exact arithmetic kernel: rationals, two-variable polynomials, truncated series.

Coefficients are `fractions.Fraction` throughout; there is no floating point
anywhere in the package.  A two-variable polynomial (`BiPoly`) is a sparse map

    (a, b) -> Fraction        meaning   sum of c * u^a * v^b

with no zero coefficients stored.  A truncated series (`TSeries`) is a tuple
of N+1 BiPoly coefficients for t^0 .. t^N; arithmetic never reads past the
truncation order, and binary operations require both operands to carry the
same order (truncate explicitly first).

Canonical term order is graded: total degree ascending, then u-exponent
descending, so (u+v)^2 prints as ``u^2 + 2*u*v + v^2`` and a series
coefficient like 1 + uv + u^2v^2 prints in ascending degree.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Union

from .errors import PreconditionError

Rational = Fraction
Scalar = Union[int, Fraction]


def _term_key(exps: tuple[int, int]) -> tuple[int, int]:
    a, b = exps
    return (a + b, -a)


class BiPoly:
    """Exact polynomial in u and v with rational coefficients.  Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise PreconditionError(f"negative exponent in BiPoly term u^{a}*v^{b}")
                c = Fraction(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Scalar = 1) -> "BiPoly":
        return cls({(a, b): Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms in canonical order."""
        for key in sorted(self._terms, key=_term_key):
            yield key, self._terms[key]

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_single_term(self) -> bool:
        return len(self._terms) == 1

    def max_exponents(self) -> tuple[int, int]:
        """Componentwise max of (a, b) over the support; (0, 0) if zero."""
        if not self._terms:
            return (0, 0)
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def total_degree(self) -> int:
        return max((a + b for a, b in self._terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise PreconditionError("BiPoly power must be nonnegative")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitutions -----------------------------------------------------

    def substitute_powers(self, m: int) -> "BiPoly":
        """Replace every u^a*v^b by u^(am)*v^(bm); coefficients unchanged."""
        if m < 1:
            raise PreconditionError("substitute_powers needs m >= 1")
        return BiPoly({(a * m, b * m): c for (a, b), c in self._terms.items()})

    def negate_vars(self) -> "BiPoly":
        """Substitute u -> -u, v -> -v."""
        return BiPoly({(a, b): c if (a + b) % 2 == 0 else -c for (a, b), c in self._terms.items()})

    def swap_vars(self) -> "BiPoly":
        """Substitute u <-> v."""
        return BiPoly({(b, a): c for (a, b), c in self._terms.items()})

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        u, v = Fraction(u), Fraction(v)
        return sum((c * u**a * v**b for (a, b), c in self._terms.items()), Fraction(0))

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (a, b), c in self.items():
            mono = "*".join(
                (["u" if a == 1 else f"u^{a}"] if a else []) + (["v" if b == 1 else f"v^{b}"] if b else [])
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
        return f"BiPoly({self})"

    _TERM_RE = re.compile(r"^(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[uv])(?:\^(?P<exp>\d+))?)$")

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Inverse of str(); accepts e.g. ``1 - 2*u*v + 1/2*u^2*v^2``."""
        s = text.strip()
        if not s:
            raise PreconditionError("empty polynomial text")
        if s == "0":
            return cls.zero()
        out: dict[tuple[int, int], Fraction] = {}
        for sign_ch, body in re.findall(r"([+-]?)\s*([^+-]+)", s):
            body = body.strip()
            if not body:
                raise PreconditionError(f"malformed polynomial text: {text!r}")
            coeff = Fraction(-1 if sign_ch == "-" else 1)
            a = b = 0
            for factor in body.split("*"):
                m = cls._TERM_RE.match(factor.strip())
                if m is None:
                    raise PreconditionError(f"malformed polynomial factor {factor!r} in {text!r}")
                if m.group("num") is not None:
                    coeff *= Fraction(m.group("num"))
                else:
                    e = int(m.group("exp") or 1)
                    if m.group("var") == "u":
                        a += e
                    else:
                        b += e
            out[(a, b)] = out.get((a, b), Fraction(0)) + coeff
        return cls(out)


class TSeries:
    """Series in t truncated at a fixed order, with BiPoly coefficients."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[BiPoly] | None = None):
        if order < 0:
            raise PreconditionError("truncation order must be >= 0")
        if coeffs is None:
            cs = tuple(BiPoly.zero() for _ in range(order + 1))
        else:
            cs = tuple(coeffs)
            if len(cs) != order + 1:
                raise PreconditionError(f"series of order {order} needs {order + 1} coefficients, got {len(cs)}")
        self._order = order
        self._coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls.term(BiPoly.one(), 0, order)

    @classmethod
    def term(cls, poly: BiPoly, t_power: int, order: int) -> "TSeries":
        """The series poly * t^t_power (zero if t_power exceeds the order)."""
        if t_power < 0:
            raise PreconditionError("t exponent must be >= 0")
        coeffs = [BiPoly.zero() for _ in range(order + 1)]
        if t_power <= order:
            coeffs[t_power] = poly
        return cls(order, coeffs)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    def coeff(self, k: int) -> BiPoly:
        if not 0 <= k <= self._order:
            raise PreconditionError(f"coefficient index {k} outside truncation order {self._order}")
        return self._coeffs[k]

    def coeffs(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def _check_order(self, other: "TSeries") -> None:
        if self._order != other._order:
            raise PreconditionError(
                f"series orders differ ({self._order} vs {other._order}); truncate explicitly first"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_order(other)
        return TSeries(self._order, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_order(other)
        return TSeries(self._order, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "TSeries":
        return TSeries(self._order, [-c for c in self._coeffs])

    def __mul__(self, other: Union["TSeries", BiPoly, Scalar]) -> "TSeries":
        if isinstance(other, (int, Fraction, BiPoly)):
            return TSeries(self._order, [c * other for c in self._coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_order(other)
        out = [BiPoly.zero() for _ in range(self._order + 1)]
        for i, ci in enumerate(self._coeffs):
            if ci.is_zero():
                continue
            for j in range(self._order + 1 - i):
                cj = other._coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return TSeries(self._order, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TSeries) and self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    # -- reshaping ---------------------------------------------------------

    def truncate(self, order: int) -> "TSeries":
        """Drop to a lower (or equal) truncation order."""
        if order > self._order:
            raise PreconditionError(f"cannot extend a series of order {self._order} to {order}")
        return TSeries(order, self._coeffs[: order + 1])

    def power_substitute(self, m: int) -> "TSeries":
        """Substitute u -> u^m, v -> v^m, t -> t^m, truncated at the same order."""
        if m < 1:
            raise PreconditionError("power substitution needs m >= 1")
        out = [BiPoly.zero() for _ in range(self._order + 1)]
        for k, c in enumerate(self._coeffs):
            if k * m > self._order:
                break
            if not c.is_zero():
                out[k * m] = c.substitute_powers(m)
        return TSeries(self._order, out)

    def negate_t(self) -> "TSeries":
        """Substitute t -> -t."""
        return TSeries(self._order, [c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs)])

    # -- text and JSON -----------------------------------------------------

    def __str__(self) -> str:
        return "; ".join(f"t^{k}: {c}" for k, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"TSeries(order={self._order}, {self})"

    def to_json(self) -> str:
        return json.dumps({"order": self._order, "coeffs": [str(c) for c in self._coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "TSeries":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed series JSON: {exc}") from exc
        if not isinstance(data, dict) or "order" not in data or "coeffs" not in data:
            raise PreconditionError('series JSON needs "order" and "coeffs" fields')
        order = data["order"]
        coeffs = data["coeffs"]
        if not isinstance(order, int) or not isinstance(coeffs, list):
            raise PreconditionError("series JSON has wrong field types")
        return cls(order, [BiPoly.parse(c) for c in coeffs])


def series_exp(s: TSeries) -> TSeries:
    """exp(s) = sum s^k / k!, requiring a zero constant coefficient."""
    if not s.coeff(0).is_zero():
        raise PreconditionError("series_exp needs a zero constant term")
    result = TSeries.one(s.order)
    term = TSeries.one(s.order)
    for k in range(1, s.order + 1):
        term = (term * s) * Fraction(1, k)
        result = result + term
    return result


def series_log(s: TSeries) -> TSeries:
    """Inverse of series_exp, requiring constant coefficient exactly 1."""
    if s.coeff(0) != BiPoly.one():
        raise PreconditionError("series_log needs constant term 1")
    x = s - TSeries.one(s.order)
    result = TSeries.zero(s.order)
    term = TSeries.one(s.order)
    for k in range(1, s.order + 1):
        term = term * x
        result = result + term * Fraction((-1) ** (k + 1), k)
    return result


def expand_product_of_powers(
    factors: Iterable[tuple[BiPoly, int, int]], order: int
) -> TSeries:
    """Expand a product of factors (1 - monomial*t^t_power)^exponent to the order.

    Each monomial must be a single term; exponents may be negative (geometric
    expansion) or nonnegative (binomial).
    """
    result = TSeries.one(order)
    for monomial, t_power, exponent in factors:
        if not monomial.is_single_term():
            raise PreconditionError(f"product factor must be a single term, got {monomial}")
        if t_power < 1:
            raise PreconditionError("product factor needs t_power >= 1")
        coeffs = [BiPoly.zero() for _ in range(order + 1)]
        coeffs[0] = BiPoly.one()
        if exponent >= 0:
            for k in range(1, min(exponent, order // t_power) + 1):
                coeffs[k * t_power] = monomial**k * Fraction(comb(exponent, k) * (-1) ** k)
        else:
            a = -exponent
            for k in range(1, order // t_power + 1):
                coeffs[k * t_power] = monomial**k * Fraction(comb(k + a - 1, a - 1))
        result = result * TSeries(order, coeffs)
    return result
