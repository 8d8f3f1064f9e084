"""Exact scalars and small sparse multivariate polynomials.

Scalars are :class:`fractions.Fraction` values, which are always stored in
reduced form with a positive denominator.  :class:`Poly` is a sparse
polynomial over the rationals with a fixed, ordered tuple of variables; it
interoperates with ``int`` and ``Fraction`` so that the algebra code can run
unchanged over either coefficient ring.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import InputError, ParseError

Scalar = Fraction
Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar(value: Number | str) -> Fraction:
    """Coerce ints, Fractions and rational literals to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and exponents are rejected."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_arith(x: Number, y: Number, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise InputError(f"unknown scalar operation {op!r}") from None
    # ZeroDivisionError propagates for op == "div" and y == 0
    return Fraction(fn(scalar(x), scalar(y)))


Exponents = tuple[int, ...]


class Poly:
    """Sparse polynomial with rational coefficients.

    ``terms`` maps exponent vectors (aligned with ``variables``) to nonzero
    coefficients.  Instances are immutable.  Mixing polynomials over different
    variable tuples is an error; build them all from one :func:`poly_ring`.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, Number] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        n = len(self.variables)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise InputError(f"bad exponent vector {exps} for variables {self.variables}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, variables: Iterable[str], c: Number) -> "Poly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Iterable[str], name: str) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def free_variables(self) -> tuple[str, ...]:
        used = [any(e[i] for e in self._terms) for i in range(len(self.variables))]
        return tuple(v for v, u in zip(self.variables, used) if u)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise InputError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise InputError("Poly exponent must be a non-negative int")
        result = Poly.constant(self.variables, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # evaluation

    def evaluate(self, assignment: Mapping[str, Number]) -> Fraction:
        missing = [v for v in self.free_variables() if v not in assignment]
        if missing:
            raise InputError(f"assignment is missing variable(s) {', '.join(missing)}")
        values = [scalar(assignment[v]) if v in assignment else None for v in self.variables]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for val, e in zip(values, exps):
                if e:
                    term *= val**e
            total += term
        return total

    def substitute(self, assignment: Mapping[str, Number | "Poly"]) -> "Poly":
        """Replace some variables by scalars or polynomials (same variable tuple)."""
        result = Poly(self.variables)
        for exps, c in self._terms.items():
            term = Poly.constant(self.variables, c)
            for name, e in zip(self.variables, exps):
                if not e:
                    continue
                value = assignment.get(name)
                if value is None:
                    value = Poly.var(self.variables, name)
                term = term * (value**e if isinstance(value, Poly) else Poly.constant(self.variables, scalar(value) ** e))
            result = result + term
        return result

    # display

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order: total degree descending, then lex descending."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def normalized(self) -> "Poly":
        """Primitive integer form: coprime integer coefficients, positive leading term."""
        if not self._terms:
            return self
        cs = self._terms.values()
        den = math.lcm(*(c.denominator for c in cs))
        num = math.gcd(*(c.numerator for c in cs))
        scale = Fraction(den, num)
        if self.sorted_terms()[0][1] < 0:
            scale = -scale
        return Poly(self.variables, {e: c * scale for e, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self.variables}, {str(self)!r})"


def poly_ring(*names: str) -> tuple[Poly, ...]:
    """Return the generators of Q[names] in order."""
    return tuple(Poly.var(names, n) for n in names)


def poly_eval(p: Poly | Number, assignment: Mapping[str, Number]) -> Fraction:
    if isinstance(p, Poly):
        return p.evaluate(assignment)
    return scalar(p)


def is_zero(value) -> bool:
    """Zero test that works for Fractions, ints and Polys alike."""
    return not value
