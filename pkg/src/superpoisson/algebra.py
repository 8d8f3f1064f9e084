"""Finite-dimensional Z2-graded algebras given by structure constants.

Basis vectors are indexed with the even block first: indices
``0 .. dim_even-1`` have degree 0 and ``dim_even .. dim-1`` have degree 1.
The product is ``e_i e_j = sum_k c[i][j][k] e_k``.  Coefficients may be
Fractions or :class:`~superpoisson.scalars.Poly` values; nothing here cares
which, as long as ``+``, ``*`` and truthiness behave.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import GradingError, InputError
from .scalars import Number, scalar

Degree = int  # 0 or 1

ZERO = Fraction(0)


def koszul_sign(d1: Degree, d2: Degree) -> int:
    """(-1)^(d1*d2): -1 exactly when both degrees are odd."""
    return -1 if (d1 & 1) and (d2 & 1) else 1


@dataclass(frozen=True)
class GradedBasis:
    dim_even: int
    dim_odd: int

    def __post_init__(self):
        if self.dim_even < 0 or self.dim_odd < 0 or self.dim_even + self.dim_odd < 1:
            raise InputError(
                f"invalid graded dimensions ({self.dim_even}|{self.dim_odd})"
            )

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def degree(self, i: int) -> Degree:
        if not 0 <= i < self.dim:
            raise InputError(f"basis index {i} out of range 0..{self.dim - 1}")
        return 0 if i < self.dim_even else 1

    def degrees(self) -> tuple[Degree, ...]:
        return (0,) * self.dim_even + (1,) * self.dim_odd

    def __str__(self) -> str:
        return f"({self.dim_even}|{self.dim_odd})"


@dataclass(frozen=True)
class Element:
    """Coefficient vector in the algebra's basis."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise InputError(f"expected an Element, got {type(other).__name__}")
        if len(other) != len(self):
            raise InputError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __neg__(self) -> "Element":
        return Element(-a for a in self.coefficients)

    def __mul__(self, s) -> "Element":
        if isinstance(s, Element):
            return NotImplemented
        return Element(s * a for a in self.coefficients)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coefficients) if c)

    def __str__(self) -> str:
        return format_element(self)


def format_element(x: Element, names: Sequence[str] | None = None) -> str:
    """Render as e.g. ``2*e0 - 1/3*e1``; the zero vector renders as ``0``."""
    parts = []
    for k, c in enumerate(x.coefficients):
        if not c:
            continue
        name = names[k] if names else f"e{k}"
        text = str(c)
        if text == "1":
            term = name
        elif text == "-1":
            term = f"-{name}"
        elif isinstance(c, Fraction):
            term = f"{text}*{name}"
        else:
            term = f"({text})*{name}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class SuperAlgebra:
    """Graded algebra with a dense structure-constant tensor.

    Use :func:`make_superalgebra` to build one from a sparse list; the
    constructor takes the dense tensor and validates it.
    """

    __slots__ = ("basis", "constants")

    def __init__(self, basis: GradedBasis, constants):
        n = basis.dim
        table = tuple(tuple(tuple(constants[i][j][k] for k in range(n)) for j in range(n)) for i in range(n))
        degs = basis.degrees()
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[i][j][k] and degs[k] != (degs[i] + degs[j]) % 2:
                        raise GradingError(i, j, k)
        self.basis = basis
        self.constants = table

    @property
    def dim(self) -> int:
        return self.basis.dim

    def zero(self) -> Element:
        return Element((ZERO,) * self.dim)

    def basis_vector(self, i: int, coeff: Number = 1) -> Element:
        self.basis.degree(i)
        return Element(Fraction(coeff) if k == i else ZERO for k in range(self.dim))

    def basis_vectors(self) -> list[Element]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def element(self, coefficients: Iterable) -> Element:
        x = Element(coefficients)
        if len(x) != self.dim:
            raise InputError(f"element has {len(x)} coefficients, algebra has dimension {self.dim}")
        return x

    def _check(self, *xs: Element) -> None:
        for x in xs:
            if not isinstance(x, Element):
                raise InputError(f"expected an Element, got {type(x).__name__}")
            if len(x) != self.dim:
                raise InputError(
                    f"element of length {len(x)} used in algebra of dimension {self.dim}"
                )

    def product(self, i: int, j: int) -> Element:
        """e_i e_j as an Element."""
        return Element(self.constants[i][j])

    def multiply(self, x: Element, y: Element) -> Element:
        self._check(x, y)
        n = self.dim
        out = [ZERO] * n
        for i, xi in enumerate(x.coefficients):
            if not xi:
                continue
            row = self.constants[i]
            for j, yj in enumerate(y.coefficients):
                if not yj:
                    continue
                s = xi * yj
                cij = row[j]
                for k in range(n):
                    if cij[k]:
                        out[k] = out[k] + s * cij[k]
        return Element(out)

    def associator(self, x: Element, y: Element, z: Element) -> Element:
        m = self.multiply
        return m(m(x, y), z) - m(x, m(y, z))

    def degree_of(self, x: Element) -> Degree | None:
        """0 or 1 for homogeneous elements, ``None`` for mixed ones (zero counts as even)."""
        self._check(x)
        degs = {self.basis.degree(k) for k in x.support()}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def nonzero_constants(self) -> Iterator[tuple[int, int, int, object]]:
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c = self.constants[i][j][k]
                    if c:
                        yield i, j, k, c

    def map_constants(self, fn) -> "SuperAlgebra":
        n = self.dim
        return SuperAlgebra(
            self.basis,
            [[[fn(self.constants[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)],
        )

    def even_part(self) -> "SuperAlgebra":
        """Restriction to V_0 (closed under the product by grading)."""
        if self.basis.dim_even == 0:
            raise InputError("algebra has no even part")
        m = self.basis.dim_even
        return SuperAlgebra(
            GradedBasis(m, 0),
            [[[self.constants[i][j][k] for k in range(m)] for j in range(m)] for i in range(m)],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self.basis == other.basis and self.constants == other.constants

    def __hash__(self) -> int:
        return hash((self.basis, self.constants))

    def __repr__(self) -> str:
        rows = [
            f"e{i}e{j}={format_element(self.product(i, j))}"
            for i in range(self.dim)
            for j in range(self.dim)
            if any(self.constants[i][j])
        ]
        return f"SuperAlgebra{self.basis}[{', '.join(rows) or 'zero'}]"


def make_superalgebra(basis: GradedBasis, constants: Iterable[tuple[int, int, int, object]] = ()) -> SuperAlgebra:
    """Build an algebra from sparse ``(i, j, k, c)`` entries; repeated entries add up."""
    n = basis.dim
    dense = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for entry in constants:
        try:
            i, j, k, c = entry
        except (TypeError, ValueError):
            raise InputError(f"constant entry must be (i, j, k, c), got {entry!r}") from None
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise InputError(f"index {idx!r} out of range 0..{n - 1} in entry {entry!r}")
        if isinstance(c, (int, str)):
            c = scalar(c)
        dense[i][j][k] = dense[i][j][k] + c
    return SuperAlgebra(basis, dense)


def zero_algebra(dim_even: int, dim_odd: int) -> SuperAlgebra:
    return make_superalgebra(GradedBasis(dim_even, dim_odd))


def multiply(A: SuperAlgebra, x: Element, y: Element) -> Element:
    return A.multiply(x, y)


def associator(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """A(x, y, z) = (xy)z - x(yz)."""
    return A.associator(x, y, z)


def degree_of(A: SuperAlgebra, x: Element) -> Degree | None:
    return A.degree_of(x)


def random_superalgebra(
    basis: GradedBasis,
    rng: random.Random,
    values: Sequence[int] = (-2, -1, 0, 1, 2),
) -> SuperAlgebra:
    """Uniformly random grading-compatible table with entries drawn from ``values``."""
    degs = basis.degrees()
    n = basis.dim
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if degs[k] == (degs[i] + degs[j]) % 2:
                    v = rng.choice(values)
                    if v:
                        entries.append((i, j, k, Fraction(v)))
    return make_superalgebra(basis, entries)


def random_element(A: SuperAlgebra, rng: random.Random, values: Sequence[int] = (-3, -2, -1, 0, 1, 2, 3), degree: Degree | None = None) -> Element:
    """Random element; restrict its support to one degree block if ``degree`` is given."""
    degs = A.basis.degrees()
    return Element(
        Fraction(rng.choice(values)) if degree is None or degs[k] == degree else ZERO
        for k in range(A.dim)
    )
