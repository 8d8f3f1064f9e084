"""Two presentations of a Poisson superalgebra and the maps between them.

A :class:`PoissonPair` holds the dot product and the bracket as two full
tables over one basis.  :func:`fuse` adds them into a single product and
:func:`split` recovers them as the graded-symmetric and graded-antisymmetric
parts, computed per homogeneous basis pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, SuperAlgebra, koszul_sign
from .errors import InputError, NonHomogeneousError
from .identities import IdentityReport, check_on_basis

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PoissonPair:
    dot: SuperAlgebra
    bracket: SuperAlgebra

    def __post_init__(self):
        if self.dot.basis != self.bracket.basis:
            raise InputError(
                f"dot and bracket live on different bases: {self.dot.basis} vs {self.bracket.basis}"
            )

    @property
    def basis(self):
        return self.dot.basis


def fuse(P: PoissonPair) -> SuperAlgebra:
    """xy = x.y + {x, y}, i.e. the sum of the two structure-constant tensors."""
    n = P.basis.dim
    c1, c2 = P.dot.constants, P.bracket.constants
    return SuperAlgebra(
        P.basis,
        [[[c1[i][j][k] + c2[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)],
    )


def split(A: SuperAlgebra) -> PoissonPair:
    n = A.dim
    degs = A.basis.degrees()
    c = A.constants
    dot = [[[None] * n for _ in range(n)] for _ in range(n)]
    br = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            kappa = koszul_sign(degs[i], degs[j])
            for k in range(n):
                dot[i][j][k] = HALF * (c[i][j][k] + kappa * c[j][i][k])
                br[i][j][k] = HALF * (c[i][j][k] - kappa * c[j][i][k])
    return PoissonPair(SuperAlgebra(A.basis, dot), SuperAlgebra(A.basis, br))


# -- the five axioms --------------------------------------------------------------


def _deg(A: SuperAlgebra, x: Element) -> int:
    d = A.degree_of(x)
    if d is None:
        raise NonHomogeneousError(f"element {x} is not homogeneous")
    return d


def _supercommutativity(D: SuperAlgebra, x, y):
    return D.multiply(x, y) - koszul_sign(_deg(D, x), _deg(D, y)) * D.multiply(y, x)


def _super_anticommutativity(L: SuperAlgebra, x, y):
    return L.multiply(x, y) + koszul_sign(_deg(L, x), _deg(L, y)) * L.multiply(y, x)


def _associativity(D: SuperAlgebra, x, y, z):
    return D.associator(x, y, z)


def _super_jacobi(L: SuperAlgebra, x, y, z):
    dx, dy, dz = _deg(L, x), _deg(L, y), _deg(L, z)
    b = L.multiply
    return (
        koszul_sign(dz, dx) * b(x, b(y, z))
        + koszul_sign(dx, dy) * b(y, b(z, x))
        + koszul_sign(dy, dz) * b(z, b(x, y))
    )


def _super_leibniz(P: PoissonPair, x, y, z):
    """{x, y.z} - {x,y}.z - (-1)^{|x||y|} y.{x,z}"""
    dot, br = P.dot.multiply, P.bracket.multiply
    s = koszul_sign(_deg(P.dot, x), _deg(P.dot, y))
    return br(x, dot(y, z)) - dot(br(x, y), z) - s * dot(y, br(x, z))


@dataclass
class PairReport:
    commutativity: IdentityReport
    associativity: IdentityReport
    anticommutativity: IdentityReport
    jacobi: IdentityReport
    leibniz: IdentityReport

    def reports(self) -> list[IdentityReport]:
        return [self.commutativity, self.associativity, self.anticommutativity, self.jacobi, self.leibniz]

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.reports())

    def __bool__(self) -> bool:
        return self.holds


def verify_poisson_pair(P: PoissonPair) -> PairReport:
    return PairReport(
        commutativity=check_on_basis(P.dot, "dot_supercommutative", _supercommutativity, arity=2),
        associativity=check_on_basis(P.dot, "dot_associative", _associativity),
        anticommutativity=check_on_basis(P.bracket, "bracket_superanticommutative", _super_anticommutativity, arity=2),
        jacobi=check_on_basis(P.bracket, "super_jacobi", _super_jacobi),
        leibniz=check_on_basis(P.dot, "super_leibniz", lambda _A, x, y, z: _super_leibniz(P, x, y, z)),
    )
