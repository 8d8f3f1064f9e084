"""Identity evaluators and all-basis-triple checkers.

Every identity here is multilinear, so checking it on all triples of basis
vectors (which are homogeneous) decides it on the whole algebra.  The
evaluators themselves accept arbitrary homogeneous elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .algebra import Element, SuperAlgebra, koszul_sign
from .errors import InputError, NonHomogeneousError

MAX_WITNESSES = 16

THIRD = Fraction(1, 3)


@dataclass
class IdentityReport:
    identity_name: str
    witnesses: list[tuple[tuple[int, ...], Element]] = field(default_factory=list)
    failure_count: int = 0
    checked: int = 0

    @property
    def holds(self) -> bool:
        return self.failure_count == 0

    def __bool__(self) -> bool:
        return self.holds

    def summary(self) -> str:
        status = "PASS" if self.holds else "FAIL"
        line = f"{self.identity_name}: {status} ({self.checked} checked"
        if not self.holds:
            line += f", {self.failure_count} failing"
        return line + ")"


def _degrees(A: SuperAlgebra, *xs: Element) -> tuple[int, ...]:
    degs = []
    for x in xs:
        d = A.degree_of(x)
        if d is None:
            raise NonHomogeneousError(f"element {x} is not homogeneous")
        degs.append(d)
    return tuple(degs)


def _signs(dx: int, dy: int, dz: int) -> tuple[int, int, int]:
    return koszul_sign(dx, dy), koszul_sign(dx, dz), koszul_sign(dy, dz)


def check_on_basis(A: SuperAlgebra, name: str, evaluator: Callable[..., Element], arity: int = 3) -> IdentityReport:
    """Run ``evaluator(A, *basis_vectors)`` over all basis tuples in index order."""
    report = IdentityReport(name)
    basis = A.basis_vectors()
    for idx in product(range(A.dim), repeat=arity):
        report.checked += 1
        residual = evaluator(A, *(basis[i] for i in idx))
        if not residual.is_zero():
            report.failure_count += 1
            if len(report.witnesses) < MAX_WITNESSES:
                report.witnesses.append((idx, residual))
    return report


# -- the fused identity -------------------------------------------------------


def eval_super_poisson(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """Left-hand side of the super-Poisson identity for the fused product.

    3(xy)z - 3x(yz) + s_xy (yx)z - s_yz (xz)y - s_xy s_xz (yz)x + s_xz s_yz (zx)y
    where s_ab = (-1)^{|a||b|}.
    """
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    m = A.multiply
    return (
        3 * m(m(x, y), z)
        - 3 * m(x, m(y, z))
        + sxy * m(m(y, x), z)
        - syz * m(m(x, z), y)
        - sxy * sxz * m(m(y, z), x)
        + sxz * syz * m(m(z, x), y)
    )


def check_super_poisson(A: SuperAlgebra) -> IdentityReport:
    return check_on_basis(A, "super_poisson", eval_super_poisson)


def eval_v(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """The fused identity divided by 3 (associator plus one third of four products)."""
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    m = A.multiply
    bracket = (
        sxy * m(m(y, x), z)
        - syz * m(m(x, z), y)
        - sxy * sxz * m(m(y, z), x)
        + sxz * syz * m(m(z, x), y)
    )
    return THIRD * bracket + A.associator(x, y, z)


# -- residuals of the three axioms, written with the fused product -------------

V1_VARIANTS = ("verbatim", "left_nested")


def eval_v1(A: SuperAlgebra, x: Element, y: Element, z: Element, variant: str = "verbatim") -> Element:
    """Associativity residual of the symmetric part (four times (x.y).z - x.(y.z)).

    ``variant="left_nested"`` swaps the two right-nested products x(zy) and
    z(xy) for (xz)y and (zx)y; it exists only for comparison.
    """
    if variant not in V1_VARIANTS:
        raise InputError(f"unknown v1 variant {variant!r}")
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    m, assoc = A.multiply, A.associator
    if variant == "verbatim":
        t_xzy, t_zxy = m(x, m(z, y)), m(z, m(x, y))
    else:
        t_xzy, t_zxy = m(m(x, z), y), m(m(z, x), y)
    return (
        assoc(x, y, z)
        - sxy * sxz * syz * assoc(z, y, x)
        + sxy * m(m(y, x), z)
        - syz * t_xzy
        - sxy * sxz * m(m(y, z), x)
        + sxz * syz * t_zxy
    )


def eval_v2(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """Super Jacobi residual as a signed sum of six associators."""
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    a = A.associator
    return (
        sxz * a(x, y, z)
        - sxy * sxz * a(y, x, z)
        - sxy * syz * a(z, y, x)
        - sxz * syz * a(x, z, y)
        + sxy * a(y, z, x)
        + syz * a(z, x, y)
    )


def eval_v3(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """Super Leibniz residual as a signed sum of six associators."""
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    a = A.associator
    return (
        a(x, y, z)
        - sxy * a(y, x, z)
        + sxy * sxz * syz * a(z, y, x)
        + syz * a(x, z, y)
        + sxy * sxz * a(y, z, x)
        - sxz * syz * a(z, x, y)
    )


def check_v1(A: SuperAlgebra, variant: str = "verbatim") -> IdentityReport:
    return check_on_basis(A, f"v1[{variant}]", lambda A, x, y, z: eval_v1(A, x, y, z, variant))


def check_v2(A: SuperAlgebra) -> IdentityReport:
    return check_on_basis(A, "v2", eval_v2)


def check_v3(A: SuperAlgebra) -> IdentityReport:
    return check_on_basis(A, "v3", eval_v3)


# -- flexibility and the ungraded identity ------------------------------------


def eval_super_flexible(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    sxy, sxz, syz = _signs(*_degrees(A, x, y, z))
    return A.associator(x, y, z) + (sxy * sxz * syz) * A.associator(z, y, x)


def check_super_flexible(A: SuperAlgebra) -> IdentityReport:
    return check_on_basis(A, "super_flexible", eval_super_flexible)


def eval_poisson_ungraded(A: SuperAlgebra, x: Element, y: Element, z: Element) -> Element:
    """3A(x,y,z) - (xz)y - (yz)x + (yx)z + (zx)y, with no signs at all."""
    m = A.multiply
    return (
        3 * A.associator(x, y, z)
        - m(m(x, z), y)
        - m(m(y, z), x)
        + m(m(y, x), z)
        + m(m(z, x), y)
    )


def check_even_specialization(A: SuperAlgebra) -> IdentityReport:
    if A.basis.dim_odd != 0:
        raise InputError(
            f"even specialization needs a purely even algebra, got dim_odd={A.basis.dim_odd}"
        )
    return check_on_basis(A, "poisson_ungraded", eval_poisson_ungraded)
