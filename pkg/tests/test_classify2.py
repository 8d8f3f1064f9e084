from fractions import Fraction
from itertools import product

import pytest
import sympy

from superpoisson.classify2 import (
    A_,
    B_,
    C_,
    D_,
    DEFAULT_GRID,
    FAMILIES,
    UNITAL_FAMILY,
    ConstraintSystem,
    algebra_at,
    classify,
    compare_systems,
    derive_constraints,
    family_union,
    grid_oracle,
    published_system,
    solve_families,
    system_locus,
)
from superpoisson.identities import check_super_flexible, check_super_poisson
from superpoisson.presentation import split, verify_poisson_pair
from superpoisson.scalars import Poly

from conftest import sp21, sp22, sp23, sp24

F = Fraction
PUBLISHED_P1 = 3 * (A_ - B_) * B_ + A_ * B_ - 2 * B_ * C_ + C_**2
PUBLISHED_P2 = 3 * (A_ - C_) * C_ + A_ * B_ - 2 * B_ * C_ + C_**2


def _sympy_constraints():
    """Same computation done with sympy matrices, no library code involved."""
    a, b, c, d = sympy.symbols("a b c d")
    # table[i][j] = coefficient vector of e_i e_j
    table = {(0, 0): (a, 0), (0, 1): (0, b), (1, 0): (0, c), (1, 1): (d, 0)}
    degs = (0, 1)

    def mul(u, v):
        out = [0, 0]
        for i, j in product(range(2), repeat=2):
            for k in range(2):
                out[k] += u[i] * v[j] * table[(i, j)][k]
        return out

    def lin(*terms):
        return [sympy.expand(sum(s * t[k] for s, t in terms)) for k in range(2)]

    unit = ((1, 0), (0, 1))
    polys = []
    for i, j, k in product(range(2), repeat=3):
        x, y, z = unit[i], unit[j], unit[k]
        s = lambda p, q: -1 if degs[p] and degs[q] else 1
        sxy, sxz, syz = s(i, j), s(i, k), s(j, k)
        r = lin(
            (3, mul(mul(x, y), z)),
            (-3, mul(x, mul(y, z))),
            (sxy, mul(mul(y, x), z)),
            (-syz, mul(mul(x, z), y)),
            (-sxy * sxz, mul(mul(y, z), x)),
            (sxz * syz, mul(mul(z, x), y)),
        )
        polys += [p for p in r if p != 0]
    out = set()
    for p in polys:
        sp = sympy.Poly(p, a, b, c, d)
        out.add(Poly(("a", "b", "c", "d"), {m: F(int(cf.p), int(cf.q)) for m, cf in sp.terms()}).normalized())
    return out


def test_derived_constraints_match_sympy():
    assert set(derive_constraints().polynomials) == _sympy_constraints()


def test_derived_contains_published_polynomials():
    derived = set(derive_constraints().polynomials)
    assert PUBLISHED_P1.normalized() in derived
    assert PUBLISHED_P2.normalized() in derived


def test_constraints_vanish_on_branches():
    sys_ = derive_constraints()
    zero = Poly(("a", "b", "c", "d"))
    assert sys_.vanishes_on({"a": zero, "b": zero, "c": zero})
    assert sys_.vanishes_on({"d": zero, "b": A_, "c": A_})
    # the d-free reading of branch two also vanishes identically
    assert sys_.vanishes_on({"b": A_, "c": A_})


def test_branch_difference_factors():
    assert PUBLISHED_P1 - PUBLISHED_P2 == 3 * (B_ - C_) * (A_ - B_ - C_)


def test_constraint_system_dedupes():
    s = ConstraintSystem((D_, 2 * D_, Poly(("a", "b", "c", "d")), -D_))
    assert s.polynomials == (D_,)


def test_four_families():
    fams = solve_families()
    assert [f.name for f in fams] == ["F1", "F2", "F3", "F4"]
    derived = derive_constraints()
    assert all(derived.vanishes_on(f.mapping) for f in fams)
    by_name = {f.name: f for f in fams}
    assert by_name["F4"].algebra(1) == sp24(1)
    assert by_name["F3"].algebra(1) == sp23(1)
    assert by_name["F1"].algebra(1) == sp21(1)
    assert by_name["F2"].algebra(1) == sp22(1)
    for f in fams:
        for t in (-3, -1, 1, 2):
            assert check_super_poisson(f.algebra(t)).holds


def test_grid_oracle_examples():
    sols = set(grid_oracle())
    assert (F(0), F(0), F(0), F(2)) in sols
    assert (F(1), F(1), F(0), F(0)) not in sols
    assert (F(0), F(0), F(0), F(0)) in sols


def test_grid_oracle_soundness_and_completeness():
    derived = derive_constraints()
    sols = set(grid_oracle())
    for p in product(DEFAULT_GRID, repeat=4):
        assert (p in sols) == derived.vanishes_at(p)


def test_compare_with_itself_and_with_d_only():
    derived = derive_constraints()
    assert compare_systems(derived, derived).equivalent
    verdict = compare_systems(derived, ConstraintSystem((D_,)))
    assert not verdict.equivalent
    assert (F(0), F(0), F(0), F(1)) in verdict.only_left
    assert verdict.family_checks["F4"] == (True, False)


UNCOVERED = sorted((F(t), F(t), F(t), F(s)) for t in (-2, -1, 1, 2) for s in (-2, -1, 1, 2))


def test_published_system_misses_unital_tables():
    verdict = compare_systems(derive_constraints(), published_system("literal"))
    assert not verdict.equivalent
    assert verdict.only_right == []
    assert verdict.only_left == UNCOVERED
    assert all(a and b for a, b in verdict.family_checks.values())


def test_four_families_miss_unital_tables():
    sols = set(grid_oracle())
    assert sorted(sols - family_union(solve_families())) == UNCOVERED
    assert family_union(solve_families()) <= sols


def test_uncovered_tables_are_poisson_by_the_axioms():
    for p in UNCOVERED:
        A = algebra_at(p)
        assert verify_poisson_pair(split(A)).holds
        assert check_super_flexible(A).holds


def test_corrected_reading_and_complete_families():
    derived = derive_constraints()
    assert compare_systems(derived, published_system("a=b=c")).equivalent
    sols = set(grid_oracle())
    assert family_union(solve_families(complete=True)) == sols
    assert derived.vanishes_on(UNITAL_FAMILY.mapping)


def test_family_overlap_consistency():
    f1, f2 = FAMILIES[0], FAMILIES[1]
    overlap = f1.grid_points() & f2.grid_points()
    assert overlap == {(F(0), F(0), F(0), F(0))}
    assert all(check_super_poisson(algebra_at(p)).holds for p in overlap)


def test_every_family_point_in_grid_is_a_solution():
    sols = set(grid_oracle())
    for f in solve_families(complete=True):
        assert f.grid_points() <= sols


def test_classification_report():
    report = classify()
    assert len(report.oracle) == 33
    assert not report.reproduces_published
    text = report.render()
    assert "derived vs published system (branch 2 read as a=b=c=0): NOT equivalent (16 differing points)" in text
    assert "derived vs union of F1..F5: equivalent (0 differing points)" in text
    assert text == classify().render()


def test_small_grid():
    report = classify([0, 1])
    assert report.grid == (F(0), F(1))
    assert report.vs_published_system.only_left == [(F(1), F(1), F(1), F(1))]


def test_locus_of_union():
    locus = system_locus(published_system("literal"), [0, 1])
    assert (F(0), F(0), F(0), F(1)) in locus
    assert (F(1), F(0), F(0), F(0)) in locus
    assert (F(1), F(1), F(1), F(1)) not in locus
