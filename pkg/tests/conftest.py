from __future__ import annotations

import random
from fractions import Fraction

import pytest

from superpoisson.algebra import GradedBasis, make_superalgebra, zero_algebra


def table_11(a=0, b=0, c=0, d=0):
    """e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0."""
    return make_superalgebra(
        GradedBasis(1, 1),
        [(0, 0, 0, Fraction(a)), (0, 1, 1, Fraction(b)), (1, 0, 1, Fraction(c)), (1, 1, 0, Fraction(d))],
    )


def sp21(a=1):
    return table_11(a=a)


def sp22(a=1):
    return table_11(a=a, b=a, c=a)


def sp23(b=1):
    return table_11(b=b, c=-b)


def sp24(d=1):
    return table_11(d=d)


SP_FAMILIES = {"SP21": sp21, "SP22": sp22, "SP23": sp23, "SP24": sp24}
PARAMS = (-3, -1, 1, 2)


@pytest.fixture
def zero11():
    return zero_algebra(1, 1)


@pytest.fixture
def rng():
    return random.Random(20261016)


def all_family_algebras():
    return [(name, t, fam(t)) for name, fam in SP_FAMILIES.items() for t in PARAMS]


def transport(A, blocks):
    """Change to a new homogeneous basis; ``blocks`` = (even block, odd block) matrices."""
    import sympy

    n = A.dim
    P = sympy.zeros(n, n)
    m = A.basis.dim_even
    even, odd = blocks
    for i in range(m):
        for j in range(m):
            P[i, j] = sympy.Rational(even[i][j])
    for i in range(n - m):
        for j in range(n - m):
            P[m + i, m + j] = sympy.Rational(odd[i][j])
    Q = P.inv()
    c = A.constants
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = sympy.Rational(0)
                for a in range(n):
                    for b in range(n):
                        if P[a, i] == 0 or P[b, j] == 0:
                            continue
                        for mm in range(n):
                            if c[a][b][mm]:
                                s += P[a, i] * P[b, j] * sympy.Rational(c[a][b][mm].numerator, c[a][b][mm].denominator) * Q[k, mm]
                if s != 0:
                    out.append((i, j, k, Fraction(int(s.p), int(s.q))))
    return make_superalgebra(A.basis, out)


def random_invertible(rng, size):
    import sympy

    while True:
        M = [[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)]
        if sympy.Matrix(M).det() != 0:
            return M


def random_verified_12(rng, max_tries=5000):
    """Randomized search for a (1|2) super-Poisson algebra.

    Samples sparse tables (e0 acting diagonally on the odd block, symmetric odd
    pairing), keeps the first one passing the fused identity with at least three
    nonzero constants, then moves it to a random homogeneous basis.
    """
    from superpoisson.identities import check_super_poisson

    V = (-1, 0, 1)
    for _ in range(max_tries):
        a, b1, b2, c1, c2, d11, d12, d22 = (rng.choice(V) for _ in range(8))
        entries = [(0, 0, 0, a), (0, 1, 1, b1), (0, 2, 2, b2), (1, 0, 1, c1), (2, 0, 2, c2), (1, 1, 0, d11), (1, 2, 0, d12), (2, 1, 0, d12), (2, 2, 0, d22)]
        A = make_superalgebra(GradedBasis(1, 2), [(i, j, k, Fraction(v)) for i, j, k, v in entries if v])
        if sum(1 for _ in A.nonzero_constants()) >= 3 and check_super_poisson(A).holds:
            B = transport(A, ([[rng.choice([1, 2, -1])]], random_invertible(rng, 2)))
            assert check_super_poisson(B).holds
            return B
    raise RuntimeError("no super-Poisson table found")
