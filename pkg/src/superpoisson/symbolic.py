"""Free graded nonassociative expressions in the generators x, y, z.

A :class:`FormalSum` is a linear combination of parenthesized words.  Its
coefficients depend on the degree assignment (|x|, |y|, |z|) in {0,1}^3 and are
stored as eight rationals, indexed by the assignment read as a binary number
(``|x|`` is the high bit).  Two sums are equal iff they agree word by word on
all eight assignments, so every identity below is decided by finite
enumeration; there is no rewriting beyond collecting like terms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterable, Mapping, Union

from .algebra import Element, GradedBasis, SuperAlgebra, koszul_sign, random_element, random_superalgebra
from . import identities as I
from .errors import InputError, NonHomogeneousError

LEAVES = ("x", "y", "z")
ASSIGNMENTS: tuple[tuple[int, int, int], ...] = tuple(product((0, 1), repeat=3))
N_ASSIGN = len(ASSIGNMENTS)

Word = Union[str, tuple]
Coeffs = tuple  # eight Fractions
DegreeMap = Mapping[str, int]
SignLike = Union[int, Fraction, Callable[[DegreeMap], object], tuple]

_ZEROS: Coeffs = (Fraction(0),) * N_ASSIGN


def assignment_bits(index: int) -> str:
    return "".join(map(str, ASSIGNMENTS[index]))


def degree_map(index: int) -> dict[str, int]:
    return dict(zip(LEAVES, ASSIGNMENTS[index]))


def word_leaves(w: Word) -> tuple[str, ...]:
    if isinstance(w, str):
        return (w,)
    return word_leaves(w[0]) + word_leaves(w[1])


def word_str(w: Word) -> str:
    if isinstance(w, str):
        return w
    left, right = (word_str(p) if isinstance(p, str) else f"({word_str(p)})" for p in w)
    return left + right


def _word_key(w: Word):
    return (len(word_leaves(w)), word_leaves(w), word_str(w))


def relabel_word(w: Word, perm: Mapping[str, str]) -> Word:
    if isinstance(w, str):
        return perm.get(w, w)
    return (relabel_word(w[0], perm), relabel_word(w[1], perm))


def multilinear_words(leaves: Iterable[str] = LEAVES) -> list[Word]:
    """All words using each leaf exactly once (12 for three leaves)."""
    leaves = tuple(leaves)

    def trees(seq):
        if len(seq) == 1:
            return [seq[0]]
        out = []
        for cut in range(1, len(seq)):
            for left in trees(seq[:cut]):
                for right in trees(seq[cut:]):
                    out.append((left, right))
        return out

    words = [t for p in permutations(leaves) for t in trees(p)]
    return sorted(words, key=_word_key)


def coeffs(value: SignLike) -> Coeffs:
    """Turn a scalar, an 8-tuple, or a function of the degree map into 8 coefficients."""
    if isinstance(value, tuple):
        if len(value) != N_ASSIGN:
            raise InputError(f"coefficient tuple must have {N_ASSIGN} entries")
        return tuple(Fraction(v) for v in value)
    if callable(value):
        return tuple(Fraction(value(degree_map(a))) for a in range(N_ASSIGN))
    return (Fraction(value),) * N_ASSIGN


def sign(*pairs: str) -> Coeffs:
    """Product of Koszul signs; ``sign("xy", "xz")`` is (-1)^{|x||y| + |x||z|}."""
    out = []
    for a in range(N_ASSIGN):
        d = degree_map(a)
        s = 1
        for pair in pairs:
            if len(pair) != 2:
                raise InputError(f"sign pair must name two generators, got {pair!r}")
            s *= koszul_sign(d[pair[0]], d[pair[1]])
        out.append(Fraction(s))
    return tuple(out)


def _mul_coeffs(a: Coeffs, b: Coeffs) -> Coeffs:
    return tuple(p * q for p, q in zip(a, b))


class FormalSum:
    """Immutable linear combination of words with degree-dependent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, SignLike] | Iterable[tuple[Word, SignLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, list] = {}
        for w, c in items:
            cs = coeffs(c)
            slot = acc.setdefault(w, list(_ZEROS))
            for a in range(N_ASSIGN):
                slot[a] += cs[a]
        self._terms = {w: tuple(c) for w, c in acc.items() if any(c)}

    @classmethod
    def word(cls, w: Word, coefficient: SignLike = 1) -> "FormalSum":
        return cls([(w, coefficient)])

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @property
    def terms(self) -> dict[Word, Coeffs]:
        return dict(self._terms)

    def words(self) -> list[Word]:
        return sorted(self._terms, key=_word_key)

    def leaves(self) -> tuple[str, ...] | None:
        """Common sorted leaf tuple of all words, or None if empty."""
        shapes = {tuple(sorted(word_leaves(w))) for w in self._terms}
        if not shapes:
            return None
        if len(shapes) > 1:
            raise InputError(f"formal sum mixes leaf sets {sorted(shapes)}")
        return shapes.pop()

    # linear structure

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FormalSum":
        return FormalSum({w: tuple(-c for c in cs) for w, cs in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale(self, factor: SignLike) -> "FormalSum":
        f = coeffs(factor)
        return FormalSum({w: _mul_coeffs(f, cs) for w, cs in self._terms.items()})

    def __rmul__(self, factor) -> "FormalSum":
        return self.scale(factor)

    def __mul__(self, other):
        """Free product: (sum a_u u)(sum b_w w) = sum a_u b_w (u w)."""
        if not isinstance(other, FormalSum):
            return self.scale(other)
        out = []
        for u, cu in self._terms.items():
            for w, cw in other._terms.items():
                out.append(((u, w), _mul_coeffs(cu, cw)))
        return FormalSum(out)

    # comparison and views

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def at(self, assignment: int) -> dict[Word, Fraction]:
        """Nonzero coefficients for one degree assignment."""
        return {w: cs[assignment] for w, cs in self._terms.items() if cs[assignment]}

    def restrict(self, assignment: int) -> "FormalSum":
        """Keep only the coefficients of one assignment (others set to zero)."""
        return FormalSum(
            {w: tuple(c if a == assignment else 0 for a, c in enumerate(cs)) for w, cs in self._terms.items()}
        )

    def term_count(self, assignment: int) -> int:
        return len(self.at(assignment))

    def format_at(self, assignment: int) -> str:
        parts = []
        for w in self.words():
            c = self._terms[w][assignment]
            if not c:
                continue
            mag = abs(c)
            body = word_str(w) if mag == 1 else f"{mag}*{word_str(w)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        per = "; ".join(f"{assignment_bits(a)}: {self.format_at(a)}" for a in range(N_ASSIGN))
        return f"FormalSum({per})"

    # concrete evaluation

    def evaluate(self, A: SuperAlgebra, values: Mapping[str, Element]) -> Element:
        """Evaluate on homogeneous elements of A, picking the matching assignment."""
        bits = []
        for leaf in LEAVES:
            if leaf not in values:
                bits.append(0)
                continue
            d = A.degree_of(values[leaf])
            if d is None:
                raise NonHomogeneousError(f"value for {leaf} is not homogeneous")
            bits.append(d)
        a = ASSIGNMENTS.index(tuple(bits))
        total = A.zero()
        cache: dict = {}
        for w, cs in self._terms.items():
            if cs[a]:
                total = total + cs[a] * _eval_word(A, w, values, cache)
        return total


def _eval_word(A: SuperAlgebra, w: Word, values: Mapping[str, Element], cache: dict) -> Element:
    if isinstance(w, str):
        return values[w]
    if w not in cache:
        cache[w] = A.multiply(_eval_word(A, w[0], values, cache), _eval_word(A, w[1], values, cache))
    return cache[w]


# -- building blocks ------------------------------------------------------------

X, Y, Z = (FormalSum.word(leaf) for leaf in LEAVES)
_GEN = {"x": X, "y": Y, "z": Z}


def _degree_parity(f: FormalSum) -> Coeffs:
    """Per assignment, the parity of the total degree of f's leaves."""
    leaves = f.leaves() or ()
    return tuple(sum(ASSIGNMENTS[a][LEAVES.index(l)] for l in leaves) % 2 for a in range(N_ASSIGN))


def koszul(f: FormalSum, g: FormalSum) -> Coeffs:
    """(-1)^{|f||g|} per assignment, with |f| the total degree of f's leaves."""
    pf, pg = _degree_parity(f), _degree_parity(g)
    return tuple(Fraction(koszul_sign(a, b)) for a, b in zip(pf, pg))


def assoc(a: FormalSum, b: FormalSum, c: FormalSum) -> FormalSum:
    return (a * b) * c - a * (b * c)


def dot(a: FormalSum, b: FormalSum) -> FormalSum:
    """Symmetric part 1/2 (ab + (-1)^{|a||b|} ba)."""
    return (a * b + (b * a).scale(koszul(a, b))).scale(Fraction(1, 2))


def bracket(a: FormalSum, b: FormalSum) -> FormalSum:
    """Antisymmetric part 1/2 (ab - (-1)^{|a||b|} ba)."""
    return (a * b - (b * a).scale(koszul(a, b))).scale(Fraction(1, 2))


# -- relabeling and combination -----------------------------------------------


def _as_perm(permutation) -> dict[str, str]:
    if isinstance(permutation, Mapping):
        perm = {l: permutation.get(l, l) for l in LEAVES}
    else:
        seq = tuple(permutation)
        if len(seq) != 3:
            raise InputError("a permutation is given as the images of (x, y, z)")
        perm = dict(zip(LEAVES, seq))
    if sorted(perm.values()) != sorted(LEAVES):
        raise InputError(f"not a bijection of x, y, z: {perm}")
    return perm


def substitute(f: FormalSum, permutation, degrees: int | None = None) -> FormalSum:
    """Rename generators: leaf l becomes permutation(l).

    ``permutation`` is a mapping or the images of (x, y, z); ``("z", "x", "y")``
    turns f(x, y, z) into f(z, x, y).  Coefficients follow their leaves, so the
    new coefficient at degrees d is the old one at d composed with the
    permutation.  If ``degrees`` (an assignment index) is given, the result is
    restricted to that assignment.
    """
    perm = _as_perm(permutation)
    pulled = []
    for a in range(N_ASSIGN):
        d = degree_map(a)
        pulled.append(ASSIGNMENTS.index(tuple(d[perm[l]] for l in LEAVES)))
    out = FormalSum(
        {relabel_word(w, perm): tuple(cs[pulled[a]] for a in range(N_ASSIGN)) for w, cs in f.terms.items()}
    )
    return out if degrees is None else out.restrict(degrees)


def linear_combine(pairs: Iterable[tuple[SignLike, FormalSum]]) -> FormalSum:
    total = FormalSum.zero()
    for c, f in pairs:
        total = total + f.scale(c)
    return total


# -- the identities -------------------------------------------------------------

IDENTITY_NAMES = ("v", "v1", "v2", "v3", "B", "eq2", "eq1")


def _v1(variant: str = "verbatim") -> FormalSum:
    if variant == "verbatim":
        t_xzy, t_zxy = X * (Z * Y), Z * (X * Y)
    elif variant == "left_nested":
        t_xzy, t_zxy = (X * Z) * Y, (Z * X) * Y
    else:
        raise InputError(f"unknown v1 variant {variant!r}")
    return linear_combine(
        [
            (1, assoc(X, Y, Z)),
            (sign("xy", "xz", "yz"), -assoc(Z, Y, X)),
            (sign("xy"), (Y * X) * Z),
            (sign("yz"), -t_xzy),
            (sign("xy", "xz"), -((Y * Z) * X)),
            (sign("xz", "yz"), t_zxy),
        ]
    )


def _v2() -> FormalSum:
    return linear_combine(
        [
            (sign("xz"), assoc(X, Y, Z)),
            (sign("xy", "xz"), -assoc(Y, X, Z)),
            (sign("xy", "yz"), -assoc(Z, Y, X)),
            (sign("xz", "yz"), -assoc(X, Z, Y)),
            (sign("xy"), assoc(Y, Z, X)),
            (sign("yz"), assoc(Z, X, Y)),
        ]
    )


def _v3() -> FormalSum:
    return linear_combine(
        [
            (1, assoc(X, Y, Z)),
            (sign("xy"), -assoc(Y, X, Z)),
            (sign("xy", "xz", "yz"), assoc(Z, Y, X)),
            (sign("yz"), assoc(X, Z, Y)),
            (sign("xy", "xz"), assoc(Y, Z, X)),
            (sign("xz", "yz"), -assoc(Z, X, Y)),
        ]
    )


def _four_products() -> FormalSum:
    return linear_combine(
        [
            (sign("xy"), (Y * X) * Z),
            (sign("yz"), -((X * Z) * Y)),
            (sign("xy", "xz"), -((Y * Z) * X)),
            (sign("xz", "yz"), (Z * X) * Y),
        ]
    )


def _v() -> FormalSum:
    return _four_products().scale(Fraction(1, 3)) + assoc(X, Y, Z)


def _eq2() -> FormalSum:
    return assoc(X, Y, Z).scale(3) + _four_products()


def _eq1() -> FormalSum:
    # 3A(x,y,z) - (xz)y - (yz)x + (yx)z + (zx)y, no signs
    return assoc(X, Y, Z).scale(3) - (X * Z) * Y - (Y * Z) * X + (Y * X) * Z + (Z * X) * Y


def _B() -> FormalSum:
    # both lines of the flexibility computation after eliminating 3A via the fused identity
    first = linear_combine(
        [
            (sign("xy"), -((Y * X) * Z)),
            (sign("yz"), (X * Z) * Y),
            (sign("xy", "xz"), (Y * Z) * X),
            (sign("xz", "yz"), -((Z * X) * Y)),
        ]
    )
    inner = linear_combine(
        [
            (sign("zy"), -((Y * Z) * X)),
            (sign("yx"), (Z * X) * Y),
            (sign("zy", "zx"), (Y * X) * Z),
            (sign("zx", "yx"), -((X * Z) * Y)),
        ]
    )
    return first + inner.scale(sign("xz", "xy", "yz"))


def build_identity(name: str, variant: str = "verbatim") -> FormalSum:
    """FormalSum for one of ``v, v1, v2, v3, B, eq2, eq1``.

    ``variant`` only affects ``v1``.
    """
    builders = {
        "v": _v,
        "v1": lambda: _v1(variant),
        "v2": _v2,
        "v3": _v3,
        "B": _B,
        "eq2": _eq2,
        "eq1": _eq1,
    }
    try:
        return builders[name]()
    except KeyError:
        raise InputError(f"unknown identity {name!r}; expected one of {', '.join(IDENTITY_NAMES)}") from None


# -- axioms expanded from the symmetric/antisymmetric parts ---------------------


def axiom_associativity() -> FormalSum:
    """(x.y).z - x.(y.z) with x.y the symmetric part of the fused product."""
    return dot(dot(X, Y), Z) - dot(X, dot(Y, Z))


def axiom_jacobi() -> FormalSum:
    """s_zx {x,{y,z}} + s_xy {y,{z,x}} + s_yz {z,{x,y}}."""
    return linear_combine(
        [
            (sign("zx"), bracket(X, bracket(Y, Z))),
            (sign("xy"), bracket(Y, bracket(Z, X))),
            (sign("yz"), bracket(Z, bracket(X, Y))),
        ]
    )


def axiom_leibniz() -> FormalSum:
    """{x, y.z} - {x,y}.z - s_xy y.{x,z}."""
    return bracket(X, dot(Y, Z)) - dot(bracket(X, Y), Z) - dot(Y, bracket(X, Z)).scale(sign("xy"))


def axiom_flexible() -> FormalSum:
    return assoc(X, Y, Z) + assoc(Z, Y, X).scale(sign("xy", "xz", "yz"))


# -- proof checking -----------------------------------------------------------

ROTATE_ZXY = ("z", "x", "y")  # f(x,y,z) -> f(z,x,y)


def v_combination(variant: str = "verbatim") -> FormalSum:
    """1/6 (2 v1 + s_xz v2 + v3 + 2 s_xz s_yz v3(z,x,y))."""
    v1, v2, v3 = build_identity("v1", variant), build_identity("v2"), build_identity("v3")
    return linear_combine(
        [
            (Fraction(2, 6), v1),
            (tuple(s / 6 for s in sign("xz")), v2),
            (Fraction(1, 6), v3),
            (tuple(2 * s / 6 for s in sign("xz", "yz")), substitute(v3, ROTATE_ZXY)),
        ]
    )


def _vsub(images: str) -> FormalSum:
    return substitute(build_identity("v"), tuple(images))


def converse(name: str) -> FormalSum:
    """v1, v2 or v3 rebuilt from relabeled copies of v."""
    if name == "v1":
        return linear_combine(
            [
                (1, _vsub("xyz")),
                (sign("xy", "xz", "yz"), -_vsub("zyx")),
                (sign("yz"), _vsub("xzy")),
                (sign("xz", "yz"), -_vsub("zxy")),
            ]
        )
    if name == "v2":
        return linear_combine(
            [
                (sign("xz"), _vsub("xyz")),
                (sign("xy", "xz"), -_vsub("yxz")),
                (sign("xy", "yz"), -_vsub("zyx")),
                (sign("xz", "yz"), -_vsub("xzy")),
                (sign("xy"), _vsub("yzx")),
                (sign("yz"), _vsub("zxy")),
            ]
        )
    if name == "v3":
        return linear_combine(
            [
                (1, _vsub("xyz")),
                (sign("xy"), -_vsub("yxz")),
                (sign("xy", "xz", "yz"), _vsub("zyx")),
                (sign("yz"), _vsub("xzy")),
                (sign("xy", "xz"), _vsub("yzx")),
                (sign("xz", "yz"), -_vsub("zxy")),
            ]
        )
    raise InputError(f"no converse expression for {name!r}")


# -- concrete counterparts (independent of the engine, used for cross-checks) ---


def _concrete_signs(A, x, y, z):
    dx, dy, dz = (A.degree_of(t) for t in (x, y, z))
    return koszul_sign(dx, dy), koszul_sign(dx, dz), koszul_sign(dy, dz)


def _concrete_v_combination(variant):
    def fn(A, x, y, z):
        sxy, sxz, syz = _concrete_signs(A, x, y, z)
        combo = (
            2 * I.eval_v1(A, x, y, z, variant)
            + sxz * I.eval_v2(A, x, y, z)
            + I.eval_v3(A, x, y, z)
            + (2 * sxz * syz) * I.eval_v3(A, z, x, y)
        )
        return I.eval_v(A, x, y, z) - Fraction(1, 6) * combo

    return fn


def _concrete_converse(name, variant):
    def fn(A, x, y, z):
        sxy, sxz, syz = _concrete_signs(A, x, y, z)
        v = I.eval_v
        if name == "v1":
            lhs = I.eval_v1(A, x, y, z, variant)
            rhs = v(A, x, y, z) - (sxy * sxz * syz) * v(A, z, y, x) + syz * v(A, x, z, y) - (sxz * syz) * v(A, z, x, y)
        elif name == "v2":
            lhs = I.eval_v2(A, x, y, z)
            rhs = (
                sxz * v(A, x, y, z)
                - (sxy * sxz) * v(A, y, x, z)
                - (sxy * syz) * v(A, z, y, x)
                - (sxz * syz) * v(A, x, z, y)
                + sxy * v(A, y, z, x)
                + syz * v(A, z, x, y)
            )
        else:
            lhs = I.eval_v3(A, x, y, z)
            rhs = (
                v(A, x, y, z)
                - sxy * v(A, y, x, z)
                + (sxy * sxz * syz) * v(A, z, y, x)
                + syz * v(A, x, z, y)
                + (sxy * sxz) * v(A, y, z, x)
                - (sxz * syz) * v(A, z, x, y)
            )
        return lhs - rhs

    return fn


def _concrete_B(A, x, y, z):
    sxy, sxz, syz = _concrete_signs(A, x, y, z)

    def rest(p, q, r):
        return I.eval_super_poisson(A, p, q, r) - 3 * A.associator(p, q, r)

    return -rest(x, y, z) - (sxy * sxz * syz) * rest(z, y, x)


def _concrete_eq2_minus_3v(A, x, y, z):
    return I.eval_super_poisson(A, x, y, z) - 3 * I.eval_v(A, x, y, z)


def _concrete_eq2_minus_eq1(A, x, y, z):
    return I.eval_super_poisson(A, x, y, z) - I.eval_poisson_ungraded(A, x, y, z)


def _concrete_flex(A, x, y, z):
    sxy, sxz, syz = _concrete_signs(A, x, y, z)
    return (
        3 * I.eval_super_flexible(A, x, y, z)
        - I.eval_super_poisson(A, x, y, z)
        - (sxy * sxz * syz) * I.eval_super_poisson(A, z, y, x)
    )


# -- proof report ---------------------------------------------------------------


@dataclass(frozen=True)
class ProofLine:
    name: str
    assignment: int
    passed: bool
    residual_terms: int
    confirmed_concrete: bool | None = None  # only set for failures

    @property
    def bits(self) -> str:
        return assignment_bits(self.assignment)

    def render(self) -> str:
        text = f"{self.name} {self.bits} {'PASS' if self.passed else 'FAIL'} residual_terms={self.residual_terms}"
        if self.confirmed_concrete is not None:
            text += f" concrete={'confirmed' if self.confirmed_concrete else 'unconfirmed'}"
        return text


@dataclass
class ProofReport:
    variant: str = "verbatim"
    lines: list[ProofLine] = field(default_factory=list)
    residuals: dict[str, FormalSum] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(l.passed for l in self.lines)

    def verdict(self, name: str) -> bool:
        found = [l for l in self.lines if l.name == name]
        if not found:
            raise KeyError(name)
        return all(l.passed for l in found)

    def names(self) -> list[str]:
        return list(dict.fromkeys(l.name for l in self.lines))

    def render(self) -> str:
        out = [f"# proof suite (v1 variant: {self.variant})"]
        out += [l.render() for l in self.lines]
        for name in self.names():
            for l in self.lines:
                if l.name == name and not l.passed:
                    out.append(f"residual {name} {l.bits}: {self.residuals[name].format_at(l.assignment)}")
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "passed": self.passed,
            "lines": [
                {
                    "name": l.name,
                    "assignment": l.bits,
                    "status": "PASS" if l.passed else "FAIL",
                    "residual_terms": l.residual_terms,
                    **({} if l.confirmed_concrete is None else {"concrete": l.confirmed_concrete}),
                }
                for l in self.lines
            ],
        }


def _confirm_concrete(fn, assignment: int, seed: int, trials: int = 8) -> bool:
    """Look for a nonzero value of ``fn`` on a random (2|2) algebra at the given degrees."""
    rng = random.Random(seed)
    degs = ASSIGNMENTS[assignment]
    basis = GradedBasis(2, 2)
    for _ in range(trials):
        A = random_superalgebra(basis, rng, values=range(-3, 4))
        x, y, z = (random_element(A, rng, degree=d) for d in degs)
        if not fn(A, x, y, z).is_zero():
            return True
    return False


def proof_items(variant: str = "verbatim") -> list[tuple[str, Callable[[], FormalSum], tuple[int, ...], Callable]]:
    """(name, symbolic residual, assignments checked, concrete residual) for every proof step."""
    everything = tuple(range(N_ASSIGN))
    return [
        ("v_combination", lambda: build_identity("v") - v_combination(variant), everything, _concrete_v_combination(variant)),
        ("v1_converse", lambda: build_identity("v1", variant) - converse("v1"), everything, _concrete_converse("v1", variant)),
        ("v2_converse", lambda: build_identity("v2") - converse("v2"), everything, _concrete_converse("v2", variant)),
        ("v3_converse", lambda: build_identity("v3") - converse("v3"), everything, _concrete_converse("v3", variant)),
        ("B_zero", lambda: build_identity("B"), everything, _concrete_B),
        # the ungraded identity is the all-even slice only
        ("eq2_even_is_eq1", lambda: build_identity("eq2") - build_identity("eq1"), (0,), _concrete_eq2_minus_eq1),
        ("eq2_is_3v", lambda: build_identity("eq2") - build_identity("v").scale(3), everything, _concrete_eq2_minus_3v),
        ("flexible_from_eq2", lambda: axiom_flexible().scale(3) - build_identity("eq2") - substitute(build_identity("eq2"), ("z", "y", "x")).scale(sign("xy", "xz", "yz")), everything, _concrete_flex),
        ("v1_is_4_assoc", lambda: build_identity("v1", variant) - axiom_associativity().scale(4), everything, None),
        ("v2_is_minus4_jacobi", lambda: build_identity("v2") + axiom_jacobi().scale(4), everything, None),
        ("v3_is_minus4_leibniz", lambda: build_identity("v3") + axiom_leibniz().scale(4), everything, None),
    ]


def prove_all(variant: str = "verbatim", seed: int = 0) -> ProofReport:
    """Check every proof step on all relevant degree assignments.

    Failing steps are re-evaluated on random concrete algebras (through the
    scalar evaluators in :mod:`superpoisson.identities`) and the line records
    whether the discrepancy was reproduced there.
    """
    report = ProofReport(variant=variant)
    for name, build, assignments, concrete in proof_items(variant):
        residual = build()
        report.residuals[name] = residual
        for a in assignments:
            count = residual.term_count(a)
            confirmed = None
            if count:
                if concrete is not None:
                    confirmed = _confirm_concrete(concrete, a, seed)
                else:
                    # no scalar counterpart: evaluate the residual itself
                    confirmed = _confirm_concrete(lambda A, x, y, z: residual.evaluate(A, {"x": x, "y": y, "z": z}), a, seed)
            report.lines.append(ProofLine(name, a, count == 0, count, confirmed))
    return report
