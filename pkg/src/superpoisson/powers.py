"""Powers of a single element and the odd-element power-associativity chain.

``y^n`` is well defined when every split ``y^p y^(n-p)`` gives the same
element.  When some split disagrees the table keeps all distinct candidates,
and every entry computed from an ambiguous power is flagged as well, so a
failure stays visible all the way up to ``max_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, SuperAlgebra, format_element
from .errors import InputError
from .identities import check_super_poisson
from .presentation import split

DEFAULT_MAX_N = 10
MAX_CANDIDATES = 64

AMBIGUOUS = "ambiguous"


def _key(x: Element):
    return tuple(x.coefficients)


def _distinct(values) -> tuple[Element, ...]:
    seen = {}
    for v in values:
        seen.setdefault(_key(v), v)
    return tuple(seen[k] for k in sorted(seen))


@dataclass
class PowerTable:
    element: Element
    max_n: int
    products: dict[tuple[int, int], tuple[Element, ...]] = field(default_factory=dict)
    candidates: dict[int, tuple[Element, ...]] = field(default_factory=dict)
    tainted: set[int] = field(default_factory=set)

    @property
    def powers(self) -> dict[int, Element | str]:
        return {n: self.power(n) for n in sorted(self.candidates)}

    def power(self, n: int) -> Element | str:
        if n in self.tainted:
            return AMBIGUOUS
        return self.candidates[n][0]

    def is_ambiguous(self, n: int) -> bool:
        return n in self.tainted

    def first_ambiguity(self) -> int | None:
        return min(self.tainted, default=None)

    def render(self) -> str:
        lines = [f"# powers of {format_element(self.element)} up to n={self.max_n}"]
        for n in range(2, self.max_n + 1):
            cells = []
            for p in range(1, n):
                vals = self.products[(p, n - p)]
                text = " | ".join(format_element(v) for v in vals)
                cells.append(f"p={p}: {text}" if len(vals) == 1 else f"p={p}: {{{text}}}")
            status = AMBIGUOUS if n in self.tainted else format_element(self.candidates[n][0])
            lines.append(f"n={n}: y^n = {status}")
            lines.extend(f"    {c}" for c in cells)
        return "\n".join(lines) + "\n"


def build_power_table(A: SuperAlgebra, y: Element, max_n: int = DEFAULT_MAX_N) -> PowerTable:
    if not isinstance(max_n, int) or max_n < 2:
        raise InputError(f"max_n must be an integer >= 2, got {max_n!r}")
    A._check(y)
    table = PowerTable(element=y, max_n=max_n)
    table.candidates[1] = (y,)
    for n in range(2, max_n + 1):
        every = []
        inherited = False
        for p in range(1, n):
            q = n - p
            vals = _distinct(A.multiply(u, v) for u in table.candidates[p] for v in table.candidates[q])
            table.products[(p, q)] = vals[:MAX_CANDIDATES]
            every.extend(vals)
            inherited = inherited or p in table.tainted or q in table.tainted
        cands = _distinct(every)[:MAX_CANDIDATES]
        table.candidates[n] = cands
        if inherited or len(cands) > 1:
            table.tainted.add(n)
    return table


@dataclass
class PowerVerdict:
    passed: bool
    max_n: int
    first_ambiguity: int | None
    table: PowerTable

    def __bool__(self) -> bool:
        return self.passed


def _require_super_poisson(A: SuperAlgebra) -> None:
    report = check_super_poisson(A)
    if not report.holds:
        idx = report.witnesses[0][0]
        raise InputError(
            f"precondition failed: algebra is not super-Poisson (first failing basis triple {idx})"
        )


def _require_odd(A: SuperAlgebra, y: Element) -> None:
    if y.is_zero():
        return
    if A.degree_of(y) != 1:
        raise InputError("precondition failed: element is not homogeneous odd")


def check_power_associativity(A: SuperAlgebra, y: Element, max_n: int = DEFAULT_MAX_N) -> PowerVerdict:
    """No preconditions: just whether every y^n up to max_n is well defined."""
    table = build_power_table(A, y, max_n)
    first = table.first_ambiguity()
    return PowerVerdict(first is None, max_n, first, table)


def check_odd_power_associativity(A: SuperAlgebra, y: Element, max_n: int = DEFAULT_MAX_N) -> PowerVerdict:
    A._check(y)
    _require_super_poisson(A)
    _require_odd(A, y)
    return check_power_associativity(A, y, max_n)


@dataclass
class RemarkStep:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RemarkReport:
    steps: list[RemarkStep]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def __bool__(self) -> bool:
        return self.passed

    def step(self, name: str) -> RemarkStep:
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)

    def render(self) -> str:
        out = [f"{s.name}: {'PASS' if s.passed else 'FAIL'}" + (f" [{s.detail}]" if s.detail else "") for s in self.steps]
        return "\n".join(out) + "\n"


def verify_remark_steps(A: SuperAlgebra, y: Element) -> RemarkReport:
    """Check each intermediate equality of the odd-element power computation."""
    A._check(y)
    _require_super_poisson(A)
    _require_odd(A, y)
    P = split(A)
    m, dot, br = A.multiply, P.dot.multiply, P.bracket.multiply

    y2 = m(y, y)
    y3 = m(y, y2)
    y2y = m(y2, y)
    yy = br(y, y)
    y2y2 = m(y2, y2)
    yy3 = m(y, y3)
    y3y = m(y3, y)
    double = br(yy, yy)

    def step(name: str, lhs: Element, rhs: Element) -> RemarkStep:
        ok = (lhs - rhs).is_zero()
        return RemarkStep(name, ok, "" if ok else f"{format_element(lhs)} != {format_element(rhs)}")

    zero = A.zero()
    return RemarkReport(
        [
            step("y.y = 0", dot(y, y), zero),
            step("{y,y} = y^2", yy, y2),
            step("{y,{y,y}} = 0", br(y, yy), zero),
            step("y y^2 = y.{y,y}", y3, dot(y, yy)),
            step("y y^2 = y^2 y", y3, y2y),
            step("y y^3 = {y,y}.{y,y}", yy3, dot(yy, yy)),
            step("{{y,y},{y,y}} = 0", double, zero),
            step("y^2 y^2 - y y^3 = {{y,y},{y,y}}", y2y2 - yy3, double),
            step("y^2 y^2 = y y^3", y2y2, yy3),
            step("y y^3 = y^3 y", yy3, y3y),
        ]
    )
