"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input
or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import SuperAlgebra, format_element
from .classify2 import classify
from .errors import InputError
from .fileformat import dumps, load
from .identities import IdentityReport, check_even_specialization, check_super_flexible, check_super_poisson
from .powers import DEFAULT_MAX_N, AMBIGUOUS, check_power_associativity, verify_remark_steps
from .presentation import PoissonPair, fuse, split, verify_poisson_pair
from .symbolic import prove_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _report_lines(r: IdentityReport) -> list[str]:
    lines = [r.summary()]
    for idx, residual in r.witnesses:
        triple = ", ".join(f"e{i}" for i in idx)
        lines.append(f"    witness ({triple}): {format_element(residual)}")
    if r.failure_count > len(r.witnesses):
        lines.append(f"    ... {r.failure_count - len(r.witnesses)} more")
    return lines


def _report_json(r: IdentityReport) -> dict:
    return {
        "name": r.identity_name,
        "holds": r.holds,
        "checked": r.checked,
        "failures": r.failure_count,
        "witnesses": [{"basis": list(idx), "residual": format_element(res)} for idx, res in r.witnesses],
    }


def _algebra_reports(A: SuperAlgebra) -> list[IdentityReport]:
    # grading compatibility is enforced while loading; a loaded table always passes
    grading = IdentityReport("grading", checked=A.dim**3)
    reports = [grading, check_super_poisson(A), check_super_flexible(A)]
    if A.basis.dim_odd == 0:
        reports.append(check_even_specialization(A))
    return reports


def cmd_verify(args) -> tuple[int, str, dict]:
    obj = load(args.file)
    sections: list[tuple[str, list[IdentityReport]]] = []
    if isinstance(obj, PoissonPair):
        sections.append(("pair axioms", verify_poisson_pair(obj).reports()))
        sections.append(("fused product", _algebra_reports(fuse(obj))))
        basis = obj.basis
    else:
        sections.append(("algebra", _algebra_reports(obj)))
        basis = obj.basis
    ok = all(r.holds for _, rs in sections for r in rs)
    lines = [f"# verify {args.file} {basis}"]
    for title, rs in sections:
        lines.append(f"[{title}]")
        for r in rs:
            lines.extend(_report_lines(r))
    lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
    data = {
        "file": str(args.file),
        "dims": [basis.dim_even, basis.dim_odd],
        "sections": {title: [_report_json(r) for r in rs] for title, rs in sections},
        "passed": ok,
    }
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines) + "\n", data


def cmd_split(args) -> tuple[int, str, dict]:
    obj = load(args.file)
    if isinstance(obj, PoissonPair):
        raise InputError("split expects an algebra file, got a pair file")
    text = dumps(split(obj))
    return EXIT_OK, text, json.loads(text)


def cmd_fuse(args) -> tuple[int, str, dict]:
    obj = load(args.file)
    if not isinstance(obj, PoissonPair):
        raise InputError("fuse expects a pair file with 'dot' and 'bracket'")
    text = dumps(fuse(obj))
    return EXIT_OK, text, json.loads(text)


def cmd_classify2(args) -> tuple[int, str, dict]:
    if args.grid_min > args.grid_max:
        raise InputError(f"empty grid: --grid-min {args.grid_min} > --grid-max {args.grid_max}")
    report = classify(Fraction(v) for v in range(args.grid_min, args.grid_max + 1))
    code = EXIT_OK if report.reproduces_published else EXIT_FAIL
    return code, report.render(), report.to_dict()


def cmd_powers(args) -> tuple[int, str, dict]:
    obj = load(args.file)
    A = fuse(obj) if isinstance(obj, PoissonPair) else obj
    if not 0 <= args.element < A.dim:
        raise InputError(f"--element {args.element} out of range 0..{A.dim - 1}")
    if args.max_n < 2:
        raise InputError("--max-n must be at least 2")
    y = A.basis_vector(args.element)
    verdict = check_power_associativity(A, y, args.max_n)
    text = verdict.table.render()
    data: dict = {
        "element": args.element,
        "max_n": args.max_n,
        "powers": {
            str(n): (p if p == AMBIGUOUS else format_element(p)) for n, p in verdict.table.powers.items()
        },
        "first_ambiguity": verdict.first_ambiguity,
    }
    ok = verdict.passed
    if A.degree_of(y) == 1 and check_super_poisson(A).holds:
        steps = verify_remark_steps(A, y)
        text += "[odd element in a super-Poisson algebra]\n" + steps.render()
        data["remark_steps"] = {s.name: s.passed for s in steps.steps}
        ok = ok and steps.passed
    text += f"overall: {'PASS' if ok else 'FAIL'}\n"
    data["passed"] = ok
    return (EXIT_OK if ok else EXIT_FAIL), text, data


def cmd_prove(args) -> tuple[int, str, dict]:
    report = prove_all(variant=args.variant)
    return (EXIT_OK if report.passed else EXIT_FAIL), report.render(), report.to_dict()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = _Parser(prog="superpoisson", description="Check Poisson superalgebra identities on structure-constant tables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="check the fused identity, flexibility and grading")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("split", parents=[common], help="algebra file -> pair file")
    p.add_argument("file")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("fuse", parents=[common], help="pair file -> algebra file")
    p.add_argument("file")
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("classify2", parents=[common], help="rederive the (1|1) classification")
    p.add_argument("--grid-min", type=int, default=-2)
    p.add_argument("--grid-max", type=int, default=2)
    p.set_defaults(func=cmd_classify2)

    p = sub.add_parser("powers", parents=[common], help="power table of a basis vector")
    p.add_argument("file")
    p.add_argument("--element", type=int, required=True, help="basis index")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_powers)

    p = sub.add_parser("prove", parents=[common], help="run the symbolic proof suite")
    p.add_argument("--variant", choices=("verbatim", "left_nested"), default="verbatim")
    p.set_defaults(func=cmd_prove)
    return parser


def run_command(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text, data = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.json and args.command not in ("split", "fuse"):
        stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_command())
