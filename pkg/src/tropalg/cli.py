"""Command-line front end.

Every command reads one JSON document (a file path, or stdin when the path
is omitted or ``-``) and writes JSON or a plain-text table to stdout.

Exit status: 0 success, 1 domain error (or failed check), 2 search or
size budget exhausted, 3 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks
from .errors import BudgetError, NotApplicableError, TropAlgError
from .matrix import det_report
from .oracles import SearchBudget
from .polynomials import roots
from .rank import (
    complete_to_tropical_basis, kernel_generators, rank_theorem_check, tropical_dimension,
)
from .semifield import SEMIFIELDS, get_semifield
from .serialize import (
    det_report_to_json, family_report_to_json, form_from_json, matrix_from_json, poly_from_json,
    report_to_json, roots_to_json, vector_from_json, vector_to_json,
)
from .singularity import classify
from .tables import FiniteSemiringTable, characteristic, is_pure_characteristic

MAX_BUDGET_DIM = 6

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
            name = "<stdin>"
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
            name = path
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _semifield_name(obj, args) -> str:
    declared = obj.get("semifield") if isinstance(obj, dict) else None
    if declared is not None and args.semifield is not None and declared != args.semifield:
        raise InputError(f"input declares semifield {declared!r} but --semifield is {args.semifield!r}")
    return declared or args.semifield or "maxplus"


def _parse(builder, obj, args):
    """Build domain objects from JSON; anything that goes wrong here is bad input."""
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object at the top level")
    name = _semifield_name(obj, args)
    try:
        return builder(obj, name)
    except (KeyError, TypeError, ValueError, IndexError, TropAlgError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        raise InputError(f"invalid input: {msg}") from None


def _budget(args) -> SearchBudget:
    dim = args.budget_dim
    if dim is None:
        return SearchBudget()
    if not 1 <= dim <= MAX_BUDGET_DIM:
        raise InputError(f"--budget-dim must be between 1 and {MAX_BUDGET_DIM}")
    return SearchBudget(max_dim=dim)


# --- commands -------------------------------------------------------------

def cmd_det(args):
    a = _parse(matrix_from_json, _load(args.input), args)
    return det_report_to_json(det_report(a), a.sf)


def cmd_classify(args):
    a = _parse(matrix_from_json, _load(args.input), args)
    return report_to_json(classify(a, _budget(args)), a.sf)


def cmd_rank(args):
    a = _parse(matrix_from_json, _load(args.input), args)
    rep = tropical_dimension(a.columns(), a.sf, a.rows)
    out = {"semifield": a.sf.name, "rank": rep.tropical_dimension}
    out.update(family_report_to_json(rep, a.sf))
    return out


def cmd_kernel(args):
    l = _parse(form_from_json, _load(args.input), args)
    return {"semifield": l.sf.name,
            "generators": [vector_to_json(l.sf, g) for g in kernel_generators(l)]}


def _family(obj, name):
    sf = get_semifield(name)
    if "family" in obj:
        fam = [vector_from_json(sf, v) for v in obj["family"]]
        n = int(obj["n"]) if "n" in obj else len(fam[0])
    else:
        a = matrix_from_json(obj, name)
        fam, n = a.columns(), int(obj.get("n", a.rows))
    if any(len(v) != n for v in fam):
        raise ValueError(f"every family vector must have length {n}")
    return sf, fam, n


def cmd_complete_basis(args):
    sf, fam, n = _parse(_family, _load(args.input), args)
    out = complete_to_tropical_basis(fam, n, sf)
    return {"semifield": sf.name, "n": n, "family": [vector_to_json(sf, v) for v in out]}


def cmd_check_rank_theorem(args):
    a = _parse(matrix_from_json, _load(args.input), args)
    r = rank_theorem_check(a, _budget(args))
    return {"confirmed": r.confirmed, "status": r.status, "columns": r.columns,
            "rank": r.rank, "kernel_dimension": r.kernel_dimension,
            "family": None if r.family is None else [vector_to_json(a.sf, v) for v in r.family]}


def cmd_roots(args):
    p = _parse(poly_from_json, _load(args.input), args)
    return roots_to_json(p.sf, roots(p))


def cmd_char(args):
    obj = _load(args.input)
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object at the top level")
    try:
        t = FiniteSemiringTable.from_json(obj)
    except (KeyError, TypeError, ValueError, IndexError, TropAlgError) as exc:
        raise InputError(f"invalid table: {exc}") from None
    p = characteristic(t)
    try:
        pure = is_pure_characteristic(t)
    except NotApplicableError:
        pure = None
    return {"size": t.size, "characteristic": p, "pure": pure}


def _run_one(args):
    fn, scale, seed = args
    return checks.run_check(fn, scale, seed)


def cmd_check(args):
    if not 0 < args.scale <= 1:
        raise InputError("--scale must be in (0, 1]")
    only = set(args.only or ())
    if any(not 1 <= k <= len(checks.CHECKS) for k in only):
        raise InputError(f"--only takes criterion numbers 1..{len(checks.CHECKS)}")
    fns = [fn for i, fn in enumerate(checks.CHECKS, 1) if not only or i in only]
    jobs = [(fn, args.scale, args.seed) for fn in fns]
    if args.parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return {"passed": all(r.passed for r in results),
            "results": [{"number": r.number, "name": r.name, "passed": r.passed,
                         "detail": r.detail} for r in results]}


COMMANDS = {
    "det": (cmd_det, "determinant census of a square matrix"),
    "classify": (cmd_classify, "singularity verdicts and witnesses"),
    "rank": (cmd_rank, "tropical rank / dimension of the column family"),
    "kernel": (cmd_kernel, "generators of the kernel of a linear form"),
    "complete-basis": (cmd_complete_basis, "extend a regular family to n vectors"),
    "check-rank-theorem": (cmd_check_rank_theorem, "grid check of rank + kernel dimension"),
    "roots": (cmd_roots, "roots of a univariate polynomial"),
    "char": (cmd_char, "characteristic of a finite semiring table"),
    "check": (cmd_check, "run the oracle agreement suite"),
}


# --- output ---------------------------------------------------------------

def _table(obj, indent: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{indent}{k}:")
                lines.extend(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_cell(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{indent}-")
                lines.extend(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}- {_cell(v)}")
    else:
        lines.append(f"{indent}{_cell(obj)}")
    return lines


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, dict) and list(x) == ["ghost"])
                   for x in v)
    return isinstance(v, dict) and list(v) == ["ghost"]


def _cell(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict) and list(v) == ["ghost"]:
        return f"ghost({v['ghost']})"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _check_table(obj) -> list[str]:
    lines = []
    for r in obj["results"]:
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{mark}  {r['number']:2d}  {r['name']:<28} {r['detail']}")
    lines.append("all passed" if obj["passed"] else "FAILURES")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semifield", choices=sorted(SEMIFIELDS), default=None,
                        help="semifield for inputs that do not name one (default maxplus)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--budget-dim", type=int, default=None, metavar="N",
                        help=f"max unknowns for witness grid searches (1..{MAX_BUDGET_DIM})")
    common.add_argument("--parallel", action="store_true",
                        help="run independent checks in worker processes (check only)")

    parser = argparse.ArgumentParser(prog="tropalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "check":
            p.add_argument("--scale", type=float, default=1.0,
                           help="fraction of each random suite to run (default 1)")
            p.add_argument("--seed", type=int, default=checks.SEED)
            p.add_argument("--only", type=int, nargs="*", metavar="K",
                           help="criterion numbers to run")
        else:
            p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code is reserved for budgets
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    fn = COMMANDS[args.command][0]
    try:
        result = fn(args)
    except InputError as exc:
        print(f"tropalg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"tropalg: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TropAlgError as exc:
        print(f"tropalg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        print(json.dumps(result, indent=2))
    elif args.command == "check":
        print("\n".join(_check_table(result)))
    else:
        print("\n".join(_table(result)))
    if args.command == "check" and not result["passed"]:
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
