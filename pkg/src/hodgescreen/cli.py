"""Command-line frontend.

Subcommands: invariants, screen, trdeg, hodge, lie-check.  Input is a
strict-JSON spec document (see specs/schema.json); reports go to
standard output, diagnostics to standard error.  Exit codes partition
the outcomes: 0 nothing screened out, 10 screened out, 2 input invalid,
3 input valid but mathematically malformed.  Repeated runs on the same
input are byte-identical, in text and in JSON mode alike.
"""

from __future__ import annotations

import argparse
import sys

from . import rendering as rp
from .errors import MathDomainError, SpecValidationError
from .flags import trdeg
from .grading import report as grade_report
from .hodge import (
    RealizedHodgeStructure,
    dual,
    polarization_check,
    sym,
    tensor,
    tate_twist,
    wedge,
)
from .schema import SpecDocument, load_document
from .verdicts import evaluate, exit_code_for

_INDEPENDENCE_NOTE = (
    "the declared parameters are assumed algebraically independent over Q; "
    "the transcendence degree refers to this parametric model"
)
_ASYMMETRY_NOTE = (
    "level dimensions are not symmetric under k -> -k, which cannot happen "
    "for a reductive algebra; check the declared basis"
)


def _common_payload(command: str, spec_path: str, doc: SpecDocument) -> dict:
    return {
        "command": command,
        "spec": spec_path,
        "group": rp.group_json(doc.algebra),
        "cocharacter": list(doc.cocharacter.weights),
        "hodge_numbers": rp.hodge_numbers_json(doc.numbers),
    }


def _gradings(doc: SpecDocument):
    main = grade_report(doc.algebra, doc.cocharacter)
    gand = None
    if doc.gand_algebra is not None:
        gand = grade_report(doc.gand_algebra, doc.cocharacter)
    return main, gand


def _trdeg_section(doc: SpecDocument, seed):
    """(json section, trdeg value, warnings) from flag or override."""
    if doc.flag is not None:
        result = trdeg(doc.flag, seed=seed)
        warnings = [_INDEPENDENCE_NOTE] if result.params else []
        return rp.trdeg_json(result, seed, "flag_point"), result.value, warnings
    if doc.trdeg_override is not None:
        return rp.override_json(doc.trdeg_override), doc.trdeg_override, []
    raise SpecValidationError(
        "this command needs transcendence data: declare flag_point or trdeg_override"
    )


def _constant_steps(doc: SpecDocument):
    """Flag steps evaluated down to the base field (no parameters left)."""
    steps = []
    for p, vectors in doc.flag.steps:
        steps.append((p, tuple(tuple(x.eval([]) for x in v) for v in vectors)))
    return tuple(steps)


def _polarization_section(doc: SpecDocument, warnings: list):
    if doc.polarization is None:
        return None
    if doc.flag is None:
        warnings.append(
            "polarization check skipped: it needs explicit flag_point coordinates"
        )
        return None
    if doc.flag.params:
        warnings.append(
            "polarization check skipped: the flag has free parameters, and "
            "positivity is decided only for fully specified coordinates"
        )
        return None
    if not doc.flag_base_field.has_conjugation:
        warnings.append(
            "polarization check skipped: the coordinate field declares no "
            "complex conjugation (set conjugate_image)"
        )
        return None
    structure = RealizedHodgeStructure(
        field=doc.flag_base_field,
        numbers=doc.numbers,
        steps=_constant_steps(doc),
    )
    return rp.polarization_json(polarization_check(structure, doc.polarization))


def cmd_invariants(args) -> int:
    doc = load_document(args.spec)
    main, gand = _gradings(doc)
    payload = _common_payload("invariants", args.spec, doc)
    payload["invariants"] = rp.invariants_json(main)
    payload["gand_invariants"] = rp.invariants_json(gand) if gand else None
    warnings = []
    if not main.symmetric_grading:
        warnings.append(_ASYMMETRY_NOTE)
    payload["warnings"] = warnings
    payload["exit_code"] = 0
    _emit(payload, args)
    return 0


def cmd_screen(args) -> int:
    doc = load_document(args.spec)
    main, gand = _gradings(doc)
    trdeg_section, value, warnings = _trdeg_section(doc, args.seed)
    verdicts, chains = evaluate(value, main, doc.conjectures, gand_report=gand)
    if not main.symmetric_grading:
        warnings.append(_ASYMMETRY_NOTE)
    polarization = _polarization_section(doc, warnings)
    code = exit_code_for(verdicts)
    payload = _common_payload("screen", args.spec, doc)
    payload["invariants"] = rp.invariants_json(main)
    payload["gand_invariants"] = rp.invariants_json(gand) if gand else None
    payload["trdeg"] = trdeg_section
    payload["conjectures"] = {
        "motivated": doc.conjectures.motivated,
        "gpc": doc.conjectures.gpc,
        "ggpc": doc.conjectures.ggpc,
    }
    payload["chain_identity"] = [rp.chain_json(c) for c in chains]
    payload["verdicts"] = [rp.verdict_json(v) for v in verdicts]
    payload["polarization"] = polarization
    payload["warnings"] = warnings
    payload["exit_code"] = code
    _emit(payload, args)
    return code


def cmd_trdeg(args) -> int:
    doc = load_document(args.spec)
    if doc.flag is None:
        raise SpecValidationError("trdeg needs a flag_point section with coordinates")
    result = trdeg(doc.flag, seed=args.seed)
    payload = _common_payload("trdeg", args.spec, doc)
    payload["trdeg"] = rp.trdeg_json(result, args.seed, "flag_point")
    payload["warnings"] = [_INDEPENDENCE_NOTE] if result.params else []
    payload["exit_code"] = 0
    _emit(payload, args)
    return 0


def cmd_lie_check(args) -> int:
    doc = load_document(args.spec)
    checks = {
        "basis_independent": True,
        "bracket_closed": True,
        "cocharacter_normalizes": True,
    }
    grade_report(doc.algebra, doc.cocharacter)
    if doc.gand_algebra is not None:
        grade_report(doc.gand_algebra, doc.cocharacter)
    payload = _common_payload("lie-check", args.spec, doc)
    payload["checks"] = checks
    payload["gand_group"] = (
        rp.group_json(doc.gand_algebra) if doc.gand_algebra is not None else None
    )
    payload["warnings"] = []
    payload["exit_code"] = 0
    _emit(payload, args)
    return 0


_HODGE_ARITY = {"dual": (1, 0), "tensor": (2, 0), "wedge": (1, 1),
                "sym": (1, 1), "twist": (1, 1)}


def cmd_hodge(args) -> int:
    nfiles, nints = _HODGE_ARITY[args.op]
    operands = args.operands
    if len(operands) != nfiles + nints:
        raise SpecValidationError(
            f"hodge {args.op} takes {nfiles} spec file(s)"
            + (" and one integer" if nints else "")
        )
    tables = [load_document(path).numbers for path in operands[:nfiles]]
    k = None
    if nints:
        try:
            k = int(operands[nfiles])
        except ValueError:
            raise SpecValidationError(
                f"hodge {args.op}: last argument must be an integer, "
                f"got {operands[nfiles]!r}"
            ) from None
    try:
        if args.op == "dual":
            result = dual(tables[0])
        elif args.op == "tensor":
            result = tensor(tables[0], tables[1])
        elif args.op == "wedge":
            result = wedge(tables[0], k)
        elif args.op == "sym":
            result = sym(tables[0], k)
        else:
            result = tate_twist(tables[0], k)
    except ValueError as exc:
        raise MathDomainError(str(exc)) from None
    payload = {
        "command": f"hodge {args.op}",
        "spec": " ".join(str(x) for x in operands),
        "hodge_numbers": rp.hodge_numbers_json(result),
        "warnings": [],
        "exit_code": 0,
    }
    _emit(payload, args)
    return 0


def _emit(payload: dict, args):
    if args.json:
        sys.stdout.write(rp.to_json(payload))
    else:
        sys.stdout.write(rp.render_text(payload))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgescreen",
        description=(
            "Exact invariants of declared Hodge structures and "
            "conjecture-conditional geometric-origin screening."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if seed:
            p.add_argument(
                "--seed", type=int, default=None,
                help="try a seeded random evaluation before the symbolic rank",
            )

    p = sub.add_parser("invariants", help="grading invariants of the declared group")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("screen", help="run the conditional screening verdicts")
    p.add_argument("spec")
    common(p, seed=True)
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("trdeg", help="transcendence degree of the flag point field")
    p.add_argument("spec")
    common(p, seed=True)
    p.set_defaults(func=cmd_trdeg)

    p = sub.add_parser("hodge", help="Hodge number algebra on spec tables")
    p.add_argument("op", choices=sorted(_HODGE_ARITY))
    p.add_argument("operands", nargs="+", metavar="arg")
    common(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("lie-check", help="validate the declared Lie data")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_lie_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecValidationError as exc:
        for problem in exc.problems:
            print(f"spec error: {problem}", file=sys.stderr)
        return 2
    except MathDomainError as exc:
        print(f"math error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
