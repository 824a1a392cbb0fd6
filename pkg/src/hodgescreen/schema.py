"""Spec documents: strict JSON schema plus semantic cross-validation.

A document declares everything and the tool computes everything: the
group (by classical kind or an explicit basis), the cocharacter, the
Hodge number table, optionally a parametric flag point, a polarization
form, and the conjecture toggles.  Unknown keys are rejected.  Numeric
entries are exact: JSON integers, "a/b" strings, or (where expressions
are allowed) strings over the declared parameter names.  Floats are
never accepted.

Validation is two-phase.  The jsonschema pass pins the shape and
reports every structural problem with its JSON path.  The semantic pass
then builds the actual objects and cross-checks the sections against
each other (lambda length vs ambient dimension, lambda multiset vs the
Hodge table, flag step dimensions vs the filtration profile).  All
collected problems surface in one SpecValidationError.  Mathematical
failures that only a computation can detect (a basis not closed under
bracket) stay MathDomainError and are not converted.
"""

from __future__ import annotations

import ast
import json
import keyword
from dataclasses import dataclass
from fractions import Fraction

import jsonschema

from .errors import SpecValidationError
from .fields import NumberField, QQ, parse_rational
from .flags import FlagPoint
from .grading import HodgeCocharacter
from .hodge import HodgeNumbers, PolarizationForm, filtration_dims
from .intervals import Interval, Rectangle
from .lie import CLASSICAL_KINDS, MatLieAlgebra, make_classical
from .ratfunc import FunctionField
from .verdicts import ConjectureSet

_RATIONAL = {"anyOf": [{"type": "integer"}, {"type": "string", "minLength": 1}]}
_ENTRY = _RATIONAL  # expressions ride in strings as well
_MATRIX = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": _RATIONAL},
}

_GROUP = {
    "type": "object",
    "additionalProperties": False,
    "required": ["kind", "n"],
    "properties": {
        "kind": {"enum": list(CLASSICAL_KINDS) + ["custom"]},
        "n": {"type": "integer", "minimum": 1},
        "form": _MATRIX,
        "basis": {"type": "array", "minItems": 1, "items": _MATRIX},
    },
}

SPEC_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "hodgescreen spec document",
    "type": "object",
    "additionalProperties": False,
    "required": ["group", "cocharacter", "hodge_numbers", "conjectures"],
    "properties": {
        "group": _GROUP,
        "cocharacter": {
            "type": "object",
            "additionalProperties": False,
            "required": ["lambda"],
            "properties": {
                "lambda": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "integer"},
                },
            },
        },
        "hodge_numbers": {
            "type": "object",
            "additionalProperties": False,
            "required": ["weight", "dims"],
            "properties": {
                "weight": {"type": "integer"},
                "dims": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "array",
                        "minItems": 3,
                        "maxItems": 3,
                        "items": {"type": "integer"},
                    },
                },
            },
        },
        "flag_point": {
            "type": "object",
            "additionalProperties": False,
            "required": ["params", "steps"],
            "properties": {
                "params": {
                    "type": "array",
                    "items": {"type": "string", "minLength": 1},
                },
                "field": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["name", "minpoly", "embedding"],
                    "properties": {
                        "name": {"type": "string", "minLength": 1},
                        "minpoly": {
                            "type": "array",
                            "minItems": 3,
                            "items": _RATIONAL,
                        },
                        "embedding": {
                            "type": "array",
                            "minItems": 2,
                            "maxItems": 2,
                            "items": {
                                "type": "array",
                                "minItems": 2,
                                "maxItems": 2,
                                "items": _RATIONAL,
                            },
                        },
                        "conjugate_image": {
                            "type": "array",
                            "minItems": 1,
                            "items": _RATIONAL,
                        },
                    },
                },
                "steps": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["p", "basis"],
                        "properties": {
                            "p": {"type": "integer"},
                            "basis": {
                                "type": "array",
                                "minItems": 1,
                                "items": {
                                    "type": "array",
                                    "minItems": 1,
                                    "items": _ENTRY,
                                },
                            },
                        },
                    },
                },
            },
        },
        "polarization": {
            "type": "object",
            "additionalProperties": False,
            "required": ["matrix"],
            "properties": {"matrix": _MATRIX},
        },
        "conjectures": {
            "type": "object",
            "additionalProperties": False,
            "required": ["motivated", "gpc", "ggpc"],
            "properties": {
                "motivated": {"type": "boolean"},
                "gpc": {"type": "boolean"},
                "ggpc": {"type": "boolean"},
            },
        },
        "gand_group": _GROUP,
        "trdeg_override": {"type": "integer", "minimum": 0},
    },
}


# -- exact expression entries --------------------------------------------------

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_entry(value, env: dict, field):
    """One exact scalar from an int or a small arithmetic expression.

    Grammar: integer literals, the names in env, + - * /, integer powers
    written **, parentheses, unary signs.  Nothing else; in particular
    no floats, no calls, and no '^' (bitwise xor precedence would turn
    i^2 + 1 into i**3 silently).
    """
    if isinstance(value, bool):
        raise ValueError("boolean is not a scalar entry")
    if isinstance(value, int):
        return field.coerce(Fraction(value))
    if not isinstance(value, str):
        raise ValueError(f"entry must be an integer or a string, got {value!r}")
    try:
        tree = ast.parse(value.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse entry {value!r}: {exc.msg}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ValueError(
                    f"only integer literals are exact; rewrite {node.value!r} "
                    f"as a fraction a/b"
                )
            return field.coerce(Fraction(node.value))
        if isinstance(node, ast.Name):
            if node.id not in env:
                allowed = ", ".join(sorted(env)) or "none"
                raise ValueError(f"unknown name {node.id!r} (allowed: {allowed})")
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
            inner = walk(node.operand)
            return inner if isinstance(node.op, ast.UAdd) else -inner
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.BitXor):
                raise ValueError(
                    "'^' is rejected (its precedence is surprising); write ** for powers"
                )
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant)
                        and isinstance(node.right.value, int)
                        and not isinstance(node.right.value, bool)
                        and node.right.value >= 0):
                    raise ValueError(
                        "exponents must be literal non-negative integers"
                    )
                return walk(node.left) ** node.right.value
            handler = _BINOPS.get(type(node.op))
            if handler is not None:
                return handler(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported syntax in entry {value!r}")

    try:
        return walk(tree)
    except ZeroDivisionError:
        raise ValueError(f"division by zero in entry {value!r}") from None


# -- semantic document ----------------------------------------------------------

@dataclass
class SpecDocument:
    raw: dict
    algebra: MatLieAlgebra
    cocharacter: HodgeCocharacter
    numbers: HodgeNumbers
    conjectures: ConjectureSet
    flag: FlagPoint | None = None
    flag_base_field: object = None
    trdeg_override: int | None = None
    polarization: PolarizationForm | None = None
    gand_algebra: MatLieAlgebra | None = None

    @property
    def has_flag_data(self) -> bool:
        return self.flag is not None or self.trdeg_override is not None


def _schema_problems(raw) -> list:
    validator = jsonschema.Draft202012Validator(SPEC_SCHEMA)
    problems = []
    for err in sorted(validator.iter_errors(raw), key=lambda e: list(e.absolute_path)):
        path = "/".join(str(part) for part in err.absolute_path) or "(document root)"
        problems.append(f"{path}: {err.message}")
    return problems


def _build_algebra(section: dict, label: str, problems: list) -> MatLieAlgebra | None:
    kind = section["kind"]
    n = section["n"]
    if kind == "custom":
        if "basis" not in section:
            problems.append(f"{label}: kind 'custom' requires an explicit basis")
            return None
        if "form" in section:
            problems.append(f"{label}: 'form' has no meaning for a custom basis")
            return None
        basis = []
        try:
            for matrix in section["basis"]:
                rows = [[parse_rational(x) for x in row] for row in matrix]
                if len(rows) != n or any(len(r) != n for r in rows):
                    raise ValueError(f"basis matrices must be {n} x {n}")
                basis.append(rows)
            return MatLieAlgebra(n, basis, name="custom")
        except (ValueError, TypeError) as exc:
            problems.append(f"{label}: {exc}")
            return None
    if "basis" in section:
        problems.append(f"{label}: 'basis' is only for kind 'custom'")
        return None
    form = None
    if "form" in section:
        try:
            form = [[parse_rational(x) for x in row] for row in section["form"]]
        except (ValueError, TypeError) as exc:
            problems.append(f"{label}/form: {exc}")
            return None
    try:
        return make_classical(kind, n, form=form)
    except (ValueError, TypeError) as exc:
        problems.append(f"{label}: {exc}")
        return None


def _build_number_field(section: dict, problems: list) -> NumberField | None:
    try:
        minpoly = [parse_rational(c) for c in section["minpoly"]]
        (re_lo, re_hi), (im_lo, im_hi) = section["embedding"]
        rect = Rectangle(
            Interval(parse_rational(re_lo), parse_rational(re_hi)),
            Interval(parse_rational(im_lo), parse_rational(im_hi)),
        )
        conjugate = section.get("conjugate_image")
        if conjugate is not None:
            conjugate = [parse_rational(c) for c in conjugate]
        return NumberField(
            minpoly, rect, name=section["name"], conjugate_image=conjugate,
        )
    except (ValueError, TypeError) as exc:
        problems.append(f"flag_point/field: {exc}")
        return None


def _build_flag(section: dict, numbers: HodgeNumbers | None, problems: list):
    """Returns (FlagPoint | None, base field | None)."""
    params = list(section["params"])
    for name in params:
        if not name.isidentifier() or keyword.iskeyword(name):
            problems.append(f"flag_point/params: {name!r} is not a usable name")
            return None, None
    if len(set(params)) != len(params):
        problems.append("flag_point/params: duplicate parameter names")
        return None, None

    base = QQ
    if "field" in section:
        base = _build_number_field(section["field"], problems)
        if base is None:
            return None, None
        if base.name in params:
            problems.append(
                f"flag_point: parameter {base.name!r} shadows the field generator"
            )
            return None, None

    func_field = FunctionField(base, params)
    env = {name: func_field.gen(name) for name in params}
    if base is not QQ:
        env[base.name] = func_field.coerce(base.gen())

    steps = []
    ok = True
    for idx, step in enumerate(section["steps"]):
        vectors = []
        for jdx, vector in enumerate(step["basis"]):
            entries = []
            for kdx, raw_entry in enumerate(vector):
                try:
                    entries.append(parse_entry(raw_entry, env, func_field))
                except ValueError as exc:
                    problems.append(
                        f"flag_point/steps/{idx}/basis/{jdx}/{kdx}: {exc}"
                    )
                    ok = False
            vectors.append(tuple(entries))
        steps.append((step["p"], tuple(vectors)))
    if not ok:
        return None, base

    if numbers is not None:
        declared = [(p, len(vectors)) for p, vectors in steps]
        total = numbers.total_dim()
        expected = [(p, c) for p, c in filtration_dims(numbers) if c < total]
        if declared != expected:
            problems.append(
                f"flag_point/steps: step dimensions {declared} do not match the "
                f"filtration profile {expected} of the declared Hodge numbers"
            )
            return None, base
        ambient = total
    else:
        ambient = max(len(v) for _p, vectors in steps for v in vectors)

    try:
        return FlagPoint(func_field, ambient, tuple(steps)), base
    except (ValueError, TypeError) as exc:
        problems.append(f"flag_point: {exc}")
        return None, base


def parse_document(raw: dict) -> SpecDocument:
    problems = _schema_problems(raw)
    if problems:
        raise SpecValidationError(problems)

    algebra = _build_algebra(raw["group"], "group", problems)

    numbers = None
    try:
        dims = {(p, q): h for p, q, h in raw["hodge_numbers"]["dims"]}
        if len(dims) != len(raw["hodge_numbers"]["dims"]):
            raise ValueError("duplicate (p, q) rows in dims")
        numbers = HodgeNumbers(raw["hodge_numbers"]["weight"], dims)
    except ValueError as exc:
        problems.append(f"hodge_numbers: {exc}")

    cochar = None
    weights = tuple(raw["cocharacter"]["lambda"])
    if algebra is not None and len(weights) != algebra.ambient_dim:
        problems.append(
            f"cocharacter: lambda has length {len(weights)} but the group acts "
            f"on dimension {algebra.ambient_dim}"
        )
    elif numbers is not None:
        if numbers.total_dim() != len(weights):
            problems.append(
                f"cocharacter: lambda has length {len(weights)} but the Hodge "
                f"numbers sum to {numbers.total_dim()}"
            )
        else:
            try:
                cochar = HodgeCocharacter(weights, declared_numbers=numbers)
            except ValueError as exc:
                problems.append(f"cocharacter: {exc}")
    if cochar is None and not problems:
        cochar = HodgeCocharacter(weights)

    if (algebra is not None and numbers is not None
            and algebra.ambient_dim != numbers.total_dim()):
        problems.append(
            f"hodge_numbers: table sums to {numbers.total_dim()} but the group "
            f"acts on dimension {algebra.ambient_dim}"
        )

    flag = None
    base = None
    if "flag_point" in raw:
        if "trdeg_override" in raw:
            problems.append(
                "flag_point and trdeg_override are mutually exclusive; "
                "declare one source of transcendence data"
            )
        else:
            flag, base = _build_flag(raw["flag_point"], numbers, problems)

    polarization = None
    if "polarization" in raw and numbers is not None:
        matrix = raw["polarization"]["matrix"]
        try:
            if numbers is not None and len(matrix) != numbers.total_dim():
                raise ValueError(
                    f"matrix is {len(matrix)} x {len(matrix[0])} but the "
                    f"structure has dimension {numbers.total_dim()}"
                )
            polarization = PolarizationForm(numbers.weight, matrix)
        except (ValueError, TypeError) as exc:
            problems.append(f"polarization: {exc}")

    gand = None
    if "gand_group" in raw:
        gand = _build_algebra(raw["gand_group"], "gand_group", problems)
        if gand is not None and algebra is not None:
            if gand.ambient_dim != algebra.ambient_dim:
                problems.append(
                    f"gand_group: acts on dimension {gand.ambient_dim}, "
                    f"the group on {algebra.ambient_dim}"
                )
            elif not all(gand.contains(b) for b in algebra.basis):
                problems.append(
                    "gand_group: does not contain the declared group algebra"
                )

    if problems:
        raise SpecValidationError(problems)

    conj = raw["conjectures"]
    return SpecDocument(
        raw=raw,
        algebra=algebra,
        cocharacter=cochar,
        numbers=numbers,
        conjectures=ConjectureSet(
            motivated=conj["motivated"], gpc=conj["gpc"], ggpc=conj["ggpc"],
        ),
        flag=flag,
        flag_base_field=base,
        trdeg_override=raw.get("trdeg_override"),
        polarization=polarization,
        gand_algebra=gand,
    )


def load_document(path) -> SpecDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except FileNotFoundError:
        raise SpecValidationError(f"spec file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise SpecValidationError(
            f"{path} is not valid JSON: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise SpecValidationError(f"{path}: top level must be a JSON object")
    return parse_document(raw)
