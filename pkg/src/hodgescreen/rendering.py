"""Deterministic report assembly and rendering.

One payload dict feeds both output modes.  JSON output is canonical
(sorted keys, two-space indent, trailing newline) and the text renderer
walks the same payload, so repeated runs on the same input are
byte-identical in either mode.  Exact scalars serialize as JSON
integers when integral and as "a/b" strings otherwise; nothing is ever
converted to a float.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .grading import InvariantReport


def scalar_json(value):
    """Exact JSON image of a rational scalar."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def invariants_json(rep: InvariantReport) -> dict:
    return {
        "dim_g": rep.dim_g,
        "flag_dim": rep.flag_dim,
        "hcodim": rep.hcodim,
        "g_minus_one_dim": rep.g_minus_one_dim,
        "shimura_type": rep.shimura_type,
        "symmetric_grading": rep.symmetric_grading,
        "levels": [[k, d] for k, d in rep.levels],
    }


def trdeg_json(result, seed, source: str) -> dict:
    certificate = None
    if result is not None and result.certificate is not None:
        certificate = {
            "seed": result.certificate["seed"],
            "point": [scalar_json(x) for x in result.certificate["point"]],
            "evaluated_rank": result.certificate["evaluated_rank"],
        }
    return {
        "value": result.value if result is not None else None,
        "source": source,
        "params": list(result.params) if result is not None else [],
        "chart_length": len(result.chart_coordinates) if result is not None else 0,
        "seed": seed,
        "certificate": certificate,
    }


def override_json(value: int) -> dict:
    return {
        "value": int(value),
        "source": "override",
        "params": [],
        "chart_length": 0,
        "seed": None,
        "certificate": None,
    }


def verdict_json(verdict) -> dict:
    return {
        "kind": verdict.kind,
        "payload": {k: scalar_json(v) for k, v in sorted(verdict.payload.items())},
        "conditional_on": list(verdict.conditional_on),
        "narrative": verdict.narrative,
    }


def chain_json(chain) -> dict:
    return {
        "flag_dim": chain.flag_dim,
        "g_minus_one_dim": chain.g_minus_one_dim,
        "hcodim": chain.hcodim,
        "holds": chain.holds,
    }


def polarization_json(result) -> dict:
    return {
        "status": result.status,
        "detail": result.detail,
        "witness": scalar_json(result.witness),
    }


def group_json(algebra) -> dict:
    return {
        "name": algebra.name,
        "ambient_dim": algebra.ambient_dim,
        "dim": algebra.dim,
    }


def hodge_numbers_json(numbers) -> dict:
    return {
        "weight": numbers.weight,
        "dims": [[p, q, h] for p, q, h in numbers.types_sorted()],
        "total_dim": numbers.total_dim(),
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# -- text rendering --------------------------------------------------------------

def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _levels_line(levels) -> str:
    return "  ".join(f"{k}:{d}" for k, d in levels) or "(empty)"


def _render_invariants(lines, inv: dict, heading: str):
    lines.append(heading)
    lines.append(f"  dim g              {inv['dim_g']}")
    lines.append(f"  flag dim           {inv['flag_dim']}")
    lines.append(f"  hcodim             {inv['hcodim']}")
    lines.append(f"  dim g_(-1)         {inv['g_minus_one_dim']}")
    lines.append(f"  shimura type       {_yesno(inv['shimura_type'])}")
    lines.append(f"  symmetric grading  {_yesno(inv['symmetric_grading'])}")
    lines.append(f"  levels             {_levels_line(inv['levels'])}")


def _render_trdeg(lines, tr: dict):
    lines.append("transcendence degree")
    lines.append(f"  value              {tr['value']}")
    lines.append(f"  source             {tr['source']}")
    params = ", ".join(tr["params"]) or "(none)"
    lines.append(f"  params             {params}")
    seed = tr["seed"] if tr["seed"] is not None else "(none)"
    lines.append(f"  seed               {seed}")
    if tr["certificate"] is not None:
        cert = tr["certificate"]
        point = ", ".join(str(x) for x in cert["point"])
        lines.append(
            f"  certificate        rank {cert['evaluated_rank']} at ({point})"
        )


def render_text(payload: dict) -> str:
    lines = [f"hodgescreen {payload['command']} {payload['spec']}", ""]
    if "group" in payload:
        g = payload["group"]
        lines.append(
            f"group              {g['name']}   ambient {g['ambient_dim']}   dim {g['dim']}"
        )
    if "cocharacter" in payload:
        lam = ", ".join(str(w) for w in payload["cocharacter"])
        lines.append(f"cocharacter        [{lam}]")
    if "hodge_numbers" in payload:
        hn = payload["hodge_numbers"]
        cells = "  ".join(f"h({p},{q})={h}" for p, q, h in hn["dims"])
        lines.append(f"hodge numbers      weight {hn['weight']}   {cells}")
    lines.append("")
    if "checks" in payload:
        lines.append("checks")
        for name, ok in sorted(payload["checks"].items()):
            lines.append(f"  {name.replace('_', ' '):<24} {'ok' if ok else 'FAILED'}")
        lines.append("")
    if "invariants" in payload:
        _render_invariants(lines, payload["invariants"], "invariants (Mumford-Tate side)")
        lines.append("")
    if payload.get("gand_invariants"):
        _render_invariants(
            lines, payload["gand_invariants"], "invariants (motivic Galois model side)"
        )
        lines.append("")
    if payload.get("trdeg"):
        _render_trdeg(lines, payload["trdeg"])
        lines.append("")
    if "chain_identity" in payload:
        lines.append("chain identity")
        for chain in payload["chain_identity"]:
            lines.append(
                f"  flag_dim {chain['flag_dim']} - dim g_(-1) "
                f"{chain['g_minus_one_dim']} = hcodim {chain['hcodim']}"
                f"  ({'holds' if chain['holds'] else 'VIOLATED'})"
            )
        lines.append("")
    if "verdicts" in payload:
        lines.append("verdicts")
        for v in payload["verdicts"]:
            lines.append(f"  [{v['kind']}] {v['narrative']}")
        lines.append("")
    if payload.get("polarization"):
        pol = payload["polarization"]
        lines.append("polarization")
        lines.append(f"  status             {pol['status']}")
        if pol["detail"]:
            lines.append(f"  detail             {pol['detail']}")
        if pol["witness"] is not None:
            lines.append(f"  witness            {pol['witness']}")
        lines.append("")
    if payload.get("warnings"):
        lines.append("warnings")
        for w in payload["warnings"]:
            lines.append(f"  - {w}")
        lines.append("")
    if "exit_code" in payload:
        lines.append(f"exit code {payload['exit_code']}")
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines) + "\n"
