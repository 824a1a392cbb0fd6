"""Conditional screening verdicts.

Every conclusion that depends on an open conjecture says so: a Verdict
carries machine-readable labels of the hypotheses it is conditional on,
and the narrative spells them out.  conditional_on is empty only for
unconditional arithmetic facts.  The conjecture toggles are explicit
inputs; nothing here defaults them on.

The screening inequality: a structure whose Hodge filtration is defined
over a field of transcendence degree strictly below the horizontal
codimension of its Mumford-Tate flag variety cannot come from geometry,
conditional on Hodge cycles being motivated plus the generalized
Grothendieck period conjecture.  The special case trdeg = 0 against a
group that is not of Shimura type is surfaced separately as
shimura_violation.  When the toggles are off, both downgrade to a bare
"bound" verdict that records the inequality but draws no conclusion.

The unconditional part is the identity

    flag_dim - dim g_{-1} = hcodim,

re-checked on every run (IdentityViolation would mean corrupted state),
plus the bookkeeping bounds: any defining field of the filtration has
transcendence degree at most dim g_{-1} (conditional on motivated), and
trdeg of the structure is at least flag_dim minus that (conditional on
the generalized period conjecture).  When a larger group models the
motivic Galois group, the bound pair is computed on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdentityViolation
from .grading import InvariantReport

MOTIVATED = "hodge-cycles-motivated"
GPC = "grothendieck-period-conjecture"
GGPC = "generalized-grothendieck-period-conjecture"

_LABEL_TEXT = {
    MOTIVATED: "Hodge cycles are motivated",
    GPC: "the Grothendieck period conjecture",
    GGPC: "the generalized Grothendieck period conjecture",
}

KINDS = ("not_from_geometry", "consistent", "shimura_violation",
         "maximal_transcendence", "bound")


@dataclass(frozen=True)
class ConjectureSet:
    """Explicit toggles for the conditional hypotheses."""

    motivated: bool
    gpc: bool
    ggpc: bool


@dataclass(frozen=True)
class Verdict:
    kind: str
    payload: dict = field(default_factory=dict)
    conditional_on: tuple = ()
    narrative: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")


def _conditions_text(labels) -> str:
    return "; ".join(_LABEL_TEXT[l] for l in labels)


def screen(trdeg_value: int, report: InvariantReport, conjectures: ConjectureSet) -> Verdict:
    """The main screening inequality trdeg < hcodim."""
    t, h = int(trdeg_value), report.hcodim
    if t >= h:
        return Verdict(
            kind="consistent",
            payload={"trdeg": t, "hcodim": h},
            conditional_on=(),
            narrative=(
                f"transcendence degree {t} >= horizontal codimension {h}: "
                f"no obstruction from the screening inequality"
            ),
        )
    if conjectures.motivated and conjectures.ggpc:
        labels = (MOTIVATED, GGPC)
        return Verdict(
            kind="not_from_geometry",
            payload={"trdeg": t, "hcodim": h},
            conditional_on=labels,
            narrative=(
                f"transcendence degree {t} < horizontal codimension {h}: "
                f"this Hodge structure is not from geometry "
                f"(conditional on: {_conditions_text(labels)})"
            ),
        )
    return Verdict(
        kind="bound",
        payload={"trdeg": t, "hcodim": h},
        conditional_on=(),
        narrative=(
            f"transcendence degree {t} < horizontal codimension {h}, but the "
            f"screening conclusion needs both '{_LABEL_TEXT[MOTIVATED]}' and "
            f"'{_LABEL_TEXT[GGPC]}' enabled; no conclusion about geometric origin"
        ),
    )


def shimura_necessity(trdeg_value: int, report: InvariantReport,
                      conjectures: ConjectureSet) -> Verdict:
    """Special case: a Q-bar-defined filtration forces Shimura type."""
    t = int(trdeg_value)
    if t == 0 and not report.shimura_type:
        if conjectures.motivated and conjectures.ggpc:
            labels = (MOTIVATED, GGPC)
            return Verdict(
                kind="shimura_violation",
                payload={"trdeg": t, "shimura_type": False},
                conditional_on=labels,
                narrative=(
                    "the filtration is defined over the algebraic numbers but the "
                    "group is not of Shimura type: this Hodge structure is not from "
                    f"geometry (conditional on: {_conditions_text(labels)})"
                ),
            )
        return Verdict(
            kind="bound",
            payload={"trdeg": t, "shimura_type": False},
            conditional_on=(),
            narrative=(
                "the filtration is defined over the algebraic numbers and the group "
                "is not of Shimura type, but the necessity conclusion needs both "
                f"'{_LABEL_TEXT[MOTIVATED]}' and '{_LABEL_TEXT[GGPC]}' enabled; "
                "no conclusion about geometric origin"
            ),
        )
    return Verdict(
        kind="consistent",
        payload={"trdeg": t, "shimura_type": report.shimura_type},
        conditional_on=(),
        narrative="the Shimura-type necessity test does not reject this structure",
    )


def maximal_transcendence_verdict(trdeg_value: int, report: InvariantReport) -> Verdict | None:
    if int(trdeg_value) != report.flag_dim:
        return None
    return Verdict(
        kind="maximal_transcendence",
        payload={"trdeg": int(trdeg_value), "flag_dim": report.flag_dim},
        conditional_on=(),
        narrative=(
            f"transcendence degree {trdeg_value} equals the flag variety dimension "
            f"{report.flag_dim}: the filtration is maximally transcendental"
        ),
    )


def field_descent_bound(report: InvariantReport, side: str = "Mumford-Tate") -> Verdict:
    """Upper bound on the transcendence degree of any field of definition
    of the filtration: dim g_{-1}, conditional on motivated Hodge cycles."""
    bound = report.g_minus_one_dim
    return Verdict(
        kind="bound",
        payload={"defining_field_trdeg_max": bound},
        conditional_on=(MOTIVATED,),
        narrative=(
            f"[{side} side] any field of definition of the filtration has "
            f"transcendence degree at most {bound} over the rationals "
            f"(conditional on: {_conditions_text((MOTIVATED,))})"
        ),
    )


def trdeg_lower_bound(flag_dim: int, defining_field_trdeg: int,
                      side: str = "Mumford-Tate") -> Verdict:
    """Lower bound trdeg >= flag_dim - trdeg(K), conditional on the
    generalized Grothendieck period conjecture."""
    bound = max(0, int(flag_dim) - int(defining_field_trdeg))
    return Verdict(
        kind="bound",
        payload={
            "trdeg_min": bound,
            "flag_dim": int(flag_dim),
            "defining_field_trdeg": int(defining_field_trdeg),
        },
        conditional_on=(GGPC,),
        narrative=(
            f"[{side} side] the transcendence degree of the structure is at least "
            f"{flag_dim} - {defining_field_trdeg} = {bound} "
            f"(conditional on: {_conditions_text((GGPC,))})"
        ),
    )


@dataclass(frozen=True)
class ChainIdentity:
    """flag_dim - dim g_{-1} = hcodim, an unconditional identity."""

    flag_dim: int
    g_minus_one_dim: int
    hcodim: int

    def __post_init__(self):
        if self.flag_dim - self.g_minus_one_dim != self.hcodim:
            raise IdentityViolation(
                f"flag_dim {self.flag_dim} - dim g_(-1) {self.g_minus_one_dim} "
                f"!= hcodim {self.hcodim}"
            )

    @property
    def holds(self) -> bool:
        return True


def chain_identity(report: InvariantReport) -> ChainIdentity:
    return ChainIdentity(
        flag_dim=report.flag_dim,
        g_minus_one_dim=report.g_minus_one_dim,
        hcodim=report.hcodim,
    )


def evaluate(trdeg_value: int, report: InvariantReport, conjectures: ConjectureSet,
             gand_report: InvariantReport | None = None):
    """Full verdict list for one structure.

    Returns (verdicts, chain_identities).  When a model of the motivic
    Galois group is supplied, the bound pair is emitted for both sides.
    """
    verdicts = [
        screen(trdeg_value, report, conjectures),
        shimura_necessity(trdeg_value, report, conjectures),
    ]
    maximal = maximal_transcendence_verdict(trdeg_value, report)
    if maximal is not None:
        verdicts.append(maximal)
    sides = [("Mumford-Tate", report)]
    if gand_report is not None:
        sides.append(("motivic Galois model", gand_report))
    chains = []
    for side, side_report in sides:
        descent = field_descent_bound(side_report, side=side)
        verdicts.append(descent)
        verdicts.append(
            trdeg_lower_bound(
                side_report.flag_dim,
                descent.payload["defining_field_trdeg_max"],
                side=side,
            )
        )
        chains.append(chain_identity(side_report))
    return verdicts, chains


def exit_code_for(verdicts) -> int:
    """0 when nothing was screened out, 10 when the structure was."""
    return 10 if any(v.kind == "not_from_geometry" for v in verdicts) else 0
