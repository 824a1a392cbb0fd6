"""Flag points and the transcendence degree of a filtration.

A FlagPoint is a nested chain of subspaces of Q^d (tensored up to the
function field) whose coordinates live in Q(theta)(t_1, ..., t_k).  The
declared parameters are promised to be algebraically independent; that
contract is the caller's, and reports surface it as a reminder.

normalize_chart puts every step into the affine chart of its
Grassmannian determined by the lexicographically first nonsingular
maximal minor: the step basis M becomes M B^{-1} with B the pivot rows,
so the pivot rows read as the identity and the remaining entries are
canonical coordinates of the subspace.  They depend only on the span,
not on the basis, which is what makes the transcendence degree
well-defined.

trdeg is the rank of the Jacobian of those coordinates with respect to
the parameters, a field-theoretic transcendence degree by the Jacobian
criterion in characteristic zero.  theta contributes nothing: the
derivative is taken over Q(theta).  An optional fast path evaluates the
Jacobian at a random integer point (seeded, recorded, denominators
avoided by retry); when the evaluated rank hits the maximum possible it
certifies the symbolic answer without running symbolic elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DenominatorVanishes
from .linalg import ExactMatrix, inverse, rank
from .ratfunc import FunctionField, RatFunc

_FAST_PATH_RETRIES = 32
_FAST_PATH_RANGE = 999983


@dataclass(frozen=True)
class FlagPoint:
    """Nested subspaces of the d-dimensional ambient space, by p descending."""

    field: FunctionField
    ambient_dim: int
    steps: tuple  # ((p, (vector, ...)), ...), each vector a tuple of RatFunc

    def __post_init__(self):
        d = self.ambient_dim
        steps = []
        previous_p = None
        previous_size = 0
        for p, vectors in self.steps:
            p = int(p)
            vectors = tuple(
                tuple(self.field.coerce(x) for x in v) for v in vectors
            )
            if any(len(v) != d for v in vectors):
                raise ValueError(f"step p={p}: vectors must have length {d}")
            if not vectors:
                raise ValueError(f"step p={p} is empty")
            if previous_p is not None:
                if p >= previous_p:
                    raise ValueError("step positions must strictly decrease")
                if len(vectors) <= previous_size:
                    raise ValueError("step dimensions must strictly grow as p drops")
            previous_p, previous_size = p, len(vectors)
            steps.append((p, vectors))
        object.__setattr__(self, "steps", tuple(steps))
        for (p_hi, vec_hi), (p_lo, vec_lo) in zip(self.steps, self.steps[1:]):
            lower = self._matrix(vec_lo)
            if rank(lower) != lower.ncols:
                raise ValueError(f"step p={p_lo} basis is not linearly independent")
            stacked = lower.hstack(self._matrix(vec_hi))
            if rank(stacked) != lower.ncols:
                raise ValueError(f"F^{p_hi} is not contained in F^{p_lo}")
        if self.steps:
            first = self._matrix(self.steps[0][1])
            if rank(first) != first.ncols:
                raise ValueError(
                    f"step p={self.steps[0][0]} basis is not linearly independent"
                )

    def _matrix(self, vectors) -> ExactMatrix:
        return ExactMatrix.from_columns(self.field, vectors, nrows=self.ambient_dim)

    @property
    def params(self):
        return self.field.names


def normalize_chart(flag: FlagPoint):
    """Canonical affine-chart coordinates of every step, concatenated.

    For each step: pick the lexicographically first set of rows whose
    maximal minor is nonsingular, reduce the basis against it, and emit
    the entries of the remaining rows in row-major order.
    """
    coords = []
    for _p, vectors in flag.steps:
        m = flag._matrix(vectors)
        s = m.ncols
        pivot_rows = None
        for combo in combinations(range(flag.ambient_dim), s):
            candidate = m.submatrix(combo)
            if rank(candidate) == s:
                pivot_rows = combo
                break
        if pivot_rows is None:  # pragma: no cover - excluded by independence check
            raise ValueError("step basis has no nonsingular maximal minor")
        b = m.submatrix(pivot_rows)
        reduced = m * inverse(b)
        pivot_set = set(pivot_rows)
        for i in range(flag.ambient_dim):
            if i in pivot_set:
                continue
            coords.extend(reduced.rows[i])
    return coords


@dataclass(frozen=True)
class TrdegResult:
    value: int
    chart_coordinates: tuple
    params: tuple
    certificate: dict | None = None


def jacobian_matrix(coords, field: FunctionField) -> ExactMatrix:
    rows = [
        [c.derivative(j) for j in range(len(field.names))]
        for c in coords
    ]
    if not rows:
        return ExactMatrix.zeros(field, 0, len(field.names))
    return ExactMatrix(field, rows)


def _evaluate_rank(jac: ExactMatrix, field: FunctionField, point):
    base = field.base
    rows = []
    for row in jac.rows:
        rows.append([entry.eval(point) for entry in row])
    if not rows:
        return 0
    return rank(ExactMatrix(base, rows))


def trdeg(flag: FlagPoint, seed: int | None = None) -> TrdegResult:
    """Transcendence degree over Q of the field the flag is defined over.

    The constant field Q(theta) contributes nothing; the value is the
    Jacobian rank of the chart coordinates with respect to the declared
    parameters.  With a seed, a random evaluation first tries to certify
    the rank cheaply; the point and seed are recorded in the result.
    """
    coords = tuple(normalize_chart(flag))
    k = len(flag.field.names)
    if k == 0:
        return TrdegResult(value=0, chart_coordinates=coords, params=())
    jac = jacobian_matrix(coords, flag.field)
    max_possible = min(len(coords), k)
    certificate = None
    evaluated = None
    if seed is not None:
        rng = random.Random(seed)
        point = None
        for _ in range(_FAST_PATH_RETRIES):
            candidate = [Fraction(rng.randint(-_FAST_PATH_RANGE, _FAST_PATH_RANGE)) for _ in range(k)]
            try:
                evaluated = _evaluate_rank(jac, flag.field, candidate)
            except DenominatorVanishes:
                continue
            point = candidate
            break
        if point is None:
            raise DenominatorVanishes(
                f"no evaluation point avoided the denominators in {_FAST_PATH_RETRIES} draws"
            )
        if evaluated == max_possible:
            return TrdegResult(
                value=evaluated,
                chart_coordinates=coords,
                params=flag.field.names,
                certificate={"seed": seed, "point": tuple(point), "evaluated_rank": evaluated},
            )
    value = rank(jac)
    if seed is not None and evaluated == value:
        certificate = {"seed": seed, "point": tuple(point), "evaluated_rank": evaluated}
    return TrdegResult(
        value=value,
        chart_coordinates=coords,
        params=flag.field.names,
        certificate=certificate,
    )


def is_maximal_transcendence(result: TrdegResult, grading) -> bool:
    """True when the filtration field is as transcendental as the flag
    variety allows."""
    from .grading import flag_dimension

    return result.value == flag_dimension(grading)
