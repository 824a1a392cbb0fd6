"""Hodge number tables, realized filtrations, and polarization checks.

A HodgeNumbers table is the bigraded dimension datum {(p, q): h} of a
pure structure of some weight; the Tannakian operations (twist, tensor,
dual, exterior and symmetric powers) act on tables alone, no vector
spaces attached.  Wedge and sym are computed by enumerating k-element
subsets / multisets of a typed basis, which is exact and matches the
binomial totals they must satisfy.

A RealizedHodgeStructure carries an actual filtration: bases over Q or
over a conjugation-stable number field Q(theta).  Validation computes

    H^{p,q} = F^p  intersect  conj(F^{n-p})

exactly and accepts only when the pieces have the declared dimensions
and jointly span.  conj symmetry of the pieces is then automatic from
the construction.

Polarizations.  S is a rational (-1)^n-symmetric form.  The morphism
half of the check is linear algebra: S must kill every pair of pieces
except opposite ones.  The positivity half uses the hermitian form
h(x, y) = i^(p-q) S(x, conj y) on each piece.  Gram-Schmidt runs inside
Q(theta) because the i^(p-q) factors cancel in every quotient
g(v, w)/g(w, w) with g(x, y) = S(x, conj y); positivity of h is then the
sign of i^(p-q) g(w, w) for each orthogonalized w.  Writing delta for
g(w, w), conj(delta) = (-1)^n delta exactly, so delta is real for even
weight and purely imaginary for odd weight, and the sign needed is the
sign of Re(delta) or Im(delta) according to (p - q) mod 4.  Signs of
nonzero quantities are decided by interval refinement in the field's
designated embedding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import NotAHodgeFiltration
from .fields import QQ, parse_rational
from .linalg import ExactMatrix, intersection_basis, rank


class HodgeNumbers:
    """Bigraded dimension table of a pure structure of fixed weight."""

    __slots__ = ("weight", "dims")

    def __init__(self, weight: int, dims):
        self.weight = int(weight)
        table = {}
        for (p, q), h in dict(dims).items():
            p, q, h = int(p), int(q), int(h)
            if h < 0:
                raise ValueError(f"negative Hodge number at ({p}, {q})")
            if h == 0:
                continue
            if p + q != self.weight:
                raise ValueError(f"type ({p}, {q}) has weight {p + q}, declared {self.weight}")
            table[(p, q)] = h
        if not table:
            raise ValueError("a Hodge structure has positive dimension")
        for (p, q), h in table.items():
            if table.get((q, p)) != h:
                raise ValueError(f"conjugation symmetry fails: h({p},{q}) != h({q},{p})")
        self.dims = table

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def types_sorted(self):
        """(p, q, h) triples with p descending."""
        return [(p, q, self.dims[(p, q)]) for p, q in sorted(self.dims, reverse=True)]

    def p_multiset(self):
        out = []
        for (p, _q), h in self.dims.items():
            out.extend([p] * h)
        return sorted(out)

    def __eq__(self, other):
        return (
            isinstance(other, HodgeNumbers)
            and self.weight == other.weight
            and self.dims == other.dims
        )

    def __hash__(self):
        return hash((self.weight, tuple(sorted(self.dims.items()))))

    def __repr__(self):
        body = ", ".join(f"h({p},{q})={h}" for p, q, h in self.types_sorted())
        return f"HodgeNumbers(weight={self.weight}, {body})"


def tate_twist(numbers: HodgeNumbers, m: int) -> HodgeNumbers:
    """Twist by Q(m): weight drops by 2m, types shift by (-m, -m)."""
    return HodgeNumbers(
        numbers.weight - 2 * m,
        {(p - m, q - m): h for (p, q), h in numbers.dims.items()},
    )


def dual(numbers: HodgeNumbers) -> HodgeNumbers:
    return HodgeNumbers(
        -numbers.weight, {(-p, -q): h for (p, q), h in numbers.dims.items()}
    )


def tensor(a: HodgeNumbers, b: HodgeNumbers) -> HodgeNumbers:
    out: dict = {}
    for (p1, q1), h1 in a.dims.items():
        for (p2, q2), h2 in b.dims.items():
            key = (p1 + p2, q1 + q2)
            out[key] = out.get(key, 0) + h1 * h2
    return HodgeNumbers(a.weight + b.weight, out)


def _typed_basis(numbers: HodgeNumbers):
    basis = []
    for p, q in sorted(numbers.dims, reverse=True):
        basis.extend([(p, q)] * numbers.dims[(p, q)])
    return basis


def wedge(numbers: HodgeNumbers, k: int) -> HodgeNumbers:
    """k-th exterior power by enumerating k-element subsets of a typed basis."""
    if k < 0:
        raise ValueError("negative exterior power")
    if k == 0:
        return HodgeNumbers(0, {(0, 0): 1})
    basis = _typed_basis(numbers)
    if k > len(basis):
        raise ValueError(f"wedge^{k} of a {len(basis)}-dimensional structure vanishes")
    out: dict = {}
    for combo in combinations(range(len(basis)), k):
        p = sum(basis[i][0] for i in combo)
        q = sum(basis[i][1] for i in combo)
        out[(p, q)] = out.get((p, q), 0) + 1
    return HodgeNumbers(numbers.weight * k, out)


def sym(numbers: HodgeNumbers, k: int) -> HodgeNumbers:
    """k-th symmetric power by enumerating k-element multisets."""
    if k < 0:
        raise ValueError("negative symmetric power")
    if k == 0:
        return HodgeNumbers(0, {(0, 0): 1})
    basis = _typed_basis(numbers)
    out: dict = {}
    for combo in combinations_with_replacement(range(len(basis)), k):
        p = sum(basis[i][0] for i in combo)
        q = sum(basis[i][1] for i in combo)
        out[(p, q)] = out.get((p, q), 0) + 1
    return HodgeNumbers(numbers.weight * k, out)


def filtration_dims(numbers: HodgeNumbers):
    """[(p, dim F^p)] over the jump positions, p descending."""
    out = []
    total = 0
    for p, _q, h in numbers.types_sorted():
        total += h
        out.append((p, total))
    return out


# -- realized structures -----------------------------------------------------


@dataclass(frozen=True)
class RealizedHodgeStructure:
    """A filtration with actual coordinates over Q or Q(theta).

    steps lists (p, basis vectors of F^p) for every jump p with
    dim F^p < dim; the lowest jump, where F^p is everything, is implied.
    decomposition is filled in by realize_and_validate.
    """

    field: object
    numbers: HodgeNumbers
    steps: tuple
    decomposition: dict | None = None

    @property
    def dim(self) -> int:
        return self.numbers.total_dim()

    @property
    def weight(self) -> int:
        return self.numbers.weight

    def step_matrix(self, p: int) -> ExactMatrix:
        """Basis matrix (columns) of F^p for any integer p."""
        d = self.dim
        jumps = [jp for jp, _ in filtration_dims(self.numbers)]
        if not any(jp >= p for jp in jumps):
            return ExactMatrix.zeros(self.field, d, 0)
        candidates = [jp for jp in jumps if jp >= p]
        target = min(candidates)
        if target == min(jumps):
            return ExactMatrix.identity(self.field, d)
        for sp, vectors in self.steps:
            if sp == target:
                return ExactMatrix.from_columns(self.field, vectors, nrows=d)
        raise NotAHodgeFiltration(f"no step listed for jump p = {target}")


def realize_and_validate(structure: RealizedHodgeStructure) -> RealizedHodgeStructure:
    """Check the filtration realizes the declared Hodge numbers.

    Verifies step shapes and nesting, computes every piece
    H^{p,q} = F^p intersect conj(F^{n-p}), and accepts only when each
    piece has dimension h^{p,q} and the pieces together span.  Returns
    the structure annotated with the computed decomposition.
    """
    field = structure.field
    if not field.has_conjugation:
        raise NotAHodgeFiltration(
            "the coefficient field carries no conjugation automorphism"
        )
    d = structure.dim
    fdims = filtration_dims(structure.numbers)
    required = [(p, dim) for p, dim in fdims if dim < d]
    listed = {p: vectors for p, vectors in structure.steps}
    if sorted(listed) != sorted(p for p, _ in required):
        raise NotAHodgeFiltration(
            f"steps listed for p in {sorted(listed)}, expected jumps at "
            f"{sorted(p for p, _ in required)}"
        )
    matrices = {}
    for p, dim in required:
        vectors = listed[p]
        if any(len(v) != d for v in vectors):
            raise NotAHodgeFiltration(f"step p={p} has vectors of the wrong length")
        m = ExactMatrix.from_columns(field, [tuple(field.coerce(x) for x in v) for v in vectors], nrows=d)
        if m.ncols != dim:
            raise NotAHodgeFiltration(
                f"step p={p} has {m.ncols} vectors, the Hodge numbers require {dim}"
            )
        if rank(m) != dim:
            raise NotAHodgeFiltration(f"step p={p} basis is not linearly independent")
        matrices[p] = m
    # nesting: each step inside the next bigger one
    ordered = sorted(matrices, reverse=True)
    for upper, lower in zip(ordered, ordered[1:]):
        stacked = matrices[lower].hstack(matrices[upper])
        if rank(stacked) != matrices[lower].ncols:
            raise NotAHodgeFiltration(f"F^{upper} is not contained in F^{lower}")

    conj = field.conj
    n = structure.weight
    decomposition = {}
    all_vectors = []
    for (p, q), h in sorted(structure.numbers.dims.items(), reverse=True):
        fp = structure.step_matrix(p) if p not in matrices else matrices[p]
        fq = structure.step_matrix(q) if q not in matrices else matrices[q]
        fq_bar = fq.map_entries(conj)
        if fp.ncols == d:
            piece = fq_bar.columns() if fq_bar.ncols < d else ExactMatrix.identity(field, d).columns()
            piece = list(piece)
        elif fq_bar.ncols == d:
            piece = list(fp.columns())
        else:
            piece = list(intersection_basis(fp, fq_bar))
        if len(piece) != h:
            raise NotAHodgeFiltration(
                f"piece H^{p},{q} has dimension {len(piece)}, declared {h}"
            )
        decomposition[(p, q)] = tuple(piece)
        all_vectors.extend(piece)
    if rank(ExactMatrix(field, all_vectors)) != d:
        raise NotAHodgeFiltration("the Hodge pieces do not span")
    return RealizedHodgeStructure(
        field=field,
        numbers=structure.numbers,
        steps=structure.steps,
        decomposition=decomposition,
    )


# -- polarization --------------------------------------------------------------


@dataclass(frozen=True)
class PolarizationForm:
    """Rational bilinear form, (-1)^weight symmetric."""

    weight: int
    matrix: ExactMatrix

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, ExactMatrix):
            m = ExactMatrix(QQ, [[parse_rational(x) for x in row] for row in m])
            object.__setattr__(self, "matrix", m)
        if m.nrows != m.ncols:
            raise ValueError("polarization form must be square")
        sign = -1 if self.weight % 2 else 1
        if m.transpose() != m * Fraction(sign):
            kind = "antisymmetric" if sign < 0 else "symmetric"
            raise ValueError(f"weight {self.weight} polarization must be {kind}")


@dataclass(frozen=True)
class PolarizationResult:
    status: str  # valid | morphism_fails | positivity_fails
    detail: str = ""
    witness: object = None  # Fraction when the failing value is rational

    @property
    def is_valid(self) -> bool:
        return self.status == "valid"


def _bilinear(field, s: ExactMatrix, x, y):
    total = field.zero()
    for i, xi in enumerate(x):
        if field.is_zero(xi):
            continue
        for j, yj in enumerate(y):
            sij = s.rows[i][j]
            if sij != 0 and not field.is_zero(yj):
                total = total + xi * field.coerce(sij) * yj
    return total


def _rational_sqrt(value: Fraction):
    if value < 0:
        return None
    rn = math.isqrt(value.numerator)
    rd = math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def _hermitian_witness(field, delta, parity, sign):
    """The real value i^(p-q) * delta as a Fraction when it is rational."""
    if field is QQ or isinstance(field, type(QQ)):
        return delta if parity % 2 == 0 else None
    square = delta * delta
    coords = square.coords
    if any(c != 0 for c in coords[1:]):
        return None
    base = coords[0] if parity % 2 == 0 else -coords[0]
    root = _rational_sqrt(base)
    if root is None:
        return None
    return root * sign


def polarization_check(structure: RealizedHodgeStructure, form: PolarizationForm) -> PolarizationResult:
    """Decide whether the rational form polarizes the realized structure."""
    if structure.decomposition is None:
        structure = realize_and_validate(structure)
    if form.matrix.nrows != structure.dim:
        raise ValueError("form size does not match the structure dimension")
    if form.weight != structure.weight:
        raise ValueError("form weight does not match the structure weight")
    field = structure.field
    n = structure.weight
    s = form.matrix
    pieces = structure.decomposition

    # Morphism condition: S pairs (p, q) only with (n-p, n-q).
    for (p, q), basis_a in sorted(pieces.items(), reverse=True):
        for (pp, qq), basis_b in sorted(pieces.items(), reverse=True):
            if (pp, qq) == (n - p, n - q):
                continue
            for u in basis_a:
                for w in basis_b:
                    value = _bilinear(field, s, u, w)
                    if not field.is_zero(value):
                        return PolarizationResult(
                            status="morphism_fails",
                            detail=(
                                f"S does not vanish on H^{p},{q} x H^{pp},{qq} "
                                f"(value {value!r})"
                            ),
                        )

    conj = field.conj
    for (p, q), basis in sorted(pieces.items(), reverse=True):
        parity = (p - q) % 4
        ortho = []
        deltas = []
        for v in basis:
            u = list(v)
            for w, delta in zip(ortho, deltas):
                c = _bilinear(field, s, v, tuple(conj(x) for x in w)) / delta
                u = [a - c * b for a, b in zip(u, w)]
            u = tuple(u)
            delta = _bilinear(field, s, u, tuple(conj(x) for x in u))
            if field.is_zero(delta):
                return PolarizationResult(
                    status="positivity_fails",
                    detail=f"the hermitian form is degenerate on H^{p},{q}",
                    witness=Fraction(0),
                )
            ortho.append(u)
            deltas.append(delta)
        for delta in deltas:
            if field is QQ or not hasattr(field, "sign_imag"):
                # Rational scalars: delta is a rational number, weight even.
                value = delta if parity == 0 else -delta
                sign = 1 if value > 0 else -1
            else:
                check = field.conj(delta)
                expected = delta if n % 2 == 0 else -delta
                if check != expected:
                    raise AssertionError("conj(delta) != (-1)^n delta; corrupted state")
                if parity == 0:
                    sign = field.sign_real(delta)
                elif parity == 1:
                    sign = -field.sign_imag(delta)
                elif parity == 2:
                    sign = -field.sign_real(delta)
                else:
                    sign = field.sign_imag(delta)
            if sign <= 0:
                witness = _hermitian_witness(field, delta, parity, sign)
                return PolarizationResult(
                    status="positivity_fails",
                    detail=(
                        f"i^({p}-{q}) S(w, conj w) is not positive on H^{p},{q} "
                        f"(value {witness if witness is not None else repr(delta)})"
                    ),
                    witness=witness,
                )
    return PolarizationResult(status="valid")
