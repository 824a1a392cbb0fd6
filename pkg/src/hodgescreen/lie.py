"""Matrix Lie algebras over Q and adjoint actions of diagonal cocharacters.

An algebra is handed around as an explicit basis of N x N rational
matrices.  Construction re-verifies what the classical constructors
guarantee by design: the basis is linearly independent and closed under
the commutator.  Arbitrary user-supplied bases are accepted on the same
terms; nothing downstream assumes semisimplicity or a classical shape.

The classical families are built as kernel problems.  For a symmetric or
antisymmetric invertible form J,

    so(J) / sp(J) = { X : X^T J + J X = 0 }

is the kernel of an explicit N^2 x N^2 rational matrix; the similitude
versions gsp / go append the scalar matrices.  Default forms are the
antidiagonal ones (+1 antidiagonal for the orthogonal family, +1/-1 split
for the symplectic family), which make diagonal cocharacters with
mirror-symmetric weights land in the normalizer.

The adjoint operator of diag(lambda) needs no matrix products at all:
[diag(lambda), X]_{ij} = (lambda_i - lambda_j) X_{ij}.  Its matrix in the
given basis is assembled column by column through exact span membership;
a bracket falling outside the span raises NormalizationError, which is
the precise meaning of "lambda is not a cocharacter of this group".

Internally the hot paths (closure checking, membership) run on sparse
{position: Fraction} vectors because classical bases have one or two
nonzero entries per element; the public containers stay dense
ExactMatrix objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BracketClosureError, NormalizationError
from .fields import QQ, parse_rational
from .linalg import ExactMatrix, kernel_basis

CLASSICAL_KINDS = ("gl", "sl", "so", "sp", "gsp", "go", "diag_torus")


def _to_sparse(m: ExactMatrix) -> dict:
    out = {}
    for i, row in enumerate(m.rows):
        for j, v in enumerate(row):
            if v != 0:
                out[(i, j)] = v
    return out


def _sparse_to_matrix(sp: dict, n: int) -> ExactMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in sp.items():
        rows[i][j] = v
    return ExactMatrix(QQ, rows)


def _sparse_mul(a: dict, b_by_row: dict) -> dict:
    out = {}
    for (i, k), va in a.items():
        for j, vb in b_by_row.get(k, ()):
            key = (i, j)
            s = out.get(key, 0) + va * vb
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _rows_of(sp: dict) -> dict:
    by_row = {}
    for (i, j), v in sp.items():
        by_row.setdefault(i, []).append((j, v))
    return by_row


def sparse_bracket(a: dict, b: dict) -> dict:
    ab = _sparse_mul(a, _rows_of(b))
    ba = _sparse_mul(b, _rows_of(a))
    for key, v in ba.items():
        s = ab.get(key, 0) - v
        if s == 0:
            ab.pop(key, None)
        else:
            ab[key] = s
    return ab


def bracket_matrices(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """[a, b] = ab - ba for dense rational matrices."""
    return a * b - b * a


class _SpanReducer:
    """Incremental echelon form over Q for sparse matrix-shaped vectors,
    with bookkeeping so membership also yields coordinates in the
    original generating set."""

    def __init__(self):
        self.rows = []  # (pivot_key, row_dict, shadow_dict), insertion order

    def reduce(self, vec: dict):
        """Return (residual, coords) with vec = residual + sum coords[l] * gen_l."""
        v = dict(vec)
        coords = {}
        for pivot, row, shadow in self.rows:
            c = v.get(pivot)
            if not c:
                continue
            for key, rv in row.items():
                s = v.get(key, 0) - c * rv
                if s == 0:
                    v.pop(key, None)
                else:
                    v[key] = s
            for l, sv in shadow.items():
                s = coords.get(l, 0) + c * sv
                if s == 0:
                    coords.pop(l, None)
                else:
                    coords[l] = s
        return v, coords

    def insert(self, index: int, vec: dict) -> bool:
        """Insert generator number `index`; False when it is dependent."""
        residual, coords = self.reduce(vec)
        if not residual:
            return False
        pivot = min(residual)
        pv = residual[pivot]
        row = {k: v / pv for k, v in residual.items()}
        shadow = {l: -v / pv for l, v in coords.items()}
        shadow[index] = shadow.get(index, 0) + 1 / pv
        self.rows.append((pivot, row, shadow))
        return True


class MatLieAlgebra:
    """A Lie algebra given by an explicit matrix basis over Q."""

    def __init__(self, ambient_dim: int, basis, name: str = "user"):
        self.ambient_dim = int(ambient_dim)
        self.name = name
        self.basis = tuple(
            b if isinstance(b, ExactMatrix) else ExactMatrix(QQ, b) for b in basis
        )
        for b in self.basis:
            if b.shape != (self.ambient_dim, self.ambient_dim):
                raise ValueError(
                    f"basis matrix of shape {b.shape} in ambient dimension {self.ambient_dim}"
                )
        self._sparse = [_to_sparse(b) for b in self.basis]
        self._reducer = _SpanReducer()
        for idx, sp in enumerate(self._sparse):
            if not self._reducer.insert(idx, sp):
                raise ValueError(f"basis is linearly dependent (element {idx})")
        self._verify_closure()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _verify_closure(self):
        for i in range(self.dim):
            rows_i = _rows_of(self._sparse[i])
            for j in range(i + 1, self.dim):
                ab = _sparse_mul(self._sparse[j], rows_i)  # b_j b_i
                ba = _sparse_mul(self._sparse[i], _rows_of(self._sparse[j]))  # b_i b_j
                for key, v in ab.items():
                    s = ba.get(key, 0) - v
                    if s == 0:
                        ba.pop(key, None)
                    else:
                        ba[key] = s
                if not ba:
                    continue
                residual, _ = self._reducer.reduce(ba)
                if residual:
                    raise BracketClosureError(i, j)

    def coordinates(self, m):
        """Coordinates of a matrix in this basis, or None when outside."""
        sp = _to_sparse(m) if isinstance(m, ExactMatrix) else dict(m)
        residual, coords = self._reducer.reduce(sp)
        if residual:
            return None
        return tuple(coords.get(l, Fraction(0)) for l in range(self.dim))

    def contains(self, m) -> bool:
        return self.coordinates(m) is not None

    def __repr__(self):
        return f"MatLieAlgebra({self.name}, ambient={self.ambient_dim}, dim={self.dim})"


def _unit(n: int, i: int, j: int) -> dict:
    return {(i, j): Fraction(1)}


def _default_form(kind: str, n: int) -> ExactMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if kind in ("so", "go"):
            rows[i][n - 1 - i] = Fraction(1)
        else:
            rows[i][n - 1 - i] = Fraction(1) if i < n // 2 else Fraction(-1)
    return ExactMatrix(QQ, rows)


def _form_matrix(form, n: int) -> ExactMatrix:
    m = form if isinstance(form, ExactMatrix) else ExactMatrix(
        QQ, [[parse_rational(x) for x in row] for row in form]
    )
    if m.shape != (n, n):
        raise ValueError(f"form must be {n} x {n}")
    return m


def make_classical(kind: str, n: int, form=None) -> MatLieAlgebra:
    """Construct a classical algebra inside gl_n.

    INPUT: kind in gl / sl / so / sp / gsp / go / diag_torus; ambient
    dimension n; optional bilinear form for the four form-preserving
    kinds (defaults to the antidiagonal ones).

    OUTPUT: the full solution space of the defining linear conditions,
    with scalars appended for the similitude kinds.
    """
    if kind not in CLASSICAL_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {CLASSICAL_KINDS}")
    if n < 1:
        raise ValueError("ambient dimension must be positive")
    if kind in ("gl", "sl", "diag_torus"):
        if form is not None:
            raise ValueError(f"kind {kind!r} does not take a form")
        if kind == "gl":
            basis = [_unit(n, i, j) for i in range(n) for j in range(n)]
        elif kind == "diag_torus":
            basis = [_unit(n, i, i) for i in range(n)]
        else:
            basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
            for i in range(n - 1):
                basis.append({(i, i): Fraction(1), (n - 1, n - 1): Fraction(-1)})
        mats = [_sparse_to_matrix(sp, n) for sp in basis]
        return MatLieAlgebra(n, mats, name=f"{kind}({n})")

    if kind in ("sp", "gsp") and n % 2 != 0 and form is None:
        raise ValueError("symplectic kinds need even ambient dimension")
    j = _form_matrix(form, n) if form is not None else _default_form(kind, n)
    jt = j.transpose()
    want_symmetric = kind in ("so", "go")
    if want_symmetric and jt != j:
        raise ValueError("orthogonal kinds need a symmetric form")
    if not want_symmetric and jt != -j:
        raise ValueError("symplectic kinds need an antisymmetric form")
    from .linalg import rank as _rank

    if _rank(j) != n:
        raise ValueError("form must be invertible")

    # X |-> X^T J + J X as an n^2 x n^2 matrix acting on flattened X.
    zero = Fraction(0)
    rows = [[zero] * (n * n) for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            col = a * n + b
            for jj in range(n):
                rows[b * n + jj][col] += j.rows[a][jj]  # (E_ba J)_{b, jj}
            for ii in range(n):
                rows[ii * n + b][col] += j.rows[ii][a]  # (J E_ab)_{ii, b}
    condition = ExactMatrix(QQ, rows)
    mats = []
    for v in kernel_basis(condition):
        mats.append(ExactMatrix(QQ, [[v[i * n + jj] for jj in range(n)] for i in range(n)]))
    base_kind = "so" if want_symmetric else "sp"
    if kind in ("gsp", "go"):
        mats.append(ExactMatrix.identity(QQ, n))
        return MatLieAlgebra(n, mats, name=f"{kind}({n})")
    return MatLieAlgebra(n, mats, name=f"{base_kind}({n})")


def direct_sum(a: MatLieAlgebra, b: MatLieAlgebra) -> MatLieAlgebra:
    """Block-diagonal sum acting on the direct sum of the ambient spaces."""
    n = a.ambient_dim + b.ambient_dim
    mats = []
    for m in a.basis:
        sp = {(i, j): v for (i, j), v in _to_sparse(m).items()}
        mats.append(_sparse_to_matrix(sp, n))
    off = a.ambient_dim
    for m in b.basis:
        sp = {(i + off, j + off): v for (i, j), v in _to_sparse(m).items()}
        mats.append(_sparse_to_matrix(sp, n))
    return MatLieAlgebra(n, mats, name=f"{a.name}+{b.name}")


@dataclass(frozen=True)
class AdjointOperator:
    """Matrix of ad(diag(lambda)) in the algebra's own basis."""

    algebra: MatLieAlgebra
    weights: tuple
    matrix: ExactMatrix


def adjoint_of_diagonal(algebra: MatLieAlgebra, lam) -> AdjointOperator:
    """ad(diag(lambda)) on the algebra, or NormalizationError when
    diag(lambda) does not normalize it.

    Column j of the matrix holds the basis coordinates of
    [diag(lambda), basis[j]].
    """
    weights = tuple(parse_rational(x) for x in lam)
    if len(weights) != algebra.ambient_dim:
        raise ValueError(
            f"lambda has length {len(weights)}, ambient dimension is {algebra.ambient_dim}"
        )
    columns = []
    for idx, sp in enumerate(algebra._sparse):
        bracket = {}
        for (i, j), v in sp.items():
            w = weights[i] - weights[j]
            if w != 0:
                bracket[(i, j)] = w * v
        residual, coords = algebra._reducer.reduce(bracket)
        if residual:
            raise NormalizationError(idx)
        columns.append(tuple(coords.get(l, Fraction(0)) for l in range(algebra.dim)))
    matrix = ExactMatrix.from_columns(QQ, columns, nrows=algebra.dim)
    return AdjointOperator(algebra=algebra, weights=weights, matrix=matrix)
