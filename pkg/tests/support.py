"""Shared generators and independent oracles for the test suite.

The oracles deliberately take different computational routes from the
package: grading dimensions come from sympy's characteristic-polynomial
eigenvalue multiplicities instead of kernel ranks, and transcendence
degrees come from elimination (resultant cascade with a Groebner
fallback) instead of Jacobian ranks.
"""

from fractions import Fraction

import sympy

from hodgescreen import (
    ExactMatrix,
    FlagPoint,
    FunctionField,
    HodgeNumbers,
    QQ,
    make_classical,
    normalize_chart,
)

FORM_KINDS = ("so", "sp", "gsp", "go")


# -- random classical instances ---------------------------------------------------

def random_classical_instance(rng, max_ambient=8):
    """(algebra, lambda) with diag(lambda) guaranteed to normalize.

    Form-preserving kinds get mirror-symmetric weights
    (lambda_i + lambda_{n+1-i} constant), which keeps diag(lambda) inside
    the similitude normalizer for the default antidiagonal forms.
    """
    kind = rng.choice(("gl", "sl", "so", "sp", "gsp", "go", "diag_torus"))
    if kind in ("gl", "sl"):
        n = rng.randint(2, min(6, max_ambient))
        lam = [rng.randint(-3, 3) for _ in range(n)]
    elif kind == "diag_torus":
        n = rng.randint(1, max_ambient)
        lam = [rng.randint(-4, 4) for _ in range(n)]
    else:
        n = rng.randint(2, max_ambient)
        if kind in ("sp", "gsp") and n % 2:
            n += 1
            n = min(n, max_ambient if max_ambient % 2 == 0 else max_ambient - 1)
        c = 2 * rng.randint(-2, 2)
        half = n // 2
        head = [rng.randint(-3, 3) for _ in range(half)]
        lam = head + ([c // 2] if n % 2 else []) + [c - h for h in reversed(head)]
    return make_classical(kind, n), tuple(lam)


# -- eigenvalue-multiplicity grading oracle ----------------------------------------

def brute_force_ad_matrix(algebra, lam):
    """Matrix of ad(diag(lambda)) assembled from dense commutators."""
    n = algebra.ambient_dim
    rows = [[Fraction(lam[i]) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]
    d_mat = ExactMatrix(QQ, rows)
    columns = []
    for b in algebra.basis:
        bracket = d_mat * b - b * d_mat
        coords = algebra.coordinates(bracket)
        if coords is None:
            raise AssertionError("oracle input: lambda does not normalize")
        columns.append(coords)
    dim = algebra.dim
    return sympy.Matrix(dim, dim, lambda i, j: sympy.Rational(columns[j][i]))


def oracle_levels(algebra, lam):
    """{k: dim g_k} via characteristic-polynomial multiplicities."""
    m = brute_force_ad_matrix(algebra, lam)
    out = {}
    for value, mult in m.eigenvals().items():
        k = sympy.nsimplify(value)
        if not (k.is_integer and k.is_number):
            raise AssertionError(f"non-integer adjoint eigenvalue {value}")
        out[int(k)] = out.get(int(k), 0) + int(mult)
    return {k: v for k, v in out.items() if v}


def oracle_flag_dim(algebra, lam):
    return sum(v for k, v in oracle_levels(algebra, lam).items() if k < 0)


def oracle_hcodim(algebra, lam):
    return sum(v for k, v in oracle_levels(algebra, lam).items() if k <= -2)


# -- elimination-based transcendence oracle -----------------------------------------

def poly_to_sympy(p, syms):
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exp):
            if e:
                term *= s ** e
        expr += term
    return expr


def _cleared(pairs, ys):
    return [sympy.expand(y * den - num) for y, (num, den) in zip(ys, pairs)]


def _resultant_cascade(polys, tsyms, ys):
    """Eliminate the t variables pairwise; a nonzero y-only survivor
    certifies dependence.  Returns True or None (inconclusive)."""
    current = list(polys)
    for t in tsyms:
        touched = [p for p in current if p.has(t)]
        rest = [p for p in current if not p.has(t)]
        if len(touched) <= 1:
            current = rest  # dropping loses information: fallback decides
            continue
        new = []
        for a, b in zip(touched, touched[1:]):
            new.append(sympy.resultant(a, b, t))
        current = rest + [p for p in new if p != 0]
    yset = set(ys)
    for p in current:
        if p != 0 and p.free_symbols and p.free_symbols <= yset:
            return True
    return None


def _dependent(pairs, tsyms):
    """Are the rational functions num/den algebraically dependent over Q?"""
    ys = tuple(sympy.Symbol(f"y{i}") for i in range(len(pairs)))
    polys = _cleared(pairs, ys)
    fast = _resultant_cascade(polys, tsyms, ys)
    if fast:
        return True
    dens = sympy.Integer(1)
    for _num, den in pairs:
        if den.free_symbols:
            dens *= den
    gens = list(tsyms) + list(ys)
    system = list(polys)
    if dens != 1:
        z = sympy.Symbol("zsat")
        system.append(sympy.expand(z * dens - 1))
        gens = [z] + gens
    basis = sympy.groebner(system, *gens, order="lex")
    yset = set(ys)
    for g in basis.exprs:
        if g.free_symbols and g.free_symbols <= yset:
            return True
    return False


def oracle_trdeg(flag):
    """Greedy independent-set size among the chart coordinates.

    Algebraic independence is a matroid, so the greedy scan is exact.
    """
    coords = normalize_chart(flag)
    names = flag.field.names
    if not names:
        return 0
    tsyms = tuple(sympy.Symbol(n) for n in names)
    chosen = []
    for rf in coords:
        if len(chosen) == len(tsyms):
            break
        num = poly_to_sympy(rf.num, tsyms)
        den = poly_to_sympy(rf.den, tsyms)
        if not (num / den).free_symbols:
            continue
        if not _dependent(chosen + [(num, den)], tsyms):
            chosen.append((num, den))
    return len(chosen)


# -- random flag points -------------------------------------------------------------

def random_poly_flag(rng, max_params=3, max_degree=3):
    """A single-step flag in pivot form: identity block on top, random
    polynomial entries below.  The chart coordinates are then exactly the
    lower-block entries, which keeps the elimination oracle fast while
    the Jacobian route still runs in full generality.

    The entry pool is dependency-rich on purpose: powers and products of
    a few seed polynomials drive the rank strictly below min(rows, k)
    often enough to exercise both sides of the comparison.
    """
    k = rng.randint(1, max_params)
    names = tuple(f"t{i + 1}" for i in range(k))
    field = FunctionField(QQ, names)
    gens = field.gens()

    def seed_poly():
        total = field.zero()
        for _ in range(rng.randint(1, 2)):
            term = field.coerce(Fraction(rng.choice((-2, -1, 1, 2, 3))))
            degree = rng.randint(0, max_degree)
            for _ in range(degree):
                term = term * rng.choice(gens)
            total = total + term
        return total

    pool = [seed_poly() for _ in range(3)]
    pool.append(pool[0] * pool[0])
    pool.append(pool[0] * pool[1])
    pool.append(field.coerce(Fraction(rng.randint(-3, 3))))

    s = rng.randint(1, 3)
    d = s + rng.randint(1, 3)
    vectors = []
    for col in range(s):
        entries = [field.one() if row == col else field.zero() for row in range(s)]
        for _row in range(s, d):
            choice = rng.choice(pool)
            if choice.num.total_degree() > max_degree:
                choice = pool[-1]
            entries.append(choice)
        vectors.append(tuple(entries))
    return FlagPoint(field, d, ((1, tuple(vectors)),))


def random_hodge_table(rng):
    """Conjugation-symmetric dimension table of a random weight."""
    weight = rng.randrange(-2, 5)
    dims = {}
    for _ in range(rng.randrange(1, 4)):
        p = rng.randrange(-3, weight + 4)
        h = rng.randrange(1, 4)
        dims[(p, weight - p)] = dims.get((p, weight - p), 0) + h
        if p != weight - p:
            dims[(weight - p, p)] = dims.get((weight - p, p), 0) + h
    return HodgeNumbers(weight, dims)
