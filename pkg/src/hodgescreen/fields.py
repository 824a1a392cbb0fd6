"""Exact scalar fields: the rationals and number fields Q(theta).

The scalar tower available to the rest of the package is fixed:

    Q  <  Q(theta)  <  Q(theta)(t_1, ..., t_k)

This module provides the first two floors.  Q is `fractions.Fraction`
behind a small field object (QQ); a number field is described by a monic
irreducible minimal polynomial together with an isolating rectangle that
designates one complex embedding.  Irreducibility is verified at
construction (composite input is rejected, never silently factored), and
the rectangle is certified to isolate exactly one root by the interval
Newton operator from `intervals`.

Elements are coordinate vectors in the power basis 1, theta, ...,
theta^(d-1).  Arithmetic is exact; only sign determination under the
designated embedding touches intervals, and it refines the enclosure of
theta on demand within an explicit budget (PrecisionExhausted beyond).

A field may carry a conjugation automorphism sigma, given by the image of
theta.  Construction checks both that sigma(theta) is a root of the
minimal polynomial (so sigma is a field automorphism) and that under the
designated embedding sigma really is complex conjugation: the enclosure of
sigma(theta) is refined until it lands inside the mirror image of the
isolating rectangle, which pins it to the unique root conj(theta) living
there.  Both checks are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PrecisionExhausted
from .intervals import Interval, Rectangle, certify_isolating, newton_step, poly_derivative

_SIGN_BUDGET = 96


def parse_rational(value) -> Fraction:
    """Fraction from an int, Fraction, or a string like '-3/2'."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a rational number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read a rational from {value!r}")


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(a, b):
    """Quotient and remainder in Q[x]; coefficient lists ascending."""
    a = _strip(a)
    b = _strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a
    inv_lead = 1 / b[-1]
    while r and len(r) >= len(b):
        shift = len(r) - len(b)
        factor = r[-1] * inv_lead
        q[shift] = factor
        for i, bi in enumerate(b):
            r[shift + i] -= factor * bi
        r = _strip(r)
    return q, r


def _poly_xgcd(a, b):
    """Extended Euclid in Q[x]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = _strip(a), _strip(b)
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1))
    return r0, u0, v0


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _strip(out)


def _poly_sub(a, b):
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return _strip(out)


def _is_irreducible_over_q(coeffs) -> bool:
    # Factorization is out of scope for this package; the one yes/no
    # question we need is answered by sympy.
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(coeffs))
    return sympy.Poly(expr, x, domain="QQ").is_irreducible


class RationalField:
    """The field Q, with Fraction elements."""

    degree = 1

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        return parse_rational(value)

    def is_zero(self, x) -> bool:
        return x == 0

    def size(self, x) -> int:
        return x.numerator.bit_length() + x.denominator.bit_length()

    def conj(self, x):
        return x

    @property
    def has_conjugation(self) -> bool:
        return True

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()


class NumberFieldElement:
    """Element of Q(theta) as a power-basis coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(coords)

    def _check_same(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("elements of different number fields")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        other = self._check_same(other)
        return NumberFieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check_same(other))

    def __rsub__(self, other):
        return self._check_same(other) - self

    def __mul__(self, other):
        other = self._check_same(other)
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b != 0:
                    prod[i + j] += a * b
        return NumberFieldElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, u, _ = _poly_xgcd(list(self.coords), list(self.field.minpoly))
        # g is a nonzero constant because the minimal polynomial is irreducible.
        scale = 1 / g[0]
        coords = [c * scale for c in u]
        coords += [Fraction(0)] * (self.field.degree - len(coords))
        return NumberFieldElement(self.field, tuple(coords[: self.field.degree]))

    def __truediv__(self, other):
        return self * self._check_same(other).inverse()

    def __rtruediv__(self, other):
        return self._check_same(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._check_same(other)
        except TypeError:
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self):
        return any(c != 0 for c in self.coords)

    def __hash__(self):
        return hash((self.field.minpoly, self.coords))

    def __repr__(self):
        name = self.field.name
        terms = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = name if k == 1 else f"{name}^{k}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{c}*{power}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


class NumberField:
    """Q(theta) for theta a root of a monic irreducible polynomial,
    singled out by a certified isolating rectangle."""

    def __init__(self, minpoly, embedding: Rectangle, name: str = "theta",
                 conjugate_image=None):
        coeffs = tuple(parse_rational(c) for c in minpoly)
        coeffs = tuple(_strip(list(coeffs)))
        if len(coeffs) < 3:
            raise ValueError("number field degree must be at least 2; use QQ for degree 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if not _is_irreducible_over_q(coeffs):
            raise ValueError("minimal polynomial is not irreducible over Q; "
                             "composite input is rejected")
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.name = name
        self._initial_rect = embedding
        self._rect = certify_isolating(coeffs, embedding)
        self._deriv = poly_derivative(coeffs)
        self._powers = self._power_table()
        self._conj_image = None
        if conjugate_image is not None:
            sigma_theta = self.element(conjugate_image)
            self._install_conjugation(sigma_theta)

    def _power_table(self):
        d = self.degree
        powers = []
        current = [Fraction(0)] * d
        current[0] = Fraction(1)
        for _ in range(2 * d - 1):
            powers.append(tuple(current))
            current = [Fraction(0)] + current
            if len(current) > d:
                lead = current[d]
                if lead != 0:
                    for i in range(d):
                        current[i] -= lead * self.minpoly[i]
                current = current[:d]
        return powers

    def _reduce(self, prod):
        d = self.degree
        out = list(prod[:d]) + [Fraction(0)] * max(0, d - len(prod))
        for k in range(d, len(prod)):
            c = prod[k]
            if c == 0:
                continue
            for i, p in enumerate(self._powers[k]):
                out[i] += c * p
        return tuple(out[:d])

    def _install_conjugation(self, sigma_theta: NumberFieldElement):
        # sigma must send theta to another root of the minimal polynomial.
        value = self.zero()
        for k, c in enumerate(self.minpoly):
            value = value + c * sigma_theta**k
        if value:
            raise ValueError("conjugate_image is not a root of the minimal polynomial")
        # Under the embedding, sigma(theta) must be conj(theta).  The mirror
        # of the isolating rectangle isolates conj(theta) (real coefficients),
        # so landing the enclosure of sigma(theta) inside the mirror is an
        # exact proof.  Separation is an exact disproof.
        self._conj_image = sigma_theta
        mirror = self._rect.conj()
        for _ in range(_SIGN_BUDGET):
            enclosure = self._enclose_coords(sigma_theta.coords)
            if enclosure.re.hi < mirror.re.lo or enclosure.re.lo > mirror.re.hi or \
               enclosure.im.hi < mirror.im.lo or enclosure.im.lo > mirror.im.hi:
                self._conj_image = None
                raise ValueError("conjugate_image does not realize complex conjugation "
                                 "under the designated embedding")
            if enclosure.re.lo >= mirror.re.lo and enclosure.re.hi <= mirror.re.hi and \
               enclosure.im.lo >= mirror.im.lo and enclosure.im.hi <= mirror.im.hi:
                return
            self._refine()
        self._conj_image = None
        raise PrecisionExhausted("could not verify the conjugation automorphism "
                                 "within the refinement budget")

    # -- field protocol ----------------------------------------------------

    def zero(self):
        return NumberFieldElement(self, (Fraction(0),) * self.degree)

    def one(self):
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(1)
        return NumberFieldElement(self, tuple(coords))

    def gen(self):
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return NumberFieldElement(self, tuple(coords))

    def element(self, coords):
        coords = [parse_rational(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("coordinate vector longer than the field degree")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NumberFieldElement(self, tuple(coords))

    def coerce(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise TypeError("element of a different number field")
            return value
        q = parse_rational(value)
        coords = [Fraction(0)] * self.degree
        coords[0] = q
        return NumberFieldElement(self, tuple(coords))

    def is_zero(self, x) -> bool:
        return not x

    def size(self, x) -> int:
        return sum(c.numerator.bit_length() + c.denominator.bit_length() for c in x.coords)

    @property
    def has_conjugation(self) -> bool:
        return self._conj_image is not None

    def conj(self, x: NumberFieldElement) -> NumberFieldElement:
        if self._conj_image is None:
            raise ValueError("this number field carries no conjugation automorphism")
        result = self.zero()
        power = self.one()
        for c in x.coords:
            if c != 0:
                result = result + c * power
            power = power * self._conj_image
        return result

    # -- embedding and signs -------------------------------------------------

    def _refine(self):
        refined, _ = newton_step(self.minpoly, self._deriv, self._rect)
        self._rect = refined

    def _enclose_coords(self, coords) -> Rectangle:
        acc = Rectangle.point(0)
        for c in reversed(coords):
            acc = acc * self._rect + Rectangle.point(c)
        return acc

    def enclosure(self, x: NumberFieldElement) -> Rectangle:
        return self._enclose_coords(x.coords)

    def _sign_of(self, x: NumberFieldElement, component: str) -> int:
        """Sign of the real or imaginary part of x under the embedding.

        Exact zero is decided algebraically first whenever a conjugation
        automorphism is available (Re x = 0 iff sigma(x) = -x, etc.), so
        the interval loop only ever runs on a provably nonzero target.
        """
        if not x:
            return 0
        if self._conj_image is not None:
            sigma_x = self.conj(x)
            if component == "re" and sigma_x == -x:
                return 0
            if component == "im" and sigma_x == x:
                return 0
        for _ in range(_SIGN_BUDGET):
            box = self.enclosure(x)
            iv = box.re if component == "re" else box.im
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            self._refine()
        raise PrecisionExhausted(
            f"sign of {component}({x!r}) undecided after {_SIGN_BUDGET} refinements"
        )

    def sign_real(self, x: NumberFieldElement) -> int:
        return self._sign_of(x, "re")

    def sign_imag(self, x: NumberFieldElement) -> int:
        return self._sign_of(x, "im")

    def __repr__(self):
        return f"QQ({self.name})"

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.minpoly == other.minpoly
            and self._initial_rect == other._initial_rect
        )

    def __hash__(self):
        return hash((self.minpoly, self._initial_rect.re.lo, self._initial_rect.re.hi))


def gaussian_field(name: str = "i") -> NumberField:
    """Q(i) with the upper-half-plane embedding and its conjugation."""
    return NumberField(
        minpoly=(1, 0, 1),
        embedding=Rectangle(
            Interval(Fraction(-1, 2), Fraction(1, 2)),
            Interval(Fraction(1, 2), Fraction(3, 2)),
        ),
        name=name,
        conjugate_image=(0, -1),
    )
