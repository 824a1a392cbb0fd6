"""Exact rectangular complex interval arithmetic over the rationals.

Algebraic numbers are pinned down by an isolating rectangle with rational
corners.  All endpoint arithmetic uses `fractions.Fraction`, so enclosures
are exact: no outward rounding is ever needed.  Refinement is the interval
Newton operator

    N(R) = mid(R) - p(mid(R)) / p'(R)

applied with rectangle arithmetic.  When N(R) lands strictly inside R the
standard existence and uniqueness argument applies: R contains exactly one
(simple) root of p, and it lies in N(R).  That containment is what
certifies a user-supplied rectangle at field construction time, and the
same iteration later shrinks the rectangle whenever a sign decision needs
more precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionExhausted

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(cands), max(cands))

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(_ZERO, max(self.lo * self.lo, self.hi * self.hi))

    def divide(self, other) -> "Interval":
        """self / other, defined only when 0 is outside other."""
        if other.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        cands = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return Interval(min(cands), max(cands))

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def strictly_inside(self, other) -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other):
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) * _HALF

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned rectangle re + i*im in the complex plane."""

    re: Interval
    im: Interval

    @staticmethod
    def point(re, im=0) -> "Rectangle":
        return Rectangle(Interval.point(re), Interval.point(im))

    @staticmethod
    def from_corners(re_lo, re_hi, im_lo, im_hi) -> "Rectangle":
        return Rectangle(
            Interval(Fraction(re_lo), Fraction(re_hi)),
            Interval(Fraction(im_lo), Fraction(im_hi)),
        )

    def __add__(self, other):
        return Rectangle(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return Rectangle(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        # (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        return Rectangle(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "Rectangle":
        return Rectangle(self.re, -self.im)

    def abs_square(self) -> Interval:
        return self.re.square() + self.im.square()

    def divide(self, other) -> "Rectangle":
        denom = other.abs_square()
        num = self * other.conj()
        return Rectangle(num.re.divide(denom), num.im.divide(denom))

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def strictly_inside(self, other) -> bool:
        return self.re.strictly_inside(other.re) and self.im.strictly_inside(other.im)

    def intersect(self, other):
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        if re is None or im is None:
            return None
        return Rectangle(re, im)

    @property
    def mid(self) -> tuple:
        return (self.re.mid, self.im.mid)

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)


def eval_poly_rect(coeffs, rect: Rectangle) -> Rectangle:
    """Horner evaluation of sum(coeffs[k] * z^k) at a rectangle.

    coeffs are rational, ascending by degree.
    """
    acc = Rectangle.point(0)
    for c in reversed(coeffs):
        acc = acc * rect + Rectangle.point(c)
    return acc


def eval_poly_point(coeffs, re: Fraction, im: Fraction) -> tuple:
    """Exact Horner evaluation at the rational complex point re + i*im."""
    are, aim = _ZERO, _ZERO
    for c in reversed(coeffs):
        are, aim = are * re - aim * im + c, are * im + aim * re
    return are, aim


def poly_derivative(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs) if k > 0)


def newton_step(coeffs, deriv, rect: Rectangle):
    """One interval Newton step.

    Returns (refined_rectangle, certified) where certified means the step
    proved existence and uniqueness of a root in the original rectangle.
    Raises ZeroDivisionError when p'(rect) straddles zero (rectangle too
    coarse for Newton), and ValueError when the step empties the rectangle
    (no root at all).
    """
    mre, mim = rect.mid
    pre, pim = eval_poly_point(coeffs, mre, mim)
    dprect = eval_poly_rect(deriv, rect)
    quotient = Rectangle.point(pre, pim).divide(dprect)
    candidate = Rectangle.point(mre, mim) - quotient
    certified = candidate.strictly_inside(rect)
    refined = candidate.intersect(rect)
    if refined is None:
        raise ValueError("Newton step excludes the whole rectangle: no root inside")
    return refined, certified


def certify_isolating(coeffs, rect: Rectangle, rounds: int = 64) -> Rectangle:
    """Verify that rect isolates exactly one root of the polynomial.

    Iterates interval Newton until one step maps the rectangle strictly
    into itself, which proves the rectangle contains a unique simple root.
    Returns the refined rectangle.  Raises ValueError when the rectangle
    provably contains no root or is too coarse to certify within budget.
    """
    deriv = poly_derivative(coeffs)
    current = rect
    for _ in range(rounds):
        try:
            refined, certified = newton_step(coeffs, deriv, current)
        except ZeroDivisionError:
            raise ValueError(
                "cannot certify the isolating rectangle: derivative enclosure "
                "straddles zero (rectangle too coarse, or root not simple)"
            ) from None
        if certified:
            return refined
        if refined == current:
            break
        current = refined
    raise ValueError("cannot certify the isolating rectangle within the refinement budget")


def refine(coeffs, rect: Rectangle, max_width: Fraction, budget: int = 256) -> Rectangle:
    """Shrink a certified isolating rectangle below max_width."""
    deriv = poly_derivative(coeffs)
    current = rect
    for _ in range(budget):
        if current.width < max_width:
            return current
        refined, _ = newton_step(coeffs, deriv, current)
        if refined == current:  # pragma: no cover - stalls only on corrupted input
            raise PrecisionExhausted("interval refinement stalled")
        current = refined
    raise PrecisionExhausted(f"could not reach width {max_width} within budget {budget}")
