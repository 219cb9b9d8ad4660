"""Short Weierstrass curves over the rationals.

A curve is Y^2 = X^3 + A*X + B with exact rational coefficients; points are
either an (X, Y) pair of Fractions or ``None`` for the identity.  Exact
arithmetic makes the affine chord-and-tangent formulas both the simplest
and the safest representation -- there is no coordinate system to
normalize and equality of points is plain tuple equality.

Torsion testing uses the bounded-order theorem for rational points: a
rational point has finite order exactly when [m]P is the identity for some
m <= 12, so repeated addition decides the question.  (The classical
integrality criterion would need an integral model first; this test does
not.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DegenerateParameterError

Point = Optional[Tuple[Fraction, Fraction]]

# Largest order a rational point of finite order can have.
TORSION_BOUND = 12


@dataclass(frozen=True)
class WeierstrassCurve:
    """The curve Y^2 = X^3 + A*X + B; must be smooth."""

    A: Fraction
    B: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.discriminant() == 0:
            raise DegenerateParameterError(
                f"singular curve: discriminant of Y^2 = X^3 + ({self.A})X + "
                f"({self.B}) vanishes"
            )

    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def contains(self, point: Point) -> bool:
        if point is None:
            return True
        x, y = point
        return y * y == x ** 3 + self.A * x + self.B

    def negate(self, point: Point) -> Point:
        if point is None:
            return None
        x, y = point
        return (x, -y)

    def add(self, p: Point, q: Point) -> Point:
        """Chord-and-tangent addition with the identity at infinity.

        Both inputs must lie on the curve; feeding a stray pair in is a
        caller bug, so it raises rather than returning garbage.
        """
        if p is None:
            return q
        if q is None:
            return p
        if not self.contains(p) or not self.contains(q):
            raise ValueError("point is not on the curve")
        x1, y1 = p
        x2, y2 = q
        if x1 == x2:
            if y1 == -y2:
                return None
            # tangent line at a point with y != 0
            slope = (3 * x1 * x1 + self.A) / (2 * y1)
        else:
            slope = (y2 - y1) / (x2 - x1)
        x3 = slope * slope - x1 - x2
        return (x3, slope * (x1 - x3) - y1)

    def scalar_mul(self, k: int, point: Point) -> Point:
        """[k]P for any integer k, by binary double-and-add."""
        if k < 0:
            return self.scalar_mul(-k, self.negate(point))
        result: Point = None
        addend = point
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result

    def is_torsion(self, point: Point) -> bool:
        """True iff ``point`` has finite order.

        Sound and complete over the rationals: the order of a rational
        torsion point divides one of 1..10 or 12, so it suffices to walk
        the first TORSION_BOUND multiples and look for the identity.
        """
        current = point
        for _ in range(TORSION_BOUND):
            if current is None:
                return True
            current = self.add(current, point)
        return False
