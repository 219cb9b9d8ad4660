"""Genus-1 quartic models S^2 = q(R) and their Weierstrass reductions.

A :class:`QuarticModel` is a squarefree polynomial q of degree 3 or 4
together with a rational base point on the curve S^2 = q(R).  Once the
base point is translated to R = 0 (so q(0) = s0^2), the curve carries a
classical birational map to the short Weierstrass model

    Y^2 = X^3 - 27*I*X - 27*J

built from the invariants (I, J) of q.  With q = q4 R^4 + ... + q0 and
s0^2 = q0, the map is assembled in two stages.  First the standard
rational-base-point transformation

    x = (2 s0 (S + s0) + q1 R) / R^2
    y = (4 q0 (S + s0) + 2 s0 q1 R + (2 s0 q2 - q1^2 / (2 s0)) R^2) / R^3

lands on a general cubic model; then the linear change

    X = 9 x + 3 q2
    Y = 27 y + (27/2) (q1 / s0) x + 27 q3 s0

absorbs the remaining a1, a2, a3 terms and scales straight onto the
(-27 I, -27 J) model.  The inverse is obtained by running the same two
stages backwards.  Both directions are exact and mutually inverse away
from the finitely many exceptional points (the base point, its image, and
the Y = 0 fibre of the inverse).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .curves import Point, WeierstrassCurve
from .errors import (
    DegenerateDoublingError,
    InfiniteOrderRequiredError,
    NonGenusOneError,
)
from .polynomials import UniPoly, quartic_discriminant, quartic_invariants

ModelPoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class QuarticModel:
    """S^2 = q(R) with a designated rational point.

    The polynomial must have degree 3 or 4 and a nonzero discriminant
    (otherwise the curve is not a smooth genus-1 model), and the base
    point has to satisfy the equation exactly.
    """

    q: UniPoly
    base_point: ModelPoint

    def __post_init__(self) -> None:
        if self.q.degree not in (3, 4):
            raise NonGenusOneError(
                f"quartic model needs degree 3 or 4, got degree {self.q.degree}"
            )
        if quartic_discriminant(self.q) == 0:
            raise NonGenusOneError("quartic has a repeated root: model is singular")
        r0, s0 = self.base_point
        if s0 * s0 != self.q(r0):
            raise ValueError(f"base point {self.base_point} does not lie on the model")

    def contains(self, point: ModelPoint) -> bool:
        r, s = point
        return s * s == self.q(r)


@dataclass(frozen=True)
class BirationalMap:
    """Mutually inverse exact maps between a quartic model and its curve.

    ``forward`` sends the model's base point to the identity; ``inverse``
    returns ``None`` on the finitely many exceptional curve points (the
    identity and the fibre where its denominator vanishes).
    """

    model: QuarticModel
    curve: WeierstrassCurve
    forward: Callable[[ModelPoint], Point]
    inverse: Callable[[Point], Optional[ModelPoint]]


def translate_base(model: QuarticModel) -> QuarticModel:
    """Shift the variable so the base point moves to R = 0.

    Returns an equivalent model with q_new(R) = q(R + r0) and base point
    (0, s0); a model already based at zero is returned unchanged.
    """
    r0, s0 = model.base_point
    if r0 == 0:
        return model
    return QuarticModel(model.q.shift(r0), (Fraction(0), s0))


def to_weierstrass(model: QuarticModel) -> BirationalMap:
    """Construct the birational map onto Y^2 = X^3 - 27 I X - 27 J.

    Requires the base point at R = 0 (apply :func:`translate_base` first)
    with nonzero S-coordinate; a base point with s0 = 0 sits at a
    ramification point where this transformation degenerates, and no
    construction in this package needs that case.
    """
    r0, s0 = model.base_point
    if r0 != 0:
        raise ValueError("base point must sit at R = 0; call translate_base first")
    if s0 == 0:
        raise NonGenusOneError(
            "base point with S = 0 is a branch point; the standard map "
            "requires s0 != 0"
        )
    q = model.q
    q0, q1, q2, q3 = (q.coefficient(i) for i in range(4))
    inv_i, inv_j = quartic_invariants(q)
    curve = WeierstrassCurve(-27 * inv_i, -27 * inv_j)
    half_q1_over_s0 = q1 / (2 * s0)

    def forward(point: ModelPoint) -> Point:
        r, s = point
        if not model.contains(point):
            raise ValueError(f"point {point} is not on the model")
        if r == 0:
            if s == s0:
                return None  # the base point is the identity
            # the conjugate point (0, -s0); the limit of the generic
            # formulas along the curve stays finite:
            x = (q1 * q1 - 4 * q0 * q2) / (4 * q0)
            y = -(q1 ** 3 - 4 * q0 * q1 * q2 + 8 * q0 * q0 * q3) / (4 * q0 * s0)
        else:
            x = (2 * s0 * (s + s0) + q1 * r) / (r * r)
            y = (
                4 * q0 * (s + s0)
                + 2 * s0 * q1 * r
                + (2 * s0 * q2 - q1 * half_q1_over_s0) * r * r
            ) / (r ** 3)
        return (9 * x + 3 * q2, 27 * y + 27 * half_q1_over_s0 * x + 27 * q3 * s0)

    def inverse(point: Point) -> Optional[ModelPoint]:
        if point is None:
            return None
        big_x, big_y = point
        x = (big_x - 3 * q2) / 9
        y = (big_y - 27 * half_q1_over_s0 * x - 27 * q3 * s0) / 27
        if y == 0:
            return None  # pole of the inverse map
        r = (4 * q0 * x + 4 * q0 * q2 - q1 * q1) / (2 * s0 * y)
        if r == 0:
            return (Fraction(0), -s0)
        s = (x * r * r - q1 * r - 2 * q0) / (2 * s0)
        return (r, s)

    return BirationalMap(model=model, curve=curve, forward=forward, inverse=inverse)


def double_via_parabola(model: QuarticModel, point: ModelPoint) -> ModelPoint:
    """Double a point by intersecting with an osculating parabola.

    Fits S = a1 R^2 + b1 R + c1 meeting the model at ``point`` with
    multiplicity three (a tangent line with multiplicity two when q is a
    cubic) and returns the residual intersection.  Substituting the
    parabola into S^2 = q(R) leaves a quartic whose known triple root can
    be divided out, so the residual root falls out of the coefficient sums
    -- no root finding involved.
    """
    if not model.contains(point):
        raise ValueError(f"point {point} is not on the model")
    r, s = point
    if s == 0:
        raise DegenerateDoublingError("cannot double a 2-division point (S = 0)")
    q = model.q
    qd = q.derivative()
    g1 = qd(r) / (2 * s)
    if q.degree == 3:
        # tangent line S = b1 R + c1; the difference q - line^2 is a cubic
        # with a double root at r, so Vieta yields the third root.
        q2, q3 = q.coefficient(2), q.coefficient(3)
        b1 = g1
        c1 = s - b1 * r
        residual_r = (b1 * b1 - q2) / q3 - 2 * r
        return (residual_r, b1 * residual_r + c1)
    qdd = qd.derivative()
    a1 = (qdd(r) - 2 * g1 * g1) / (4 * s)
    b1 = g1 - 2 * a1 * r
    c1 = s - a1 * r * r - b1 * r
    lead = a1 * a1 - q.coefficient(4)
    if lead == 0:
        raise DegenerateDoublingError(
            "parabola matches the quartic's leading behaviour: residual "
            "point escapes to infinity"
        )
    residual_r = -(2 * a1 * b1 - q.coefficient(3)) / lead - 3 * r
    return (residual_r, a1 * residual_r * residual_r + b1 * residual_r + c1)


def multiples(
    model: QuarticModel, seed_point: ModelPoint, k: int
) -> List[Tuple[int, ModelPoint]]:
    """Pull back the first k usable multiples of a seed point's image.

    Maps ``seed_point`` to the Weierstrass model, walks the multiples
    [m]P for m = 1, 2, ..., and pulls each back to the quartic.  Multiples
    that land on the identity or on a pole of the inverse map are skipped;
    the returned list therefore carries the multiple index with each point
    so callers can record the gaps.  A seed of finite order would cycle
    through the same handful of points forever, so it is rejected.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if seed_point == model.base_point:
        raise ValueError("seed coincides with the base point (maps to identity)")
    bmap = to_weierstrass(translate_base(model))
    shift = model.base_point[0]
    image = bmap.forward((seed_point[0] - shift, seed_point[1]))
    if bmap.curve.is_torsion(image):
        raise InfiniteOrderRequiredError(
            "seed point has finite order: it cannot generate infinitely "
            "many distinct multiples"
        )
    out: List[Tuple[int, ModelPoint]] = []
    m = 0
    while len(out) < k:
        m += 1
        back = bmap.inverse(bmap.curve.scalar_mul(m, image))
        if back is None:
            continue
        out.append((m, (back[0] + shift, back[1])))
    return out
