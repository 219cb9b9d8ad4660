"""Tests for the quartic genus-1 models and their Weierstrass reductions."""

from fractions import Fraction

import pytest

from sigmasolve.errors import (
    DegenerateDoublingError,
    InfiniteOrderRequiredError,
    NonGenusOneError,
)
from sigmasolve.polynomials import UniPoly
from sigmasolve.quartic import (
    QuarticModel,
    double_via_parabola,
    multiples,
    to_weierstrass,
    translate_base,
)

F = Fraction

# S^2 = 9 P^4 + 6 P^3 + P^2 + 1 with the obvious point above P = 0.
QUARTIC_DEG4 = UniPoly([F(1), F(0), F(1), F(6), F(9)])
MODEL_DEG4 = QuarticModel(QUARTIC_DEG4, (F(0), F(1)))

# S^2 = R^3 - 2 with the classic point (3, 5); translated it becomes
# S^2 = R^3 + 9 R^2 + 27 R + 25 based at (0, 5).
MODEL_DEG3 = QuarticModel(UniPoly([F(-2), F(0), F(0), F(1)]), (F(3), F(5)))


def test_model_rejects_wrong_degree():
    with pytest.raises(NonGenusOneError):
        QuarticModel(UniPoly([F(1), F(0), F(1)]), (F(0), F(1)))
    with pytest.raises(NonGenusOneError):
        QuarticModel(UniPoly([F(1), F(0), F(0), F(0), F(0), F(1)]), (F(0), F(1)))


def test_model_rejects_singular_quartic():
    # (R - 1)^2 (R^2 + 1) has a repeated root
    squared = UniPoly([F(1), F(-2), F(1)]) * UniPoly([F(1), F(0), F(1)])
    with pytest.raises(NonGenusOneError):
        QuarticModel(squared, (F(1), F(0)))


def test_model_rejects_base_point_off_curve():
    with pytest.raises(ValueError):
        QuarticModel(QUARTIC_DEG4, (F(0), F(2)))


def test_translate_base():
    moved = translate_base(MODEL_DEG3)
    assert moved.base_point == (F(0), F(5))
    assert moved.q.coefficients == (F(25), F(27), F(9), F(1))
    # translation is a substitution: q_new(R) = q(R + 3)
    for r in (F(0), F(1), F(-7, 2), F(11, 3)):
        assert moved.q(r) == MODEL_DEG3.q(r + 3)
    assert translate_base(moved) is moved


def test_to_weierstrass_golden_curve():
    bmap = to_weierstrass(MODEL_DEG4)
    assert bmap.curve.A == -2943
    assert bmap.curve.B == 8802
    assert bmap.forward(MODEL_DEG4.base_point) is None
    assert bmap.forward((F(0), F(-1))) == (F(-6), F(-162))
    assert bmap.inverse(None) is None
    assert bmap.inverse((F(-6), F(-162))) == (F(0), F(-1))


def test_to_weierstrass_requires_base_at_zero():
    with pytest.raises(ValueError):
        to_weierstrass(MODEL_DEG3)
    ramified = QuarticModel(UniPoly([F(0), F(1), F(0), F(0), F(1)]), (F(0), F(0)))
    with pytest.raises(NonGenusOneError):
        to_weierstrass(ramified)


def test_forward_rejects_point_off_model():
    bmap = to_weierstrass(MODEL_DEG4)
    with pytest.raises(ValueError):
        bmap.forward((F(1), F(1)))


def test_exceptional_fibre_of_inverse():
    """The inverse knows its poles: the identity and the image of infinity."""
    moved = translate_base(MODEL_DEG3)
    bmap = to_weierstrass(moved)
    assert bmap.curve.A == 0
    assert bmap.curve.B == -1458
    # the unique point at infinity of the cubic model lands on (27, 135)
    w = (F(27), F(135))
    assert bmap.curve.contains(w)
    assert bmap.inverse(w) is None
    # ... while its negative is an honest affine image
    back = bmap.inverse((F(27), F(-135)))
    assert back is not None
    assert moved.contains(back)
    assert bmap.forward(back) == (F(27), F(-135))


def _round_trip_points(model, seed, count):
    """Pull back curve multiples and check both compositions exactly."""
    bmap = to_weierstrass(model)
    image = bmap.forward(seed)
    checked = 0
    m = 0
    while checked < count:
        m += 1
        for sign in (1, -1):
            pt = bmap.curve.scalar_mul(sign * m, image)
            back = bmap.inverse(pt)
            if back is None:
                continue
            assert model.contains(back)
            assert bmap.forward(back) == pt
            checked += 1
    return checked


def test_round_trips_degree_four():
    assert _round_trip_points(MODEL_DEG4, (F(0), F(-1)), 50) >= 50


def test_round_trips_degree_three():
    moved = translate_base(MODEL_DEG3)
    assert _round_trip_points(moved, (F(0), F(-5)), 50) >= 50


def test_conjugate_base_point_round_trip():
    # (0, -s0) is the one model point the generic inverse formula cannot
    # reach (it sits on the R = 0 fibre), so it gets its own branch.
    for model, conj in ((MODEL_DEG4, (F(0), F(-1))),
                        (translate_base(MODEL_DEG3), (F(0), F(-5)))):
        bmap = to_weierstrass(model)
        assert bmap.inverse(bmap.forward(conj)) == conj


def test_double_via_parabola_golden():
    # the doubled point of (5, -25) on S^2 = -120 R^3 + 961 R^2 - 1860 R + 900
    q = UniPoly([F(900), F(-1860), F(961), F(-120)])
    model = QuarticModel(q, (F(5), F(-25)))
    assert double_via_parabola(model, (F(5), F(-25))) == (F(-36, 5), F(-330))
    assert double_via_parabola(model, (F(5), F(25))) == (F(-36, 5), F(330))


def test_double_matches_group_law_degree_four():
    """Parabola doubling realises the divisor relation [T] = 2 V - 3 [P].

    On the Weierstrass side the residual intersection of the osculating
    parabola satisfies phi(T) = 2*phi((0,-s0)) - 3*phi(P), which pins the
    geometric construction to the group law with no wiggle room.
    """
    bmap = to_weierstrass(MODEL_DEG4)
    v_img = bmap.forward((F(0), F(-1)))
    for _, pt in multiples(MODEL_DEG4, (F(0), F(-1)), 5):
        doubled = double_via_parabola(MODEL_DEG4, pt)
        assert MODEL_DEG4.contains(doubled)
        lhs = bmap.forward(doubled)
        rhs = bmap.curve.add(
            bmap.curve.scalar_mul(2, v_img),
            bmap.curve.scalar_mul(-3, bmap.forward(pt)),
        )
        assert lhs == rhs


def test_double_matches_group_law_degree_three():
    # For a cubic q the map (R, S) -> (9 q3 R + 3 q2, 27 q3 S) is the
    # canonical isomorphism onto Y^2 = X^3 - 27 I X - 27 J sending the
    # point at infinity to the identity, under which tangent-line
    # doubling must be plain negated duplication.
    moved = translate_base(MODEL_DEG3)
    bmap = to_weierstrass(moved)
    q3, q2 = moved.q.coefficient(3), moved.q.coefficient(2)

    def iso(point):
        return (9 * q3 * point[0] + 3 * q2, 27 * q3 * point[1])

    for _, pt in multiples(moved, (F(0), F(-5)), 5):
        doubled = double_via_parabola(moved, pt)
        assert moved.contains(doubled)
        assert bmap.curve.contains(iso(pt))
        assert iso(doubled) == bmap.curve.negate(bmap.curve.scalar_mul(2, iso(pt)))


def test_double_rejects_two_division_point():
    model = QuarticModel(UniPoly([F(4), F(-1), F(-4), F(1)]), (F(0), F(2)))
    with pytest.raises(DegenerateDoublingError):
        double_via_parabola(model, (F(1), F(0)))


def test_double_degenerate_leading_coefficient():
    # q = (R^2 + 1)^2 + R^3: at (0, 1) the osculating parabola shares the
    # quartic's leading behaviour and the residual point escapes to
    # infinity.
    q = UniPoly([F(1), F(0), F(2), F(1), F(1)])
    model = QuarticModel(q, (F(0), F(1)))
    with pytest.raises(DegenerateDoublingError):
        double_via_parabola(model, (F(0), F(1)))


def test_double_rejects_point_off_model():
    with pytest.raises(ValueError):
        double_via_parabola(MODEL_DEG4, (F(1), F(1)))


def test_multiples_consistency():
    got = multiples(MODEL_DEG4, (F(0), F(-1)), 6)
    assert len(got) == 6
    indices = [m for m, _ in got]
    assert indices == sorted(indices) and len(set(indices)) == 6
    bmap = to_weierstrass(MODEL_DEG4)
    image = bmap.forward((F(0), F(-1)))
    for m, pt in got:
        assert MODEL_DEG4.contains(pt)
        assert bmap.forward(pt) == bmap.curve.scalar_mul(m, image)


def test_multiples_translates_shifted_base():
    got = multiples(MODEL_DEG3, (F(3), F(-5)), 3)
    for _, pt in got:
        assert MODEL_DEG3.contains(pt)


def test_multiples_argument_errors():
    with pytest.raises(ValueError):
        multiples(MODEL_DEG4, (F(0), F(-1)), 0)
    with pytest.raises(ValueError):
        multiples(MODEL_DEG4, (F(0), F(1)), 3)


def test_multiples_rejects_finite_order_seed():
    # S^2 = -120 R^3 + 961 R^2 - 1860 R + 900 based at (0, -30): the
    # conjugate point (0, 30) maps to a point of order three.
    q = UniPoly([F(900), F(-1860), F(961), F(-120)])
    model = QuarticModel(q, (F(0), F(-30)))
    with pytest.raises(InfiniteOrderRequiredError):
        multiples(model, (F(0), F(30)), 1)
