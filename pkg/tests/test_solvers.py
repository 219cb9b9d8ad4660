"""Tests for the solution generators.

Every generator re-verifies its own output internally, so these tests
focus on golden tuples, cross-route agreement between the closed forms
and the curve pipeline, argument validation, and the scaling/reciprocal
reductions.
"""

import random
from fractions import Fraction

import pytest

from sigmasolve.errors import DegenerateParameterError
from sigmasolve.polynomials import elem_sym_all
from sigmasolve.solvers import (
    DEFAULT_SEED,
    ReducedSigmaSystem,
    SameValueParams,
    Solution,
    SymmetricSystem,
    reduce_reciprocal,
    reduce_scale,
    sample_fraction,
    same_value_model,
    sigma123_system,
    sigma_product_closed_form,
    sigma_product_system,
    solve_same_sigma_pair,
    solve_sigma123,
    solve_sigma_i_product,
    solve_sum_product,
    solve_triple_123,
    solve_triple_134,
    sum_product_closed_form,
    sum_product_system,
    triple_123_targets,
    triple_134_model,
    triple_134_targets,
)
from sigmasolve.verify import check_solution, distinct_multisets

F = Fraction


def assert_verified(system, solutions):
    for sol in solutions:
        report = check_solution(system, sol.values)
        assert report.overall, report.checks


# ---------------------------------------------------------------------------
# system containers


def test_symmetric_system_validation():
    SymmetricSystem(4, ((1, F(1)), (4, F(2))))
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(2, ((1, F(1)),))
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(4, ())
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(5, ((1, F(1)), (1, F(2))))
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(5, ((2, F(1)), (1, F(2))))
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(4, ((5, F(1)),))
    with pytest.raises(DegenerateParameterError):
        SymmetricSystem(4, ((4, F(0)),))


def test_target_builders():
    assert triple_123_targets(F(4), F(2)) == (F(11, 2), F(3))
    assert triple_134_targets(F(1), F(2)) == (F(-9, 64), F(81, 4096))
    sys123 = sigma123_system(5, (F(1), F(1), F(1), F(2)))
    assert sys123.constraints == ((1, F(5)), (2, F(9)), (3, F(7)))
    assert sum_product_system(F(1), F(1), 4).constraints == ((1, F(1)), (4, F(1)))
    assert sigma_product_system(2, F(3), F(2), 4).constraints == (
        (2, F(3)),
        (4, F(2)),
    )


# ---------------------------------------------------------------------------
# sigma_1 = a, sigma_n = b


def test_sum_product_golden():
    sols = solve_sum_product(F(1), F(1), n=4, t=F(1))
    assert sols[0].values == (F(-24, 35), F(96, 35), F(-343, 240), F(125, 336))
    assert sols[0].provenance["multiple"] == 2
    assert sols[0].provenance["t"] == 1
    assert_verified(sum_product_system(F(1), F(1), 4), sols)


def test_sum_product_closed_form_matches_curve_route():
    assert sum_product_closed_form(F(1), F(1), F(1)) == (
        F(-24, 35),
        F(96, 35),
        F(-343, 240),
        F(125, 336),
    )
    rng = random.Random(99)
    checked = 0
    while checked < 5:
        a, b, t = (sample_fraction(rng) for _ in range(3))
        try:
            sols = solve_sum_product(a, b, n=4, t=t, count=1)
        except DegenerateParameterError:
            continue
        if sols[0].provenance["multiple"] != 2:
            continue  # m = 2 was skipped; the closed form has no analogue
        assert sols[0].values == sum_product_closed_form(a, b, t)
        checked += 1


def test_sum_product_larger_n_appends_free_entries():
    free = (F(2), F(1, 3))
    sols = solve_sum_product(F(3), F(2), n=6, free=free, t=F(1), count=2)
    system = sum_product_system(F(3), F(2), 6)
    assert_verified(system, sols)
    for sol in sols:
        assert sol.values[4:] == free
        assert sol.provenance["free"] == list(free)
    assert distinct_multisets(sols)


def test_sum_product_sampling_is_reproducible():
    a = solve_sum_product(F(5), F(7), n=5, count=2, seed=DEFAULT_SEED)
    b = solve_sum_product(F(5), F(7), n=5, count=2, seed=DEFAULT_SEED)
    assert [s.values for s in a] == [s.values for s in b]
    assert a[0].provenance == b[0].provenance
    # a different seed walks a different sampled family
    c = solve_sum_product(F(5), F(7), n=5, count=1, seed=7)
    assert_verified(sum_product_system(F(5), F(7), 5), c)


def test_sum_product_branches_give_different_tuples():
    plus = solve_sum_product(F(1), F(1), t=F(1), branch="+")
    minus = solve_sum_product(F(1), F(1), t=F(1), branch="-")
    system = sum_product_system(F(1), F(1), 4)
    assert_verified(system, plus + minus)
    assert plus[0].values != minus[0].values


def test_sum_product_argument_errors():
    with pytest.raises(DegenerateParameterError):
        solve_sum_product(F(0), F(1))
    with pytest.raises(DegenerateParameterError):
        solve_sum_product(F(1), F(0))
    with pytest.raises(DegenerateParameterError):
        solve_sum_product(F(1), F(1), n=3)
    with pytest.raises(ValueError):
        solve_sum_product(F(1), F(1), count=0)
    with pytest.raises(ValueError):
        solve_sum_product(F(1), F(1), branch="*")
    with pytest.raises(ValueError):
        solve_sum_product(F(1), F(1), n=5, free=())
    with pytest.raises(DegenerateParameterError):
        solve_sum_product(F(1), F(1), n=5, free=(F(0),))
    with pytest.raises(DegenerateParameterError):
        solve_sum_product(F(1), F(1), t=F(0))
    with pytest.raises(DegenerateParameterError):
        # 4*b*t^2 = 1 collapses the substituted entry
        solve_sum_product(F(1), F(1), t=F(1, 2))
    with pytest.raises(DegenerateParameterError):
        # free entries sum to a, reducing the first target to zero
        solve_sum_product(F(2), F(1), n=5, free=(F(2),))


def test_sum_product_count_and_distinctness():
    sols = solve_sum_product(F(1), F(1), t=F(1), count=4)
    assert len(sols) == 4
    assert distinct_multisets(sols)
    multiples_seen = [s.provenance["multiple"] for s in sols]
    assert multiples_seen == sorted(multiples_seen)
    assert multiples_seen[0] == 2


# ---------------------------------------------------------------------------
# sigma_i = a, sigma_n = b


def test_sigma_product_golden():
    sols = solve_sigma_i_product(2, F(3), F(2), 4, free=(F(1),))
    assert sols[0].values == (F(1), F(1, 7), F(-7, 4), F(-8))
    assert_verified(sigma_product_system(2, F(3), F(2), 4), sols)


def test_sigma_product_closed_form_matches_pipeline():
    rng = random.Random(4)
    checked = 0
    while checked < 5:
        free = (sample_fraction(rng),)
        a, b = sample_fraction(rng), sample_fraction(rng)
        u, v, w, t = F(0), F(1), free[0], F(0)
        try:
            reduced = ReducedSigmaSystem(u=u, v=v, w=w, t=t, m=free[0], a=a, b=b)
            sols = solve_sigma_i_product(2, a, b, 4, free=free, count=1)
        except DegenerateParameterError:
            continue
        if sols[0].provenance["multiple"] != 2 or w == 0:
            continue
        p, q, r = sigma_product_closed_form(reduced)
        assert tuple(sorted(sols[0].values[1:])) == tuple(sorted((p, q, r)))
        checked += 1


def test_sigma_product_reciprocal_dispatch():
    # i > n/2 goes through the reciprocal of the complementary system
    sols = solve_sigma_i_product(3, F(5, 2), F(3), 4, count=2)
    assert_verified(sigma_product_system(3, F(5, 2), F(3), 4), sols)
    for sol in sols:
        assert sol.provenance["reduction"] == "reciprocal"
    assert distinct_multisets(sols)


def test_sigma_product_reciprocal_dispatch_middle_index():
    sols = solve_sigma_i_product(4, F(2), F(3), 6, count=1, seed=11)
    assert_verified(sigma_product_system(4, F(2), F(3), 6), sols)
    assert sols[0].provenance["reduction"] == "reciprocal"


def test_sigma_product_larger_n():
    free = (F(1), F(2), F(3))
    sols = solve_sigma_i_product(2, F(4), F(6), 6, free=free, count=2)
    system = sigma_product_system(2, F(4), F(6), 6)
    assert_verified(system, sols)
    for sol in sols:
        assert sol.values[:3] == free
    assert distinct_multisets(sols)


def test_sigma_product_argument_errors():
    with pytest.raises(DegenerateParameterError):
        solve_sigma_i_product(2, F(1), F(0), 4)
    with pytest.raises(DegenerateParameterError):
        solve_sigma_i_product(1, F(1), F(1), 4)
    with pytest.raises(DegenerateParameterError):
        solve_sigma_i_product(4, F(1), F(1), 4)
    with pytest.raises(ValueError):
        solve_sigma_i_product(2, F(3), F(2), 4, free=(F(1), F(2)))
    with pytest.raises(DegenerateParameterError):
        # v = sigma_0... wait: free entries with zero product (m = 0)
        solve_sigma_i_product(2, F(3), F(2), 5, free=(F(0), F(1)))


def test_sigma_product_sampled_free_entries_reproducible():
    a = solve_sigma_i_product(2, F(3), F(2), 5, count=1, seed=DEFAULT_SEED)
    b = solve_sigma_i_product(2, F(3), F(2), 5, count=1, seed=DEFAULT_SEED)
    assert a[0].values == b[0].values
    assert_verified(sigma_product_system(2, F(3), F(2), 5), a)


# ---------------------------------------------------------------------------
# same sigma_i and sigma_j as a reference tuple


def test_same_value_genus0_golden():
    params = SameValueParams(3, 1, 2, (F(1), F(2), F(3)))
    sols = solve_same_sigma_pair(params, count=1)
    assert sols[0].values == (F(17, 7), F(6, 7), F(19, 7))
    assert sols[0].provenance["parameter"] == 2
    sig = elem_sym_all(sols[0].values)
    assert (sig[1], sig[2]) == (F(6), F(11))


def test_same_value_genus0_walks_parameters():
    params = SameValueParams(4, 1, 2, (F(5), F(1), F(2), F(3)))
    sols = solve_same_sigma_pair(params, count=3)
    assert_verified(params.system(), sols)
    assert distinct_multisets(sols)
    for sol in sols:
        assert sol.values[0] == F(5)


def test_same_value_pair_golden_23():
    params = SameValueParams(3, 2, 3, (F(2), F(3), F(5)))
    sols = solve_same_sigma_pair(params, count=2)
    assert sols[0].values == (F(20, 27), F(-45, 8), F(-36, 5))
    sig = elem_sym_all(sols[0].values)
    assert sig[2] == 31 and sig[3] == 30
    assert_verified(params.system(), sols)
    assert distinct_multisets(sols + [Solution(values=params.reference)])


def test_same_value_pair_golden_34():
    params = SameValueParams(5, 3, 4, (F(1), F(1), F(1), F(2), F(3)))
    sols = solve_same_sigma_pair(params, count=1)
    assert sols[0].values == (F(1), F(1), F(127, 99), F(199, 57), F(58, 43))
    sig = elem_sym_all(sols[0].values)
    assert sig[3] == 34 and sig[4] == 23


def test_same_value_model_base_point():
    params = SameValueParams(3, 2, 3, (F(2), F(3), F(5)))
    model, (a_poly, b_poly, c_poly) = same_value_model(params)
    assert model.base_point[0] == 5
    assert model.contains(model.base_point)
    # the quadratic a(R) P^2 + b(R) P + c(R) vanishes at P = p, R = r
    r = F(5)
    assert a_poly(r) * 4 + b_poly(r) * 2 + c_poly(r) == 0


def test_same_value_random_references():
    rng = random.Random(31)
    produced = 0
    while produced < 6:
        n = rng.randint(3, 6)
        ref = tuple(sample_fraction(rng) for _ in range(n))
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        params = SameValueParams(n, i, j, ref)
        try:
            sols = solve_same_sigma_pair(params, count=2)
        except DegenerateParameterError:
            continue
        assert_verified(params.system(), sols)
        assert distinct_multisets(sols)
        for sol in sols:
            assert sol.values[: n - 3] == ref[: n - 3]
        produced += 1


def test_same_value_rejects_equal_leading_pair():
    # p = q makes the base point a 2-division point (S_W = 0)
    params = SameValueParams(3, 2, 3, (F(2), F(2), F(5)))
    with pytest.raises(DegenerateParameterError):
        solve_same_sigma_pair(params)


def test_same_value_params_validation():
    with pytest.raises(DegenerateParameterError):
        SameValueParams(3, 2, 2, (F(1), F(2), F(3)))
    with pytest.raises(ValueError):
        SameValueParams(3, 1, 2, (F(1), F(2)))
    with pytest.raises(ValueError):
        solve_same_sigma_pair(SameValueParams(3, 1, 2, (F(1), F(2), F(3))), count=0)


# ---------------------------------------------------------------------------
# three-constraint families


def test_triple_123_golden():
    sols = solve_triple_123(F(4), F(2), (F(1),))
    assert sols[0].values == (F(3, 2), F(1, 2), F(1, 2), F(3, 2))
    sig = elem_sym_all(sols[0].values)
    assert (sig[1], sig[2], sig[3]) == (F(4), F(11, 2), F(3))


def test_triple_123_many_parameters():
    params = tuple(F(k, 3) for k in range(1, 8))
    sols = solve_triple_123(F(5), F(1), params)
    assert len(sols) == len(params)
    b, c = triple_123_targets(F(5), F(1))
    system = SymmetricSystem(4, ((1, F(5)), (2, b), (3, c)))
    assert_verified(system, sols)


def test_triple_123_rejects_degenerate_targets():
    with pytest.raises(DegenerateParameterError):
        solve_triple_123(F(0), F(1), (F(1),))
    with pytest.raises(DegenerateParameterError):
        solve_triple_123(F(2), F(2), (F(1),))


def test_triple_134_golden():
    sols = solve_triple_134(F(1), F(2), count=1)
    assert sols[0].values == (F(-3, 8), F(3, 8), F(-1, 8), F(9, 8))
    assert sols[0].provenance["multiple"] == 1
    sig = elem_sym_all(sols[0].values)
    assert (sig[1], sig[3], sig[4]) == (F(1), F(-9, 64), F(81, 4096))


def test_triple_134_model_and_higher_multiples():
    model = triple_134_model(F(1), F(2))
    assert model.contains(model.base_point)
    sols = solve_triple_134(F(1), F(2), count=3)
    b, c = triple_134_targets(F(1), F(2))
    system = SymmetricSystem(4, ((1, F(1)), (3, b), (4, c)))
    assert_verified(system, sols)
    assert distinct_multisets(sols)


def test_triple_134_argument_errors():
    with pytest.raises(DegenerateParameterError):
        solve_triple_134(F(0), F(2))
    with pytest.raises(DegenerateParameterError):
        solve_triple_134(F(1), F(0))
    with pytest.raises(DegenerateParameterError):
        solve_triple_134(F(1), F(1))  # a^4 = d^2 forces b = 0
    with pytest.raises(ValueError):
        solve_triple_134(F(1), F(2), count=0)


def test_sigma123_golden():
    sols = solve_sigma123(5, (F(1), F(1), F(1), F(2)), (F(2),))
    assert sorted(sols[0].values) == sorted(
        (F(1, 5), F(2, 5), F(8, 5), F(9, 5), F(1))
    )
    sig = elem_sym_all(sols[0].values)
    assert (sig[1], sig[2], sig[3]) == (F(5), F(9), F(7))


def test_sigma123_longer_references():
    ref = (F(1), F(2), F(3), F(4), F(5), F(6))
    sols = solve_sigma123(7, ref, (F(1, 2), F(3), F(-5)))
    system = sigma123_system(7, ref)
    assert_verified(system, sols)
    for sol in sols:
        assert sol.values[4:] == ref[2:-1]


def test_sigma123_argument_errors():
    with pytest.raises(DegenerateParameterError):
        solve_sigma123(4, (F(1), F(2), F(3)), (F(1),))
    with pytest.raises(ValueError):
        solve_sigma123(5, (F(1), F(2)), (F(1),))


# ---------------------------------------------------------------------------
# reductions


def test_reduce_scale_round_trip():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(3, 7)
        values = [sample_fraction(rng) for _ in range(n)]
        d = sample_fraction(rng)
        scaled = [x * d for x in values]
        sig, sig_scaled = elem_sym_all(values), elem_sym_all(scaled)
        for i in range(0, n + 1):
            assert sig_scaled[i] == sig[i] * d ** i
        assert reduce_scale(scaled, d) == tuple(values)
    with pytest.raises(DegenerateParameterError):
        reduce_scale((F(1),), F(0))


def test_reduce_reciprocal_round_trip():
    rng = random.Random(18)
    for _ in range(100):
        n = rng.randint(3, 7)
        values = [sample_fraction(rng) for _ in range(n)]
        flipped = reduce_reciprocal(values)
        sig, sig_flip = elem_sym_all(values), elem_sym_all(flipped)
        for i in range(0, n + 1):
            assert sig_flip[n - i] == sig[i] / sig[n]
        assert reduce_reciprocal(flipped) == tuple(values)
    with pytest.raises(DegenerateParameterError):
        reduce_reciprocal((F(1), F(0)))


def test_scale_reduction_recovers_unscaled_targets():
    # solve at (a*D, b*D^n), divide entries by D, land on (a, b)
    a, b, big_d = F(1), F(1), F(3)
    sols = solve_sum_product(a * big_d, b * big_d ** 4, n=4, t=F(1))
    recovered = reduce_scale(sols[0].values, big_d)
    report = check_solution(sum_product_system(a, b, 4), recovered)
    assert report.overall


def test_sample_fraction_shape():
    rng = random.Random(5)
    for _ in range(200):
        x = sample_fraction(rng)
        assert x != 0
        assert 1 <= abs(x.numerator) <= 99
        assert 1 <= x.denominator <= 99
