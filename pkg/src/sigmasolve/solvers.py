"""Solution generators for symmetric-polynomial Diophantine systems.

Each public ``solve_*`` function targets one family of systems in the
variables x_1..x_n:

* :func:`solve_sum_product`      -- sigma_1 = a, sigma_n = b
* :func:`solve_sigma_i_product`  -- sigma_i = a, sigma_n = b  (2 <= i < n)
* :func:`solve_same_sigma_pair`  -- sigma_i and sigma_j equal to the values
  of a reference tuple
* :func:`solve_triple_123`       -- sigma_1, sigma_2, sigma_3 all fixed
  (one-parameter family of targets)
* :func:`solve_triple_134`       -- sigma_1, sigma_3, sigma_4 all fixed
* :func:`solve_sigma123`         -- sigma_1, sigma_2, sigma_3 of a
  reference tuple, n >= 5

The elliptic families all follow the same plan: rewrite the system as a
quadratic in one variable whose discriminant is a quartic q(R), view
S^2 = q(R) as a genus-1 model with a known rational point, push a
non-torsion point through :func:`sigmasolve.quartic.to_weierstrass`, and
pull back multiples.  Each returned :class:`Solution` is re-verified by
exact substitution before it leaves the solver; a verification failure is
a bug, never a data problem, and raises AssertionError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .curves import WeierstrassCurve
from .errors import DegenerateParameterError, InfiniteOrderRequiredError
from .polynomials import SigmaVector, UniPoly, elem_sym_all, sigma_expand3
from .quartic import BirationalMap, QuarticModel, to_weierstrass, translate_base

# Default stream for all parameter sampling; any explicitly passed seed
# replaces it, and identical seeds reproduce identical runs byte for byte.
DEFAULT_SEED = 1729

_SAMPLE_BUDGET = 64


@dataclass(frozen=True)
class SymmetricSystem:
    """Constraints sigma_index = target on n rational unknowns."""

    n: int
    constraints: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DegenerateParameterError("need at least three unknowns")
        if not 1 <= len(self.constraints) <= 3:
            raise DegenerateParameterError("between one and three constraints")
        indices = [i for i, _ in self.constraints]
        if indices != sorted(set(indices)):
            raise DegenerateParameterError("constraint indices must strictly increase")
        for i, target in self.constraints:
            if not 1 <= i <= self.n:
                raise DegenerateParameterError(f"constraint index {i} out of range")
            if i == self.n and target == 0:
                raise DegenerateParameterError(
                    "a zero product target admits only tuples with a zero "
                    "entry; the generators here need sigma_n != 0"
                )


@dataclass(frozen=True)
class Solution:
    """An n-tuple satisfying its system, plus how it was produced."""

    values: Tuple[Fraction, ...]
    provenance: Dict[str, object] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class ReducedSigmaSystem:
    """The seven-coefficient reduced form u*PQR + v*e2 + w*e1 + t = a, m*PQR = b.

    (u, v, w, t) come from expanding sigma_i over fixed entries plus three
    unknowns, m is the product of the fixed entries, and (a, b) are the two
    targets.  The product equation is unsolvable when m or b vanishes.
    """

    u: Fraction
    v: Fraction
    w: Fraction
    t: Fraction
    m: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.m == 0 or self.b == 0:
            raise DegenerateParameterError("reduced system needs m != 0 and b != 0")

    def quartic(self) -> UniPoly:
        """Discriminant quartic of the quadratic G_R in the variable Q.

        Eliminating P via the product equation turns the system into
        G_R(Q) = m R (v R + w) Q^2 + c1(R) Q + b (v R + w) with
        c1(R) = m w R^2 + (m (t - a) + b u) R + b v, and the quartic below
        is c1(R)^2 - 4 b m R (v R + w)^2, the discriminant of G_R.
        """
        c2, c1, c0 = self.m * self.w, self.m * (self.t - self.a) + self.b * self.u, self.b * self.v
        return UniPoly(
            [
                c0 * c0,
                2 * c1 * c0 - 4 * self.b * self.m * self.w * self.w,
                c1 * c1 + 2 * c2 * c0 - 8 * self.b * self.m * self.v * self.w,
                2 * c2 * c1 - 4 * self.b * self.m * self.v * self.v,
                c2 * c2,
            ]
        )

    def quadratic_in_q(self, r: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        """Coefficients (c2, c1, c0) of G_R at a concrete R = r."""
        c2 = self.m * r * (self.v * r + self.w)
        c1 = (
            self.m * self.w * r * r
            + (self.m * (self.t - self.a) + self.b * self.u) * r
            + self.b * self.v
        )
        c0 = self.b * (self.v * r + self.w)
        return c2, c1, c0


@dataclass(frozen=True)
class SameValueParams:
    """Data for 'same sigma_i and sigma_j as a reference tuple' systems.

    ``reference`` supplies both the fixed entries (all but the last three)
    and the triple (p, q, r) whose role the generated values take over.
    The shifted sigma coefficients are recomputed on demand so they can
    never go stale.
    """

    n: int
    i: int
    j: int
    reference: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j <= self.n:
            raise DegenerateParameterError("need 1 <= i < j <= n")
        if len(self.reference) != self.n:
            raise ValueError("reference tuple length must equal n")
        if self.n < 3:
            raise DegenerateParameterError("need at least three entries")

    @property
    def fixed_prefix(self) -> Tuple[Fraction, ...]:
        return self.reference[: self.n - 3]

    @property
    def triple(self) -> Tuple[Fraction, Fraction, Fraction]:
        p, q, r = self.reference[self.n - 3 :]
        return p, q, r

    def shifted_coefficients(
        self,
    ) -> Tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]:
        """(u1, v1, w1, u2, v2, w2): sigma values of the fixed prefix at
        indices i-3..i-1 and j-3..j-1."""
        sig = elem_sym_all(self.fixed_prefix)
        return sig[self.i - 3], sig[self.i - 2], sig[self.i - 1], sig[
            self.j - 3
        ], sig[self.j - 2], sig[self.j - 1]

    def system(self) -> SymmetricSystem:
        sig = elem_sym_all(self.reference)
        return SymmetricSystem(
            self.n, ((self.i, sig[self.i]), (self.j, sig[self.j]))
        )


# ---------------------------------------------------------------------------
# system builders (shared by the solvers and the CLI)


def sum_product_system(a: Fraction, b: Fraction, n: int) -> SymmetricSystem:
    return SymmetricSystem(n, ((1, Fraction(a)), (n, Fraction(b))))


def sigma_product_system(i: int, a: Fraction, b: Fraction, n: int) -> SymmetricSystem:
    return SymmetricSystem(n, ((i, Fraction(a)), (n, Fraction(b))))


def triple_123_targets(a: Fraction, d: Fraction) -> Tuple[Fraction, Fraction]:
    """(sigma_2, sigma_3) targets of the split family with sigma_1 = a."""
    a, d = Fraction(a), Fraction(d)
    return (3 * a * a - d * d) / 8, a * (a * a - d * d) / 16


def triple_134_targets(a: Fraction, d: Fraction) -> Tuple[Fraction, Fraction]:
    """(sigma_3, sigma_4) targets of the family with sigma_1 = a."""
    a, d = Fraction(a), Fraction(d)
    if a == 0 or d == 0:
        raise DegenerateParameterError("need a != 0 and d != 0")
    b = -((a ** 4 - d * d) ** 2) / (16 * a * d * d)
    return b, b * b / (a * a)


def sigma123_system(n: int, reference: Sequence[Fraction]) -> SymmetricSystem:
    """System sigma_1/sigma_2/sigma_3 equal to those of the implied
    n-entry reference (t_1..t_{n-1}, t_1 + t_2 - t_{n-1})."""
    ref = tuple(Fraction(x) for x in reference)
    if len(ref) != n - 1:
        raise ValueError(f"expected {n - 1} reference entries, got {len(ref)}")
    full_reference = ref + (ref[0] + ref[1] - ref[-1],)
    sig = elem_sym_all(full_reference)
    return SymmetricSystem(n, ((1, sig[1]), (2, sig[2]), (3, sig[3])))


# ---------------------------------------------------------------------------
# reductions


def reduce_scale(values: Sequence[Fraction], d: Fraction) -> Tuple[Fraction, ...]:
    """Divide every entry by d, turning a solution of (sigma_i = A*d^i,
    sigma_n = B*d^n) into one of (sigma_i = A, sigma_n = B)."""
    if d == 0:
        raise DegenerateParameterError("scale factor must be nonzero")
    return tuple(x / d for x in values)


def reduce_reciprocal(values: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Entry-wise reciprocal: swaps the roles of sigma_i and sigma_{n-i}.

    For all-nonzero tuples, sigma_{n-i}(1/x) = sigma_i(x) / sigma_n(x), so
    a solution of (sigma_{n-i} = a/b, sigma_n = 1/b) inverts into one of
    (sigma_i = a, sigma_n = b).
    """
    if any(x == 0 for x in values):
        raise DegenerateParameterError("reciprocal needs all entries nonzero")
    return tuple(1 / x for x in values)


# ---------------------------------------------------------------------------
# sampling


def sample_fraction(rng: random.Random) -> Fraction:
    """One sampled parameter: numerator and denominator uniform on [1, 99],
    sign fair.  Never zero, so sampled free entries need no rejection."""
    value = Fraction(rng.randint(1, 99), rng.randint(1, 99))
    return value if rng.random() < 0.5 else -value


def _internal_check(system: SymmetricSystem, values: Sequence[Fraction]) -> None:
    sig = elem_sym_all(values)
    for index, target in system.constraints:
        assert sig[index] == target, (
            f"internal verification failed at sigma_{index}: "
            f"{sig[index]} != {target}"
        )


def _note_distinct(seen: set, values: Sequence[Fraction]) -> None:
    key = tuple(sorted(values))
    if key in seen:
        raise InfiniteOrderRequiredError(
            "duplicate solution multiset generated: the working point is "
            "behaving like a torsion point"
        )
    seen.add(key)


# ---------------------------------------------------------------------------
# Solver family: sigma_1 = a, sigma_n = b


def sum_product_closed_form(
    a: Fraction, b: Fraction, t: Fraction
) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed-form quadruple with sigma_1 = a, sigma_4 = b (first multiple).

    This is the direct formula for the first nontrivial pullback; the
    curve pipeline at multiple 2 must reproduce it entry for entry, which
    the test suite uses as a cross-route check.
    """
    k = 4 * b * t * t - 1
    x1 = 8 * a * k / (-64 * b * b * t ** 4 + (a ** 4 + 32 * b) * t * t - 4)
    x2 = -32 * a * b * t * t * k / (
        (a * a * t - 8 * b * t * t + 2) * (a * a * t + 8 * b * t * t - 2)
    )
    x3 = (a * a * t + 8 * b * t * t - 2) ** 3 / (
        16 * a * t * k * (a * a * t - 8 * b * t * t + 2)
    )
    return (x1, x2, x3, a - x1 - x2 - x3)


def _sum_product_model(a: Fraction, b: Fraction, t: Fraction) -> QuarticModel:
    """The quartic model behind the substitution x2 = -4*b*t^2*x1.

    Writing x1 = P, x2 = -4bt^2 P and eliminating the two remaining
    entries by Vieta leaves the perfect-square condition
    S^2 = t^2(4bt^2-1)^2 P^4 + 2at^2(4bt^2-1) P^3 + a^2t^2 P^2 + 1 with the
    obvious rational point (0, 1).
    """
    k = 4 * b * t * t - 1
    q = UniPoly([1, 0, a * a * t * t, 2 * a * t * t * k, t * t * k * k])
    return QuarticModel(q, (Fraction(0), Fraction(1)))


def _check_sum_product_t(a: Fraction, b: Fraction, t: Fraction) -> Optional[str]:
    """Why ``t`` is unusable for targets (a, b), or None when it is fine."""
    if t == 0:
        return "t = 0 collapses the substitution"
    if 4 * b * t * t == 1:
        return "4*b*t^2 = 1 makes the substituted entry cancel x1"
    try:
        _sum_product_model(a, b, t)
    except Exception:
        return "the quartic model for this t is singular"
    return None


def solve_sum_product(
    a: Fraction,
    b: Fraction,
    n: int = 4,
    free: Optional[Sequence[Fraction]] = None,
    t: Optional[Fraction] = None,
    count: int = 1,
    seed: int = DEFAULT_SEED,
    branch: str = "+",
) -> List[Solution]:
    """Solutions of sigma_1 = a, sigma_n = b for n >= 4.

    For n > 4 the extra entries are pinned to the ``free`` values (sampled
    when not given) and the quadruple solver runs against the reduced
    targets A = a - sum(free), B = b / prod(free).
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DegenerateParameterError("need a*b != 0: both targets nonzero")
    if n < 4:
        raise DegenerateParameterError("need n >= 4")
    if count < 1:
        raise ValueError("count must be positive")
    if branch not in ("+", "-"):
        raise ValueError("branch must be '+' or '-'")
    rng = random.Random(seed)

    free_given = free is not None
    t_given = t is not None
    for _attempt in range(_SAMPLE_BUDGET):
        if free_given:
            free_vals = tuple(Fraction(x) for x in free)
            if len(free_vals) != n - 4:
                raise ValueError(f"expected {n - 4} free entries, got {len(free_vals)}")
            if any(x == 0 for x in free_vals):
                raise DegenerateParameterError("free entries must be nonzero")
        else:
            free_vals = tuple(sample_fraction(rng) for _ in range(n - 4))
        red_a = a - sum(free_vals, Fraction(0))
        red_b = b
        for x in free_vals:
            red_b /= x
        if red_a == 0 or red_b == 0:
            if free_given:
                raise DegenerateParameterError(
                    "free entries reduce the targets to zero; choose others"
                )
            continue
        t_val = Fraction(t) if t_given else sample_fraction(rng)
        reason = _check_sum_product_t(red_a, red_b, t_val)
        if reason is not None:
            if t_given:
                raise DegenerateParameterError(reason)
            continue
        model = _sum_product_model(red_a, red_b, t_val)
        bmap = to_weierstrass(model)
        seed_image = bmap.forward((Fraction(0), Fraction(-1)))
        if bmap.curve.is_torsion(seed_image):
            if t_given and free_given:
                raise InfiniteOrderRequiredError(
                    "the working point is torsion at this specialization"
                )
            continue
        break
    else:
        raise DegenerateParameterError(
            "could not sample non-degenerate parameters within the budget"
        )

    system = sum_product_system(a, b, n)
    k4 = 4 * red_b * t_val * t_val - 1
    sign = 1 if branch == "+" else -1
    solutions: List[Solution] = []
    seen: set = set()
    skipped: List[int] = []
    m = 1
    while len(solutions) < count:
        m += 1
        pulled = bmap.inverse(bmap.curve.scalar_mul(m, seed_image))
        if pulled is None:
            skipped.append(m)
            continue
        p_val, s_val = pulled
        if p_val == 0:
            skipped.append(m)
            continue
        x1 = p_val
        x2 = -4 * red_b * t_val * t_val * p_val
        x3 = (t_val * p_val * (red_a + k4 * p_val) + sign * s_val) / (
            2 * t_val * p_val
        )
        x4 = red_a - x1 - x2 - x3
        values = (x1, x2, x3, x4) + free_vals
        _internal_check(system, values)
        _note_distinct(seen, values)
        provenance: Dict[str, object] = {
            "multiple": m,
            "branch": branch,
            "seed": seed,
            "t": t_val,
            "free": list(free_vals),
        }
        if skipped:
            provenance["skipped"] = list(skipped)
        solutions.append(Solution(values=values, provenance=provenance))
    return solutions


# ---------------------------------------------------------------------------
# Solver family: sigma_i = a, sigma_n = b


def sigma_product_closed_form(
    reduced: ReducedSigmaSystem,
) -> Tuple[Fraction, Fraction, Fraction]:
    """Closed-form (P, Q, R) for the reduced system at the first multiple.

    Needs w != 0 (otherwise several denominators collapse); the pipeline
    has no such restriction and is the primary route.
    """
    u, v, w, t, m, a, b = (
        reduced.u,
        reduced.v,
        reduced.w,
        reduced.t,
        reduced.m,
        reduced.a,
        reduced.b,
    )
    k = (a - t) * m - b * u
    p = w * (b * v ** 3 - m * w ** 3) / (v * (b * v ** 3 + k * v * w + 2 * m * w ** 3))
    q = -b * v * v * (b * v ** 3 + k * v * w + 2 * m * w ** 3) / (
        m * w * w * (2 * b * v ** 3 + k * v * w + m * w ** 3)
    )
    r = -w * (2 * b * v ** 3 + k * v * w + m * w ** 3) / (
        v * (b * v ** 3 - m * w ** 3)
    )
    return (p, q, r)


def _solve_reduced_sigma(
    reduced: ReducedSigmaSystem,
    count: int,
    branch: str,
) -> List[Tuple[Tuple[Fraction, Fraction, Fraction], int, List[int]]]:
    """Generate (P, Q, R) triples for a reduced system, with multiples."""
    if reduced.v == 0:
        raise DegenerateParameterError(
            "sigma_{i-2} of the fixed entries vanishes: the model has no "
            "usable base point"
        )
    model = QuarticModel(reduced.quartic(), (Fraction(0), reduced.b * reduced.v))
    bmap = to_weierstrass(translate_base(model))
    seed_image = bmap.forward((Fraction(0), -reduced.b * reduced.v))
    if bmap.curve.is_torsion(seed_image):
        raise InfiniteOrderRequiredError(
            "the working point is torsion at this specialization"
        )
    sign = 1 if branch == "+" else -1
    out = []
    skipped: List[int] = []
    m = 1
    while len(out) < count:
        m += 1
        pulled = bmap.inverse(bmap.curve.scalar_mul(m, seed_image))
        if pulled is None:
            skipped.append(m)
            continue
        r_val, s_val = pulled
        c2, c1, _c0 = reduced.quadratic_in_q(r_val)
        if c2 == 0:
            # R = 0 or vR + w = 0: the quadratic degenerates
            skipped.append(m)
            continue
        q_plus = (-c1 + sign * s_val) / (2 * c2)
        q_minus = (-c1 - sign * s_val) / (2 * c2)
        out.append(((q_minus, r_val, q_plus), m, list(skipped)))
    return out


def solve_sigma_i_product(
    i: int,
    a: Fraction,
    b: Fraction,
    n: int,
    free: Optional[Sequence[Fraction]] = None,
    count: int = 1,
    seed: int = DEFAULT_SEED,
    branch: str = "+",
) -> List[Solution]:
    """Solutions of sigma_i = a, sigma_n = b for 2 <= i < n.

    When i > n/2 the system is solved for the reciprocal tuple first
    (targets a/b and 1/b at index n-i) and inverted entry-wise; with
    n - i = 1 that route lands in :func:`solve_sum_product`, whose free
    block has n-4 entries instead of n-3.
    """
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise DegenerateParameterError("need b != 0: zero product is unreachable")
    if not 2 <= i < n:
        raise DegenerateParameterError("need 2 <= i < n")
    if n < 4:
        raise DegenerateParameterError("need n >= 4")
    if count < 1:
        raise ValueError("count must be positive")
    if branch not in ("+", "-"):
        raise ValueError("branch must be '+' or '-'")

    system = sigma_product_system(i, a, b, n)
    if 2 * i > n:
        # reciprocal reduction: solve for 1/x at the complementary index
        comp = n - i
        if comp == 1:
            inner = solve_sum_product(
                a / b, 1 / b, n, free=free, count=count, seed=seed, branch=branch
            )
        else:
            inner = solve_sigma_i_product(
                comp, a / b, 1 / b, n, free=free, count=count, seed=seed, branch=branch
            )
        out = []
        for sol in inner:
            values = reduce_reciprocal(sol.values)
            _internal_check(system, values)
            provenance = dict(sol.provenance)
            provenance["reduction"] = "reciprocal"
            out.append(Solution(values=values, provenance=provenance))
        return out

    rng = random.Random(seed)
    free_given = free is not None
    for _attempt in range(_SAMPLE_BUDGET):
        if free_given:
            free_vals = tuple(Fraction(x) for x in free)
            if len(free_vals) != n - 3:
                raise ValueError(f"expected {n - 3} free entries, got {len(free_vals)}")
        else:
            free_vals = tuple(sample_fraction(rng) for _ in range(n - 3))
        sig = elem_sym_all(free_vals)
        m_val = sig[n - 3]
        if m_val == 0:
            if free_given:
                raise DegenerateParameterError(
                    "product of the free entries vanishes (m = 0): the "
                    "product equation is unsolvable"
                )
            continue
        u, v, w, t = sigma_expand3(free_vals, i)
        try:
            reduced = ReducedSigmaSystem(u=u, v=v, w=w, t=t, m=m_val, a=a, b=b)
            triples = _solve_reduced_sigma(reduced, count, branch)
        except (DegenerateParameterError, InfiniteOrderRequiredError):
            if free_given:
                raise
            continue
        break
    else:
        raise DegenerateParameterError(
            "could not sample non-degenerate free entries within the budget"
        )

    solutions = []
    seen: set = set()
    for triple, m_idx, skipped in triples:
        values = free_vals + triple
        _internal_check(system, values)
        _note_distinct(seen, values)
        provenance = {
            "multiple": m_idx,
            "branch": branch,
            "seed": seed,
            "free": list(free_vals),
        }
        if skipped:
            provenance["skipped"] = skipped
        solutions.append(Solution(values=values, provenance=provenance))
    return solutions


# ---------------------------------------------------------------------------
# Solver family: same sigma_i and sigma_j as a reference tuple


def _same_value_genus0(
    params: SameValueParams, count: int
) -> List[Solution]:
    """The (i, j) = (1, 2) case: a rational one-parameter family.

    Fixing e1 and e2 of a triple cuts out a conic with an obvious rational
    point, so the solutions form a genus-0 family; the parameter values
    u = 2, 3, ... are walked in order, which keeps runs reproducible.
    """
    p, q, r = params.triple
    system = params.system()
    solutions: List[Solution] = []
    seen: set = set()
    u = Fraction(1)
    while len(solutions) < count:
        u += 1
        den = u * u + 3
        big_p = (p * u * u + 2 * (r - q) * u + 2 * q + 2 * r - p) / den
        big_q = (q * u * u + 2 * (p - r) * u + 2 * p - q + 2 * r) / den
        big_r = (r * u * u + 2 * (q - p) * u + 2 * p + 2 * q - r) / den
        values = params.fixed_prefix + (big_p, big_q, big_r)
        _internal_check(system, values)
        key = tuple(sorted(values))
        if key in seen:
            continue
        seen.add(key)
        solutions.append(
            Solution(values=values, provenance={"parameter": u, "branch": "+"})
        )
    return solutions


def same_value_model(params: SameValueParams) -> Tuple[QuarticModel, Tuple[UniPoly, UniPoly, UniPoly]]:
    """Quartic model and quadratic coefficient polynomials for the general case.

    Substituting the fixed prefix and eliminating one unknown leaves
    a(R) P^2 + b(R) P + c(R) = 0, whose discriminant b^2 - 4ac is the
    model quartic.  The base point W sits over R = r (the last reference
    entry) with S-coordinate (p - q) * (quadratic in r).
    """
    u1, v1, w1, u2, v2, w2 = params.shifted_coefficients()
    p, q, r = params.triple
    e1, e2, e3 = p + q + r, p * q + q * r + r * p, p * q * r
    big_a = u1 * e3 + v1 * e2 + w1 * e1
    big_b = u2 * e3 + v2 * e2 + w2 * e1
    a_poly = UniPoly([v1 * w2 - v2 * w1, u1 * w2 - u2 * w1, u1 * v2 - u2 * v1])
    b_poly = UniPoly(
        [
            big_a * v2 - big_b * v1,
            big_a * u2 - big_b * u1 - v2 * w1 + v1 * w2,
            u1 * w2 - u2 * w1,
        ]
    )
    c_poly = UniPoly(
        [
            big_a * w2 - big_b * w1,
            big_a * v2 - big_b * v1,
            v1 * w2 - v2 * w1,
        ]
    )
    s_w = (p - q) * (
        r * r * (u2 * v1 - u1 * v2) + r * (u2 * w1 - u1 * w2) + v2 * w1 - v1 * w2
    )
    if s_w == 0:
        raise DegenerateParameterError(
            "the reference triple yields a base point with S = 0 (for "
            "instance p = q); permute the reference entries"
        )
    quartic = b_poly * b_poly - UniPoly([4]) * a_poly * c_poly
    model = QuarticModel(quartic, (r, s_w))
    return model, (a_poly, b_poly, c_poly)


def solve_same_sigma_pair(params: SameValueParams, count: int = 1) -> List[Solution]:
    """Tuples sharing sigma_i and sigma_j with the reference tuple.

    The first n-3 output entries always equal the reference's fixed
    prefix; the final three are fresh solutions of the two remaining
    constraints.  The first generated tuple corresponds to the doubled
    base point of the underlying quartic model (the tangent-parabola
    double), subsequent ones to higher multiples.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if (params.i, params.j) == (1, 2):
        return _same_value_genus0(params, count)

    model, (a_poly, b_poly, _c_poly) = same_value_model(params)
    system = params.system()
    translated = translate_base(model)
    bmap = to_weierstrass(translated)
    s0 = translated.base_point[1]
    if translated.q.degree == 3:
        # cubic model: the single point at infinity is rational and its
        # image generates the walk; its multiples start one step higher
        # because the parabola double of W sits at three times the class.
        generator = (
            3 * translated.q.coefficient(2),
            27 * translated.q.coefficient(3) * s0,
        )
        first_mult = 3
    else:
        generator = bmap.forward((Fraction(0), -s0))
        first_mult = 2
    if bmap.curve.is_torsion(generator):
        raise InfiniteOrderRequiredError(
            "the base point class is torsion at this specialization"
        )
    shift = model.base_point[0]
    solutions: List[Solution] = []
    seen: set = set()
    skipped: List[int] = []
    mult = first_mult - 1
    while len(solutions) < count:
        mult += 1
        pulled = bmap.inverse(bmap.curve.scalar_mul(mult, generator))
        if pulled is None:
            skipped.append(mult)
            continue
        r_val = pulled[0] + shift
        s_val = pulled[1]
        a_at = a_poly(r_val)
        if a_at == 0:
            skipped.append(mult)
            continue
        b_at = b_poly(r_val)
        big_p = (-b_at + s_val) / (2 * a_at)
        big_q = (-b_at - s_val) / (2 * a_at)
        values = params.fixed_prefix + (big_p, big_q, r_val)
        _internal_check(system, values)
        _note_distinct(seen, values)
        provenance: Dict[str, object] = {
            "multiple": mult - first_mult + 2,
            "branch": "+",
        }
        if skipped:
            provenance["skipped"] = list(skipped)
        solutions.append(Solution(values=values, provenance=provenance))
    return solutions


# ---------------------------------------------------------------------------
# Three-constraint families


def solve_triple_123(
    a: Fraction, d: Fraction, params: Sequence[Fraction]
) -> List[Solution]:
    """Quadruples with sigma_1 = a, sigma_2 = (3a^2-d^2)/8, sigma_3 = a(a^2-d^2)/16.

    The targets force the underlying curve to split into rational pieces,
    so each parameter value t yields a quadruple directly; no curve
    arithmetic is involved.
    """
    a, d = Fraction(a), Fraction(d)
    if a * (a * a - d * d) == 0:
        raise DegenerateParameterError("need a*(a^2 - d^2) != 0")
    b, c = triple_123_targets(a, d)
    system = SymmetricSystem(4, ((1, a), (2, b), (3, c)))
    solutions = []
    for t in params:
        t = Fraction(t)
        den = 4 * (1 + t * t)
        big_r = (a + d - 2 * d * t + (a - d) * t * t) / den
        big_s = (a + d + 2 * d * t + (a - d) * t * t) / den
        big_p = (a - d + 2 * d * t + (a + d) * t * t) / den
        big_q = (a - d - 2 * d * t + (a + d) * t * t) / den
        values = (big_p, big_q, big_r, big_s)
        _internal_check(system, values)
        solutions.append(
            Solution(values=values, provenance={"parameter": t, "branch": "+"})
        )
    return solutions


def triple_134_model(a: Fraction, d: Fraction) -> QuarticModel:
    """Quartic model for the sigma_1/sigma_3/sigma_4 family.

    The discriminant curve is V^2 = (aR^2 - a^2 R + b)^2 - 4ab R^2 with
    b = -(a^4 - d^2)^2 / (16 a d^2).  The model below carries an extra
    factor 4d^2 on the quartic (i.e. S = 2d V), which clears the scale so
    that the Weierstrass target has the classical integral coefficients
    for integral (a, d).
    """
    b = -((a ** 4 - d * d) ** 2) / (16 * a * d * d)
    inner = UniPoly([b, -a * a, a])
    quartic = inner * inner - UniPoly([0, 0, 4 * a * b])
    return QuarticModel(quartic.scale(4 * d * d), (Fraction(0), 2 * d * b))


def solve_triple_134(
    a: Fraction, d: Fraction, count: int = 1
) -> List[Solution]:
    """Quadruples with sigma_1 = a, sigma_3 = b, sigma_4 = b^2/a^2 where
    b = -(a^4 - d^2)^2/(16 a d^2).

    Multiples start at 1: already the seed point itself produces a
    nontrivial quadruple.
    """
    a, d = Fraction(a), Fraction(d)
    if a == 0 or d == 0:
        raise DegenerateParameterError("need a != 0 and d != 0")
    if a ** 4 == d * d:
        raise DegenerateParameterError("a^4 = d^2 forces a zero target (b = 0)")
    if count < 1:
        raise ValueError("count must be positive")
    b, c = triple_134_targets(a, d)
    system = SymmetricSystem(4, ((1, a), (3, b), (4, c)))
    model = triple_134_model(a, d)
    bmap = to_weierstrass(model)
    seed_r = -((a * a - d) ** 2) / (4 * a * d)
    seed_v = (a * a - d) ** 3 * (a * a + d) / (8 * a * d * d)
    seed_image = bmap.forward((seed_r, 2 * d * seed_v))
    if bmap.curve.is_torsion(seed_image):
        raise InfiniteOrderRequiredError(
            "the seed point is torsion at this specialization"
        )
    solutions: List[Solution] = []
    seen: set = set()
    skipped: List[int] = []
    m = 0
    while len(solutions) < count:
        m += 1
        pulled = bmap.inverse(bmap.curve.scalar_mul(m, seed_image))
        if pulled is None:
            skipped.append(m)
            continue
        r_val, s_val = pulled
        if r_val == 0:
            skipped.append(m)
            continue
        v_val = s_val / (2 * d)
        big_q = (v_val - b + a * a * r_val - a * r_val * r_val) / (2 * a * r_val)
        big_s = b / (a * r_val)
        big_p = a - big_q - r_val - big_s
        values = (big_p, big_q, r_val, big_s)
        _internal_check(system, values)
        _note_distinct(seen, values)
        provenance: Dict[str, object] = {"multiple": m, "branch": "+"}
        if skipped:
            provenance["skipped"] = list(skipped)
        solutions.append(Solution(values=values, provenance=provenance))
    return solutions


def solve_sigma123(
    n: int, reference: Sequence[Fraction], params: Sequence[Fraction]
) -> List[Solution]:
    """Tuples matching sigma_1, sigma_2, sigma_3 of an n-entry reference.

    The reference is given by its first n-1 entries t_1..t_{n-1}; the
    implied final entry is t_1 + t_2 - t_{n-1}.  For each parameter u the
    first four output entries are P, Q, t_1+t_2-Q, t_1+t_2-P with P and Q
    on a rational conic, and the remaining entries are t_3..t_{n-2}.
    """
    if n < 5:
        raise DegenerateParameterError("need n >= 5")
    ref = tuple(Fraction(x) for x in reference)
    if len(ref) != n - 1:
        raise ValueError(f"expected {n - 1} reference entries, got {len(ref)}")
    t1, t2, t_last = ref[0], ref[1], ref[-1]
    system = sigma123_system(n, ref)
    solutions = []
    for u in params:
        u = Fraction(u)
        den = u * u + 1
        big_p = (t1 * u * u + (t1 + t2 - 2 * t_last) * u + t2) / den
        big_q = ((t1 + t2 - t_last) * u * u + (t2 - t1) * u + t_last) / den
        values = (big_p, big_q, t1 + t2 - big_q, t1 + t2 - big_p) + ref[2:-1]
        _internal_check(system, values)
        solutions.append(
            Solution(values=values, provenance={"parameter": u, "branch": "+"})
        )
    return solutions
