"""Exact verification and normal forms for solution tuples.

Everything here recomputes from scratch: :func:`check_solution` evaluates
the elementary symmetric polynomials by the Vieta product rather than
trusting any intermediate a solver may have kept, so it is an independent
re-check of the generation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .polynomials import UniPoly, elem_sym_all
from .solvers import Solution, SymmetricSystem


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one tuple against one system, constraint by
    constraint."""

    system: SymmetricSystem
    values: Tuple[Fraction, ...]
    checks: Tuple[Tuple[int, Fraction, Fraction, bool], ...]
    overall: bool


def check_solution(
    system: SymmetricSystem, values: Sequence[Fraction]
) -> VerificationReport:
    """Compare each constrained sigma value exactly against its target."""
    values = tuple(Fraction(x) for x in values)
    if len(values) != system.n:
        raise ValueError(f"expected {system.n} values, got {len(values)}")
    sig = elem_sym_all(values)
    checks = []
    for index, target in system.constraints:
        actual = sig[index]
        checks.append((index, target, actual, actual == target))
    return VerificationReport(
        system=system,
        values=values,
        checks=tuple(checks),
        overall=all(ok for _, _, _, ok in checks),
    )


def _value_tuples(
    solutions: Iterable[Union[Solution, Sequence[Fraction]]]
) -> List[Tuple[Fraction, ...]]:
    out = []
    for sol in solutions:
        values = sol.values if isinstance(sol, Solution) else sol
        out.append(tuple(Fraction(x) for x in values))
    return out


def distinct_multisets(
    solutions: Iterable[Union[Solution, Sequence[Fraction]]]
) -> bool:
    """True iff no two solutions are permutations of each other."""
    keys = [tuple(sorted(v)) for v in _value_tuples(solutions)]
    return len(keys) == len(set(keys))


def make_primitive(
    system: SymmetricSystem,
    solutions: Iterable[Union[Solution, Sequence[Fraction]]],
) -> Tuple[int, List[Tuple[int, ...]], Tuple[Tuple[int, Fraction], ...]]:
    """Clear denominators with one shared scale d across all tuples.

    Returns (d, integer tuples, scaled constraints): scaling a solution of
    sigma_i = target by d produces an integer solution of
    sigma_i = target * d^i, exactly, for every constrained index at once.
    d is the least common multiple of all entry denominators; any content
    shared by every scaled entry and d is divided back out (for reduced
    fractions that content is always 1, but it is checked rather than
    assumed).
    """
    tuples = _value_tuples(solutions)
    if not tuples:
        return 1, [], tuple((i, t) for i, t in system.constraints)
    d = 1
    for values in tuples:
        for x in values:
            d = math.lcm(d, x.denominator)
    scaled = [tuple(x * d for x in values) for values in tuples]
    assert all(x.denominator == 1 for values in scaled for x in values)
    ints = [tuple(int(x) for x in values) for values in scaled]
    content = math.gcd(d, *(x for values in ints for x in values))
    if content > 1:
        d //= content
        ints = [tuple(x // content for x in values) for values in ints]
    scaled_constraints = tuple(
        (index, target * Fraction(d) ** index) for index, target in system.constraints
    )
    for values in ints:
        sig = elem_sym_all([Fraction(x) for x in values])
        for index, target in scaled_constraints:
            assert sig[index] == target, "scaling broke a constraint"
    return d, ints, scaled_constraints


def to_monic_polynomial(values: Sequence[Fraction]) -> UniPoly:
    """The monic polynomial prod(X - x_i); coefficient of X^(n-i) is
    (-1)^i sigma_i, so the input multiset is exactly its root multiset."""
    poly = UniPoly([Fraction(1)])
    for x in values:
        poly = poly * UniPoly([-Fraction(x), Fraction(1)])
    return poly


def _poly_divmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    """Quotient and remainder for ascending-coefficient lists, den != 0."""
    rem = list(num)
    quot = [Fraction(0)] * max(len(rem) - len(den) + 1, 1)
    dn = len(den) - 1
    while len(rem) - 1 >= dn and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dn:
            break
        shift = len(rem) - 1 - dn
        factor = rem[-1] / den[-1]
        quot[shift] = factor
        for k in range(len(den)):
            rem[shift + k] -= factor * den[k]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _squarefree_part(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Square-free part of a polynomial over the rationals: P / gcd(P, P')."""
    p = list(coeffs)
    dp = [k * c for k, c in enumerate(p)][1:]
    a, b = p, dp
    while any(c != 0 for c in b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    if len(a) == 1:
        return p
    sf, rem = _poly_divmod(p, a)
    assert not rem
    return sf


def rational_roots(poly: UniPoly) -> Tuple[Fraction, ...]:
    """Root multiset (sorted) of a polynomial all of whose roots are rational.

    Every root of a monic rational polynomial has denominator dividing the
    least common denominator d of the coefficients, so a root approximated
    to better than 1/(2d) pins down its exact value as round(x*d)/d.
    Candidates are proposed by a numeric root finder on the square-free
    part (where every root is simple, so the finder converges) at a
    working precision chosen from the size of d, and accepted only when
    exact substitution gives zero, followed by exact deflation with
    multiplicity -- the output is exact regardless of how the candidates
    were found.  Raises ValueError when the roots are not all rational.
    """
    import mpmath

    if poly.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    lead = poly.coefficient(poly.degree)
    monic = [Fraction(c, lead) for c in poly.coefficients]
    d = 1
    for c in monic:
        d = math.lcm(d, c.denominator)
    sf = _squarefree_part(monic)
    # crude root-magnitude bound keeps the precision target honest when
    # the roots are large as well as when d is large
    bound_digits = max(
        len(str(abs(c.numerator) // c.denominator + 1)) for c in monic
    )
    digits = len(str(d)) + bound_digits

    work = list(monic)
    roots: List[Fraction] = []
    for dps in (digits + 40, 2 * digits + 80, 4 * digits + 160):
        with mpmath.workdps(dps):
            try:
                proposals = mpmath.polyroots(
                    [
                        mpmath.mpf(c.numerator) / c.denominator
                        for c in reversed(sf)
                    ],
                    maxsteps=400,
                )
            except mpmath.libmp.NoConvergence:
                continue
            candidates = sorted(
                {Fraction(int(mpmath.nint(z.real * d)), d) for z in proposals}
            )
        for cand in candidates:
            while len(work) > 1 and sum(
                c * cand ** k for k, c in enumerate(work)
            ) == 0:
                roots.append(cand)
                quot, rem = _poly_divmod(work, [-cand, Fraction(1)])
                assert not rem
                work = quot
        if len(work) == 1:
            break
    if len(work) > 1:
        raise ValueError("polynomial has an irrational or non-real root")
    return tuple(sorted(roots))
