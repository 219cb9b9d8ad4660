"""Univariate polynomials over the rationals and symmetric-function helpers.

Contents:

* :class:`UniPoly` -- dense univariate polynomials with exact coefficients,
  supporting the handful of operations the curve machinery needs
  (evaluation, arithmetic, derivative, argument shift).
* :func:`elem_sym_all` -- all elementary symmetric values of a tuple in one
  O(n^2) Vieta pass.
* :func:`sigma_expand3` -- the four coefficients that appear when an
  elementary symmetric polynomial of a tuple extended by three fresh
  variables is expanded.
* :func:`quadratic_roots` -- exact rational root extraction.
* :func:`quartic_invariants`, :func:`quartic_discriminant` -- the classical
  degree-2/3 invariants and the resultant-based discriminant of a (at most)
  binary quartic.
* :func:`identity_check` -- deterministic randomized verification of
  multivariate identities by exact evaluation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import DegenerateIdentityError

ZERO = Fraction(0)
ONE = Fraction(1)


class UniPoly:
    """A univariate polynomial with Fraction coefficients.

    ``coefficients[i]`` is the coefficient of X**i; trailing zeros are
    trimmed so the leading coefficient of a nonzero polynomial is nonzero.
    The zero polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable) -> None:
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of X**i, zero when out of range."""
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return ZERO

    def __call__(self, x: Fraction) -> Fraction:
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coefficients)][1:])

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coefficients or not other.coefficients:
            return UniPoly([])
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, factor: Fraction) -> "UniPoly":
        return UniPoly([factor * c for c in self.coefficients])

    def shift(self, r: Fraction) -> "UniPoly":
        """Return p(X + r): the argument translated by r.

        Implemented by synthetic (Horner) re-expansion, which keeps the
        arithmetic to O(deg^2) exact operations.
        """
        coeffs = list(self.coefficients)
        n = len(coeffs)
        for k in range(n - 1):
            for j in range(n - 2, k - 1, -1):
                coeffs[j] += r * coeffs[j + 1]
        return UniPoly(coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coefficients)!r})"


class SigmaVector:
    """All elementary symmetric values sigma_0..sigma_n of one tuple.

    Indexing follows the usual conventions: sigma_0 = 1, and any index
    outside 0..n (negative or larger than the tuple length) reads as 0.
    """

    __slots__ = ("values",)

    def __init__(self, values: Sequence[Fraction]) -> None:
        self.values = tuple(values)

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.values):
            return self.values[i]
        return ZERO

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SigmaVector):
            return self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        return f"SigmaVector({list(self.values)!r})"


def elem_sym_all(values: Sequence[Fraction]) -> SigmaVector:
    """Compute sigma_0..sigma_n of ``values`` in a single Vieta pass.

    The sigma_i are exactly the coefficients of prod_i (X + x_i); the loop
    below accumulates that product coefficient-by-coefficient and needs
    O(n^2) exact multiplications in total.
    """
    out = [ONE] + [ZERO] * len(values)
    filled = 0
    for x in values:
        filled += 1
        for i in range(filled, 0, -1):
            out[i] += out[i - 1] * x
    return SigmaVector(out)


def sigma_expand3(
    values: Sequence[Fraction], i: int
) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (u, v, w, t) of the three-variable extension of sigma_i.

    For any tuple X and fresh variables P, Q, R:

        sigma_i(X, P, Q, R) = u*PQR + v*(PQ+QR+RP) + w*(P+Q+R) + t

    with u = sigma_{i-3}(X), v = sigma_{i-2}(X), w = sigma_{i-1}(X) and
    t = sigma_i(X), using the out-of-range convention of
    :class:`SigmaVector`.
    """
    if i < 1:
        raise ValueError("index must be at least 1")
    sig = elem_sym_all(values)
    return sig[i - 3], sig[i - 2], sig[i - 1], sig[i]


def quadratic_roots(c2: Fraction, c1: Fraction, c0: Fraction) -> Set[Fraction]:
    """Rational roots of c2*Q^2 + c1*Q + c0.

    Returns a set of zero, one or two rationals.  A vanishing leading
    coefficient degrades gracefully to the linear case; the all-zero
    equation is rejected because every value would be a root.
    """
    from .rationals import rational_sqrt

    if c2 == 0:
        if c1 == 0:
            if c0 == 0:
                raise ValueError("all coefficients zero: every value is a root")
            return set()
        return {-c0 / c1}
    disc = c1 * c1 - 4 * c2 * c0
    root = rational_sqrt(disc)
    if root is None:
        return set()
    return {(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)}


def _padded_quartic(q: UniPoly) -> Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    if q.degree > 4:
        raise ValueError("polynomial degree exceeds 4")
    return tuple(q.coefficient(i) for i in range(5))  # type: ignore[return-value]


def quartic_invariants(q: UniPoly) -> Tuple[Fraction, Fraction]:
    """The classical invariants (I, J) of a quartic q4*X^4 + ... + q0.

    I = 12 q4 q0 - 3 q3 q1 + q2^2
    J = 72 q4 q2 q0 + 9 q3 q2 q1 - 27 q4 q1^2 - 27 q0 q3^2 - 2 q2^3

    Polynomials of lower degree are padded with zero coefficients, so the
    formulas remain meaningful for cubics (and degenerate further down).
    They satisfy 27 * disc(q) = 4 I^3 - J^2, which the tests use as an
    independent cross-check against the resultant-based discriminant.
    """
    q0, q1, q2, q3, q4 = _padded_quartic(q)
    inv_i = 12 * q4 * q0 - 3 * q3 * q1 + q2 * q2
    inv_j = (
        72 * q4 * q2 * q0
        + 9 * q3 * q2 * q1
        - 27 * q4 * q1 * q1
        - 27 * q0 * q3 * q3
        - 2 * q2 ** 3
    )
    return inv_i, inv_j


def _resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant of p and q via the determinant of the Sylvester matrix.

    Plain fraction-valued Gaussian elimination; matrix sizes here never
    exceed 7x7 so there is no need for a fraction-free scheme.
    """
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        return ZERO
    size = m + n
    if size == 0:
        return ONE
    rows: List[List[Fraction]] = []
    pc = list(reversed(p.coefficients))
    qc = list(reversed(q.coefficients))
    for i in range(n):
        row = [ZERO] * size
        for k, c in enumerate(pc):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [ZERO] * size
        for k, c in enumerate(qc):
            row[i + k] = c
        rows.append(row)
    det = ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, size):
                rows[r][c] -= factor * rows[col][c]
    return det


def quartic_discriminant(q: UniPoly) -> Fraction:
    """Discriminant of q, zero exactly when q has a repeated root.

    Uses the resultant normalization
    disc(q) = (-1)^(d(d-1)/2) * Res(q, q') / lc(q), which for the monic
    cubic X^3 - X gives 4 and matches the closed forms used by the curve
    constructions.
    """
    d = q.degree
    if d < 2:
        raise ValueError("discriminant needs degree at least 2")
    res = _resultant(q, q.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / q.coefficients[-1]


# Bound on numerators/denominators of sampled identity-check points.  Wider
# than any degree we test so that coincidental agreement at all sample
# points is off the table, yet small enough to keep evaluation cheap.
def _sample_bound(degree_bound: int) -> int:
    return 16 * max(degree_bound, 1) + 32


Evaluator = Callable[[Sequence[Fraction]], Fraction]

_RESAMPLE_BUDGET = 64


def identity_check(
    lhs: Evaluator,
    rhs: Evaluator,
    nvars: int,
    degree_bound: int,
    trials: int,
    seed: int = 0,
) -> bool:
    """Test lhs == rhs as functions of ``nvars`` rational variables.

    Both sides are evaluated at ``trials`` pseudo-random rational points and
    must agree exactly at every one.  Points are drawn from a
    ``random.Random(seed)`` stream (fixed Mersenne-Twister algorithm, so
    identical seeds give identical points everywhere) with numerators and
    denominators bounded by ``16*degree_bound + 32``.  An evaluator may
    raise ZeroDivisionError to report a pole; the point is then resampled,
    up to 64 attempts per trial before the identity is declared degenerate.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    bound = _sample_bound(degree_bound)

    def draw() -> Fraction:
        value = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        return -value if rng.random() < 0.5 else value

    for _ in range(trials):
        for _attempt in range(_RESAMPLE_BUDGET):
            point = [draw() for _ in range(nvars)]
            try:
                left = lhs(point)
                right = rhs(point)
            except ZeroDivisionError:
                continue
            if left != right:
                return False
            break
        else:
            raise DegenerateIdentityError(
                "resampling budget exhausted: both sides undefined at 64 "
                "consecutive sample points"
            )
    return True
