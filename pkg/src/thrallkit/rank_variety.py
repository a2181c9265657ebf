"""Rank diagnostics for signature tensors.

The headline facts being exercised: a nonzero signature-level tensor has rank
one exactly when it is symmetric; symmetry at one level of the exponential
image of a Lie series forces all the higher graded parts to vanish; and both
of these collapse the straight-line test to three equivalent criteria on the
truncated (log-)signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from . import linalg
from .free_lie import LieElement, exp_truncated, is_lie_element, phi_k
from .shuffle_sig import PiecewiseLinearPath, log_signature, signature
from .tensors import (
    Tensor,
    TensorSeries,
    flattening_matrix,
    flattening_rank,
    is_symmetric,
    tensor_product,
)


@dataclass(frozen=True)
class RankOneResult:
    """Outcome of the elementary-tensor test, with factors on success."""

    is_rank_one: bool
    factors: tuple[tuple[Fraction, ...], ...] | None = None

    def __bool__(self) -> bool:
        return self.is_rank_one


def is_rank_one(tensor: Tensor) -> RankOneResult:
    """Decide whether a nonzero tensor is elementary; recover the factors.

    A tensor is elementary iff every single-slot flattening has rank one.
    The recovered factors follow the convention that the first one absorbs
    the overall scale and the others have leading coordinate one.
    """
    if tensor.is_zero():
        raise ValueError("the zero tensor has no rank-one factorization")
    k, d = tensor.k, tensor.d
    if k == 0:
        return RankOneResult(True, ((tensor.entries[0],),))
    for slot in range(1, k + 1):
        if flattening_rank(tensor, {slot}) != 1:
            return RankOneResult(False)
    factors: list[tuple[Fraction, ...]] = []
    for slot in range(1, k + 1):
        m = flattening_matrix(tensor, {slot})
        col = next(c for c in zip(*m) if any(x != 0 for x in c))
        factors.append(tuple(col))
    # normalize: factors 2..k get leading coefficient 1, factor 1 takes the scale
    normalized: list[tuple[Fraction, ...]] = [factors[0]]
    for vec in factors[1:]:
        lead = next(x for x in vec if x != 0)
        normalized.append(tuple(x / lead for x in vec))
    rebuilt = Tensor.from_vector(d, normalized[0])
    for vec in normalized[1:]:
        rebuilt = tensor_product(rebuilt, Tensor.from_vector(d, vec))
    witness_entry = next(i for i, c in enumerate(tensor.entries) if c != 0)
    ratio = tensor.entries[witness_entry] / rebuilt.entries[witness_entry]
    normalized[0] = tuple(ratio * x for x in normalized[0])
    rebuilt = rebuilt.scale(ratio)
    if rebuilt != tensor:
        raise ArithmeticError("flattening ranks were one but factors do not multiply back")
    return RankOneResult(True, tuple(normalized))


@dataclass(frozen=True)
class SignatureRankReport:
    symmetric: bool
    rank_one: bool
    agree: bool
    asserted_in_variety: bool

    def as_dict(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "rank_one": self.rank_one,
            "agree": self.agree,
            "asserted_in_variety": self.asserted_in_variety,
        }


def signature_rank_one_check(tensor: Tensor, assert_in_variety: bool) -> SignatureRankReport:
    """Report symmetry and rank-one status side by side.

    For tensors genuinely arising as a signature level the two flags must
    agree; the caller asserts membership (this library does not decide it
    for a lone level).  Without the assertion a disagreement is unremarkable.
    """
    sym = is_symmetric(tensor)
    rk1 = bool(is_rank_one(tensor)) if not tensor.is_zero() else False
    return SignatureRankReport(sym, rk1, sym == rk1, assert_in_variety)


@dataclass(frozen=True)
class SymmetryCascadeReport:
    hypothesis_level_symmetric: bool
    higher_parts_vanish: bool | None
    lower_levels_symmetric: bool | None
    passed: bool

    def as_dict(self) -> dict:
        return {
            "hypothesis_level_symmetric": self.hypothesis_level_symmetric,
            "higher_parts_vanish": self.higher_parts_vanish,
            "lower_levels_symmetric": self.lower_levels_symmetric,
            "passed": self.passed,
        }


def symmetric_level_implies_segment(series: TensorSeries, k: int) -> SymmetryCascadeReport:
    """Verify the symmetry cascade for a Lie series with nonzero degree-1 part.

    If level k of the exponential image is symmetric, checks that the
    degree-2..k parts vanish and that all exponential levels up to k are
    symmetric.  When level k is not symmetric the statement is vacuous and
    the report says so.
    """
    if k < 2 or k > series.k_max:
        raise ValueError("need 2 <= k <= k_max")
    for i in range(1, series.k_max + 1):
        if not series.level(i).is_zero() and not is_lie_element(series.level(i)):
            raise ValueError(f"level {i} is not a Lie element")
    if series.level(1).is_zero():
        raise ValueError("outside the hypothesis: degree-1 part is zero")
    image = exp_truncated(series)
    if not is_symmetric(image.level(k)):
        return SymmetryCascadeReport(False, None, None, True)
    vanish = all(series.level(i).is_zero() for i in range(2, k + 1))
    lower = all(is_symmetric(image.level(i)) for i in range(1, k + 1))
    return SymmetryCascadeReport(True, vanish, lower, vanish and lower)


@dataclass(frozen=True)
class FlsReport:
    """Straight-line criteria on the truncated signature of a path."""

    criterion_a: bool  # log-signature vanishes above degree 1
    criterion_b: bool  # every level is symmetric
    criterion_c: bool  # every level has rank at most one
    consistent: bool
    is_segment: bool

    def as_dict(self) -> dict:
        return {
            "criterion_a": self.criterion_a,
            "criterion_b": self.criterion_b,
            "criterion_c": self.criterion_c,
            "consistent": self.consistent,
            "is_segment": self.is_segment,
        }


def fls_check(path: PiecewiseLinearPath, k_max: int) -> FlsReport:
    """Evaluate the three straight-line criteria up to level k_max.

    (a) the log-signature vanishes in degrees 2..k_max, (b) all signature
    levels are symmetric, (c) all signature levels have rank at most one.
    The three must coincide on genuine paths with nonzero total increment.
    """
    sig = signature(path, k_max)
    if sig.level(1).is_zero():
        raise ValueError("outside the hypothesis: total increment is zero")
    log = log_signature(path, k_max)
    crit_a = all(log.level(i).is_zero() for i in range(2, k_max + 1))
    crit_b = all(is_symmetric(sig.level(i)) for i in range(2, k_max + 1))
    crit_c = all(
        sig.level(i).is_zero() or bool(is_rank_one(sig.level(i)))
        for i in range(2, k_max + 1)
    )
    consistent = crit_a == crit_b == crit_c
    return FlsReport(crit_a, crit_b, crit_c, consistent, crit_a and consistent)


# ---------------------------------------------------------------------------
# the matrix case


def skew_plus_rank_one_rank(a, x) -> int:
    """Exact rank of A + x x^T for skew-symmetric A.

    Asserts the case formula: the rank of A if x lies in the row span of A,
    one more otherwise.
    """
    a = [[Fraction(v) for v in row] for row in a]
    x = [Fraction(v) for v in x]
    d = len(a)
    if any(len(row) != d for row in a) or len(x) != d:
        raise ValueError("need a d x d matrix and a d-vector")
    for i in range(d):
        for j in range(d):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    m = [[a[i][j] + x[i] * x[j] for j in range(d)] for i in range(d)]
    result = linalg.rank(m)
    base = linalg.rank(a)
    in_rowspan = linalg.rank(a + [x]) == base
    expected = base if in_rowspan else base + 1
    if result != expected:
        raise ArithmeticError("rank disagrees with the skew-plus-rank-one case formula")
    return result


# ---------------------------------------------------------------------------
# the generic-rank lower bound


def _ceil_of_surd_quotient(p: int, q: int, d: int, denom: int) -> int:
    """Exact ceil((p - q * sqrt(d)) / denom) for nonnegative integers q, denom > 0.

    Comparisons with sqrt(d) are settled by integer squaring, so the result
    is exact for every d, square or not.
    """
    if q == 0:
        return -((-p) // denom)
    root = math.isqrt(d)
    if root * root == d:
        return -((-(p - q * root)) // denom)

    def less_than_value(m: int) -> bool:
        # m < p - q sqrt(d)  <=>  q sqrt(d) < p - m
        rhs = p - m
        if rhs <= 0:
            return False
        return q * q * d < rhs * rhs

    # the value is irrational, so ceil(value / denom) is the least n with
    # n * denom > value; walk there from an integer estimate
    n = (p - q * root) // denom
    while not less_than_value(n * denom):
        n -= 1
    while less_than_value(n * denom):
        n += 1
    return n


def generic_rank_lower_bound(d: int, k: int) -> int:
    """Evaluate ceil((d^k (d-1) - d (d^(k/2) - 1)) / ((d-1) k (k d - k + 1))) - 1.

    For odd k the half power is irrational (unless d is a square); the
    ceiling is still computed exactly via integer square-root comparisons.
    """
    if d < 2 or k < 2:
        raise ValueError("need d >= 2 and k >= 2")
    denom = (d - 1) * k * (k * d - k + 1)
    p = d**k * (d - 1) + d
    if k % 2 == 0:
        numerator = p - d ** (k // 2 + 1)
        return -((-numerator) // denom) - 1
    q = d ** ((k + 1) // 2)
    return _ceil_of_surd_quotient(p, q, d, denom) - 1


# ---------------------------------------------------------------------------
# the 2x2x2 hyperdeterminant


def hyperdeterminant_2x2x2(tensor: Tensor) -> Fraction:
    """Degree-four equation of the tangential variety of the Segre threefold.

    Written as the discriminant of the pencil of 2x2 slices along the middle
    slot; the 0/1 slice coordinates a_{ijk} correspond to the word with
    letters (i+1, j+1, k+1).
    """
    if tensor.d != 2 or tensor.k != 3:
        raise ValueError("defined for d = 2, k = 3")

    def a(i: int, j: int, k: int) -> Fraction:
        return tensor[(i + 1, j + 1, k + 1)]

    mixed = a(0, 0, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 0) \
        + a(0, 1, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 1, 0)
    det_j0 = a(0, 0, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 0, 0)
    det_j1 = a(0, 1, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 1, 0)
    return mixed**2 - 4 * det_j0 * det_j1


@dataclass(frozen=True)
class PullbackReport:
    passed: bool
    constant: Fraction | None
    samples: int
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "constant": str(self.constant) if self.constant is not None else None,
            "samples": self.samples,
            "counterexample": self.counterexample,
        }


def hdet_pullback_check(seed: int, samples: int = 20) -> PullbackReport:
    """Sample the factorized pullback identity of the hyperdeterminant.

    For random rational tuples (s1, s2, t12, u112, u122) build the Lie
    element with those Lyndon coordinates, push through the degree-3
    exponential level, and compare the hyperdeterminant against

        c * (s2 u112 + s1 u122)^2 * (3 t12^2 - 4 s2 u112 - 4 s1 u122)

    for one constant c shared across all samples.
    """
    rng = Random(seed)
    constant: Fraction | None = None
    checked = 0
    while checked < samples:
        s1, s2, t12, u112, u122 = (
            Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(5)
        )
        element = LieElement(
            2,
            3,
            {
                (1,): s1,
                (2,): s2,
                (1, 2): t12,
                (1, 1, 2): u112,
                (1, 2, 2): u122,
            },
        )
        lhs = hyperdeterminant_2x2x2(phi_k(element, 3))
        rhs_factor = (s2 * u112 + s1 * u122) ** 2 * (
            3 * t12**2 - 4 * s2 * u112 - 4 * s1 * u122
        )
        checked += 1
        if rhs_factor == 0:
            if lhs != 0:
                return PullbackReport(
                    False,
                    constant,
                    checked,
                    {"tuple": [str(v) for v in (s1, s2, t12, u112, u122)]},
                )
            continue
        ratio = lhs / rhs_factor
        if constant is None:
            constant = ratio
        elif ratio != constant:
            return PullbackReport(
                False,
                constant,
                checked,
                {"tuple": [str(v) for v in (s1, s2, t12, u112, u122)], "ratio": str(ratio)},
            )
    return PullbackReport(True, constant, checked)
