"""Shuffle products on word functionals and signatures of piecewise-linear paths.

A piecewise-linear path is stored by its vertices only; signatures are
reparametrization invariant, so that is all the data there is.  Each segment
with increment ``v`` contributes the exponential of ``v``, and concatenation
multiplies the series, which keeps every computation in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .free_lie import exp_truncated, log_truncated
from .tensors import Tensor, TensorSeries, series_product
from .words import Word, all_words, word_to_index


@dataclass(frozen=True)
class WordFunctional:
    """Finite rational combination of coordinate functionals T -> T_w.

    Words of different lengths may be mixed; evaluation on a series sums the
    matching levels.
    """

    d: int
    terms: dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for word, c in self.terms.items():
            word = tuple(word)
            if any(not 1 <= letter <= self.d for letter in word):
                raise ValueError(f"word {word} has letters outside 1..{self.d}")
            c = Fraction(c)
            if c != 0:
                cleaned[word] = c
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def coordinate(d: int, word: Word) -> "WordFunctional":
        return WordFunctional(d, {tuple(word): Fraction(1)})

    @staticmethod
    def zero(d: int) -> "WordFunctional":
        return WordFunctional(d, {})

    def __add__(self, other: "WordFunctional") -> "WordFunctional":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return WordFunctional(self.d, terms)

    def __sub__(self, other: "WordFunctional") -> "WordFunctional":
        return self + other.scale(-1)

    def scale(self, c) -> "WordFunctional":
        c = Fraction(c)
        return WordFunctional(self.d, {w: c * v for w, v in self.terms.items()})

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def evaluate(self, series: TensorSeries) -> Fraction:
        if series.d != self.d:
            raise ValueError("dimension mismatch")
        if self.max_length() > series.k_max:
            raise ValueError("series truncated below the functional's top word")
        total = Fraction(0)
        for w, c in self.terms.items():
            level = series.level(len(w))
            total += c * (level.entries[word_to_index(w, self.d)] if w else level.entries[0])
        return total

    def evaluate_tensor(self, tensor: Tensor) -> Fraction:
        """Evaluate on a single homogeneous level."""
        total = Fraction(0)
        for w, c in self.terms.items():
            if len(w) == tensor.k:
                total += c * tensor.entries[word_to_index(w, tensor.d)]
        return total

    def _check(self, other: "WordFunctional") -> None:
        if self.d != other.d:
            raise ValueError(f"alphabet mismatch: d={self.d} vs d={other.d}")


@cache
def _shuffle_multiplicities(a: Word, b: Word) -> tuple[tuple[Word, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    counts: dict[Word, int] = {}
    for w, c in _shuffle_multiplicities(a[1:], b):
        counts[(a[0],) + w] = counts.get((a[0],) + w, 0) + c
    for w, c in _shuffle_multiplicities(a, b[1:]):
        counts[(b[0],) + w] = counts.get((b[0],) + w, 0) + c
    return tuple(sorted(counts.items()))


def shuffle_words(a: Word, b: Word, d: int | None = None) -> WordFunctional:
    """Shuffle product of two coordinate functionals.

    Sum over all interleavings preserving the internal order of each word,
    with multiplicity; total mass is binomial(|a| + |b|, |a|).
    """
    a, b = tuple(a), tuple(b)
    if d is None:
        d = max(max(a, default=1), max(b, default=1))
    terms = {w: Fraction(c) for w, c in _shuffle_multiplicities(a, b)}
    return WordFunctional(d, terms)


def shuffle_functionals(beta: WordFunctional, gamma: WordFunctional) -> WordFunctional:
    """Bilinear extension of :func:`shuffle_words`."""
    beta._check(gamma)
    acc = WordFunctional.zero(beta.d)
    for wa, ca in beta.terms.items():
        for wb, cb in gamma.terms.items():
            acc = acc + shuffle_words(wa, wb, beta.d).scale(ca * cb)
    return acc


def is_group_like(series: TensorSeries) -> bool:
    """Exact check of the product identity T_{I shuffle J} = T_I * T_J.

    Runs over unordered pairs of nonempty words with |I| + |J| <= k_max;
    the empty word holds trivially since level 0 must be 1.
    """
    if series.level(0) != Tensor.scalar(series.d, 1):
        raise ValueError("group-likeness needs level 0 equal to 1")
    d, k_max = series.d, series.k_max
    words: list[Word] = []
    for k in range(1, k_max):
        words.extend(all_words(d, k))
    for i, a in enumerate(words):
        for b in words[i:]:
            if len(a) + len(b) > k_max:
                continue
            lhs = shuffle_words(a, b, d).evaluate(series)
            rhs = series.level(len(a)).entries[word_to_index(a, d)] * series.level(
                len(b)
            ).entries[word_to_index(b, d)]
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# piecewise-linear paths


@dataclass(frozen=True)
class PiecewiseLinearPath:
    """Path through the given rational vertices, traversed in order."""

    d: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a path needs at least one point")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if any(len(p) != self.d for p in pts):
            raise ValueError("every vertex must have d coordinates")
        object.__setattr__(self, "points", pts)

    @staticmethod
    def from_lists(points) -> "PiecewiseLinearPath":
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        if not pts:
            raise ValueError("a path needs at least one point")
        return PiecewiseLinearPath(len(pts[0]), pts)

    def increments(self) -> list[tuple[Fraction, ...]]:
        return [
            tuple(b - a for a, b in zip(p, q))
            for p, q in zip(self.points, self.points[1:])
        ]

    def reversed(self) -> "PiecewiseLinearPath":
        return PiecewiseLinearPath(self.d, tuple(reversed(self.points)))

    def concatenate(self, other: "PiecewiseLinearPath") -> "PiecewiseLinearPath":
        """Translate ``other`` to start at this path's endpoint and append it."""
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        end = self.points[-1]
        start = other.points[0]
        shift = tuple(e - s for e, s in zip(end, start))
        moved = [tuple(x + dx for x, dx in zip(p, shift)) for p in other.points[1:]]
        return PiecewiseLinearPath(self.d, self.points + tuple(moved))

    def is_collinear(self) -> bool:
        incs = [v for v in self.increments() if any(x != 0 for x in v)]
        if len(incs) <= 1:
            return True
        base = incs[0]
        for v in incs[1:]:
            # parallel or antiparallel both trace one line: 2x2 minors vanish
            for i in range(self.d):
                for j in range(i + 1, self.d):
                    if base[i] * v[j] - base[j] * v[i] != 0:
                        return False
        return True


def signature(path: PiecewiseLinearPath, k_max: int) -> TensorSeries:
    """Signature series of a piecewise-linear path, truncated at k_max.

    Product over segments of the exponential of the increment, in path order.
    """
    result = TensorSeries.unit(path.d, k_max)
    for inc in path.increments():
        if all(x == 0 for x in inc):
            continue
        step = TensorSeries.from_levels(
            path.d, k_max, {1: Tensor.from_vector(path.d, inc)}
        )
        result = series_product(result, exp_truncated(step))
    return result


def log_signature(path: PiecewiseLinearPath, k_max: int) -> TensorSeries:
    """Truncated logarithm of the signature; levels are Lie elements."""
    return log_truncated(signature(path, k_max))


def levy_area(series: TensorSeries) -> Fraction:
    """The planar invariant (T_12 - T_21) / 2."""
    if series.d != 2:
        raise ValueError("defined for d = 2 only")
    if series.k_max < 2:
        raise ValueError("needs k_max >= 2")
    level = series.level(2)
    return (level[(1, 2)] - level[(2, 1)]) / 2


# ---------------------------------------------------------------------------
# graded functionals


def act_on_functional(x, beta: WordFunctional, k: int) -> WordFunctional:
    """Dual slot action on degree-k functionals: (x . beta)(T) = beta(x . T).

    Since the slot action sends the basis tensor at word u to the one at
    u o sigma^{-1}, the coefficient of beta at word w is scattered to w o sigma.
    """
    terms: dict[Word, Fraction] = {}
    for word in beta.terms:
        if len(word) != k:
            raise ValueError("functional is not homogeneous of degree k")
    for perm, c in x.terms.items():
        for word, v in beta.terms.items():
            moved = tuple(word[perm[i]] for i in range(k))
            terms[moved] = terms.get(moved, Fraction(0)) + c * v
    return WordFunctional(beta.d, terms)


def functional_in_w_dual(beta: WordFunctional, lam, k: int) -> bool:
    """True iff the degree-k functional only depends on the lam-graded part."""
    from .group_algebra import higher_lie_idempotent

    return act_on_functional(higher_lie_idempotent(lam), beta, k) == beta


def shuffle_grading_check(
    beta: WordFunctional, gamma: WordFunctional, lam, mu
) -> bool:
    """Verify the graded multiplication rule for the shuffle product.

    Requires beta to be graded by lam and gamma by mu (checked); returns
    whether beta shuffle gamma is graded by the union partition.
    """
    from .words import check_partition, partition_union

    lam, mu = check_partition(lam), check_partition(mu)

    def graded(functional: WordFunctional, grade) -> bool:
        if not grade:
            # degree-0 grading: constants only
            return set(functional.terms) <= {()}
        return functional_in_w_dual(functional, grade, sum(grade))

    if not graded(beta, lam):
        raise ValueError("beta is not graded by lam")
    if not graded(gamma, mu):
        raise ValueError("gamma is not graded by mu")
    union = partition_union(lam, mu)
    product = shuffle_functionals(beta, gamma)
    return graded(product, union)


def levy_functional() -> WordFunctional:
    """The degree-2 planar functional ((12) - (21)) / 2."""
    return WordFunctional(
        2, {(1, 2): Fraction(1, 2), (2, 1): Fraction(-1, 2)}
    )
