"""Free Lie algebra on the Lyndon basis, truncated exp/log, and the graded
decomposition of tensor space induced by the exponential parametrization.

The standard bracketing of a Lyndon word ``w`` of length >= 2 splits
``w = u v`` with ``v`` the lexicographically smallest proper suffix (the
classical right factorization; ``u`` and ``v`` are then Lyndon) and maps
``w`` to ``[b(u), b(v)]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from . import linalg
from .tensors import Tensor, TensorSeries, series_product, tensor_product
from .words import (
    Partition,
    Word,
    check_partition,
    is_lyndon,
    lyndon_words,
    multiplicity_profile,
    partitions,
)


def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Right standard factorization of a Lyndon word of length >= 2."""
    if len(word) < 2 or not is_lyndon(word):
        raise ValueError(f"{word} is not a Lyndon word of length >= 2")
    suffix = min(word[i:] for i in range(1, len(word)))
    return word[: len(word) - len(suffix)], suffix


@cache
def bracket_expansion(word: Word) -> dict[Word, int]:
    """Sparse integer expansion of the standard bracketing of a Lyndon word."""
    if not is_lyndon(word):
        raise ValueError(f"{word} is not a Lyndon word")
    if len(word) == 1:
        return {word: 1}
    u, v = standard_factorization(word)
    bu, bv = bracket_expansion(u), bracket_expansion(v)
    out: dict[Word, int] = {}
    for wa, ca in bu.items():
        for wb, cb in bv.items():
            out[wa + wb] = out.get(wa + wb, 0) + ca * cb
            out[wb + wa] = out.get(wb + wa, 0) - ca * cb
    return {w: c for w, c in out.items() if c}


def lyndon_bracketing(word: Word, d: int) -> Tensor:
    """Dense tensor of the standard bracketing of a Lyndon word over {1..d}."""
    terms = bracket_expansion(tuple(word))
    return Tensor.from_dict(d, len(word), {w: Fraction(c) for w, c in terms.items()})


def lie_basis(d: int, k: int) -> list[Tensor]:
    """Bracketings of the Lyndon words of length k: a basis of the degree-k
    graded Lie piece inside the k-fold tensor power."""
    return [lyndon_bracketing(w, d) for w in lyndon_words(d, k)]


@dataclass(frozen=True)
class LieElement:
    """Element of the truncated free Lie algebra in Lyndon coordinates.

    ``coeffs`` maps Lyndon words of length 1..k_max over {1..d} to rationals.
    """

    d: int
    k_max: int
    coeffs: dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for word, c in self.coeffs.items():
            word = tuple(word)
            if not is_lyndon(word):
                raise ValueError(f"{word} is not a Lyndon word")
            if not 1 <= len(word) <= self.k_max:
                raise ValueError(f"word {word} has length outside 1..{self.k_max}")
            if any(not 1 <= letter <= self.d for letter in word):
                raise ValueError(f"{word} has letters outside 1..{self.d}")
            c = Fraction(c)
            if c != 0:
                cleaned[word] = c
        object.__setattr__(self, "coeffs", cleaned)

    def level(self, k: int) -> Tensor:
        """The degree-k homogeneous part, expanded as a dense tensor."""
        acc = Tensor.zero(self.d, k)
        for word, c in self.coeffs.items():
            if len(word) == k:
                acc = acc + lyndon_bracketing(word, self.d).scale(c)
        return acc

    def to_series(self, k_max: int | None = None) -> TensorSeries:
        """Embed into the tensor algebra (level 0 is zero)."""
        k_max = self.k_max if k_max is None else k_max
        return TensorSeries.from_levels(
            self.d, k_max, {k: self.level(k) for k in range(1, k_max + 1)}
        )


# ---------------------------------------------------------------------------
# truncated exponential and logarithm


def exp_truncated(series: TensorSeries) -> TensorSeries:
    """Truncated tensor exponential; input must have zero level 0."""
    if not series.level(0).is_zero():
        raise ValueError("exp requires level 0 equal to 0")
    result = TensorSeries.unit(series.d, series.k_max)
    power = TensorSeries.unit(series.d, series.k_max)
    for n in range(1, series.k_max + 1):
        power = series_product(power, series)
        result = result + power.scale(Fraction(1, math.factorial(n)))
    return result


def log_truncated(series: TensorSeries) -> TensorSeries:
    """Truncated tensor logarithm; input must have level 0 equal to 1."""
    if series.level(0) != Tensor.scalar(series.d, 1):
        raise ValueError("log requires level 0 equal to 1")
    shifted = series - TensorSeries.unit(series.d, series.k_max)
    result = TensorSeries.zero(series.d, series.k_max)
    power = TensorSeries.unit(series.d, series.k_max)
    for n in range(1, series.k_max + 1):
        power = series_product(power, shifted)
        result = result + power.scale(Fraction((-1) ** (n + 1), n))
    return result


def phi_k(element: LieElement, k: int) -> Tensor:
    """Level-k image of the exponential of a truncated Lie element.

    Equals the sum over compositions (a_1, .., a_l) of k of
    (1/l!) T_(a_1) x ... x T_(a_l) with T_(i) the degree-i part.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return exp_truncated(element.to_series(k)).level(k)


def f_lambda(element: LieElement, lam: Partition) -> Tensor:
    """The lam-indexed summand of :func:`phi_k`.

    Sums (1/l!) T_(a_1) x .. x T_(a_l) over the distinct permutations
    (a_1, .., a_l) of lam.
    """
    lam = check_partition(lam)
    k = sum(lam)
    ell = len(lam)
    parts = {i: element.level(i) for i in set(lam)}
    acc = Tensor.zero(element.d, k)
    for comp in sorted(set(itertools.permutations(lam))):
        term = Tensor.scalar(element.d, 1)
        for a in comp:
            term = tensor_product(term, parts[a])
            if term.is_zero():
                break
        else:
            acc = acc + term
    return acc.scale(Fraction(1, math.factorial(ell)))


# ---------------------------------------------------------------------------
# graded subspaces and the decomposition of tensor space


@cache
def _w_basis_cached(lam: Partition, d: int) -> tuple[Tensor, ...]:
    profile = multiplicity_profile(lam)
    per_size = [
        list(itertools.combinations_with_replacement(lyndon_words(d, i), a))
        for i, a in sorted(profile.items())
    ]
    vectors: list[Tensor] = []
    k = sum(lam)
    for combo in itertools.product(*per_size):
        words = [w for group in combo for w in group]
        acc = Tensor.zero(d, k)
        for order in sorted(set(itertools.permutations(words))):
            term = Tensor.scalar(d, 1)
            for w in order:
                term = tensor_product(term, lyndon_bracketing(w, d))
            acc = acc + term
        if not acc.is_zero():
            vectors.append(acc)
    return tuple(vectors)


def w_lambda_basis(lam: Partition, d: int) -> list[Tensor]:
    """Basis of the lam-graded subspace of the k-fold tensor power.

    One vector per multiset of Lyndon words realizing lam: the sum over the
    distinct orderings of the tensor products of their bracketings.  The
    count is the product of multichoose(lie_dim(d, i), a_i(lam)).
    """
    return list(_w_basis_cached(check_partition(lam), d))


@cache
def _thrall_change_of_basis(d: int, k: int):
    """Columns: concatenated graded bases; returns (matrix rows, block slices)."""
    columns: list[Tensor] = []
    blocks: list[tuple[Partition, int, int]] = []
    for lam in partitions(k):
        basis = w_lambda_basis(lam, d)
        blocks.append((lam, len(columns), len(columns) + len(basis)))
        columns.extend(basis)
    n = d**k
    if len(columns) != n:
        raise ArithmeticError("graded bases do not fill the tensor power")
    rows = [[columns[j].entries[i] for j in range(n)] for i in range(n)]
    return rows, blocks, columns


def thrall_decompose(tensor: Tensor, method: str = "auto") -> dict[Partition, Tensor]:
    """Split a tensor into its graded components, one per partition of k.

    Two interchangeable backends: ``"solve"`` expresses the tensor in the
    concatenated graded bases; ``"idempotent"`` applies the projector family
    from :mod:`thrallkit.group_algebra` (subject to its degree cap).
    ``"auto"`` prefers the idempotent route when available.
    """
    if method not in ("auto", "solve", "idempotent"):
        raise ValueError(f"unknown method {method!r}")
    if method in ("auto", "idempotent"):
        from .group_algebra import (
            K_MAX,
            ResourceLimitError,
            ga_act,
            higher_lie_idempotent,
        )

        if tensor.k <= K_MAX:
            return {
                lam: ga_act(higher_lie_idempotent(lam), tensor)
                for lam in partitions(tensor.k)
            }
        if method == "idempotent":
            raise ResourceLimitError(
                f"idempotent decomposition capped at k <= {K_MAX}"
            )
    rows, blocks, columns = _thrall_change_of_basis(tensor.d, tensor.k)
    coords = linalg.solve(rows, list(tensor.entries))
    if coords is None:
        raise ArithmeticError("decomposition solve failed")
    out: dict[Partition, Tensor] = {}
    for lam, lo, hi in blocks:
        acc = Tensor.zero(tensor.d, tensor.k)
        for j in range(lo, hi):
            if coords[j] != 0:
                acc = acc + columns[j].scale(coords[j])
        out[lam] = acc
    return out


def left_to_right_bracketing(tensor: Tensor) -> Tensor:
    """Replace each word w_1 .. w_k by [[..[e_{w_1}, e_{w_2}], ..], e_{w_k}]."""
    if tensor.k < 1:
        raise ValueError("needs order >= 1")
    if tensor.k == 1:
        return tensor
    # iteratively bracket slot j+1 onto the accumulated left part:
    # [x, v] = x (x) v - v (x) x, realized as a slot shuffle
    result = tensor
    for j in range(1, tensor.k):
        # commutator in slots (1..j) vs slot j+1, applied to all trailing slots
        swapped = _swap_block(result, j)
        result = result - swapped
    return result


def _swap_block(tensor: Tensor, j: int) -> Tensor:
    """Move slot j+1 in front of slots 1..j (cyclic shift on the first j+1 slots)."""
    from .tensors import permute_slots

    k = tensor.k
    # sigma sends slot j+1 to front: built as the cycle (1 2 .. j+1) read on
    # positions 0..j, identity elsewhere.
    sigma = list(range(k))
    for i in range(j + 1):
        sigma[i] = (i + 1) % (j + 1)
    # permute_slots uses entry rule T'[w] = T[w o sigma]; this sigma realizes
    # the required slot shuffle for the bracketing recursion.
    return permute_slots(tensor, tuple(sigma))


def is_lie_element(tensor: Tensor) -> bool:
    """Dynkin criterion: the left-to-right bracketing multiplies by k."""
    if tensor.k < 1:
        return False
    return left_to_right_bracketing(tensor) == tensor.scale(tensor.k)


def lie_coordinates(tensor: Tensor) -> dict[Word, Fraction] | None:
    """Lyndon coordinates of a tensor, or None if it is not a Lie element."""
    words = lyndon_words(tensor.d, tensor.k)
    basis = [lyndon_bracketing(w, tensor.d) for w in words]
    matrix = [[b.entries[i] for b in basis] for i in range(tensor.d**tensor.k)]
    coords = linalg.solve(matrix, list(tensor.entries))
    if coords is None:
        return None
    # solve() ignores non-pivot rows' consistency only when inconsistent -> None;
    # double check reconstruction since the system is overdetermined.
    acc = Tensor.zero(tensor.d, tensor.k)
    for w, c, b in zip(words, coords, basis):
        if c != 0:
            acc = acc + b.scale(c)
    if acc != tensor:
        return None
    return {w: c for w, c in zip(words, coords) if c != 0}


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    """Commutator of truncated Lie elements, in Lyndon coordinates.

    Level pieces are expanded to tensors, bracketed there, and the Lyndon
    coordinates recovered by the dual solve; graded pieces above the common
    truncation are dropped.
    """
    if a.d != b.d:
        raise ValueError("dimension mismatch")
    k_max = min(a.k_max, b.k_max)
    coeffs: dict[Word, Fraction] = {}
    for i in range(1, k_max):
        left = a.level(i)
        if left.is_zero():
            continue
        for j in range(1, k_max - i + 1):
            right = b.level(j)
            if right.is_zero():
                continue
            commutator = tensor_product(left, right) - tensor_product(right, left)
            coords = lie_coordinates(commutator)
            if coords is None:
                raise ArithmeticError("commutator left the graded Lie subspace")
            for w, c in coords.items():
                coeffs[w] = coeffs.get(w, Fraction(0)) + c
    return LieElement(a.d, k_max, {w: c for w, c in coeffs.items() if c})


def random_lie_element(d: int, k_max: int, rng, bound: int = 4) -> LieElement:
    """Seeded random element with small rational Lyndon coefficients (tests)."""
    coeffs: dict[Word, Fraction] = {}
    for k in range(1, k_max + 1):
        for w in lyndon_words(d, k):
            num = rng.randint(-bound, bound)
            if num:
                coeffs[w] = Fraction(num, rng.randint(1, 3))
    return LieElement(d, k_max, coeffs)
