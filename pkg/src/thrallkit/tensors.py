"""Dense tensors and truncated tensor series over exact rationals.

Slot-action convention (fixed here once, everything else routes through
:func:`permute_slots`): for a permutation ``sigma`` the permuted tensor has

    permute_slots(T, sigma)[w] = T[w o sigma]      (w o sigma)_i = w_{sigma(i)}

equivalently on decomposable tensors sigma moves the factor in slot ``i``
to slot ``sigma^{-1}(i)``:

    sigma . (v_1 x ... x v_k) = v_{sigma^{-1}(1)} x ... x v_{sigma^{-1}(k)}

which makes the assignment ``sigma -> permute_slots(., sigma)`` a left
group action: ``(sigma tau) . T = sigma . (tau . T)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import rank as matrix_rank
from .permutations import Perm, inverse
from .words import Word, index_to_word, word_to_index

Scalar = Fraction


@dataclass(frozen=True)
class Tensor:
    """Dense order-``k`` tensor on a ``d``-dimensional space.

    ``entries`` has length ``d**k`` and is indexed by words via base-``d``
    encoding; ``k == 0`` stores a single scalar.
    """

    d: int
    k: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 0:
            raise ValueError("require d >= 1 and k >= 0")
        if len(self.entries) != self.d**self.k:
            raise ValueError(
                f"expected {self.d ** self.k} entries, got {len(self.entries)}"
            )

    # -- construction -------------------------------------------------

    @staticmethod
    def zero(d: int, k: int) -> "Tensor":
        return Tensor(d, k, (Fraction(0),) * d**k)

    @staticmethod
    def scalar(d: int, value) -> "Tensor":
        return Tensor(d, 0, (Fraction(value),))

    @staticmethod
    def basis(d: int, word: Word) -> "Tensor":
        entries = [Fraction(0)] * d ** len(word)
        entries[word_to_index(word, d)] = Fraction(1)
        return Tensor(d, len(word), tuple(entries))

    @staticmethod
    def from_vector(d: int, coords) -> "Tensor":
        coords = [Fraction(c) for c in coords]
        if len(coords) != d:
            raise ValueError("coordinate count must equal d")
        return Tensor(d, 1, tuple(coords))

    @staticmethod
    def from_dict(d: int, k: int, terms: dict[Word, Fraction]) -> "Tensor":
        entries = [Fraction(0)] * d**k
        for word, coeff in terms.items():
            if len(word) != k:
                raise ValueError(f"word {word} has length != {k}")
            entries[word_to_index(word, d)] += Fraction(coeff)
        return Tensor(d, k, tuple(entries))

    # -- access --------------------------------------------------------

    def __getitem__(self, word: Word) -> Fraction:
        if len(word) != self.k:
            raise ValueError(f"word {word} has length != {self.k}")
        return self.entries[word_to_index(word, self.d)]

    def nonzero_terms(self) -> dict[Word, Fraction]:
        return {
            index_to_word(i, self.d, self.k): c
            for i, c in enumerate(self.entries)
            if c != 0
        }

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.entries)

    # -- linear structure -----------------------------------------------

    def _check_compatible(self, other: "Tensor") -> None:
        if self.d != other.d or self.k != other.k:
            raise ValueError(
                f"shape mismatch: (d={self.d}, k={self.k}) vs (d={other.d}, k={other.k})"
            )

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(
            self.d, self.k, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(
            self.d, self.k, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "Tensor":
        return Tensor(self.d, self.k, tuple(-a for a in self.entries))

    def scale(self, c) -> "Tensor":
        c = Fraction(c)
        return Tensor(self.d, self.k, tuple(c * a for a in self.entries))

    def __rmul__(self, c) -> "Tensor":
        return self.scale(c)


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Tensor (outer) product; entry at word IJ is a[I] * b[J]."""
    if a.d != b.d:
        raise ValueError(f"dimension mismatch: {a.d} vs {b.d}")
    size_b = b.d**b.k
    entries = [Fraction(0)] * (a.d ** (a.k + b.k))
    pos = 0
    for ca in a.entries:
        if ca == 0:
            pos += size_b
            continue
        for cb in b.entries:
            if cb != 0:
                entries[pos] = ca * cb
            pos += 1
    return Tensor(a.d, a.k + b.k, tuple(entries))


def permute_slots(tensor: Tensor, sigma: Perm) -> Tensor:
    """Left slot action; see the module docstring for the convention."""
    if len(sigma) != tensor.k:
        raise ValueError(f"permutation size {len(sigma)} != tensor order {tensor.k}")
    d, k = tensor.d, tensor.k
    inv = inverse(sigma)
    # entry at u equals T[u o sigma]; filling via u = w o sigma^{-1} over nonzeros
    entries = [Fraction(0)] * d**k
    for i, c in enumerate(tensor.entries):
        if c == 0:
            continue
        w = index_to_word(i, d, k)
        u = tuple(w[inv[j]] for j in range(k))
        entries[word_to_index(u, d)] = c
    return Tensor(d, k, tuple(entries))


def is_symmetric(tensor: Tensor) -> bool:
    """True iff the tensor is fixed by every slot permutation.

    Checked on adjacent transpositions, which generate the full group.
    """
    k = tensor.k
    for i in range(k - 1):
        sigma = list(range(k))
        sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
        if permute_slots(tensor, tuple(sigma)) != tensor:
            return False
    return True


def flattening_matrix(tensor: Tensor, split: frozenset[int] | set[int]):
    """Matrix of the flattening grouping the 1-based slots in ``split`` as rows."""
    k, d = tensor.k, tensor.d
    split = set(split)
    if not split or split >= set(range(1, k + 1)) or not split <= set(range(1, k + 1)):
        raise ValueError(f"split must be a nonempty proper subset of 1..{k}")
    row_slots = sorted(s - 1 for s in split)
    col_slots = [s for s in range(k) if s not in row_slots]
    nrows, ncols = d ** len(row_slots), d ** len(col_slots)
    matrix = [[Fraction(0)] * ncols for _ in range(nrows)]
    for i, c in enumerate(tensor.entries):
        if c == 0:
            continue
        w = index_to_word(i, d, k)
        r = word_to_index(tuple(w[s] for s in row_slots), d)
        col = word_to_index(tuple(w[s] for s in col_slots), d)
        matrix[r][col] = c
    return matrix


def flattening_rank(tensor: Tensor, split) -> int:
    """Exact rank of the flattening determined by ``split``."""
    return matrix_rank(flattening_matrix(tensor, split))


@dataclass(frozen=True)
class TensorSeries:
    """Truncated tensor series: one tensor per level 0..k_max."""

    d: int
    levels: tuple[Tensor, ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("series needs at least level 0")
        for i, level in enumerate(self.levels):
            if level.d != self.d or level.k != i:
                raise ValueError(f"level {i} has wrong shape")

    @property
    def k_max(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> Tensor:
        return self.levels[k]

    @staticmethod
    def unit(d: int, k_max: int) -> "TensorSeries":
        levels = [Tensor.scalar(d, 1)] + [Tensor.zero(d, k) for k in range(1, k_max + 1)]
        return TensorSeries(d, tuple(levels))

    @staticmethod
    def zero(d: int, k_max: int) -> "TensorSeries":
        levels = [Tensor.scalar(d, 0)] + [Tensor.zero(d, k) for k in range(1, k_max + 1)]
        return TensorSeries(d, tuple(levels))

    @staticmethod
    def from_levels(d: int, k_max: int, parts: dict[int, Tensor]) -> "TensorSeries":
        levels = []
        for k in range(k_max + 1):
            if k in parts:
                levels.append(parts[k])
            elif k == 0:
                levels.append(Tensor.scalar(d, 0))
            else:
                levels.append(Tensor.zero(d, k))
        return TensorSeries(d, tuple(levels))

    def _check_compatible(self, other: "TensorSeries") -> None:
        if self.d != other.d or self.k_max != other.k_max:
            raise ValueError("series shape mismatch")

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        self._check_compatible(other)
        return TensorSeries(
            self.d, tuple(a + b for a, b in zip(self.levels, other.levels))
        )

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        self._check_compatible(other)
        return TensorSeries(
            self.d, tuple(a - b for a, b in zip(self.levels, other.levels))
        )

    def scale(self, c) -> "TensorSeries":
        return TensorSeries(self.d, tuple(level.scale(c) for level in self.levels))


def series_product(s: TensorSeries, t: TensorSeries) -> TensorSeries:
    """Product in the truncated tensor algebra; levels above k_max are dropped."""
    s._check_compatible(t)
    levels = []
    for m in range(s.k_max + 1):
        acc = Tensor.zero(s.d, m) if m else Tensor.scalar(s.d, 0)
        for i in range(m + 1):
            a, b = s.levels[i], t.levels[m - i]
            if a.is_zero() or b.is_zero():
                continue
            acc = acc + tensor_product(a, b)
        levels.append(acc)
    return TensorSeries(s.d, tuple(levels))


def random_tensor(d: int, k: int, rng, bound: int = 5) -> Tensor:
    """Uniform small-integer-coefficient tensor from an explicit RNG (tests)."""
    return Tensor(
        d, k, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d**k))
    )


def symmetrize(tensor: Tensor) -> Tensor:
    """Average over all slot permutations."""
    k = tensor.k
    acc = Tensor.zero(tensor.d, k)
    count = 0
    for sigma in itertools.permutations(range(k)):
        acc = acc + permute_slots(tensor, sigma)
        count += 1
    return acc.scale(Fraction(1, count))
