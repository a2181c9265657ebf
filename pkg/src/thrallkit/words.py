"""Words, Lyndon words, partitions and Young tableaux.

Conventions used throughout the package:

* words are tuples of letters from the 1-based alphabet ``{1, .., d}``;
* the flat index of a word is its base-``d`` encoding with the leftmost
  letter most significant (letter ``l`` contributes digit ``l - 1``), so
  index order coincides with lexicographic order on words;
* partitions are weakly decreasing tuples of positive integers;
* enumerations of partitions are in reverse-lexicographic order, largest
  part first, so output is deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cache

Word = tuple[int, ...]
Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# words


def word_to_index(word: Word, d: int) -> int:
    """Flat index of a word in {0, .., d^k - 1}."""
    idx = 0
    for letter in word:
        if not 1 <= letter <= d:
            raise ValueError(f"letter {letter} outside alphabet 1..{d}")
        idx = idx * d + (letter - 1)
    return idx


def index_to_word(index: int, d: int, k: int) -> Word:
    """Inverse of :func:`word_to_index` for words of length ``k``."""
    letters = []
    for _ in range(k):
        index, rem = divmod(index, d)
        letters.append(rem + 1)
    if index:
        raise ValueError(f"index out of range for d={d}, k={k}")
    return tuple(reversed(letters))


def all_words(d: int, k: int) -> list[Word]:
    """All d^k words of length k, in lexicographic (= index) order."""
    return list(itertools.product(range(1, d + 1), repeat=k))


def word_from_string(s: str) -> Word:
    """Parse a digit string like ``"1122"`` into a word."""
    if not all(c.isdigit() and c != "0" for c in s):
        raise ValueError(f"word string {s!r} must consist of digits 1..9")
    return tuple(int(c) for c in s)


def word_to_string(word: Word) -> str:
    return "".join(str(letter) for letter in word)


def is_lyndon(word: Word) -> bool:
    """True iff the word is strictly smaller than all of its rotations."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


def lyndon_words(d: int, k: int) -> list[Word]:
    """Lyndon words of length exactly ``k`` over ``{1, .., d}``, in lex order.

    Uses Duval's generation of Lyndon words of length at most ``k``,
    keeping the ones of full length.
    """
    if d < 1 or k < 1:
        raise ValueError("require d >= 1 and k >= 1")
    out: list[Word] = []
    w = [1]
    while w:
        if len(w) == k:
            out.append(tuple(w))
        # extend periodically to length k, then increment the last letter
        prefix = w[:]
        while len(w) < k:
            w.append(prefix[(len(w)) % len(prefix)])
        while w and w[-1] == d:
            w.pop()
        if w:
            w[-1] += 1
    return out


@cache
def moebius(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small = [t for t in range(1, math.isqrt(n) + 1) if n % t == 0]
    large = [n // t for t in reversed(small) if t * t != n]
    return small + large


def lie_dim(d: int, k: int) -> int:
    """Dimension of the degree-k graded piece of the free Lie algebra on d letters.

    Equals the necklace count (1/k) * sum_{t | k} moebius(t) * d^(k/t).
    """
    if d < 1 or k < 1:
        raise ValueError("require d >= 1 and k >= 1")
    total = sum(moebius(t) * d ** (k // t) for t in divisors(k))
    assert total % k == 0
    return total // k


# ---------------------------------------------------------------------------
# partitions


@cache
def partitions(k: int) -> tuple[Partition, ...]:
    """All partitions of ``k`` in reverse-lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")

    def gen(n: int, largest: int):
        if n == 0:
            yield ()
            return
        for part in range(min(n, largest), 0, -1):
            for rest in gen(n - part, part):
                yield (part,) + rest

    return tuple(gen(k, k))


def check_partition(lam: Partition) -> Partition:
    lam = tuple(lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"{lam} has nonpositive parts")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam


def multiplicity_profile(lam: Partition) -> dict[int, int]:
    """Map part size i -> number of parts of lam equal to i."""
    prof: dict[int, int] = {}
    for p in lam:
        prof[p] = prof.get(p, 0) + 1
    return prof


def partition_union(lam: Partition, mu: Partition) -> Partition:
    """Union of partitions: multiplicity profiles add."""
    return tuple(sorted(check_partition(lam) + check_partition(mu), reverse=True))


def multichoose(n: int, k: int) -> int:
    """Number of multisets of size k from n symbols."""
    if k == 0:
        return 1
    if n <= 0:
        return 0
    return math.comb(n + k - 1, k)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class YoungTableau:
    """A filling of a partition shape with the integers 1..k, no repeats."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = [x for row in self.rows for x in row]
        k = len(entries)
        if sorted(entries) != list(range(1, k + 1)):
            raise ValueError("filling must be a bijection with 1..k")
        check_partition(self.shape)

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows if len(row) > j)

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for j in range(self.shape[0] if self.rows else 0):
            col = self.column(j)
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True


def standard_tableaux(lam: Partition) -> list[YoungTableau]:
    """All standard Young tableaux of shape ``lam``."""
    lam = check_partition(lam)
    k = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    out: list[YoungTableau] = []

    def place(value: int) -> None:
        if value > k:
            out.append(YoungTableau(tuple(tuple(r) for r in rows)))
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            j = len(row)
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            row.append(value)
            place(value + 1)
            row.pop()

    place(1)
    return out


def hook_lengths(lam: Partition) -> list[list[int]]:
    lam = check_partition(lam)
    conj = conjugate_partition(lam)
    return [
        [(lam[i] - j) + (conj[j] - i) - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def conjugate_partition(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@cache
def num_standard(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula.

    This is also the multiplicity of the irreducible labelled by lam inside
    the k-fold tensor power under the classical commuting-actions duality.
    """
    lam = check_partition(lam)
    k = sum(lam)
    denom = math.prod(h for row in hook_lengths(lam) for h in row)
    f, rem = divmod(math.factorial(k), denom)
    assert rem == 0
    return f


def schur_dim(mu: Partition, d: int) -> int:
    """Dimension of the Schur module for shape mu on a d-dimensional space.

    Hook-content formula; zero when mu has more than d rows.
    """
    mu = check_partition(mu)
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(mu) > d:
        return 0
    hooks = hook_lengths(mu)
    num = 1
    den = 1
    for i in range(len(mu)):
        for j in range(mu[i]):
            num *= d + j - i
            den *= hooks[i][j]
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim
