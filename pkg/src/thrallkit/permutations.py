"""Permutations of {1..k} in 0-based one-line notation.

A permutation is a tuple ``p`` with ``p[i]`` the (0-based) image of position
``i``.  Composition follows ``(p * q)(i) = p(q(i))``, so ``compose(p, q)``
applies ``q`` first.  Cycle notation in serialized output is 1-based to
match the usual "(12)", "(132)" style.
"""

from __future__ import annotations

import itertools

Perm = tuple[int, ...]


def identity(k: int) -> Perm:
    return tuple(range(k))


def compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def sign(p: Perm) -> int:
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def all_permutations(k: int) -> list[Perm]:
    return list(itertools.permutations(range(k)))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle type as a partition (weakly decreasing, fixed points included)."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def to_cycles(p: Perm) -> list[list[int]]:
    """Nontrivial cycles with 1-based entries, each starting at its minimum."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        cycles.append([x + 1 for x in cyc])
    return cycles


def from_cycles(cycles, k: int) -> Perm:
    """Build a permutation of {1..k} from 1-based cycles."""
    p = list(range(k))
    touched: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= k:
                raise ValueError(f"cycle entry {x} outside 1..{k}")
            if x - 1 in touched:
                raise ValueError(f"entry {x} appears in two cycles")
            touched.add(x - 1)
        for i, x in enumerate(cyc):
            p[x - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(p)


def cycles_string(p: Perm) -> str:
    cycles = to_cycles(p)
    if not cycles:
        return "id"
    return "".join("(" + "".join(str(x) for x in cyc) + ")" for cyc in cycles)


def perm_to_word(p: Perm) -> tuple[int, ...]:
    """One-line word with 1-based letters, e.g. id -> (1, 2, .., k)."""
    return tuple(v + 1 for v in p)


def word_to_perm(word: tuple[int, ...]) -> Perm:
    p = tuple(x - 1 for x in word)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{word} is not a permutation word")
    return p
