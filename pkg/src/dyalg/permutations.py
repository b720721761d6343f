"""Permutations of {1..N} in one-line (word) notation, and integer compositions.

A permutation is a tuple ``(s(1), ..., s(N))`` of the integers 1..N.  These
are the wiring data of normally ordered diagrams: position ``q`` on the
coaction side is matched with position ``s(q)`` on the action side.

A composition of N into n parts is a tuple of n nonnegative integers summing
to N; it records how many strands attach to each module slot.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


def is_permutation(word: Sequence[int]) -> bool:
    """True iff word is a rearrangement of 1..len(word).

    >>> is_permutation((2, 1, 3)), is_permutation((1, 1, 2))
    (True, False)
    """
    return sorted(word) == list(range(1, len(word) + 1))


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """The permutation ``s after t``: (s*t)(i) = s(t(i)).

    >>> compose((2, 1, 3), (3, 2, 1))
    (3, 1, 2)
    """
    if len(s) != len(t):
        raise ValueError("size mismatch")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v - 1] = i + 1
    return tuple(inv)


def sign(s: Sequence[int]) -> int:
    """Sign of a permutation via cycle count."""
    seen = [False] * len(s)
    sgn = 1
    for i in range(len(s)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = s[j] - 1
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def reversal(n: int) -> tuple[int, ...]:
    """The order-reversing involution i -> n + 1 - i.

    >>> reversal(3)
    (3, 2, 1)
    """
    return tuple(n - i for i in range(n))


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All compositions of ``total`` into ``parts`` nonnegative parts,
    lexicographically sorted.

    >>> compositions(3, 2)
    [(0, 3), (1, 2), (2, 1), (3, 0)]
    >>> compositions(0, 3)
    [(0, 0, 0)]
    """
    if parts < 1:
        raise ValueError("empty slot count")
    if total < 0:
        raise ValueError("negative total")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int) -> None:
        if len(prefix) == parts - 1:
            out.append(prefix + (remaining,))
            return
        for head in range(remaining + 1):
            rec(prefix + (head,), remaining - head)

    rec((), total)
    return out


def block_starts(comp: Sequence[int]) -> list[int]:
    """0-based start offset of each block when parts are laid out in order."""
    starts, acc = [], 0
    for p in comp:
        starts.append(acc)
        acc += p
    return starts
