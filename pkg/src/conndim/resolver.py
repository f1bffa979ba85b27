"""Resolving-set machinery: representations, verification with witnesses, and
the pair-coverage bitmasks the exact solver branches over.

Everything here works on any matrix exposing `n` and `value(u, v)`, so the
same code serves local-connectivity and shortest-path-distance landmarks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def representation(matrix, v: int, landmarks: Sequence[int]) -> tuple:
    """The vector of matrix values from v to each landmark, in landmark order."""
    if not 0 <= v < matrix.n:
        raise IndexError(f"vertex {v} out of range")
    for w in landmarks:
        if not 0 <= w < matrix.n:
            raise IndexError(f"landmark {w} out of range")
    return tuple(matrix.value(v, w) for w in landmarks)


@dataclass(frozen=True)
class ResolvingVerdict:
    resolving: bool
    witness: tuple[int, int] | None  # lexicographically smallest unresolved pair

    def __bool__(self) -> bool:
        return self.resolving


def is_resolving(matrix, landmark_set) -> ResolvingVerdict:
    """Check whether the landmark set gives every vertex a distinct vector.

    On failure the witness is the lexicographically smallest pair sharing a
    vector.  Landmarks distinguish themselves automatically (their own column
    holds the unique diagonal value).
    """
    ws = sorted(set(landmark_set))
    for w in ws:
        if not 0 <= w < matrix.n:
            raise IndexError(f"landmark {w} out of range")
    groups: dict[tuple, list[int]] = {}
    for v in range(matrix.n):
        groups.setdefault(tuple(matrix.value(v, w) for w in ws), []).append(v)
    best = None
    for members in groups.values():
        if len(members) > 1:
            members.sort()
            pair = (members[0], members[1])
            if best is None or pair < best:
                best = pair
    if best is None:
        return ResolvingVerdict(True, None)
    return ResolvingVerdict(False, best)


@dataclass(frozen=True)
class PairCoverage:
    """The set-cover view of resolving sets.

    Pairs are enumerated lexicographically: (0,1), (0,2), ..., (n-2,n-1).
    `cover[w]` is a bitmask over pair indices with bit p set when landmark w
    separates pair p (different values, or w is one of the pair).  A landmark
    set resolves exactly when its masks OR to all ones.
    """

    n: int
    cover: tuple[int, ...]

    @property
    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.pair_count) - 1

    def pair_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        # pairs (0,*) come first, then (1,*), ...
        return u * (2 * self.n - u - 1) // 2 + (v - u - 1)

    def pair_of_index(self, p: int) -> tuple[int, int]:
        u = 0
        while p >= self.n - u - 1:
            p -= self.n - u - 1
            u += 1
        return (u, u + 1 + p)

    def covers(self, landmark_set) -> bool:
        mask = 0
        for w in landmark_set:
            mask |= self.cover[w]
        return mask == self.full_mask


def pair_coverage(matrix) -> PairCoverage:
    n = matrix.n
    masks = [0] * n
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            bit = 1 << p
            for w in range(n):
                if matrix.value(u, w) != matrix.value(v, w):
                    masks[w] |= bit
            p += 1
    return PairCoverage(n, tuple(masks))
