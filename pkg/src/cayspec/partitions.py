"""Partitions, hooks, rim hooks, q-cores and the Murnaghan-Nakayama rule.

Nodes are 1-based ``(row, column)`` pairs, row 1 being the longest part.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import NotAHook, SizeMismatch


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def row(self, i: int) -> int:
        """Length of row i (1-based), 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def nodes(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class HookData:
    corner: tuple[int, int]
    length: int
    hand: tuple[int, int]
    foot: tuple[int, int]


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in lexicographic order, (1^n) first and (n) last."""

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return sorted(Partition(p) for p in gen(n, n))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def hook(lam: Partition, corner: tuple[int, int]) -> HookData:
    i, j = corner
    if not (1 <= i <= len(lam) and 1 <= j <= lam.row(i)):
        raise NotAHook(f"{corner} is not a node of {lam}")
    foot_row = conjugate(lam).row(j)
    length = (lam.row(i) - j) + (foot_row - i) + 1
    return HookData(corner, length, (i, lam.row(i)), (foot_row, j))


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    lamc = conjugate(lam)
    return {(i, j): lam.row(i) - j + lamc.row(j) - i + 1 for i, j in lam.nodes()}


def remove_rim_hook(lam: Partition, corner: tuple[int, int], q: int) -> tuple[Partition, int]:
    """Delete the rim q-hook attached to ``corner``; return the rest and its leg length.

    Rows i..foot-1 each drop to one less than the row below them and the
    foot row is cut back to column j - 1.
    """
    h = hook(lam, corner)
    if h.length != q:
        raise NotAHook(f"hook at {corner} of {lam} has length {h.length}, not {q}")
    i, j = corner
    foot = h.foot[0]
    rows = list(lam.parts)
    for r in range(i, foot):
        rows[r - 1] = lam.row(r + 1) - 1
    rows[foot - 1] = j - 1
    return Partition(tuple(p for p in rows if p > 0)), foot - i


def rim_hooks(lam: Partition, q: int) -> list[tuple[Partition, int]]:
    return [remove_rim_hook(lam, node, q) for node, length in hook_lengths(lam).items() if length == q]


def q_core(lam: Partition, q: int) -> Partition:
    """Strip rim q-hooks until none remain, always taking the first available."""
    while True:
        hooks = rim_hooks(lam, q)
        if not hooks:
            return lam
        lam = hooks[0][0]


def all_q_cores(lam: Partition, q: int) -> set[Partition]:
    """Every endpoint reachable by some order of rim q-hook removals."""

    @lru_cache(maxsize=None)
    def walk(mu: Partition) -> frozenset:
        nxt = rim_hooks(mu, q)
        if not nxt:
            return frozenset([mu])
        return frozenset().union(*(walk(nu) for nu, _ in nxt))

    return set(walk(lam))


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    first, rest = mu[0], mu[1:]
    return sum((-1) ** leg * _mn(nu, rest) for nu, leg in rim_hooks(lam, first))


def mn_character(lam: Partition, mu: Partition | Sequence[int]) -> int:
    """chi^lam at the class of cycle type mu, by signed rim-hook recursion."""
    mu_parts = tuple(mu.parts if isinstance(mu, Partition) else mu)
    if lam.n != sum(mu_parts):
        raise SizeMismatch(f"|{lam}| = {lam.n} but |mu| = {sum(mu_parts)}")
    return _mn(lam, mu_parts)


def degree_hook_length(lam: Partition) -> int:
    return factorial(lam.n) // prod(hook_lengths(lam).values())


def sign(mu: Partition) -> int:
    return -1 if (mu.n - len(mu)) % 2 else 1


def mn_table(n: int) -> tuple[list[Partition], list[list[int]]]:
    """Rows chi^lam and columns cycle types, both in the order of partitions_of(n)."""
    parts = partitions_of(n)
    return parts, [[mn_character(lam, mu) for mu in parts] for lam in parts]
