"""Brute-force partition enumeration and hook-length counting.

This module is the ground truth the generating functions are checked
against, so it favours obviously-correct code over clever code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

__all__ = [
    "Partition",
    "PartitionClass",
    "ALL",
    "regular",
    "distinct",
    "residue",
    "fixed_parts",
    "enumerate_partitions",
    "conjugate",
    "hook_lengths",
    "hook_multiset",
    "count_hooks_oracle",
    "hook_count_table",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing tuple of positive parts.

    Indexing past the last part returns 0, so predicates such as
    ``p[1] == p[2]`` are defined for short (or empty) partitions.
    Indices are 1-based to match the usual lambda_1, lambda_2, ... notation.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.parts
        if not isinstance(p, tuple):
            object.__setattr__(self, "parts", tuple(p))
            p = self.parts
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {p}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must be non-increasing: {p}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError("partition parts are 1-indexed")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0


@dataclass(frozen=True)
class PartitionClass:
    """Membership predicate for a family of partitions.

    kind is one of ``all``, ``regular`` (no part divisible by t),
    ``distinct`` (each value at most t-1 times), ``residue`` (parts
    congruent to r mod m, at least ``min_part``) and ``fixed`` (parts drawn
    from ``allowed``).
    """

    kind: str = "all"
    t: int = 0
    r: int = 0
    m: int = 1
    min_part: int = 1
    allowed: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("all", "regular", "distinct", "residue", "fixed"):
            raise ValueError(f"unknown partition class {self.kind!r}")
        if self.kind in ("regular", "distinct") and self.t < 2:
            raise ValueError("t must be at least 2")
        if self.kind == "residue" and self.m < 1:
            raise ValueError("modulus must be positive")

    def allows_part(self, v: int) -> bool:
        if self.kind == "regular":
            return v % self.t != 0
        if self.kind == "residue":
            return v % self.m == self.r % self.m and v >= self.min_part
        if self.kind == "fixed":
            return v in self.allowed
        return True

    def max_multiplicity(self) -> Optional[int]:
        return self.t - 1 if self.kind == "distinct" else None

    def __contains__(self, p: Partition) -> bool:
        if not all(self.allows_part(v) for v in p):
            return False
        cap = self.max_multiplicity()
        return cap is None or all(c <= cap for c in p.multiplicities().values())


ALL = PartitionClass()


def regular(t: int) -> PartitionClass:
    return PartitionClass("regular", t=t)


def distinct(t: int) -> PartitionClass:
    return PartitionClass("distinct", t=t)


def residue(r: int, m: int, min_part: int = 1) -> PartitionClass:
    return PartitionClass("residue", r=r, m=m, min_part=min_part)


def fixed_parts(allowed: Sequence[int]) -> PartitionClass:
    return PartitionClass("fixed", allowed=tuple(sorted(set(allowed))))


def enumerate_partitions(n: int, cls: PartitionClass = ALL) -> Iterator[Partition]:
    """Yield every partition of n in ``cls`` in lexicographically decreasing order.

    Streams; nothing beyond the current partition is kept in memory.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    values = [v for v in range(n, 0, -1) if cls.allows_part(v)]
    cap = cls.max_multiplicity()
    parts: list[int] = []

    def rec(remaining: int, start: int):
        if remaining == 0:
            yield Partition(tuple(parts))
            return
        for idx in range(start, len(values)):
            v = values[idx]
            if v > remaining:
                continue
            most = remaining // v
            if cap is not None:
                most = min(most, cap)
            for c in range(most, 0, -1):
                parts.extend([v] * c)
                yield from rec(remaining - c * v, idx + 1)
                del parts[-c:]

    yield from rec(n, 0)


def conjugate(p: Partition) -> Partition:
    if not p:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.parts[0])))


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row: ``h(i,j) = lambda_i - j + lambda'_j - i + 1``."""
    conj = conjugate(p).parts
    return [[lam - j + conj[j - 1] - i + 1 for j in range(1, lam + 1)]
            for i, lam in enumerate(p.parts, start=1)]


def hook_multiset(p: Partition) -> Counter:
    return Counter(h for row in hook_lengths(p) for h in row)


def _hooks_equal(p: tuple[int, ...], conj: list[int], i: int) -> int:
    count = 0
    for r, lam in enumerate(p, start=1):
        # h(r, j) = lam - j + conj[j-1] - r + 1 is strictly decreasing in j
        if lam + conj[0] - r < i:
            break
        for j in range(1, lam + 1):
            h = lam - j + conj[j - 1] - r + 1
            if h == i:
                count += 1
                break
            if h < i:
                break
    return count


def count_hooks_oracle(n: int, t: int, i: int, kind: str = "regular") -> int:
    """Total number of hooks of length i over all t-regular (or t-distinct) partitions of n."""
    if t < 2 or i < 1:
        raise ValueError("need t >= 2 and i >= 1")
    cls = regular(t) if kind == "regular" else distinct(t)
    total = 0
    for p in enumerate_partitions(n, cls):
        if not p.parts or p.parts[0] + len(p.parts) - 1 < i:
            continue
        conj = [sum(1 for x in p.parts if x > j) for j in range(p.parts[0])]
        total += _hooks_equal(p.parts, conj, i)
    return total


def hook_count_table(n_max: int, t: int, i_max: int, kind: str = "regular") -> dict[int, list[int]]:
    """``{n: [count of hooks of length 1..i_max]}`` in a single enumeration pass per n."""
    cls = regular(t) if kind == "regular" else distinct(t)
    table = {}
    for n in range(n_max + 1):
        row = [0] * (i_max + 1)
        for p in enumerate_partitions(n, cls):
            for h, c in hook_multiset(p).items():
                if h <= i_max:
                    row[h] += c
        table[n] = row[1:]
    return table
