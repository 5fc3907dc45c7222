"""Partition triplets, the seven-way split of T(n) and S(n-3), and the six bijections.

A T-side triplet (alpha, beta, gamma) has alpha with parts = 2 (mod 3),
beta with parts = 1 (mod 3) and >= 7, gamma with parts in {6, 9}. The
S-side is the same except the second component's floor is 4. The count of
T-side triplets of weight n never exceeds the count of S-side triplets of
weight n-3 once n >= 152; T_1..T_6 are matched to S_1..S_6 by explicit
weight-lowering maps and T_7 is handled by counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterator, Optional

from .partitions import Partition, enumerate_partitions, fixed_parts, residue
from .report import CheckReport

__all__ = [
    "ClassificationGap",
    "DomainViolation",
    "NotCoprime",
    "Triplet",
    "enumerate_triplets",
    "t_set_count",
    "classify",
    "t_predicates",
    "s_predicates",
    "phi",
    "phi_inv",
    "t_ab_count",
    "t_ab_bounds",
    "t_abc_count",
    "t_abc_lower_bound",
    "t_restricted",
    "t7_count",
    "s7_count",
    "t7_vs_s7",
    "verify_bijection_suite",
    "PAPER_EXAMPLES",
]


class ClassificationGap(RuntimeError):
    """A T-side triplet matched none of the seven subsets."""


class DomainViolation(ValueError):
    """A map was applied outside the subset it is defined on."""


class NotCoprime(ValueError):
    pass


_SECOND_FLOOR = {"T": 7, "S": 4}


@dataclass(frozen=True)
class Triplet:
    first: Partition
    second: Partition
    third: Partition
    side: str = "T"

    def __post_init__(self):
        for name in ("first", "second", "third"):
            v = getattr(self, name)
            if not isinstance(v, Partition):
                object.__setattr__(self, name, Partition.of(*v))
        if self.side not in _SECOND_FLOOR:
            raise ValueError(f"side must be 'T' or 'S', got {self.side!r}")
        if any(p % 3 != 2 for p in self.first):
            raise ValueError(f"first component needs parts = 2 mod 3: {self.first}")
        floor_ = _SECOND_FLOOR[self.side]
        if any(p % 3 != 1 or p < floor_ for p in self.second):
            raise ValueError(f"second component needs parts = 1 mod 3 and >= {floor_}: {self.second}")
        if any(p not in (6, 9) for p in self.third):
            raise ValueError(f"third component needs parts in {{6, 9}}: {self.third}")

    @classmethod
    def make(cls, first=(), second=(), third=(), side="T") -> "Triplet":
        return cls(Partition.of(*first), Partition.of(*second), Partition.of(*third), side)

    @property
    def weight(self) -> int:
        return self.first.weight + self.second.weight + self.third.weight

    def __str__(self):
        return f"{self.side}({self.first}, {self.second}, {self.third})"


@lru_cache(maxsize=1024)
def _component(w: int, which: str) -> tuple[Partition, ...]:
    cls = {
        "first": residue(2, 3),
        "second-T": residue(1, 3, 7),
        "second-S": residue(1, 3, 4),
        "third": fixed_parts((6, 9)),
    }[which]
    return tuple(enumerate_partitions(w, cls))


def _trusted(first, second, third, side) -> Triplet:
    # components come from the class enumerators, so skip re-validation
    x = object.__new__(Triplet)
    object.__setattr__(x, "first", first)
    object.__setattr__(x, "second", second)
    object.__setattr__(x, "third", third)
    object.__setattr__(x, "side", side)
    return x


def enumerate_triplets(n: int, side: str = "T") -> Iterator[Triplet]:
    """Every triplet of the given side and weight n, each once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if side not in _SECOND_FLOOR:
        raise ValueError(f"side must be 'T' or 'S', got {side!r}")
    second = "second-" + side
    for w3 in range(0, n + 1, 3):
        gammas = _component(w3, "third")
        if not gammas:
            continue
        for w2 in range(0, n - w3 + 1):
            betas = _component(w2, second)
            if not betas:
                continue
            for alpha in _component(n - w3 - w2, "first"):
                for beta in betas:
                    for gamma in gammas:
                        yield _trusted(alpha, beta, gamma, side)


def t_set_count(n: int, side: str = "T") -> int:
    return sum(1 for _ in enumerate_triplets(n, side))


# Missing parts read as 0 through Partition.__getitem__, so the empty alpha
# satisfies alpha_1 = alpha_2 <= 5 and alpha = (5) has alpha_1 > alpha_2.

def _small_head(p: Partition) -> bool:
    return (p[1] == p[2] and p[1] <= 5) or p.parts == (2,)


def t_predicates(x: Triplet) -> list[bool]:
    a, b, g = x.first, x.second, x.third
    empty_b = not b
    f6, f9 = g.multiplicity(6), g.multiplicity(9)
    head = _small_head(a)
    return [
        not empty_b,
        empty_b and a[1] > a[2] and a[1] >= 5,
        empty_b and a[1] == a[2] and a[1] >= 11,
        empty_b and a[1] == a[2] == 8,
        empty_b and f6 >= 4 and head,
        empty_b and f6 <= 3 and f9 >= 2 and head,
        empty_b and f6 <= 3 and f9 <= 1 and head,
    ]


def s_predicates(x: Triplet) -> list[bool]:
    p, m, d = x.first, x.second, x.third
    head = _small_head(p)
    mp = m.parts
    return [
        bool(mp) and (len(mp) == 1 or mp[-2] > mp[-1]),
        p[1] >= 2 and not mp,
        len(mp) == 4 and mp[1:] == (4, 4, 4) and mp[0] >= max(2 * p[1] - 15, 7) and mp[0] % 2 == 1,
        p[1] <= 8 and 5 in p.parts and mp == (4, 4),
        mp == (7, 7, 7) and head,
        mp == (7, 4, 4) and d.multiplicity(6) <= 3 and head,
        set(p.parts) <= {2} and set(mp) <= {4, 7} and m.multiplicity(4) >= 4 and not d,
    ]


def classify(x: Triplet) -> Optional[int]:
    """Subset index 1..7; ``None`` for an S-side triplet in no subset."""
    if x.side == "T":
        hits = [i for i, ok in enumerate(t_predicates(x), start=1) if ok]
        if not hits:
            raise ClassificationGap(str(x))
        if len(hits) > 1:
            raise ClassificationGap(f"{x} matches subsets {hits}")
        return hits[0]
    hits = [i for i, ok in enumerate(s_predicates(x), start=1) if ok]
    if len(hits) > 1:
        raise ClassificationGap(f"{x} matches subsets {hits}")
    return hits[0] if hits else None


def _require(x: Triplet, side: str, i: int):
    if x.side != side or classify(x) != i:
        raise DomainViolation(f"{x} is not in {side}_{i}")


def _tp(first, second, third, side):
    return Triplet(Partition.of(*first), Partition.of(*second), Partition.of(*third), side)


def phi(i: int, x: Triplet) -> Triplet:
    """Map T_i(n) into S_i(n-3)."""
    _require(x, "T", i)
    a, b, g = list(x.first), list(x.second), list(x.third)
    if i == 1:
        b[-1] -= 3
        return _tp(a, b, g, "S")
    if i == 2:
        a[0] -= 3
        return _tp(a, (), g, "S")
    if i == 3:
        k = (a[0] - 2) // 3
        return _tp(a[2:], (6 * k - 11, 4, 4, 4), g, "S")
    if i == 4:
        # drop the two leading 8s and insert a 5
        return _tp(a[2:] + [5], (4, 4), g, "S")
    if i == 5:
        g.sort(reverse=True)
        return _tp(a, (7, 7, 7), g[:-4], "S")
    if i == 6:
        return _tp(a, (7, 4, 4), g[2:], "S")
    raise ValueError("phi is defined for i in 1..6")


def phi_inv(i: int, x: Triplet) -> Triplet:
    """Map S_i(n-3) back into T_i(n)."""
    _require(x, "S", i)
    p, m, d = list(x.first), list(x.second), list(x.third)
    if i == 1:
        m[-1] += 3
        return _tp(p, m, d, "T")
    if i == 2:
        p[0] += 3
        return _tp(p, (), d, "T")
    if i == 3:
        h = (m[0] + 15) // 2
        return _tp([h, h] + p, (), d, "T")
    if i == 4:
        p.remove(5)
        return _tp([8, 8] + p, (), d, "T")
    if i == 5:
        return _tp(p, (), d + [6, 6, 6, 6], "T")
    if i == 6:
        return _tp(p, (), [9, 9] + d, "T")
    raise ValueError("phi_inv is defined for i in 1..6")


# ---------------------------------------------------------------------------
# Counting T_7 and S_7

def t_ab_count(a: int, b: int, n: int) -> int:
    """Non-negative solutions of ``a x + b y = n``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    if n < 0:
        return 0
    return sum(1 for x in range(n // a + 1) if (n - a * x) % b == 0)


def t_ab_bounds(a: int, b: int, n: int) -> tuple[int, int]:
    """``floor((floor(n/a)+1)/b)`` and ``ceil((floor(n/a)+1)/b)``."""
    r = Fraction(n // a + 1, b)
    return floor(r), ceil(r)


def t_abc_count(a: int, b: int, c: int, n: int) -> int:
    """Non-negative solutions of ``a x + b y + c z = n``; needs gcd(a, b) = 1."""
    if c < 1:
        raise ValueError("c must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    if n < 0:
        return 0
    return sum(t_ab_count(a, b, n - c * z) for z in range(n // c + 1))


def t_abc_lower_bound(a: int, b: int, c: int, n: int) -> Fraction:
    return Fraction(n * n, 2 * a * b * c) - (Fraction(n, c) + 1)


def t_restricted(n: int) -> int:
    """Solutions of ``5a + 2b = n`` with ``a != 1``."""
    if n < 0:
        return 0
    return sum(1 for a in range(n // 5 + 1) if a != 1 and (n - 5 * a) % 2 == 0)


def t7_count(n: int) -> int:
    """#T_7(n) by the eight choices of gamma."""
    return sum(t_restricted(n - 9 * i - 6 * j) for i in range(2) for j in range(4))


def s7_count(n: int) -> int:
    """#S_7(n-3): solutions of ``2a + 7b + 4c = n - 19``."""
    return t_abc_count(2, 7, 4, n - 19)


def t7_vs_s7(n_lo: int = 152, n_hi: int = 600) -> CheckReport:
    """Check #T_7(n) <= 8(n+2)/10 <= (n-19)^2/112 - (n-15)/4 <= #S_7(n-3)."""
    if n_lo < 3:
        raise ValueError("n must be at least 3")
    report = CheckReport("t7-vs-s7", {"lo": n_lo, "hi": n_hi}, (n_lo, n_hi), grade="theorem")
    for n in range(n_lo, n_hi + 1):
        t7, s7 = t7_count(n), s7_count(n)
        upper = Fraction(8 * (n + 2), 10)
        lower = Fraction((n - 19) ** 2, 112) - Fraction(n - 15, 4)
        if t7 > s7:
            report.add_violation(n, f"#T7={t7}", f"#S7={s7}")
        if t7 > upper:
            report.add_violation(n, f"#T7={t7}", f"8(n+2)/10={upper}")
        if s7 < lower:
            report.add_violation(n, f"#S7={s7}", f"lower={lower}")
        if upper > lower:
            report.add_violation(n, f"8(n+2)/10={upper}", f"lower={lower}")
    report.add_witness(n_lo, {"T7": t7_count(n_lo), "S7": s7_count(n_lo)})
    return report.finish()


# ---------------------------------------------------------------------------

PAPER_EXAMPLES = {
    1: (Triplet.make((), (10, 10, 7), (9, 6)), Triplet.make((), (10, 10, 4), (9, 6), "S")),
    2: (Triplet.make((5, 2, 2), (), (9,)), Triplet.make((2, 2, 2), (), (9,), "S")),
    3: (Triplet.make((11, 11, 5), (), (6,)), Triplet.make((5,), (7, 4, 4, 4), (6,), "S")),
    4: (Triplet.make((8, 8, 8, 2), (), (6,)), Triplet.make((8, 5, 2), (4, 4), (6,), "S")),
    5: (Triplet.make((5, 5, 2), (), (9, 6, 6, 6, 6)), Triplet.make((5, 5, 2), (7, 7, 7), (9,), "S")),
    6: (Triplet.make((2,), (), (9, 9, 9, 6)), Triplet.make((2,), (7, 4, 4), (9, 6), "S")),
}


def verify_bijection_suite(i: int, n: int) -> CheckReport:
    """Enumerate T_i(n) and S_i(n-3) and check phi_i is a bijection between them."""
    if not 1 <= i <= 6:
        raise ValueError("i must be in 1..6")
    if n < 3:
        raise ValueError("n must be at least 3")
    report = CheckReport(f"bijection-{i}", {"i": i, "n": n}, (n, n), grade="theorem")
    source = [x for x in enumerate_triplets(n, "T") if classify(x) == i]
    target = {x for x in enumerate_triplets(n - 3, "S") if classify(x) == i}
    images = set()
    for x in source:
        y = phi(i, x)
        if y not in target:
            report.add_violation(n, str(x), f"image {y} not in S_{i}({n - 3})")
        if y in images:
            report.add_violation(n, str(x), f"image {y} hit twice")
        images.add(y)
        if phi_inv(i, y) != x:
            report.add_violation(n, str(x), f"round trip gave {phi_inv(i, y)}")
    for y in target:
        if phi(i, phi_inv(i, y)) != y:
            report.add_violation(n, str(y), "inverse round trip failed")
    if len(source) != len(target):
        report.add_violation(n, f"#T_{i}={len(source)}", f"#S_{i}={len(target)}")
    report.add_witness(n, {"T": len(source), "S": len(target)})
    example = PAPER_EXAMPLES[i][0]
    if example.weight == n:
        report.add_witness(n, {"paper-example": str(example), "present": example in set(source)})
    return report.finish()
