"""Ground-set combinatorics: permutations, ordered partitions, preposets.

Everything lives on the ground set [n] = {1, ..., n}.  Externally elements
are 1-based; internally relations are stored as bitmask rows where bit i
encodes the element i+1.  All values are immutable and hashable, so they can
be shared freely and used as dict keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence


def _closure(rows: list[int], n: int) -> tuple[int, ...]:
    """Reflexive-transitive closure of a relation given as bitmask rows."""
    rows = list(rows)
    for i in range(n):
        rows[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return tuple(rows)


class Preposet:
    """A reflexive and transitive binary relation on [n].

    Stored as one bitmask row per element: ``i rel j`` iff bit ``j-1`` of
    ``rows[i-1]`` is set.  Construction always takes the reflexive-transitive
    closure, so every instance is a genuine preposet.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = (), *, _rows: tuple[int, ...] | None = None):
        self.n = n
        if _rows is not None:
            self.rows = _rows
            return
        rows = [0] * n
        for a, b in pairs:
            rows[a - 1] |= 1 << (b - 1)
        self.rows = _closure(rows, n)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int], *, closed: bool = False) -> "Preposet":
        if closed:
            return cls(n, _rows=tuple(rows))
        return cls(n, _rows=_closure(list(rows), n))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.rows[a - 1] >> (b - 1) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(1, self.n + 1):
            row = self.rows[a - 1]
            for b in range(1, self.n + 1):
                if row >> (b - 1) & 1:
                    yield (a, b)

    def extends(self, other: "Preposet") -> bool:
        """True iff every relation of ``other`` also holds here."""
        return all(o & ~s == 0 for s, o in zip(self.rows, other.rows))

    def is_antisymmetric(self) -> bool:
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.rows[a] >> b & 1 and self.rows[b] >> a & 1:
                    return False
        return True

    def is_total(self) -> bool:
        """True iff any two elements are comparable (possibly both ways)."""
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if not (self.rows[a] >> b & 1 or self.rows[b] >> a & 1):
                    return False
        return True

    def intersection(self, other: "Preposet") -> "Preposet":
        return Preposet.from_rows(self.n, [s & o for s, o in zip(self.rows, other.rows)], closed=True)

    def union(self, other: "Preposet") -> "Preposet":
        return Preposet.from_rows(self.n, [s | o for s, o in zip(self.rows, other.rows)])

    def restrict_shift(self, keep: Iterable[int], shift: int = 0) -> "Preposet":
        """Induced relation on ``keep``, relabeled order-preservingly, then shifted.

        The elements of ``keep`` are sorted and sent to ``1+shift, 2+shift, ...``.
        ``shift`` may be negative as long as the result stays on a valid ground
        set starting at 1.
        """
        kept = sorted(set(keep))
        m = len(kept)
        lo = 1 + shift
        if m and lo < 1:
            raise ValueError("shift would leave the positive ground set")
        size = m + shift
        rows = [0] * size
        for i, a in enumerate(kept):
            for j, b in enumerate(kept):
                if self.leq(a, b):
                    rows[i + shift] |= 1 << (j + shift)
        return Preposet.from_rows(size, rows)

    def equivalence_classes(self) -> list[frozenset[int]]:
        """Classes of the symmetric part, listed by smallest element."""
        seen = set()
        out = []
        for a in range(1, self.n + 1):
            if a in seen:
                continue
            cls = frozenset(
                b for b in range(1, self.n + 1)
                if self.leq(a, b) and self.leq(b, a)
            )
            seen |= cls
            out.append(cls)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Preposet) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        rel = [(a, b) for a, b in self.pairs() if a != b]
        return f"Preposet({self.n}, {rel})"


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation: images[i] = sigma(i+1)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def inversions(self) -> frozenset[tuple[int, int]]:
        """Pairs (a, b) with a > b appearing in the order a ... b."""
        img = self.images
        return frozenset(
            (img[i], img[j])
            for i in range(len(img))
            for j in range(i + 1, len(img))
            if img[i] > img[j]
        )

    def as_partition(self) -> "OrderedPartition":
        return OrderedPartition(tuple(frozenset([v]) for v in self.images))


def weak_order_leq(p: Permutation, q: Permutation) -> bool:
    """Inclusion of inversion sets."""
    if p.n != q.n:
        raise ValueError("permutations on different ground sets")
    return p.inversions() <= q.inversions()


def weak_order_covers(p: Permutation) -> list[Permutation]:
    """Permutations covering p: swap an adjacent ascent, adding one inversion."""
    out = []
    img = p.images
    for i in range(p.n - 1):
        if img[i] < img[i + 1]:
            new = list(img)
            new[i], new[i + 1] = new[i + 1], new[i]
            out.append(Permutation(tuple(new)))
    return out


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(imgs) for imgs in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered sequence of disjoint nonempty blocks covering [n]."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise ValueError("empty part")
            if part & seen:
                raise ValueError("parts not disjoint")
            seen |= part
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("parts do not cover an initial segment [n]")

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    @classmethod
    def from_lists(cls, parts: Iterable[Iterable[int]]) -> "OrderedPartition":
        return cls(tuple(frozenset(p) for p in parts))

    def part_index(self, i: int) -> int:
        """1-based index of the part containing i."""
        for k, part in enumerate(self.parts, start=1):
            if i in part:
                return k
        raise KeyError(i)

    def preposet(self) -> Preposet:
        """i before-or-with j iff the part of i is not after the part of j."""
        n = self.n
        idx = [0] * (n + 1)
        for k, part in enumerate(self.parts, start=1):
            for i in part:
                idx[i] = k
        rows = [0] * n
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if idx[a] <= idx[b]:
                    rows[a - 1] |= 1 << (b - 1)
        return Preposet.from_rows(n, rows, closed=True)

    def refines(self, other: "OrderedPartition") -> bool:
        if self.n != other.n:
            raise ValueError("partitions of different ground sets")
        return other.preposet().extends(self.preposet())

    def restrict_shift(self, keep: Iterable[int], shift: int = 0) -> "OrderedPartition":
        """Induced ordered partition on ``keep``, relabeled and shifted.

        Empty intersections are dropped.  Elements of ``keep`` are relabeled
        order-preservingly onto ``1+shift .. len(keep)+shift``; parts keep
        their relative order.
        """
        kept = sorted(set(keep))
        relabel = {a: i + 1 + shift for i, a in enumerate(kept)}
        if kept and min(relabel.values()) < 1:
            raise ValueError("shift would leave the positive ground set")
        parts = []
        for part in self.parts:
            hit = frozenset(relabel[a] for a in part if a in relabel)
            if hit:
                parts.append(hit)
        return OrderedPartition(tuple(parts))

    def canonical_key(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """(#parts, parts as sorted tuples): the documented enumeration order."""
        return (len(self.parts), tuple(tuple(sorted(p)) for p in self.parts))

    def __repr__(self) -> str:
        return "|".join("".join(str(x) for x in sorted(p)) for p in self.parts)


def enumerate_ordered_partitions(n: int, num_parts: int | None = None) -> list[OrderedPartition]:
    """All ordered partitions of [n], by number of parts then lexicographically.

    The order (number of parts, then part contents compared as sorted integer
    tuples) is part of the public contract; golden outputs depend on it.
    """
    if n == 0:
        return []
    out: list[OrderedPartition] = []
    ks = [num_parts] if num_parts is not None else range(1, n + 1)
    for k in ks:
        found = set()
        for assign in itertools.product(range(k), repeat=n):
            if len(set(assign)) != k:
                continue
            parts = [frozenset(i + 1 for i, a in enumerate(assign) if a == j) for j in range(k)]
            found.add(tuple(parts))
        block = [OrderedPartition(p) for p in found]
        block.sort(key=OrderedPartition.canonical_key)
        out.extend(block)
    return out


def fubini_number(n: int) -> int:
    """Number of ordered partitions of [n], via a(n) = sum C(n,k) a(n-k)."""
    a = [1] + [0] * n
    for m in range(1, n + 1):
        a[m] = sum(comb(m, k) * a[m - k] for k in range(1, m + 1))
    return a[n]


def quotient_relation(
    pairs: Iterable[tuple[int, int]], classes: Sequence[frozenset[int]]
) -> set[tuple[int, int]]:
    """Quotient of a binary relation by a set partition.

    Classes are indexed by position; the result relates class indices I, J
    whenever some i in class I and j in class J satisfy i rel j.
    """
    where: dict[int, int] = {}
    for k, cls in enumerate(classes):
        for x in cls:
            if x in where:
                raise ValueError("classes are not disjoint")
            where[x] = k
    out = set()
    for a, b in pairs:
        out.add((where[a], where[b]))
    return out
