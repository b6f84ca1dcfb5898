"""Maya diagram combinatorics.

A Maya diagram is a set of integers containing every sufficiently negative
integer and only finitely many non-negative ones.  The canonical encoding
used here is the finite *index set*: the symmetric difference of the
diagram with the trivial diagram (all negative integers), so the trivial
diagram has an empty index set and membership of m is

    m in M  <=>  exactly one of (m < 0), (m in index_set) holds.

All values are immutable; every operation returns a new value.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

FILLED, EMPTY, ORIGIN = "●", "○", "|"
FILLED_ASCII, EMPTY_ASCII = "#", "."


class IntegerMultiset:
    """Finite multiset of integers, stored as (element, multiplicity) pairs."""

    __slots__ = ("entries",)

    def __init__(self, items=()):
        if isinstance(items, IntegerMultiset):
            self.entries = items.entries
            return
        if isinstance(items, dict):
            counts = dict(items)
        else:
            counts = Counter(items)
        for k, mult in counts.items():
            if not isinstance(k, int) or isinstance(k, bool):
                raise ValueError(f"multiset element {k!r} is not an integer")
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity of {k} must be a positive integer")
        self.entries = tuple(sorted(counts.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    @property
    def cardinality(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def is_even(self) -> bool:
        return all(m % 2 == 0 for _, m in self.entries)

    def multiplicity(self, k: int) -> int:
        for elem, mult in self.entries:
            if elem == k:
                return mult
        return 0

    def union(self, other: "IntegerMultiset") -> "IntegerMultiset":
        """Multiset union in the composition sense: multiplicities add."""
        counts = dict(self.entries)
        for k, m in IntegerMultiset(other).entries:
            counts[k] = counts.get(k, 0) + m
        return IntegerMultiset(counts)

    def translate(self, n: int) -> "IntegerMultiset":
        return IntegerMultiset({k + n: m for k, m in self.entries})

    def decompose(self) -> tuple[tuple[int, ...], "IntegerMultiset"]:
        """Split into (odd-multiplicity support, halved remainder).

        The original multiset is the union of the first part with two
        copies of the second.
        """
        odd = tuple(k for k, m in self.entries if m % 2)
        halves = {k: m // 2 for k, m in self.entries if m // 2}
        return odd, IntegerMultiset(halves)

    def __iter__(self):
        for k, m in self.entries:
            for _ in range(m):
                yield k

    def __len__(self):
        return self.cardinality

    def __contains__(self, k):
        return self.multiplicity(k) > 0

    def __eq__(self, other):
        if not isinstance(other, IntegerMultiset):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        inner = ", ".join(
            str(k) if m == 1 else f"{k}^{m}" for k, m in self.entries
        )
        return "{" + inner + "}"

    def to_json(self) -> list[list[int]]:
        return [[k, m] for k, m in self.entries]

    @classmethod
    def from_json(cls, data) -> "IntegerMultiset":
        return cls({int(k): int(m) for k, m in data})


def multiset_decompose(k: IntegerMultiset) -> tuple[tuple[int, ...], IntegerMultiset]:
    return IntegerMultiset(k).decompose()


@dataclass(frozen=True)
class BlockCoordinates:
    """Odd-length strictly increasing boundary positions of a diagram's runs."""

    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(b) for b in self.coords)
        object.__setattr__(self, "coords", c)
        if len(c) % 2 == 0:
            raise ValueError("block coordinates must have odd length")
        if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
            raise ValueError("block coordinates must be strictly increasing")

    @property
    def genus(self) -> int:
        return (len(self.coords) - 1) // 2

    def filled_block_lengths(self) -> tuple[int, ...]:
        c = self.coords
        return tuple(c[2 * j + 2] - c[2 * j + 1] for j in range(self.genus))


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Split of an index set into negative part (as s = -1-k) and t = k >= 0.

    Both lists are strictly decreasing; the encoded index set is
    {-1-s for s in s_list} union {t for t in t_list}.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.s)

    @property
    def q(self) -> int:
        return len(self.t)

    @property
    def size(self) -> int:
        return self.r + self.q

    @property
    def index(self) -> int:
        return self.q - self.r

    def index_set(self) -> tuple[int, ...]:
        return tuple(sorted([-1 - s for s in self.s] + list(self.t)))

    def __str__(self):
        left = ",".join(str(s) for s in self.s)
        right = ",".join(str(t) for t in self.t)
        return f"({left} | {right})"


class MayaDiagram:
    """A Maya diagram, canonically encoded by its finite index set."""

    __slots__ = ("index_set", "_key_set")

    def __init__(self, index_set=()):
        ks = sorted(index_set)
        for k in ks:
            if not isinstance(k, int) or isinstance(k, bool):
                raise ValueError(f"index set element {k!r} is not an integer")
        for a, b in zip(ks, ks[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a} in index set")
        self.index_set = tuple(ks)
        self._key_set = frozenset(ks)

    @classmethod
    def trivial(cls) -> "MayaDiagram":
        return cls()

    @classmethod
    def from_block_coordinates(cls, coords) -> "MayaDiagram":
        """Diagram whose filled positions are (-inf,b0) u [b1,b2) u ..."""
        bc = coords if isinstance(coords, BlockCoordinates) else BlockCoordinates(tuple(coords))
        b = bc.coords

        def member(m: int) -> bool:
            if m < b[0]:
                return True
            for j in range(bc.genus):
                if b[2 * j + 1] <= m < b[2 * j + 2]:
                    return True
            return False

        ks = []
        for m in range(min(0, b[0]), max(0, b[-1])):
            if member(m) != (m < 0):
                ks.append(m)
        return cls(ks)

    def __contains__(self, m: int) -> bool:
        return (m < 0) != (m in self._key_set)

    @property
    def index(self) -> int:
        """Integer offset of the diagram's tail under translation."""
        neg = sum(1 for k in self.index_set if k < 0)
        return (len(self.index_set) - neg) - neg

    def flip(self, k: int) -> "MayaDiagram":
        ks = set(self.index_set)
        ks ^= {k}
        return MayaDiagram(ks)

    def multi_flip(self, flips) -> "MayaDiagram":
        """Toggle a multiset of positions; even multiplicities cancel."""
        odd, _ = IntegerMultiset(flips).decompose()
        return MayaDiagram(set(self.index_set) ^ set(odd))

    def symmetric_difference(self, other: "MayaDiagram") -> tuple[int, ...]:
        """The unique flip set connecting the two diagrams."""
        return tuple(sorted(set(self.index_set) ^ set(other.index_set)))

    def translate(self, n: int) -> "MayaDiagram":
        shifted = {k + n for k in self.index_set}
        window = set(range(0, n)) if n >= 0 else set(range(n, 0))
        return MayaDiagram(shifted ^ window)

    def block_coordinates(self) -> BlockCoordinates:
        """Run boundaries; also the unique flip set sending M to M+1."""
        ks = self.index_set
        lo = min(ks + (0,))
        hi = max(ks + (-1,)) + 1
        coords = []
        prev = True  # position lo-1 is always a member
        for m in range(lo, hi + 1):
            cur = m in self
            if cur != prev:
                coords.append(m)
                prev = cur
        return BlockCoordinates(tuple(coords))

    @property
    def genus(self) -> int:
        return self.block_coordinates().genus

    def frobenius_symbol(self) -> FrobeniusSymbol:
        s = tuple(sorted((-1 - k for k in self.index_set if k < 0), reverse=True))
        t = tuple(sorted((k for k in self.index_set if k >= 0), reverse=True))
        return FrobeniusSymbol(s, t)

    def modular_decompose(self, n: int) -> list["MayaDiagram"]:
        """The n residue-class diagrams: component i collects m with mn+i in M."""
        if n < 1:
            raise ValueError("modular decomposition requires n >= 1")
        parts = []
        for i in range(n):
            parts.append(MayaDiagram(
                (k - i) // n for k in self.index_set if (k - i) % n == 0
            ))
        return parts

    def ladder_flip_set(self, n: int) -> tuple[int, ...]:
        """The flip set connecting M to M+n; rejects the degenerate n = 0."""
        if n == 0:
            raise ValueError("ladder shift n must be nonzero")
        return self.symmetric_difference(self.translate(n))

    def canonical_unlabelled(self) -> tuple["MayaDiagram", int]:
        """The translate with index 0, plus the shift that was applied."""
        shift = -self.index
        return self.translate(shift), shift

    def render(self, lo: int, hi: int, ascii_safe: bool = False) -> str:
        """One glyph per cell of [lo, hi], origin marker between -1 and 0."""
        if lo > hi:
            raise ValueError(f"empty render window [{lo}, {hi}]")
        filled = FILLED_ASCII if ascii_safe else FILLED
        empty = EMPTY_ASCII if ascii_safe else EMPTY
        cells = [filled if m in self else empty for m in range(lo, hi + 1)]
        if lo < 0 <= hi:
            cells.insert(-lo, ORIGIN)
        return "".join(cells)

    def __eq__(self, other):
        if not isinstance(other, MayaDiagram):
            return NotImplemented
        return self.index_set == other.index_set

    def __hash__(self):
        return hash(self.index_set)

    def __repr__(self):
        return f"MayaDiagram({list(self.index_set)})"

    def __str__(self):
        return "K:{" + ",".join(str(k) for k in self.index_set) + "}"

    def to_json(self) -> dict:
        return {"indexSet": list(self.index_set)}

    @classmethod
    def from_json(cls, data) -> "MayaDiagram":
        return cls(int(k) for k in data["indexSet"])


def from_index_set(index_set) -> MayaDiagram:
    return MayaDiagram(index_set)
