"""Partitions, tableaux and Young symmetrizers."""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from ..weights import as_weight
from .algebra import GroupAlgebraElement, subgroup_preserving


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def boxes(self):
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def padded(self, n):
        if len(self.parts) > n:
            raise ValueError(f"partition {self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def hook_lengths(self):
        conj = self.conjugate().parts
        return [[self.parts[r] - c + conj[c] - r - 1 for c in range(self.parts[r])]
                for r in range(len(self.parts))]

    def __repr__(self):
        return f"Partition({self.parts})"


def as_partition(lam):
    if isinstance(lam, Partition):
        return lam
    if hasattr(lam, "items"):
        vals = list(as_weight(lam).values())
        if any(v < 0 for v in vals):
            raise ValueError("tensor-model weights must be non-negative")
        return Partition(tuple(sorted(vals, reverse=True)))
    return Partition(tuple(lam))


def partitions(n):
    """All partitions of n, largest first part first (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, cap), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


@dataclass(frozen=True)
class Tableau:
    """Bijective filling of the boxes of ``shape`` with 1..n, given row by row."""

    shape: Partition
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        shape = self.shape if isinstance(self.shape, Partition) else Partition(tuple(self.shape))
        if tuple(len(r) for r in rows) != shape.parts:
            raise ValueError("row lengths do not match the shape")
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.n + 1)):
            raise ValueError("a tableau must use each of 1..n exactly once")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)

    @classmethod
    def canonical(cls, shape):
        """Boxes numbered row by row."""
        shape = as_partition(shape)
        rows, nxt = [], 1
        for length in shape.parts:
            rows.append(tuple(range(nxt, nxt + length)))
            nxt += length
        return cls(shape, tuple(rows))

    def columns(self):
        if not self.rows:
            return []
        return [tuple(r[c] for r in self.rows if len(r) > c) for c in range(len(self.rows[0]))]

    def row_index(self):
        """Map entry -> row number (0-based)."""
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def is_standard(self):
        rows_ok = all(all(a < b for a, b in zip(r, r[1:])) for r in self.rows)
        cols_ok = all(all(a < b for a, b in zip(c, c[1:])) for c in self.columns())
        return rows_ok and cols_ok


def row_symmetrizer(T):
    k = T.shape.n
    blocks = [[x - 1 for x in r] for r in T.rows]
    return GroupAlgebraElement.sum_of(subgroup_preserving(blocks, k), k)


def column_antisymmetrizer(T):
    k = T.shape.n
    blocks = [[x - 1 for x in c] for c in T.columns()]
    return GroupAlgebraElement.sum_of(subgroup_preserving(blocks, k), k, signed=True)


def young_symmetrizer(T):
    """s(T) = c(T) r(T)."""
    return column_antisymmetrizer(T) * row_symmetrizer(T)


def standard_tableaux(shape):
    """All standard tableaux, built by adding n, n-1, ... at removable corners."""
    shape = as_partition(shape)
    out = []

    def rec(parts, filling, value):
        if value == 0:
            rows = tuple(tuple(filling[(r, c)] for c in range(shape.parts[r]))
                         for r in range(len(shape.parts)))
            out.append(Tableau(shape, rows))
            return
        for r in range(len(parts)):
            if parts[r] and (r + 1 == len(parts) or parts[r + 1] < parts[r]):
                new = list(parts)
                new[r] -= 1
                filling[(r, new[r])] = value
                rec(new, filling, value - 1)
                del filling[(r, new[r])]

    rec(list(shape.parts), {}, shape.n)
    return out


@lru_cache(maxsize=None)
def count_standard(shape):
    return len(standard_tableaux(shape))


def hook_length_dimension(shape):
    shape = as_partition(shape)
    prod = 1
    for row in shape.hook_lengths():
        for h in row:
            prod *= h
    return factorial(shape.n) // prod


def semistandard_tableaux(shape, n):
    """Fillings with entries in 1..n, rows weakly and columns strictly increasing."""
    shape = as_partition(shape)
    boxes = shape.boxes()
    out = []
    fill = {}

    def rec(i):
        if i == len(boxes):
            out.append(tuple(tuple(fill[(r, c)] for c in range(shape.parts[r]))
                             for r in range(len(shape.parts))))
            return
        r, c = boxes[i]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            fill[(r, c)] = v
            rec(i + 1)
        fill.pop((r, c), None)

    rec(0)
    return out


def count_semistandard(shape, n):
    return len(semistandard_tableaux(shape, n))
