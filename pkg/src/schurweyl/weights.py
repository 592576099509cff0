"""Finitely supported signed weights, their Weyl orbits and partition pairs.

The index set is modelled by the non-negative integers.  Only finite supports
ever matter, so nothing is lost, and indices stay hashable and orderable.
"""

import json
from collections import Counter
from dataclasses import dataclass

from ._exact import fraction_str, to_fraction


class _FiniteFunction:
    """Immutable finitely supported function from indices to nonzero numbers."""

    __slots__ = ("_items", "_hash")

    def __init__(self, entries=None):
        if entries is None:
            entries = {}
        elif isinstance(entries, _FiniteFunction):
            entries = dict(entries._items)
        elif not hasattr(entries, "items"):
            raise TypeError("entries must be a mapping index -> value")
        items = {}
        for j, v in entries.items():
            j = int(j)
            if j < 0:
                raise ValueError(f"negative index {j}")
            v = self._coerce(v)
            if v != 0:
                items[j] = v
        self._items = tuple(sorted(items.items()))
        self._hash = None

    @staticmethod
    def _coerce(v):
        raise NotImplementedError

    @classmethod
    def from_values(cls, values):
        """Place ``values`` at indices 0, 1, 2, ... (zeros are dropped)."""
        return cls(dict(enumerate(values)))

    @property
    def entries(self):
        return dict(self._items)

    def items(self):
        return self._items

    def values(self):
        return [v for _, v in self._items]

    def support(self):
        return frozenset(j for j, _ in self._items)

    def value(self, j):
        for i, v in self._items:
            if i == j:
                return v
        return 0

    def dense(self, n):
        """Values at indices 0..n-1; raises if the support does not fit."""
        out = [0] * n
        for j, v in self._items:
            if j >= n:
                raise ValueError(f"index {j} outside the ambient range 0..{n - 1}")
            out[j] = v
        return out

    def l1_norm(self):
        return sum(abs(v) for v in self.values())

    def pair(self, other):
        """Duality pairing sum_j self_j * other_j."""
        mine = dict(self._items)
        return sum(v * mine.get(j, 0) for j, v in other.items())

    def permute(self, mapping):
        """Move the value at index i to index mapping[i] (identity off the mapping)."""
        mapping = {int(a): int(b) for a, b in dict(mapping).items()}
        if sorted(mapping) != sorted(mapping.values()):
            raise ValueError("mapping is not a finite permutation")
        return type(self)({mapping.get(j, j): v for j, v in self._items})

    def restrict(self, indices):
        keep = set(indices)
        return type(self)({j: v for j, v in self._items if j in keep})

    def positive_part(self):
        return type(self)({j: v for j, v in self._items if v > 0})

    def negative_part(self):
        return type(self)({j: -v for j, v in self._items if v < 0})

    def __neg__(self):
        return type(self)({j: -v for j, v in self._items})

    def _combine(self, other, sign):
        out = dict(self._items)
        for j, v in other.items():
            out[j] = out.get(j, 0) + sign * v
        cls = type(self) if type(self) is type(other) else RationalWeight
        return cls(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __eq__(self, other):
        if isinstance(other, _FiniteFunction):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def __repr__(self):
        body = ", ".join(f"{j}: {v}" for j, v in self._items)
        return f"{type(self).__name__}({{{body}}})"


class Weight(_FiniteFunction):
    """Finitely supported integer weight; zero values are never stored."""

    __slots__ = ()

    @staticmethod
    def _coerce(v):
        if isinstance(v, bool):
            raise TypeError("booleans are not weights")
        q = to_fraction(v)
        if q.denominator != 1:
            raise ValueError(f"weight value {v!r} is not an integer")
        return int(q)

    def to_json(self):
        return {"entries": {str(j): v for j, v in self._items}}

    @classmethod
    def from_json(cls, data):
        """Parse ``{"entries": {...}}`` or a bare index map; zero values are rejected."""
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict) and "entries" in data:
            data = data["entries"]
        if not isinstance(data, dict):
            raise ValueError("weight JSON must be an object")
        for j, v in data.items():
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"weight value at {j!r} is not an integer")
            if v == 0:
                raise ValueError(f"zero value at index {j!r}; zero entries must be omitted")
        return cls(data)


class RationalWeight(_FiniteFunction):
    """Finitely supported weight with exact rational values."""

    __slots__ = ()

    @staticmethod
    def _coerce(v):
        return to_fraction(v)

    def to_json(self):
        return {"entries": {str(j): fraction_str(v) for j, v in self._items}}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict) and "entries" in data:
            data = data["entries"]
        if not isinstance(data, dict):
            raise ValueError("weight JSON must be an object")
        for j, v in data.items():
            if isinstance(v, float):
                raise ValueError(f"value at {j!r} is a float; use an integer or a 'p/q' string")
            if to_fraction(v) == 0:
                raise ValueError(f"zero value at index {j!r}; zero entries must be omitted")
        return cls(data)


def as_rational(mu):
    if isinstance(mu, RationalWeight):
        return mu
    if isinstance(mu, _FiniteFunction):
        return RationalWeight(mu.entries)
    if hasattr(mu, "items"):
        return RationalWeight(mu)
    return RationalWeight.from_values(mu)


def as_weight(lam):
    if isinstance(lam, Weight):
        return lam
    if isinstance(lam, _FiniteFunction):
        return Weight(lam.entries)
    if hasattr(lam, "items"):
        return Weight(lam)
    return Weight.from_values(lam)


class OrbitSignature:
    """Multiplicities m_k = #{j : lambda_j = k} over nonzero values k.

    Two weights share a signature exactly when they lie in the same orbit of
    the finite permutations.
    """

    __slots__ = ("_items",)

    def __init__(self, multiplicities=None):
        counts = {}
        for k, m in dict(multiplicities or {}).items():
            k, m = to_fraction(k), int(m)
            if k == 0:
                raise ValueError("orbit signatures do not record the value 0")
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                counts[int(k) if k.denominator == 1 else k] = m
        self._items = tuple(sorted(counts.items(), key=lambda km: -km[0]))

    @classmethod
    def of(cls, values):
        return cls(Counter(v for v in values if v != 0))

    @property
    def multiplicities(self):
        return dict(self._items)

    def sorted_values(self):
        """Orbit values in decreasing order, with multiplicity."""
        return [k for k, m in self._items for _ in range(m)]

    def size(self):
        return sum(m for _, m in self._items)

    def l1_norm(self):
        return sum(abs(k) * m for k, m in self._items)

    def union(self, other):
        """Signature of a weight glued from disjointly supported pieces."""
        counts = Counter(dict(self._items))
        counts.update(dict(other._items))
        return OrbitSignature(counts)

    def negated(self):
        return OrbitSignature({-k: m for k, m in self._items})

    def representative(self):
        """Canonical weight: values in decreasing order at indices 0, 1, 2, ..."""
        values = self.sorted_values()
        if all(isinstance(v, int) for v in values):
            return Weight.from_values(values)
        return RationalWeight.from_values(values)

    def to_json(self):
        return {str(k): m for k, m in self._items}

    def __eq__(self, other):
        if isinstance(other, OrbitSignature):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ", ".join(f"{k}: {m}" for k, m in self._items)
        return f"OrbitSignature({{{body}}})"


@dataclass(frozen=True)
class PartitionPair:
    plus: tuple = ()
    minus: tuple = ()

    def __post_init__(self):
        for name in ("plus", "minus"):
            parts = tuple(int(p) for p in getattr(self, name))
            if any(p <= 0 for p in parts):
                raise ValueError(f"{name} parts must be positive")
            if any(a < b for a, b in zip(parts, parts[1:])):
                raise ValueError(f"{name} parts must be weakly decreasing")
            object.__setattr__(self, name, parts)


def canonicalize(lam):
    """Orbit signature of a weight."""
    return OrbitSignature.of(as_weight(lam).values())


def orbit_equal(lam, mu):
    return canonicalize(lam) == canonicalize(mu)


def split_signs(lam):
    """(lam_+, lam_-) with lam = lam_+ - lam_- and both non-negative."""
    lam = as_weight(lam)
    return lam.positive_part(), lam.negative_part()


def to_partition_pair(lam):
    plus, minus = split_signs(lam)
    return PartitionPair(tuple(sorted(plus.values(), reverse=True)),
                         tuple(sorted(minus.values(), reverse=True)))


def from_partition_pair(pair):
    """Canonical representative: plus parts first, then the negated minus parts,
    the whole sequence weakly decreasing."""
    values = list(pair.plus) + sorted((-p for p in pair.minus), reverse=True)
    return Weight.from_values(values)


def is_contractive(lam):
    """True iff lam = +-eps_j, i.e. its l1 norm is 1."""
    return as_weight(lam).l1_norm() == 1


def l1_norm(lam):
    return as_rational(lam).l1_norm()
