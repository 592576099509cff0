"""Permutations of {0..k-1} and the rational group algebra Q[S_k].

A permutation is a tuple ``p`` with ``p[i]`` the image of ``i``.  The product
``p * q`` is composition, first q then p.
"""

import itertools
from fractions import Fraction

from .._exact import to_fraction


def identity(k):
    return tuple(range(k))


def compose(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def cycles(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = p[j]
            out.append(tuple(cyc))
    return out


def cycle_type(p):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p):
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def transposition(k, a, b):
    """The transposition of a and b, given 1-based as in the usual notation."""
    p = list(range(k))
    p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
    return tuple(p)


def all_permutations(k):
    return list(itertools.permutations(range(k)))


def subgroup_preserving(blocks, k):
    """All permutations of {0..k-1} mapping every block (a set of points) to itself."""
    blocks = [tuple(b) for b in blocks if b]
    covered = {x for b in blocks for x in b}
    fixed = [x for x in range(k) if x not in covered]
    blocks += [(x,) for x in fixed]
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(k))
        for b, img in zip(blocks, images):
            for src, dst in zip(b, img):
                p[src] = dst
        out.append(tuple(p))
    return out


class GroupAlgebraElement:
    """Finite formal sum of permutations of {0..k-1} with rational coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        clean = {}
        for p, c in dict(terms or {}).items():
            p = tuple(p)
            if sorted(p) != list(range(k)):
                raise ValueError(f"{p} is not a permutation of {k} points")
            c = to_fraction(c)
            if c:
                clean[p] = clean.get(p, 0) + c
        self.terms = {p: c for p, c in clean.items() if c}

    @classmethod
    def from_perm(cls, p, coeff=1):
        return cls(len(p), {tuple(p): coeff})

    @classmethod
    def one(cls, k):
        return cls.from_perm(identity(k))

    @classmethod
    def sum_of(cls, perms, k, signed=False):
        terms = {}
        for p in perms:
            terms[p] = terms.get(p, 0) + (sign(p) if signed else 1)
        return cls(k, terms)

    def _check(self, other):
        if other.k != self.k:
            raise ValueError("group algebra elements of different S_k")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = to_fraction(c)
        return GroupAlgebraElement(self.k, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = compose(p, q)
                out[r] = out.get(r, 0) + a * b
        return GroupAlgebraElement(self.k, out)

    def __rmul__(self, c):
        return self.scale(c)

    def coefficient(self, p):
        return self.terms.get(tuple(p), Fraction(0))

    def is_central(self):
        gens = [transposition(self.k, i, i + 1) for i in range(1, self.k)]
        return all(GroupAlgebraElement.from_perm(g) * self == self * GroupAlgebraElement.from_perm(g)
                   for g in gens)

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.k == other.k and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"GroupAlgebraElement({self.k}, 0)"
        parts = []
        for p, c in sorted(self.terms.items()):
            cyc = "".join("(" + "".join(str(i + 1) for i in c) + ")"
                          for c in cycles(p) if len(c) > 1) or "e"
            parts.append(f"{c}*{cyc}")
        return " + ".join(parts)
