"""Irreducible characters of S_k and the central isotypic projectors P_lambda."""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import GroupAlgebraElement, all_permutations, compose, cycle_type
from .tableaux import Tableau, as_partition, young_symmetrizer


@lru_cache(maxsize=None)
def _mn(beta, rho):
    """Murnaghan-Nakayama recursion on a beta-set (strictly decreasing tuple).

    Removing a border strip of length r moves one bead from b to b - r; the
    sign counts the beads jumped over.
    """
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beads:
            height = sum(1 for c in beta if b - r < c < b)
            moved = tuple(sorted((beads - {b}) | {b - r}, reverse=True))
            total += (-1) ** height * _mn(moved, rest)
    return total


def character(shape, rho):
    """chi^shape evaluated on the class of cycle type rho."""
    shape = as_partition(shape)
    rho = tuple(sorted((int(x) for x in rho if x), reverse=True))
    if sum(rho) != shape.n:
        raise ValueError("cycle type and partition sizes differ")
    ell = len(shape.parts)
    beta = tuple(p + ell - 1 - i for i, p in enumerate(shape.parts))
    return _mn(beta, rho)


def character_dimension(shape):
    """f^shape = chi^shape(identity)."""
    shape = as_partition(shape)
    return character(shape, (1,) * shape.n)


@lru_cache(maxsize=None)
def _projector(parts):
    shape = as_partition(parts)
    k = shape.n
    f = character_dimension(shape)
    scale = Fraction(f, factorial(k))
    terms = {}
    chi_cache = {}
    for p in all_permutations(k):
        ct = cycle_type(p)
        if ct not in chi_cache:
            chi_cache[ct] = character(shape, ct)
        if chi_cache[ct]:
            terms[p] = scale * chi_cache[ct]
    return GroupAlgebraElement(k, terms)


def isotypic_projector(shape, k=None):
    """Central idempotent (f/k!) sum_sigma chi(sigma) sigma."""
    shape = as_partition(shape)
    if k is not None and shape.n != k:
        raise ValueError(f"{shape} is not a partition of {k}")
    return _projector(shape.parts)


def rank_of_vectors(vectors):
    """Exact rank of a list of equal-length rational vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    rows = [[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in v]
            for v in vectors]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ).rank()


def specht_dimension_by_ideal(shape):
    """dim of the left ideal Q[S_k] s(T): an f^lambda computation that avoids characters."""
    shape = as_partition(shape)
    k = shape.n
    s = young_symmetrizer(Tableau.canonical(shape))
    perms = all_permutations(k)
    index = {p: i for i, p in enumerate(perms)}
    vectors = []
    for g in perms:
        v = [0] * len(perms)
        for p, c in s.terms.items():
            v[index[compose(g, p)]] += c
        vectors.append(v)
    return rank_of_vectors(vectors)
