"""Majorization calculus for weak-* and norm closed hulls of Weyl orbits.

co(lam) is the weak-*-closed convex hull of the orbit of lam under finite
permutations, co^n(lam) the norm-closed one.  Neither set is ever
materialized; both exist only as membership predicates built from the
functionals L_k.  Everything here is exact rational arithmetic.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .weights import (OrbitSignature, RationalWeight, as_rational, as_weight,
                      canonicalize, orbit_equal, split_signs)


def _top_values(values, k):
    """The k largest entries of values padded with infinitely many zeros."""
    vals = sorted(values, reverse=True)
    vals = [v for v in vals if v > 0][:k]
    return vals + [0] * (k - len(vals))


def l_k(mu, k):
    """Largest sum of mu over k distinct indices; unused indices contribute 0."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return Fraction(sum(_top_values(as_rational(mu).values(), k)))


def total(mu):
    return Fraction(sum(as_rational(mu).values()))


def _horizon(mu, lam):
    # beyond this k both L_k(mu) and L_k(lam) are constant
    return max(1, len(mu) + len(lam))


def _first_violation(mu_values, lam_values, horizon):
    """Smallest k with L_k(mu) > L_k(lam), or None."""
    a = _top_values(mu_values, horizon)
    b = _top_values(lam_values, horizon)
    sa = sb = 0
    for k in range(horizon):
        sa += a[k]
        sb += b[k]
        if sa > sb:
            return k + 1
    return None


def in_weakstar_hull(mu, lam):
    """mu in co(lam): L_k(mu) <= L_k(lam) and L_k(-mu) <= L_k(-lam) for all k."""
    mu, lam = as_rational(mu), as_rational(lam)
    h = _horizon(mu, lam)
    mv, lv = mu.values(), lam.values()
    if _first_violation(mv, lv, h) is not None:
        return False
    return _first_violation([-v for v in mv], [-v for v in lv], h) is None


def in_norm_hull(mu, lam):
    """mu in co^n(lam): the weak-* conditions plus equal total sums."""
    return total(mu) == total(lam) and in_weakstar_hull(mu, lam)


def in_orbit_closure(mu, lam):
    """mu in the weak-* closure of the orbit: m_k(mu) <= m_k(lam) for every k != 0."""
    have = canonicalize(lam).multiplicities
    return all(m <= have.get(k, 0) for k, m in canonicalize(mu).multiplicities.items())


@dataclass(frozen=True)
class HullExtremeSet:
    """Extreme points of a hull, recorded up to the Weyl action."""

    signatures: frozenset

    def __contains__(self, sig):
        return sig in self.signatures

    def __len__(self):
        return len(self.signatures)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self):
        return sorted(self.signatures, key=lambda s: (s.size(), [-v for v in s.sorted_values()]))


def _upper_part_signatures(nonneg):
    vals = sorted(nonneg.values(), reverse=True)
    return [OrbitSignature.of(vals[:c]) for c in range(len(vals) + 1)]


def upper_parts(lam):
    """Signatures of the upper parts lam_F (F holds the |F| largest values)."""
    lam = as_weight(lam)
    if any(v < 0 for v in lam.values()):
        raise ValueError("upper parts are defined for non-negative weights only")
    return HullExtremeSet(frozenset(_upper_part_signatures(lam)))


def extreme_signatures_weakstar(lam):
    """Orbits of lam_+ - (upper part of lam_-) and (upper part of lam_+) - lam_-."""
    plus, minus = split_signs(lam)
    sig_plus = canonicalize(plus)
    sig_minus = canonicalize(minus).negated()
    sigs = set()
    for u in _upper_part_signatures(minus):
        sigs.add(sig_plus.union(u.negated()))
    for u in _upper_part_signatures(plus):
        sigs.add(u.union(sig_minus))
    return HullExtremeSet(frozenset(sigs))


def is_extreme_weakstar(mu, lam):
    return canonicalize(mu) in extreme_signatures_weakstar(lam)


def extreme_points_norm_hull(lam):
    """Ext(co^n(lam)) is exactly the orbit of lam."""
    return HullExtremeSet(frozenset([canonicalize(lam)]))


class Direction(enum.Enum):
    OUTSIDE_CO_LAMBDA = "OUTSIDE_CO_LAMBDA"
    LAMBDA_OUTSIDE_CO_MU = "LAMBDA_OUTSIDE_CO_MU"


@dataclass(frozen=True)
class SeparationCertificate:
    """x separates: outside(x) exceeds the support functional of the inside
    weight at x by ``gap``.

    With OUTSIDE_CO_LAMBDA mu is outside co(lam); with
    LAMBDA_OUTSIDE_CO_MU lam is outside co(mu).  The witness is the indicator
    of a finite set, negated when the separation comes from negative parts.
    """

    direction: Direction
    witness: RationalWeight
    gap: Fraction

    def outside_and_inside(self, lam, mu):
        if self.direction is Direction.OUTSIDE_CO_LAMBDA:
            return mu, lam
        return lam, mu

    def verify(self, lam, mu):
        outside, inside = self.outside_and_inside(lam, mu)
        lhs = as_rational(outside).pair(self.witness)
        rhs = support_functional(inside, self.witness)
        return self.gap > 0 and lhs - rhs == self.gap

    def to_json(self):
        return {
            "direction": self.direction.value,
            "witness": self.witness.to_json()["entries"],
            "gap": str(self.gap),
        }


def _indicator_of_top(weight, k, sign):
    # indices of the k largest values of sign*weight, ties by smallest index
    ranked = sorted(weight.items(), key=lambda jv: (-sign * jv[1], jv[0]))
    return RationalWeight({j: sign for j, _ in ranked[:k]})


def separating_vector(lam, mu):
    """A 0/+-1 indicator functional separating co(lam) from co(mu).

    Positive parts are compared first (mu_+ against lam_+, then lam_+
    against mu_+), then negative parts; the first failing inequality, at its
    smallest k, defines the witness.
    """
    lam, mu = as_weight(lam), as_weight(mu)
    if orbit_equal(lam, mu):
        raise ValueError("weights lie in the same orbit; no separating vector exists")
    lp, lm = split_signs(lam)
    mp, mm = split_signs(mu)
    cases = [
        (mp, lp, mu, 1, Direction.OUTSIDE_CO_LAMBDA),
        (lp, mp, lam, 1, Direction.LAMBDA_OUTSIDE_CO_MU),
        (mm, lm, mu, -1, Direction.OUTSIDE_CO_LAMBDA),
        (lm, mm, lam, -1, Direction.LAMBDA_OUTSIDE_CO_MU),
    ]
    for outer, inner, full, sign, direction in cases:
        h = _horizon(outer, inner)
        k = _first_violation(outer.values(), inner.values(), h)
        if k is None:
            continue
        x = _indicator_of_top(full, k, sign)
        inside = lam if direction is Direction.OUTSIDE_CO_LAMBDA else mu
        gap = as_rational(full).pair(x) - support_functional(inside, x)
        return SeparationCertificate(direction, x, gap)
    raise AssertionError("distinct orbits must differ in one of the four hull tests")


def support_functional(lam, x):
    """max over finite permutations w of <w lam, x>, by rearrangement with zero slots."""
    lv = as_rational(lam).values()
    xv = as_rational(x).values()
    size = len(lv) + len(xv)
    a = sorted(lv + [0] * (size - len(lv)), reverse=True)
    b = sorted(xv + [0] * (size - len(xv)), reverse=True)
    return Fraction(sum(p * q for p, q in zip(a, b)))


def exposing_vector(lam):
    """x_lam = lam itself; lam is the unique maximizer of <., x_lam> on co(lam)."""
    return as_rational(lam)


def in_cone_c_lambda(v, lam):
    """v in cone{eps_i - eps_j : lam_i > lam_j}, decided by exact LP feasibility."""
    from .lp import EQ, LinearProgram, lp_feasible

    v, lam = as_rational(v), as_rational(lam)
    idx = sorted(v.support() | lam.support())
    if not idx:
        return True
    gens = [(a, b) for a in idx for b in idx if lam.value(a) > lam.value(b)]
    if not gens:
        return not v
    A = []
    for j in idx:
        A.append([(1 if a == j else 0) - (1 if b == j else 0) for a, b in gens])
    ok, _ = lp_feasible(LinearProgram(A, [v.value(j) for j in idx], [EQ] * len(idx)))
    return ok
