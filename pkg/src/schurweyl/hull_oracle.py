"""Brute-force ground truth in a finite ambient {0, ..., n-1}.

These routines enumerate orbits explicitly and decide everything by exact
linear programming or exact linear algebra.  They share no code with the
majorization predicates they are used to check.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ResourceLimitError, check_ambient
from .lp import EQ, GE, LE, LinearProgram, lp_feasible, lp_minimize
from .weights import as_rational

MAX_VERTEX_AMBIENT = 5


def ambient_vector(v, n=None):
    """Dense tuple of Fractions; weights are laid out on indices 0..n-1."""
    if hasattr(v, "items"):
        v = as_rational(v)
        size = n if n is not None else (max(v.support()) + 1 if v else 0)
        return tuple(Fraction(x) for x in v.dense(size))
    out = tuple(Fraction(x) for x in v)
    if n is not None and len(out) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(out)}")
    return out


def distinct_permutations(values):
    """All distinct rearrangements of ``values`` (multinomially many)."""
    values = sorted(values)
    n = len(values)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        last = None
        for i, v in enumerate(remaining):
            if v == last:
                continue
            last = v
            rec(prefix + [v], remaining[:i] + remaining[i + 1:])

    rec([], values)
    return out


def _in_hull_lp(point, generators):
    """Is ``point`` a convex combination of ``generators``?"""
    if not generators:
        return False
    m = len(generators)
    n = len(point)
    A = [[g[i] for g in generators] for i in range(n)]
    A.append([1] * m)
    ok, _ = lp_feasible(LinearProgram(A, list(point) + [1], [EQ] * (n + 1)))
    return ok


def _lam_in_ambient(lam, n):
    if not hasattr(lam, "items"):
        return ambient_vector(lam, n)
    vals = as_rational(lam).values()
    if len(vals) > n:
        raise ValueError("lambda does not fit into the ambient dimension")
    return tuple(vals) + (Fraction(0),) * (n - len(vals))


def _common_ambient(mu, lam, n):
    if n is None:
        if hasattr(mu, "items") and hasattr(lam, "items"):
            mu_r, lam_r = as_rational(mu), as_rational(lam)
            n = len(mu_r.support() | lam_r.support())
            n = max([n] + [j + 1 for j in mu_r.support() | lam_r.support()])
        else:
            n = len(mu)
    check_ambient(n)
    return ambient_vector(mu, n), _lam_in_ambient(lam, n), n


def hull_member_bruteforce(mu, lam, n=None):
    """mu in conv(S_n lam), decided by LP over the explicit orbit (n <= 7)."""
    mu, lam, n = _common_ambient(mu, lam, n)
    return _in_hull_lp(mu, distinct_permutations(lam))


def orbit_closure_points(lam, n):
    """All w lam_F that fit into n slots: the finite shadow of the weak-* orbit closure."""
    check_ambient(n)
    vals = sorted(as_rational(lam).values())
    subsets = set()
    for r in range(len(vals) + 1):
        for combo in itertools.combinations(vals, r):
            if r <= n:
                subsets.add(combo)
    points = set()
    for combo in subsets:
        points.update(distinct_permutations(list(combo) + [Fraction(0)] * (n - len(combo))))
    return sorted(points)


def weakstar_member_bruteforce(mu, lam, n=None):
    """mu in co(lam) restricted to n slots, i.e. in conv of the truncated orbit points."""
    mu, _, n = _common_ambient(mu, lam, n)
    return _in_hull_lp(mu, orbit_closure_points(lam, n))


def permutahedron_vertices(lam, n):
    """Vertices of conv(S_n lam): orbit points not in the hull of the others."""
    check_ambient(n)
    pts = distinct_permutations(_lam_in_ambient(lam, n))
    return {p for p in pts if not _in_hull_lp(p, [q for q in pts if q != p])}


def _l_k_infinite(values, k):
    vals = sorted((v for v in values if v > 0), reverse=True)[:k]
    return sum(vals, Fraction(0))


def r_region_constraints(lam, n):
    """Rows (A, b) of {mu : sum_A mu <= L_|A|(lam), sum_A -mu <= L_|A|(-lam)}."""
    vals = as_rational(lam).values()
    rows, rhs = [], []
    for size in range(1, n + 1):
        up = _l_k_infinite(vals, size)
        down = _l_k_infinite([-v for v in vals], size)
        for subset in itertools.combinations(range(n), size):
            a = [1 if i in subset else 0 for i in range(n)]
            rows.append(a)
            rhs.append(up)
            rows.append([-x for x in a])
            rhs.append(down)
    return rows, rhs


def _int_det(M):
    # Bareiss fraction-free elimination
    M = [list(r) for r in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def _adjugate(M):
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * _int_det(minor)
    return adj


@lru_cache(maxsize=None)
def _square_subsystems(n):
    """Every nonsingular n-subset of the 2(2^n - 1) region rows, as integer
    (row indices, adjugate, determinant) with the determinant made positive."""
    rows, _ = r_region_constraints({}, n)
    chosen, adjs, dets = [], [], []
    for combo in itertools.combinations(range(len(rows)), n):
        # a row together with its negation is singular
        if any(c % 2 == 1 and c - 1 in combo for c in combo):
            continue
        M = [rows[c] for c in combo]
        d = _int_det(M)
        if d == 0:
            continue
        adj = _adjugate(M)
        if d < 0:
            d = -d
            adj = [[-x for x in r] for r in adj]
        chosen.append(combo)
        adjs.append(adj)
        dets.append(d)
    return (np.array(chosen, dtype=np.int64).reshape(-1, n),
            np.array(adjs, dtype=np.int64).reshape(-1, n, n),
            np.array(dets, dtype=np.int64),
            np.array(rows, dtype=np.int64).reshape(-1, n))


def polytope_vertices(lam, n):
    """Vertices of the region R_n cut out by the L_k inequalities in n slots.

    Every square subsystem of the constraint rows is solved exactly (with
    integer adjugates); feasible solutions are vertices because their tight
    set contains a nonsingular n-subset.
    """
    if n > MAX_VERTEX_AMBIENT:
        raise ResourceLimitError(f"vertex enumeration is capped at n={MAX_VERTEX_AMBIENT}")
    if n == 0:
        return {()}
    lam = as_rational(lam)
    _, rhs = r_region_constraints(lam, n)
    denom = math.lcm(*(r.denominator for r in rhs))
    b = np.array([int(r * denom) for r in rhs], dtype=np.int64)
    combos, adjs, dets, A = _square_subsystems(n)
    sols = np.einsum("sij,sj->si", adjs, b[combos])  # x = sols / (dets * denom)
    lhs = sols @ A.T  # A x scaled by dets*denom
    ok = np.all(lhs <= dets[:, None] * b[None, :], axis=1)
    out = set()
    for s, d in zip(sols[ok], dets[ok]):
        out.add(tuple(Fraction(int(v), int(d) * denom) for v in s))
    return out


def weakstar_distance(mu, lam, n):
    """min over nu in conv(S_n lam) of ||mu - nu||_inf, as an exact LP value."""
    mu, lam_vals, n = _common_ambient(mu, lam, n)
    pts = distinct_permutations(lam_vals)
    m = len(pts)
    # variables: convex weights w_1..w_m, then t
    A, b, senses = [], [], []
    for i in range(n):
        # mu_i - sum w p_i <= t   ->  -sum w p_i - t <= -mu_i
        A.append([-p[i] for p in pts] + [-1])
        b.append(-mu[i])
        senses.append(LE)
        # sum w p_i - mu_i <= t
        A.append([p[i] for p in pts] + [-1])
        b.append(mu[i])
        senses.append(LE)
    A.append([1] * m + [0])
    b.append(1)
    senses.append(EQ)
    res = lp_minimize(LinearProgram(A, b, senses, [0] * m + [1]))
    if res.status != "optimal":
        raise AssertionError(f"distance LP ended with status {res.status}")
    return res.value


def averaging_witness_bound(mu_support_size, remainder, n):
    """Upper bound ||r||_inf * |supp r| / m on the distance from a truncation
    lam_F to conv(S_n lam), with r = lam - lam_F and m disjoint placements of r
    in the free slots.  Returns None when no placement fits."""
    r = as_rational(remainder)
    s = len(r)
    if s == 0:
        return Fraction(0)
    m = (n - mu_support_size) // s
    if m <= 0:
        return None
    return Fraction(max(abs(v) for v in r.values()) * s, m)


__all__ = [
    "GE", "ambient_vector", "averaging_witness_bound", "distinct_permutations",
    "hull_member_bruteforce", "orbit_closure_points", "permutahedron_vertices",
    "polytope_vertices", "r_region_constraints", "weakstar_distance",
    "weakstar_member_bruteforce",
]
