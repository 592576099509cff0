"""Exact rational linear programming.

Two-phase tableau simplex with Bland's anti-cycling rule, and
Fourier-Motzkin elimination for tiny systems.  All variables are
non-negative; every number is a Fraction.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ._exact import to_fraction

LE, GE, EQ = "<=", ">=", "=="
_SENSES = (LE, GE, EQ)


@dataclass
class LinearProgram:
    """minimize c.x subject to A[i].x (sense[i]) b[i], x >= 0."""

    A: list
    b: list
    senses: list = None
    c: list = None
    num_vars: int = None

    def __post_init__(self):
        self.A = [[to_fraction(a) for a in row] for row in self.A]
        self.b = [to_fraction(v) for v in self.b]
        if self.num_vars is None:
            if self.A:
                self.num_vars = len(self.A[0])
            elif self.c is not None:
                self.num_vars = len(self.c)
            else:
                self.num_vars = 0
        if self.senses is None:
            self.senses = [LE] * len(self.A)
        self.senses = list(self.senses)
        if self.c is None:
            self.c = [Fraction(0)] * self.num_vars
        self.c = [to_fraction(v) for v in self.c]
        if len(self.b) != len(self.A) or len(self.senses) != len(self.A):
            raise ValueError("A, b and senses must have the same number of rows")
        if any(len(row) != self.num_vars for row in self.A):
            raise ValueError("every constraint row must have num_vars entries")
        if len(self.c) != self.num_vars:
            raise ValueError("objective length differs from num_vars")
        bad = [s for s in self.senses if s not in _SENSES]
        if bad:
            raise ValueError(f"unknown constraint senses {bad}")


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list = field(default=None)
    value: Fraction = None

    @property
    def feasible(self):
        return self.status != "infeasible"


def _pivot(T, basis, row, col):
    pr = T[row]
    piv = pr[col]
    if piv != 1:
        T[row] = pr = [v / piv for v in pr]
    for i, r in enumerate(T):
        if i != row:
            f = r[col]
            if f:
                T[i] = [a - f * p for a, p in zip(r, pr)]
    basis[row] = col


def _run(T, basis, cost_row, allowed):
    """Bland's rule iterations on tableau T (last column = rhs).

    ``cost_row`` is the index of the reduced-cost row (minimization).
    Returns False if unbounded.
    """
    rows = [i for i in range(len(T)) if i != cost_row]
    while True:
        cr = T[cost_row]
        col = next((j for j in allowed if cr[j] < 0), None)
        if col is None:
            return True
        best = None
        for i in rows:
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], col)


def simplex(lp):
    """Solve ``lp`` exactly.  Returns an LPResult."""
    n = lp.num_vars
    rows = []
    for a, s, rhs in zip(lp.A, lp.senses, lp.b):
        if rhs < 0:
            a, rhs = [-v for v in a], -rhs
            s = {LE: GE, GE: LE, EQ: EQ}[s]
        rows.append((a, s, rhs))
    m = len(rows)
    n_slack = sum(1 for _, s, _ in rows if s != EQ)
    n_art = sum(1 for _, s, _ in rows if s != LE)
    width = n + n_slack + n_art + 1
    T = []
    basis = []
    slack_at, art_at = n, n + n_slack
    art_cols = []
    for a, s, rhs in rows:
        r = [Fraction(0)] * width
        r[:n] = a
        r[-1] = rhs
        if s == LE:
            r[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        else:
            if s == GE:
                r[slack_at] = Fraction(-1)
                slack_at += 1
            r[art_at] = Fraction(1)
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        T.append(r)

    # phase 1: minimise the sum of artificials
    cost = [Fraction(0)] * width
    for j in art_cols:
        cost[j] = Fraction(1)
    for i, bj in enumerate(basis):
        if bj in art_cols:
            cost = [c - v for c, v in zip(cost, T[i])]
    T.append(cost)
    _run(T, basis, m, range(width - 1))
    if -T[m][-1] != 0:
        return LPResult("infeasible")

    # drive artificials out of the basis, dropping redundant rows
    art_set = set(art_cols)
    i = 0
    while i < len(basis):
        if basis[i] in art_set:
            col = next((j for j in range(n + n_slack) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T.pop()  # old phase-1 cost row
    keep = n + n_slack
    T = [r[:keep] + [r[-1]] for r in T]
    m = len(T)

    cost = list(lp.c) + [Fraction(0)] * (n_slack + 1)
    for i, bj in enumerate(basis):
        f = cost[bj]
        if f:
            cost = [c - f * v for c, v in zip(cost, T[i])]
    T.append(cost)
    if not _run(T, basis, m, range(keep)):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = T[i][-1]
    value = sum((c * v for c, v in zip(lp.c, x)), Fraction(0))
    return LPResult("optimal", x, value)


def _as_le_rows(lp):
    out = []
    for a, s, rhs in zip(lp.A, lp.senses, lp.b):
        if s in (LE, EQ):
            out.append((list(a), rhs))
        if s in (GE, EQ):
            out.append(([-v for v in a], -rhs))
    for j in range(lp.num_vars):
        e = [Fraction(0)] * lp.num_vars
        e[j] = Fraction(-1)
        out.append((e, Fraction(0)))
    return out


def _dedupe(rows):
    seen = set()
    out = []
    for a, rhs in rows:
        key = (tuple(a), rhs)
        if key not in seen:
            seen.add(key)
            out.append((a, rhs))
    return out


def fourier_motzkin(lp, max_vars=4):
    """Feasibility by Fourier-Motzkin elimination, with a back-substituted witness.

    Only meant for tiny systems: the row count can square at every step.
    """
    n = lp.num_vars
    if n > max_vars:
        raise ValueError(f"Fourier-Motzkin is limited to {max_vars} variables")
    stages = [_dedupe(_as_le_rows(lp))]
    for k in range(n - 1, -1, -1):
        rows = stages[-1]
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        nxt = [r for r in rows if r[0][k] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                fp, fn = ap[k], -an[k]
                a = [fn * x + fp * y for x, y in zip(ap, an)]
                nxt.append((a, fn * bp + fp * bn))
        stages.append(_dedupe(nxt))
    if any(rhs < 0 for _, rhs in stages[-1]):
        return False, None
    x = [Fraction(0)] * n
    for k in range(n):
        rows = stages[n - 1 - k]
        lo, hi = None, None
        for a, rhs in rows:
            if a[k] == 0:
                continue
            rest = rhs - sum(a[j] * x[j] for j in range(k) if a[j])
            bound = rest / a[k]
            if a[k] > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = min(hi, Fraction(0))
    return True, x


def lp_feasible(lp, method="simplex"):
    """(feasible, witness) for the constraint system of ``lp``."""
    if method == "fm":
        return fourier_motzkin(lp)
    if method != "simplex":
        raise ValueError(f"unknown method {method!r}")
    probe = LinearProgram(lp.A, lp.b, lp.senses, None, lp.num_vars)
    res = simplex(probe)
    return res.feasible, res.x


def lp_minimize(lp):
    return simplex(lp)
