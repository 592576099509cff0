"""Exact spectra of hermitian Q(i) matrices.

The characteristic polynomial is computed by Faddeev-LeVerrier in exact
arithmetic.  Rational roots come out of sympy's factorization; the remaining
irreducible factors contribute real algebraic numbers (``CRootOf``), which
sympy isolates with exact interval arithmetic.
"""

import math
from fractions import Fraction
from functools import cmp_to_key, lru_cache

import sympy as sp

from .._exact import QQi

_x = sp.Symbol("x")


def _gauss_int_matmul(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(n):
            re = im = 0
            for t in range(n):
                ar, ai = Ai[t]
                if ar or ai:
                    br, bi = B[t][j]
                    re += ar * br - ai * bi
                    im += ar * bi + ai * br
            row.append((re, im))
        out.append(row)
    return out


def charpoly(X):
    """Coefficients [c_n, ..., c_0] of det(x - X), c_n = 1, as QQi.

    Denominators are cleared first so Faddeev-LeVerrier runs on Gaussian
    integers, where its divisions by k are exact.
    """
    n = X.n
    d = math.lcm(*(z.re.denominator for r in X.rows for z in r),
                 *(z.im.denominator for r in X.rows for z in r))
    A = [[(int(z.re * d), int(z.im * d)) for z in r] for r in X.rows]
    coeffs = [(1, 0)]
    M = [[(0, 0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        cr, ci = coeffs[-1]
        M = _gauss_int_matmul(A, M)
        M = [[(a + cr, b + ci) if i == j else (a, b) for j, (a, b) in enumerate(r)]
             for i, r in enumerate(M)]
        AM = _gauss_int_matmul(A, M)
        tr = sum(AM[i][i][0] for i in range(n)), sum(AM[i][i][1] for i in range(n))
        if tr[0] % k or tr[1] % k:
            raise AssertionError("Faddeev-LeVerrier division was not exact")
        coeffs.append((-tr[0] // k, -tr[1] // k))
    # det(x - A/d) = d^-n det(d x - A): coefficient of x^(n-k) scales by d^-k
    return [QQi(Fraction(a, d ** k), Fraction(b, d ** k)) for k, (a, b) in enumerate(coeffs)]


def real_charpoly(X):
    """Characteristic polynomial of a hermitian matrix; the coefficients are rational."""
    coeffs = charpoly(X)
    if any(c.im for c in coeffs):
        raise ValueError("characteristic polynomial is not real; is the matrix hermitian?")
    return tuple(c.re for c in coeffs)


@lru_cache(maxsize=4096)
def _roots(coeffs):
    poly = sp.Poly([sp.Rational(c.numerator, c.denominator) for c in coeffs], _x, domain="QQ")
    out = []
    _, factors = poly.factor_list()
    for f, mult in factors:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            out.extend([-b / a] * mult)
        else:
            roots = [sp.CRootOf(f.as_expr(), i) for i in range(f.degree())]
            out.extend(r for r in roots for _ in range(mult))
    return tuple(out)


def sign_of(expr, digits=30):
    """Exact sign of a real algebraic number (sums of rationals and CRootOf values)."""
    expr = sp.nsimplify(expr) if isinstance(expr, float) else sp.sympify(expr)
    if expr.is_Rational:
        return int(bool(expr > 0)) - int(bool(expr < 0))
    # nonzero algebraic numbers are separated from 0, so refining must terminate
    if sp.minimal_polynomial(expr, _x) == _x:
        return 0
    while True:
        val = expr.evalf(digits)
        if abs(val) > sp.Float(10) ** (5 - digits):
            return 1 if val > 0 else -1
        digits *= 2


def compare(a, b):
    return sign_of(sp.sympify(a) - sp.sympify(b))


def eigenvalues(X):
    """Eigenvalues with multiplicity, largest first, as exact sympy numbers."""
    roots = list(_roots(real_charpoly(X)))
    if all(r.is_Rational for r in roots):
        return sorted(roots, reverse=True)
    # sort with certified comparisons
    return sorted(roots, key=cmp_to_key(lambda a, b: compare(b, a)))


def rational_eigenvalues(X):
    """Eigenvalues as Fractions, or None when some eigenvalue is irrational."""
    roots = _roots(real_charpoly(X))
    if not all(r.is_Rational for r in roots):
        return None
    return sorted((Fraction(int(r.p), int(r.q)) for r in roots), reverse=True)


def to_exact_number(value):
    """Fractions and sympy numbers to a sympy number."""
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.sympify(value)


def from_exact_number(value):
    """Rational sympy numbers back to Fractions; other algebraic numbers pass through."""
    value = sp.sympify(value)
    if value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    return value
