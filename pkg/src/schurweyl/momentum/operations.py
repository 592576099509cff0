"""Matrix-level momentum-set calculus for the diagonal operator D_lambda."""

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .._exact import QQi, fraction_str
from ..majorization import l_k
from ..tensor.characters import isotypic_projector
from ..tensor.space import (act_on_tensor, apply_lie, highest_weight_vector, weight_multiset)
from ..tensor.tableaux import as_partition
from ..weights import RationalWeight, as_rational
from .matrix import Matrix
from .spectrum import (compare, eigenvalues, from_exact_number, real_charpoly, sign_of,
                       to_exact_number)

MINUS_I = QQi(0, -1)


def _dense_lambda(lam, n):
    lam = as_rational(lam)
    if lam and max(lam.support()) >= n:
        raise ValueError(f"support of {lam} does not fit into n={n}")
    return lam.dense(n)


def d_lambda(lam, n):
    """diag(lambda_0, ..., lambda_{n-1})."""
    return Matrix.diagonal(_dense_lambda(lam, n))


def _require_skew(X):
    if not X.is_skew_hermitian():
        raise ValueError("expected a skew-hermitian matrix")


def _real(z, what):
    if z.im:
        raise AssertionError(f"{what} came out non-real: {z}")
    return z.re


def psi_eval(lam, X):
    """psi_lambda(X) = -i Tr(D_lambda X) on skew-hermitian X."""
    _require_skew(X)
    return _real(MINUS_I * (d_lambda(lam, X.n) @ X).trace(), "psi_lambda")


def momentum_value(lam, n, v, X):
    """<-i d pi(X) v, v> / <v, v> for v in the image of P_lambda in (Q^n)^{(x)k}."""
    shape = as_partition(lam)
    _require_skew(X)
    if X.n != n or v.n != n:
        raise ValueError("matrix, vector and n disagree")
    if v.is_zero():
        raise ValueError("the momentum map is undefined at the zero vector")
    if v.k != shape.n:
        raise ValueError(f"vector lives in degree {v.k}, the shape has {shape.n} boxes")
    if act_on_tensor(isotypic_projector(shape), n)(v) != v:
        raise ValueError("vector is not in the image of the isotypic projector")
    num = QQi.coerce(apply_lie(X, v).scale(MINUS_I).inner(v))
    den = QQi.coerce(v.inner(v))
    return _real(num / den, "momentum value")


def u_n_basis(n):
    """Basis of u(n): i E_jj, E_jk - E_kj and i(E_jk + E_kj) for j < k."""
    out = [Matrix.elementary(n, j, j, QQi(0, 1)) for j in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            out.append(Matrix.elementary(n, j, k) - Matrix.elementary(n, k, j))
            out.append(Matrix.elementary(n, j, k, QQi(0, 1)) + Matrix.elementary(n, k, j, QQi(0, 1)))
    return out


def _require_hermitian(X):
    if not X.is_hermitian():
        raise ValueError("expected a hermitian matrix")


def spectral_s_k(X, k, padded=True):
    """Sum of the k largest eigenvalues of hermitian X.

    With ``padded`` (the default) the spectrum is extended by infinitely many
    zeros, so that s_k(diag(x)) = L_k(x).  ``padded=False`` sums exactly k of
    the n eigenvalues.
    """
    _require_hermitian(X)
    if k < 1:
        raise ValueError("k must be at least 1")
    eig = eigenvalues(X)
    if padded:
        top = [e for e in eig if sign_of(e) > 0][:k]
    else:
        if k > X.n:
            raise ValueError(f"k={k} exceeds the matrix size {X.n}")
        top = eig[:k]
    return from_exact_number(sp.Add(*top)) if top else Fraction(0)


def _s_k_bounds(X, lam):
    D = _dense_lambda(lam, X.n)
    for k in range(1, X.n + 1):
        for sgn in (1, -1):
            s = spectral_s_k(X.scale(sgn), k)
            bound = l_k(RationalWeight.from_values([sgn * d for d in D]), k)
            if compare(to_exact_number(s) if isinstance(s, Fraction) else s,
                       to_exact_number(bound)) > 0:
                return False
    return True


def in_momentum_set_matrix(X, lam):
    """s_k(X) <= s_k(D_lambda) and s_k(-X) <= s_k(-D_lambda) for k = 1..n."""
    _require_hermitian(X)
    return _s_k_bounds(X, lam)


def in_norm_momentum_set_matrix(X, lam):
    """The weak-* test plus Tr X = Tr D_lambda."""
    _require_hermitian(X)
    if X.trace() != d_lambda(lam, X.n).trace():
        return False
    return _s_k_bounds(X, lam)


@dataclass(frozen=True)
class TripleDecomposition:
    lower: Matrix
    block_diagonal: Matrix
    upper: Matrix

    def total(self):
        return self.lower + self.block_diagonal + self.upper

    def to_json(self):
        return {"lower": self.lower.to_json(), "block_diagonal": self.block_diagonal.to_json(),
                "upper": self.upper.to_json()}


def triple_decompose(X, lam, n=None):
    """Split X entrywise by comparing lambda_i with lambda_j.

    (i, j) goes to the lower part when lambda_i < lambda_j, to the commutant
    of D_lambda when they are equal, and to the upper part otherwise.
    """
    n = X.n if n is None else n
    if X.n != n:
        raise ValueError("matrix size and n disagree")
    D = _dense_lambda(lam, n)
    parts = {-1: [], 0: [], 1: []}
    for key in parts:
        parts[key] = [[QQi() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            key = (D[i] > D[j]) - (D[i] < D[j])
            parts[key][i][j] = X[i, j]
    return TripleDecomposition(Matrix(parts[-1]), Matrix(parts[0]), Matrix(parts[1]))


def _positions_allowed(Z, D, rel):
    return all(not Z[i, j] or rel(D[i], D[j]) for i in range(Z.n) for j in range(Z.n))


def kaehler_value(lam, Z):
    """psi_lambda([X, I X]) for X = Z - Z*, I X = i(Z + Z*), with Z in the upper part.

    Evaluated both by 2 sum |z_jk|^2 (lambda_j - lambda_k) and by the commutator
    trace; a mismatch raises.
    """
    D = _dense_lambda(lam, Z.n)
    if not _positions_allowed(Z, D, lambda a, b: a > b):
        raise ValueError("Z has entries outside the positions with lambda_j > lambda_k")
    closed = 2 * sum((Z[j, k].abs2() * (D[j] - D[k])
                      for j in range(Z.n) for k in range(Z.n) if Z[j, k]), Fraction(0))
    X = Z - Z.adjoint()
    IX = (Z + Z.adjoint()).scale(QQi(0, 1))
    direct = psi_eval(lam, X @ IX - IX @ X)
    if direct != closed:
        raise AssertionError(f"Kaehler closed form {closed} disagrees with the trace {direct}")
    return closed


def eigenvector_identity_check(lam, n, X):
    """d pi(X) v_lambda = Tr(D_lambda X) v_lambda for X in the upper-plus-commutant
    part, and <d pi(Y) v_lambda, v_lambda> = 0 for the strictly lower part Y of X*.

    Tr(D_lambda X) is i psi_lambda(X) extended complex-linearly.
    """
    shape = as_partition(lam)
    D = list(shape.padded(n))
    if X.n != n:
        raise ValueError("matrix size and n disagree")
    if not _positions_allowed(X, D, lambda a, b: a >= b):
        raise ValueError("X is not in the parabolic subalgebra fixed by the flag of lambda")
    v = highest_weight_vector(shape, n)
    eig = (d_lambda(RationalWeight.from_values(D), n) @ X).trace()
    holds = apply_lie(X, v) == v.scale(eig)
    lower = triple_decompose(X.adjoint(), RationalWeight.from_values(D), n).lower
    return holds and not apply_lie(lower, v).inner(v)


def coadjoint_orbit_member(X, lam):
    """X is a unitary conjugate of D_lambda: equal characteristic polynomials."""
    _require_hermitian(X)
    return real_charpoly(X) == real_charpoly(d_lambda(lam, X.n))


class ExposureGap:
    """gap = Tr(D D) - Tr(D T) with ||T - D||_2 and ||T - D||_1.

    The squared Hilbert-Schmidt distance is rational; the distances themselves
    are algebraic and computed on demand.
    """

    def __init__(self, T, D, gap, hs_dist_sq):
        self._diff = T - D
        self.gap = gap
        self.hs_dist_sq = hs_dist_sq

    @property
    def hs_dist(self):
        return from_exact_number(sp.sqrt(to_exact_number(self.hs_dist_sq)))

    @property
    def tr_dist(self):
        return from_exact_number(sp.Add(*(abs(e) for e in eigenvalues(self._diff))))

    def satisfies_bound(self):
        """||T - D||_2^2 <= 2 gap."""
        return self.hs_dist_sq <= 2 * self.gap

    def as_tuple(self):
        return self.gap, self.hs_dist, self.tr_dist

    def to_json(self):
        def fmt(x):
            return fraction_str(x) if isinstance(x, Fraction) else str(x)
        return {"gap": fmt(self.gap), "hs_dist_sq": fmt(self.hs_dist_sq),
                "hs_dist": fmt(self.hs_dist), "tr_dist": fmt(self.tr_dist),
                "bound_holds": self.satisfies_bound()}


def strong_exposure_gap(T, lam, check=True):
    """Exposure data of T against D_lambda, which maximizes f(X) = Tr(D_lambda X)."""
    _require_hermitian(T)
    if check and not in_momentum_set_matrix(T, lam):
        raise ValueError("T is not in the momentum set of lambda")
    D = d_lambda(lam, T.n)
    gap = _real((D @ D).trace() - (D @ T).trace(), "exposure gap")
    return ExposureGap(T, D, gap, (T - D).hs_norm_sq())


def diagonal_rep_norm(lam, n, x):
    """|| d pi_lambda(i diag(x)) ||: the largest |<alpha, x>| over the weights alpha of S_lambda."""
    x = [Fraction(v) for v in (x.dense(n) if hasattr(x, "dense") else x)]
    if len(x) != n:
        raise ValueError(f"expected {n} diagonal entries")
    best = Fraction(0)
    for alpha in weight_multiset(lam, n):
        best = max(best, abs(sum(alpha.value(j) * x[j] for j in range(n))))
    return best
