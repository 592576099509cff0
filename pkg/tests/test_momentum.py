from fractions import Fraction

import pytest
import sympy as sp

from schurweyl._exact import QQi
from schurweyl.majorization import in_norm_hull, in_weakstar_hull
from schurweyl.momentum import (HermitianMatrix, Matrix, cayley_unitary, charpoly,
                                coadjoint_orbit_member, d_lambda, diagonal_rep_norm, eigenvalues,
                                eigenvector_identity_check, in_momentum_set_matrix,
                                in_norm_momentum_set_matrix, kaehler_value, momentum_value,
                                psi_eval, random_skew_hermitian, random_unitary,
                                rational_eigenvalues, sign_of, spectral_s_k, strong_exposure_gap,
                                triple_decompose, u_n_basis)
from schurweyl.tensor import TensorVector, highest_weight_vector
from schurweyl.weights import RationalWeight

from conftest import W

i = QQi(0, 1)
E = Matrix.elementary


class TestMatrix:
    def test_json_round_trip(self):
        X = Matrix([[1, QQi("1/2", -1)], [QQi("1/2", 1), -3]])
        assert Matrix.from_json(X.to_json()) == X
        assert X.to_json()["im"] == [["0", "-1"], ["1", "0"]]
        with pytest.raises(ValueError):
            Matrix.from_json({"n": 2, "re": [[0.5, 0], [0, 0]]})

    def test_hermitian_constructor(self):
        HermitianMatrix([[1, 2], [2, 1]])
        HermitianMatrix([[i, 1], [-1, 0]], skew=True)
        with pytest.raises(ValueError):
            HermitianMatrix([[1, 2], [3, 1]])

    def test_cayley_is_unitary(self, rng):
        for n in (2, 3, 4):
            U = random_unitary(rng, n)
            assert U @ U.adjoint() == Matrix.identity(n)
        with pytest.raises(ValueError):
            cayley_unitary(Matrix([[1, 0], [0, 0]]))

    def test_inverse(self):
        A = Matrix([[1, i], [2, 3]])
        assert A @ A.inverse() == Matrix.identity(2)


class TestSpectrum:
    def test_charpoly_matches_sympy(self, rng):
        for _ in range(10):
            A = random_skew_hermitian(rng, 3).scale(i)
            ref = sp.Matrix(3, 3, lambda r, c: sp.Rational(str(A[r, c].re))
                            + sp.I * sp.Rational(str(A[r, c].im)))
            poly = ref.charpoly().all_coeffs()
            ours = charpoly(A)
            assert [sp.Rational(str(c.re)) + sp.I * sp.Rational(str(c.im)) for c in ours] == \
                [sp.expand(c) for c in poly]

    def test_conjugation_preserves_rational_spectrum(self, rng):
        D = d_lambda(W(2, -1, 1), 4)
        for _ in range(5):
            X = D.conjugate_by(random_unitary(rng, 4))
            assert rational_eigenvalues(X) == [2, 1, 0, -1]

    def test_irrational_spectrum(self):
        X = Matrix([[1, 1], [1, 0]])
        assert rational_eigenvalues(X) is None
        top, bottom = eigenvalues(X)
        assert sign_of(top + bottom - 1) == 0
        assert sign_of(top - Fraction(8, 5)) == 1


class TestBasics:
    def test_d_lambda(self):
        assert d_lambda(W(1, 0), 2) == Matrix.diagonal([1, 0])
        assert d_lambda(W(2, -1), 3) == Matrix.diagonal([2, -1, 0])
        assert d_lambda(W(), 2) == Matrix.zeros(2)
        with pytest.raises(ValueError):
            d_lambda(W(0, 0, 1), 2)

    def test_psi(self):
        assert psi_eval(W(1), E(1, 0, 0, i)) == 1
        assert psi_eval(W(1, 0), E(2, 0, 1) - E(2, 1, 0)) == 0
        assert psi_eval(W(), E(2, 0, 0, i)) == 0
        with pytest.raises(ValueError):
            psi_eval(W(1), Matrix([[1]]))

    def test_momentum_value_examples(self):
        assert momentum_value((1,), 1, TensorVector.basis(1, (0,)), E(1, 0, 0, i)) == 1
        v = highest_weight_vector((2,), 2)
        assert [momentum_value((2,), 2, v, E(2, j, j, i)) for j in range(2)] == [2, 0]
        v = highest_weight_vector((1, 1), 2)
        assert momentum_value((1, 1), 2, v, Matrix.diagonal([i, i])) == 2

    def test_momentum_value_errors(self):
        with pytest.raises(ValueError):
            momentum_value((1,), 2, TensorVector(2, 1), E(2, 0, 0, i))
        with pytest.raises(ValueError):
            # e1 (x) e2 is not in the image of the antisymmetrizer
            momentum_value((1, 1), 2, TensorVector.basis(2, (0, 1)), E(2, 0, 0, i))

    @pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1)])
    def test_momentum_at_highest_weight_is_psi(self, lam):
        for n in (2, 3):
            v = highest_weight_vector(lam, n)
            for X in u_n_basis(n):
                assert momentum_value(lam, n, v, X) == psi_eval(W(*lam), X)


class TestSpectralSums:
    def test_examples(self):
        X = Matrix.diagonal([3, 1, -2])
        assert [spectral_s_k(X, k) for k in (1, 2, 3)] == [3, 4, 4]
        assert spectral_s_k(X, 3, padded=False) == 2
        assert spectral_s_k(-X, 1) == 2

    def test_invariance(self, rng):
        D = Matrix.diagonal([1, 0])
        for _ in range(5):
            assert spectral_s_k(D.conjugate_by(random_unitary(rng, 2)), 1) == 1
        X = Matrix([[2, QQi(1, 1), 0], [QQi(1, -1), 0, 1], [0, 1, -1]])
        P = Matrix.permutation((2, 0, 1))
        for k in (1, 2, 3):
            assert spectral_s_k(X.conjugate_by(P), k) == spectral_s_k(X, k)

    def test_k_range(self):
        with pytest.raises(ValueError):
            spectral_s_k(Matrix.diagonal([1]), 0)
        with pytest.raises(ValueError):
            spectral_s_k(Matrix.diagonal([1]), 2, padded=False)


class TestMomentumSet:
    def test_examples(self):
        half = Matrix.diagonal([Fraction(1, 2)] * 2)
        assert in_momentum_set_matrix(half, W(1, 0)) and in_norm_momentum_set_matrix(half, W(1, 0))
        assert not in_momentum_set_matrix(Matrix.diagonal([1, 1]), W(1, 0))
        assert in_norm_momentum_set_matrix(d_lambda(W(2, -1), 3), W(2, -1))

    def test_diagonal_matches_majorization(self, rng):
        for _ in range(100):
            lam = W(*[rng.randint(-2, 2) for _ in range(3)])
            x = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)]
            X = Matrix.diagonal(x)
            mu = RationalWeight.from_values(x)
            assert in_momentum_set_matrix(X, lam) == in_weakstar_hull(mu, lam)
            assert in_norm_momentum_set_matrix(X, lam) == in_norm_hull(mu, lam)

    def test_irrational_spectrum_member(self):
        X = Matrix([[1, 1, 0], [1, 0, 0], [0, 0, 2]])   # spectrum 2, golden ratio, 1 - golden ratio
        assert in_momentum_set_matrix(X, W(2, 2, -1))
        assert not in_momentum_set_matrix(X, W(3, 1))

    def test_coadjoint_orbit(self, rng):
        D = d_lambda(W(1, 0), 2)
        assert coadjoint_orbit_member(D, W(1, 0))
        assert not coadjoint_orbit_member(Matrix.diagonal([Fraction(1, 2)] * 2), W(1, 0))
        assert coadjoint_orbit_member(D.conjugate_by(Matrix.permutation((1, 0))), W(1, 0))
        assert coadjoint_orbit_member(D.conjugate_by(random_unitary(rng, 2)), W(1, 0))


class TestTriple:
    def test_examples(self):
        a, b, c, d = 1, 2, 3, 4
        t = triple_decompose(Matrix([[a, b], [c, d]]), W(1, 0))
        assert t.lower == E(2, 1, 0, c)
        assert t.block_diagonal == Matrix.diagonal([a, d])
        assert t.upper == E(2, 0, 1, b)
        t0 = triple_decompose(Matrix([[a, b], [c, d]]), W())
        assert t0.block_diagonal == Matrix([[a, b], [c, d]])

    def test_properties(self, rng):
        lam = W(2, 1, 1, -1)
        D = d_lambda(lam, 4)
        for _ in range(20):
            X = random_skew_hermitian(rng, 4) + Matrix.diagonal([rng.randint(-3, 3) for _ in range(4)])
            t = triple_decompose(X, lam)
            assert t.total() == X
            assert t.block_diagonal.commutes_with(D)
            assert t.upper.adjoint() == triple_decompose(X.adjoint(), lam).lower
        # a commuting matrix has no off-block parts
        C = Matrix([[5, 0, 0, 0], [0, 1, 2, 0], [0, 3, 4, 0], [0, 0, 0, 7]])
        t = triple_decompose(C, lam)
        assert t.lower == t.upper == Matrix.zeros(4)
        # block-diagonal unitary permutation (swap the two equal entries) keeps membership
        P = Matrix.permutation((0, 2, 1, 3))
        X = random_skew_hermitian(rng, 4)
        assert triple_decompose(X.conjugate_by(P), lam).upper == triple_decompose(X, lam).upper.conjugate_by(P)


class TestKaehler:
    def test_examples(self):
        z = QQi(1, 2)
        assert kaehler_value(W(1, 0), E(2, 0, 1, z)) == 2 * z.abs2()
        assert kaehler_value(W(1, 0), Matrix.zeros(2)) == 0
        assert kaehler_value(W(2, 0), E(2, 0, 1)) == 4
        with pytest.raises(ValueError):
            kaehler_value(W(1, 0), E(2, 1, 0))

    def test_lower_bound(self, rng):
        lam = W(3, 1, 1, -2)
        D = lam.dense(4)
        for _ in range(30):
            Z = Matrix([[QQi(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), rng.randint(-2, 2))
                         if D[r] > D[c] else 0 for c in range(4)] for r in range(4)])
            assert kaehler_value(lam, Z) >= 2 * Z.hs_norm_sq()


class TestEigenvectorIdentity:
    def test_examples(self):
        # raising E_01 (lambda_0 > lambda_1) kills v_lambda; E_jj scales by lambda_j
        assert eigenvector_identity_check((2, 1), 3, E(3, 0, 1))
        assert eigenvector_identity_check((2, 1), 3, E(3, 1, 1))
        assert eigenvector_identity_check((1, 1), 3, E(3, 1, 0))
        with pytest.raises(ValueError):
            eigenvector_identity_check((2, 1), 3, E(3, 1, 0))

    @pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 3), ((1, 1), 3), ((2, 1), 3)])
    def test_every_elementary_matrix_in_parabolic(self, lam, n):
        D = list(lam) + [0] * (n - len(lam))
        for a in range(n):
            for b in range(n):
                if D[a] >= D[b]:
                    assert eigenvector_identity_check(lam, n, E(n, a, b, QQi(2, -1)))


class TestExposure:
    def test_examples(self):
        g = strong_exposure_gap(d_lambda(W(1, 0), 2), W(1, 0))
        assert g.as_tuple() == (0, 0, 0)
        g = strong_exposure_gap(Matrix.diagonal([Fraction(1, 2)] * 2), W(1, 0))
        assert g.gap == Fraction(1, 2) and g.hs_dist_sq == Fraction(1, 2)
        assert g.satisfies_bound() and g.tr_dist == 1
        assert g.hs_dist == sp.sqrt(2) / 2

    def test_precondition(self):
        with pytest.raises(ValueError):
            strong_exposure_gap(Matrix.diagonal([1, 1]), W(1, 0))

    def test_sampled_members(self, rng):
        lam = W(2, 1, -1)
        D = d_lambda(lam, 3)
        perms = [Matrix.permutation(p) for p in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2)]]
        for _ in range(20):
            ts = [Fraction(rng.randint(0, 4)) for _ in perms]
            s = sum(ts) or 1
            T = Matrix.zeros(3)
            for t, P in zip(ts, perms):
                T = T + D.conjugate_by(P).scale(t / s)
            T = T.conjugate_by(random_unitary(rng, 3))
            assert strong_exposure_gap(T, lam).satisfies_bound()


class TestRepNorm:
    def test_examples(self):
        assert diagonal_rep_norm((1,), 2, [1, 0]) == 1
        assert diagonal_rep_norm((2,), 2, [1, -1]) == 2
        assert diagonal_rep_norm((1, 1), 2, [1, 1]) == 2

    def test_bounded_by_l1_radius(self, rng):
        for lam in [(1,), (2,), (2, 1), (1, 1, 1)]:
            for _ in range(10):
                x = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(3)]
                assert diagonal_rep_norm(lam, 3, x) <= sum(lam) * max(abs(v) for v in x)
