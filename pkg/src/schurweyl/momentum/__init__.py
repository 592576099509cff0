"""Momentum sets of D_lambda at the level of n x n matrices."""

from .matrix import HermitianMatrix, Matrix, cayley_unitary, random_skew_hermitian, random_unitary
from .operations import (ExposureGap, TripleDecomposition, coadjoint_orbit_member, d_lambda,
                         diagonal_rep_norm, eigenvector_identity_check, in_momentum_set_matrix,
                         in_norm_momentum_set_matrix, kaehler_value, momentum_value, psi_eval,
                         spectral_s_k, strong_exposure_gap, triple_decompose, u_n_basis)
from .spectrum import charpoly, eigenvalues, rational_eigenvalues, real_charpoly, sign_of

__all__ = [
    "ExposureGap", "HermitianMatrix", "Matrix", "TripleDecomposition", "cayley_unitary",
    "charpoly", "coadjoint_orbit_member", "d_lambda", "diagonal_rep_norm", "eigenvalues",
    "eigenvector_identity_check", "in_momentum_set_matrix", "in_norm_momentum_set_matrix",
    "kaehler_value", "momentum_value", "psi_eval", "random_skew_hermitian", "random_unitary",
    "rational_eigenvalues", "real_charpoly", "sign_of", "spectral_s_k", "strong_exposure_gap",
    "triple_decompose", "u_n_basis",
]
