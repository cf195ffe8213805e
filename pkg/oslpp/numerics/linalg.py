# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Dense linear-algebra kernels
============================

Row normalization, the regularized generalized symmetric eigensolver behind
the projection learning step, and pairwise squared distances.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.spatial.distance import cdist

import oslpp
from oslpp.exceptions import ArgumentError, NumericalError, ShapeError

SYMMETRY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Projection:
	"""Generalized eigenvectors (columns of `basis`) with eigenvalues sorted descending"""

	basis: np.ndarray
	eigenvalues: np.ndarray

	@property
	def d_in(self):
		return self.basis.shape[0]

	@property
	def d_out(self):
		return self.basis.shape[1]

	def apply(self, X):
		"""Project samples (rows of X) into the subspace"""
		X = np.asarray(X, dtype=np.float64)
		if X.shape[1] != self.d_in:
			oslpp.throw(f"Cannot project {X.shape[1]}-dim samples with a {self.d_in}-dim basis", ShapeError)
		return X @ self.basis


def l2_normalize_rows(X):
	"""
	Scale each nonzero row to unit Euclidean norm; zero rows are returned unchanged

	Returns:
		np.ndarray: new float64 matrix
	"""
	X = np.asarray(X, dtype=np.float64)
	norms = np.linalg.norm(X, axis=1, keepdims=True)
	safe = np.where(norms > 0, norms, 1.0)
	return X / safe


def fix_signs(vectors):
	"""Flip columns so the largest-magnitude entry of each is positive (first one on ties)"""
	vectors = np.array(vectors, dtype=np.float64)
	if vectors.size == 0:
		return vectors
	pivots = np.argmax(np.abs(vectors), axis=0)
	signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
	signs[signs == 0] = 1.0
	return vectors * signs


def _check_symmetric(M, name):
	M = np.asarray(M, dtype=np.float64)
	if M.ndim != 2 or M.shape[0] != M.shape[1]:
		oslpp.throw(f"{name} must be square, got shape {M.shape}", ArgumentError)
	if not np.isfinite(M).all():
		oslpp.throw(f"{name} has non-finite entries", ArgumentError)

	scale = np.linalg.norm(M, np.inf)
	asym = np.linalg.norm(M - M.T, np.inf)
	if asym > SYMMETRY_TOL * scale:
		oslpp.throw(f"{name} is not symmetric (asymmetry {asym:.3e} relative to norm {scale:.3e})", ArgumentError)
	return (M + M.T) / 2.0


def solve_gev(A, B, d):
	"""
	Top-d eigenpairs of the symmetric-definite pencil A p = lambda B p

	B is Cholesky-factored and the problem reduced to a standard symmetric one
	(LAPACK sygvx via scipy). Eigenvectors come back B-normalized.

	Args:
		A: symmetric (m, m) matrix
		B: symmetric positive definite (m, m) matrix
		d: number of eigenpairs, 1 <= d <= m

	Returns:
		Projection: eigenvalues descending, sign-fixed columns

	Raises:
		ArgumentError: shapes, symmetry or d out of range
		NumericalError: B is not positive definite
	"""
	A = _check_symmetric(A, "A")
	B = _check_symmetric(B, "B")
	m = A.shape[0]
	if B.shape[0] != m:
		oslpp.throw(f"A is {m}x{m} but B is {B.shape[0]}x{B.shape[0]}", ArgumentError)
	if not 1 <= d <= m:
		oslpp.throw(f"Requested {d} eigenpairs from a {m}x{m} pencil", ArgumentError)

	try:
		eigenvalues, vectors = linalg.eigh(A, B, subset_by_index=[m - d, m - 1])
	except linalg.LinAlgError as e:
		oslpp.throw(f"B is not positive definite: {e}", NumericalError)

	if not (np.isfinite(eigenvalues).all() and np.isfinite(vectors).all()):
		oslpp.throw("Generalized eigensolver returned non-finite values", NumericalError)

	order = np.arange(d - 1, -1, -1)
	return Projection(basis=fix_signs(vectors[:, order]), eigenvalues=eigenvalues[order].copy())


def pairwise_sq_dists(X, Y):
	"""
	Squared Euclidean distances between rows of X and rows of Y

	Returns:
		np.ndarray: shape (len(X), len(Y)), entries >= 0
	"""
	X = np.asarray(X, dtype=np.float64)
	Y = np.asarray(Y, dtype=np.float64)
	if X.ndim != 2 or Y.ndim != 2 or X.shape[1] != Y.shape[1]:
		oslpp.throw(f"Cannot compare samples of shapes {X.shape} and {Y.shape}", ArgumentError)
	return np.maximum(cdist(X, Y, "sqeuclidean"), 0.0)
