# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
PCA via thin SVD of the centered data matrix
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

import oslpp
from oslpp.exceptions import ArgumentError
from oslpp.numerics.linalg import fix_signs


@dataclass(frozen=True, eq=False)
class PcaModel:
	mean: np.ndarray
	components: np.ndarray
	explained_variance: np.ndarray

	@property
	def d_in(self):
		return self.components.shape[0]

	@property
	def d_pca(self):
		return self.components.shape[1]


def fit_pca(X, d_pca):
	"""
	Fit a `d_pca`-component PCA model

	Args:
		X: (rows, cols) data matrix
		d_pca: 1 <= d_pca <= min(rows - 1, cols)

	Returns:
		PcaModel: components are orthonormal columns, sign-fixed so the
		largest-magnitude entry is positive

	Raises:
		ArgumentError: d_pca out of range or above the rank of the centered data
	"""
	X = np.asarray(X, dtype=np.float64)
	n, p = X.shape
	limit = min(n - 1, p)
	if not 1 <= d_pca <= limit:
		oslpp.throw(f"d_pca={d_pca} out of range [1, {limit}] for a {n}x{p} matrix", ArgumentError)

	mean = X.mean(axis=0)
	centered = X - mean
	_, singular, vt = linalg.svd(centered, full_matrices=False)

	tol = max(n, p) * np.finfo(np.float64).eps * (singular[0] if singular.size else 0.0)
	rank = int(np.sum(singular > tol))
	if rank < d_pca:
		oslpp.throw(
			f"d_pca={d_pca} exceeds the rank of the centered data; achievable rank is {rank}", ArgumentError
		)

	components = fix_signs(vt[:d_pca].T)
	explained_variance = singular[:d_pca] ** 2 / (n - 1)
	return PcaModel(mean=mean, components=components, explained_variance=explained_variance)


def pca_transform(model, X):
	"""Center X at the model mean and project onto its components"""
	X = np.asarray(X, dtype=np.float64)
	if X.ndim != 2 or X.shape[1] != model.d_in:
		oslpp.throw(
			f"PCA model expects {model.d_in} columns, got array of shape {X.shape}", ArgumentError
		)
	return (X - model.mean) @ model.components
