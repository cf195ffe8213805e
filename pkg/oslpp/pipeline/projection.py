# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Projection learning on the open-set graph

With X the (d_pca, m) data matrix whose columns are the participants, the
projection is the top-d solution of

	X D X^T p = lambda (X L X^T + I) p

and the locality objective it trades off is

	sum_ij ||P^T x_i - P^T x_j||^2 W_ij = 2 tr(P^T X L X^T P).
"""

import numpy as np

import oslpp
from oslpp.exceptions import ArgumentError, PipelineError, ShapeError
from oslpp.graph.similarity import laplacian
from oslpp.numerics.linalg import solve_gev


def _samples_as_columns(X_all, g):
	X_all = np.asarray(X_all, dtype=np.float64)
	if X_all.ndim != 2 or X_all.shape[0] != g.participant_count:
		oslpp.throw(
			f"Graph has {g.participant_count} participants but the data has shape {X_all.shape}", ShapeError
		)
	return X_all.T


def learn_projection(X_all, g, d):
	"""
	Solve the regularized generalized eigenproblem for the graph

	Args:
		X_all: (m, d_pca) samples as rows, ordered like the graph
		g: SimilarityGraph
		d: subspace dimension, d <= d_pca

	Returns:
		Projection

	Raises:
		ArgumentError: d larger than the input dimension
		PipelineError: the graph has no edge at all
	"""
	X = _samples_as_columns(X_all, g)
	d_pca = X.shape[0]
	if not 1 <= d <= d_pca:
		oslpp.throw(f"Subspace dimension d={d} must be in [1, {d_pca}]", ArgumentError)
	if g.is_empty:
		oslpp.throw("No supervision in graph: the similarity matrix is all zero", PipelineError)

	A = (X * g.D) @ X.T
	B = X @ laplacian(g) @ X.T + np.eye(d_pca)
	return solve_gev((A + A.T) / 2.0, (B + B.T) / 2.0, d)


def objective_value(P, X_all, g):
	"""Locality objective of projection P on graph g, computed as 2 tr(P^T X L X^T P)"""
	X = _samples_as_columns(X_all, g)
	basis = P.basis if hasattr(P, "basis") else np.asarray(P, dtype=np.float64)
	if basis.shape[0] != X.shape[0]:
		oslpp.throw(f"Projection expects {basis.shape[0]}-dim samples, got {X.shape[0]}", ShapeError)

	Y = basis.T @ X
	return float(2.0 * np.trace(Y @ laplacian(g) @ Y.T))
