# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Progressive selection and rejection of pseudo-labelled targets
==============================================================

At iteration t of T the top ceil(min(1, (t+1)/T) * n_c) non-rejected
candidates of every class c are selected, ranked by their probability for c.
Rejection starts from the n_r least confident targets and grows by a 1-NN
rule: an undecided target whose nearest decided target is rejected becomes
rejected. Rejection is permanent; selection is recomputed every iteration.

All ties break toward the smaller index or class id.
"""

import numpy as np
from scipy.spatial.distance import cdist

import oslpp
from oslpp.exceptions import ArgumentError


def selection_fraction(t, T):
	"""Share of each class selected at iteration t: min(1, (t+1)/T)"""
	if T < 2 or not 1 <= t <= T:
		oslpp.throw(f"Iteration {t} out of range for T={T} (need 1 <= t <= T, T >= 2)", ArgumentError)
	return min(1.0, (t + 1) / T)


def selection_count(n_candidates, t, T):
	"""ceil(selection_fraction(t, T) * n_candidates) in exact integer arithmetic"""
	selection_fraction(t, T)
	numerator = min(t + 1, T) * int(n_candidates)
	return -(-numerator // T)


def select(pl, rejected, t, T):
	"""
	Select the most confident non-rejected candidates of every known class

	Args:
		pl: PseudoLabeling of all targets
		rejected: set of rejected target indices
		t: iteration index (1-based)
		T: total iterations

	Returns:
		dict: class id -> np.ndarray of selected target indices (ascending rank order)
	"""
	n_target = pl.n_target
	rejected_mask = np.zeros(n_target, dtype=bool)
	rejected_idx = np.fromiter((int(i) for i in rejected), dtype=np.int64)
	if rejected_idx.size and (rejected_idx.min() < 0 or rejected_idx.max() >= n_target):
		oslpp.throw("Rejected indices must refer to target samples", ArgumentError)
	rejected_mask[rejected_idx] = True

	selected = {}
	for class_id in pl.classes:
		candidates = np.flatnonzero((pl.labels == class_id) & ~rejected_mask)
		keep = selection_count(candidates.size, t, T)
		# candidates of class c have c as their top class, so a smaller log_rest
		# means a larger p_c; stable sort keeps the smaller index first on ties
		order = np.argsort(pl.log_rest[candidates], kind="stable")
		selected[class_id] = candidates[order[:keep]]
	return selected


def seed_rejections(pl, n_r):
	"""
	The n_r targets with the lowest top probability

	Ranked by `log_rest` so confidences that round to 1.0 still order correctly.

	Raises:
		ArgumentError: n_r outside [1, n_t - 1]
	"""
	n_target = pl.n_target
	if not 1 <= n_r < n_target:
		oslpp.throw(f"n_r={n_r} must satisfy 1 <= n_r < {n_target} (number of targets)", ArgumentError)

	order = np.argsort(-pl.log_rest, kind="stable")
	return {int(i) for i in order[:n_r]}


def propagate_rejections(Z_target, selected, rejected):
	"""
	One synchronous 1-NN rejection pass

	The pool is every decided target (selected or rejected) as it stands on
	entry; an undecided target joins the rejected set if its nearest pool
	member is rejected.

	Args:
		Z_target: (n_t, d) projected targets
		selected: set of selected target indices
		rejected: set of rejected target indices

	Returns:
		set: rejected indices, a superset of `rejected`
	"""
	selected = {int(i) for i in selected}
	rejected = {int(i) for i in rejected}
	if selected & rejected:
		oslpp.throw("A target cannot be both selected and rejected", ArgumentError)

	pool = np.array(sorted(selected | rejected), dtype=np.int64)
	if pool.size == 0:
		return set(rejected)

	Z = np.asarray(Z_target, dtype=np.float64)
	undecided = np.setdiff1d(np.arange(Z.shape[0]), pool, assume_unique=True)
	if undecided.size == 0:
		return set(rejected)

	nearest = pool[np.argmin(cdist(Z[undecided], Z[pool], "sqeuclidean"), axis=1)]
	pool_rejected = np.isin(nearest, np.fromiter(rejected, dtype=np.int64, count=len(rejected)))
	return rejected | {int(i) for i in undecided[pool_rejected]}
