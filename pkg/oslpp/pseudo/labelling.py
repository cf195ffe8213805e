# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Nearest-class-mean pseudo-labelling
===================================

Class means come from projected source samples only. A target sample takes
the class of the closest mean; its class probabilities are a softmax over
negated Euclidean distances, shifted by the row minimum before
exponentiation so large raw-scale distances do not underflow.

Once the gap between the nearest and every other mean passes ~37 the top
probability rounds to exactly 1.0, and past ~745 the others underflow to 0.
Confidence ranking therefore uses `log_rest`, the log of the probability
mass outside the top class, which stays finite and ordered.
"""

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.special import logsumexp, softmax

import oslpp
from oslpp.exceptions import ArgumentError, ShapeError


@dataclass(frozen=True, eq=False)
class ClassMeans:
	means: np.ndarray
	counts: np.ndarray
	classes: tuple


@dataclass(frozen=True, eq=False)
class PseudoLabeling:
	labels: np.ndarray
	probs: np.ndarray
	top_prob: np.ndarray
	classes: tuple
	log_rest: np.ndarray = None

	def __post_init__(self):
		if self.log_rest is None:
			with np.errstate(divide="ignore"):
				object.__setattr__(self, "log_rest", np.log1p(-np.asarray(self.top_prob, dtype=np.float64)))

	@property
	def n_target(self):
		return self.labels.shape[0]


def class_means(Z_source, labels, space):
	"""
	Mean of the source rows of every known class

	Args:
		Z_source: (n_s, d) projected source samples
		labels: class id per source row
		space: LabelSpace

	Returns:
		ClassMeans: rows ordered as `space.known_classes`

	Raises:
		ArgumentError: a known class has no source sample
	"""
	Z = np.asarray(Z_source, dtype=np.float64)
	y = np.asarray(labels, dtype=np.int64)
	if y.shape[0] != Z.shape[0]:
		oslpp.throw(f"{Z.shape[0]} source rows but {y.shape[0]} labels", ShapeError)

	means = np.empty((space.n_known, Z.shape[1]), dtype=np.float64)
	counts = np.empty(space.n_known, dtype=np.int64)
	for k, class_id in enumerate(space.known_classes):
		members = y == class_id
		counts[k] = int(members.sum())
		if counts[k] == 0:
			oslpp.throw(f"Class {class_id} has no source sample to compute a mean from", ArgumentError)
		means[k] = Z[members].mean(axis=0)

	return ClassMeans(means=means, counts=counts, classes=tuple(space.known_classes))


def pseudo_label(Z_target, means):
	"""
	Nearest-class-mean labels and softmax probabilities

	Ties in the argmin go to the smallest class id (classes are sorted).
	Probabilities lie in (0, 1) only while distance gaps stay below ~37; beyond
	that they saturate to 1 and, past ~745, to 0. Labels and `log_rest` do not.

	Returns:
		PseudoLabeling
	"""
	Z = np.asarray(Z_target, dtype=np.float64)
	if Z.ndim != 2 or Z.shape[1] != means.means.shape[1]:
		oslpp.throw(
			f"Cannot label {Z.shape}-shaped targets against {means.means.shape[1]}-dim class means", ShapeError
		)

	dists = cdist(Z, means.means, "euclidean")
	nearest = np.argmin(dists, axis=1)
	shifted = dists - dists[np.arange(Z.shape[0]), nearest][:, None]
	probs = softmax(-shifted, axis=1)

	negated = -shifted
	others = np.where(np.arange(dists.shape[1]) == nearest[:, None], -np.inf, negated)
	log_rest = logsumexp(others, axis=1) - logsumexp(negated, axis=1)

	classes = np.asarray(means.classes, dtype=np.int64)
	return PseudoLabeling(
		labels=classes[nearest],
		probs=probs,
		top_prob=probs[np.arange(Z.shape[0]), nearest],
		classes=tuple(means.classes),
		log_rest=log_rest,
	)
