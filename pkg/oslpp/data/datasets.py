# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Datasets and label space
========================

A feature matrix is a finite float64 ndarray of shape (samples, dims). Source
datasets carry one known class id per row; target datasets may carry ground
truth for evaluation only, with every unknown-class id collapsed onto the
single `unknown_id` of the label space.
"""

from dataclasses import dataclass, field

import numpy as np

import oslpp
from oslpp.exceptions import ArgumentError, ShapeError, ValidationError


def as_feature_matrix(values, name="features"):
	"""
	Validate and freeze a feature matrix

	Args:
		values: array-like of shape (rows, cols)
		name: Label used in error messages

	Returns:
		np.ndarray: read-only float64 copy

	Raises:
		ShapeError: not 2-D or an empty dimension
		ValidationError: NaN or Inf present
	"""
	X = np.array(values, dtype=np.float64)
	if X.ndim != 2:
		oslpp.throw(f"{name} must be a 2-D matrix, got {X.ndim} dimension(s)", ShapeError)
	if X.shape[0] < 1 or X.shape[1] < 1:
		oslpp.throw(f"{name} must have at least one row and one column, got {X.shape}", ShapeError)

	bad = ~np.isfinite(X)
	if bad.any():
		row, col = np.argwhere(bad)[0]
		oslpp.throw(f"{name} has a non-finite value at row {row + 1}, column {col + 1}", ValidationError)

	X.setflags(write=False)
	return X


def _frozen_labels(labels, name):
	y = np.asarray(labels)
	if y.ndim != 1:
		oslpp.throw(f"{name} must be a flat list of class ids", ShapeError)
	if y.size and not np.issubdtype(y.dtype, np.integer):
		oslpp.throw(f"{name} must contain integer class ids", ValidationError)
	y = y.astype(np.int64)
	y.setflags(write=False)
	return y


@dataclass(frozen=True)
class LabelSpace:
	"""Known class ids (sorted) plus the id of the unified unknown class"""

	known_classes: tuple
	unknown_id: int

	def __post_init__(self):
		if len(self.known_classes) < 2:
			oslpp.throw(
				f"At least two known classes are required, got {len(self.known_classes)}", ArgumentError
			)
		if len(set(self.known_classes)) != len(self.known_classes):
			oslpp.throw("Known class ids must be distinct", ArgumentError)
		if self.unknown_id in self.known_classes:
			oslpp.throw(f"Unknown id {self.unknown_id} collides with a known class", ArgumentError)

	@property
	def n_known(self):
		return len(self.known_classes)

	def index_of(self, class_id):
		"""Position of a known class in `known_classes`"""
		return self.known_classes.index(int(class_id))


def build_label_space(source_labels):
	"""
	Derive the label space from source labels

	Args:
		source_labels: Non-empty iterable of class ids

	Returns:
		LabelSpace: sorted distinct ids, unknown_id = max + 1
	"""
	labels = [int(label) for label in source_labels]
	if not labels:
		oslpp.throw("Cannot build a label space from an empty label list", ArgumentError)

	known = tuple(sorted(set(labels)))
	return LabelSpace(known_classes=known, unknown_id=known[-1] + 1)


def remap_unknown(labels, space):
	"""
	Collapse every id outside the known classes onto `space.unknown_id`

	Returns:
		np.ndarray: int64 labels
	"""
	y = np.asarray(labels, dtype=np.int64)
	known = np.isin(y, np.asarray(space.known_classes, dtype=np.int64))
	return np.where(known, y, space.unknown_id)


@dataclass(frozen=True, eq=False)
class SourceDataset:
	"""Labelled source-domain samples"""

	features: np.ndarray
	labels: np.ndarray
	space: LabelSpace = field(default=None)

	def __post_init__(self):
		X = as_feature_matrix(self.features, "source features")
		y = _frozen_labels(self.labels, "source labels")
		if y.shape[0] != X.shape[0]:
			oslpp.throw(
				f"Source has {X.shape[0]} feature rows but {y.shape[0]} labels", ShapeError
			)

		space = self.space if self.space is not None else build_label_space(y.tolist())
		present = set(y.tolist())
		outside = present.difference(space.known_classes)
		if outside:
			oslpp.throw(f"Source labels {sorted(outside)} are not known classes", ValidationError)
		missing = [c for c in space.known_classes if c not in present]
		if missing:
			oslpp.throw(f"Known classes {missing} have no source sample", ValidationError)

		object.__setattr__(self, "features", X)
		object.__setattr__(self, "labels", y)
		object.__setattr__(self, "space", space)

	@property
	def n_samples(self):
		return self.features.shape[0]


@dataclass(frozen=True, eq=False)
class TargetDataset:
	"""Unlabelled target-domain samples with optional evaluation ground truth"""

	features: np.ndarray
	ground_truth: np.ndarray = None

	def __post_init__(self):
		X = as_feature_matrix(self.features, "target features")
		object.__setattr__(self, "features", X)

		if self.ground_truth is not None:
			y = _frozen_labels(self.ground_truth, "target ground truth")
			if y.shape[0] != X.shape[0]:
				oslpp.throw(
					f"Target has {X.shape[0]} feature rows but {y.shape[0]} ground-truth labels", ShapeError
				)
			object.__setattr__(self, "ground_truth", y)

	@property
	def n_samples(self):
		return self.features.shape[0]

	@property
	def has_ground_truth(self):
		return self.ground_truth is not None


def check_compatible(source, target):
	"""Raise ShapeError unless source and target share the feature dimension"""
	if source.features.shape[1] != target.features.shape[1]:
		oslpp.throw(
			f"Source features have {source.features.shape[1]} columns but target features have "
			f"{target.features.shape[1]}",
			ShapeError,
		)
