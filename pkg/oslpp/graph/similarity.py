# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Open-Set Similarity Graph
=========================

Participants are ordered source rows first, then target rows. Each
participant has an effective label:

- source sample: its ground-truth class
- Selected(c) target: c
- Rejected target: the unified unknown pseudo-class
- Uncertain target: none

W[i, j] = 1 iff both i and j have an effective label and the labels are
equal, including i == j. Uncertain rows and columns are all zero, so those
samples have no influence on the learned projection.
"""

import enum
from dataclasses import dataclass

import numpy as np

import oslpp
from oslpp.exceptions import ArgumentError

# sentinel effective labels; real class ids are compared only among themselves
_NO_LABEL = np.iinfo(np.int64).min


class TargetStatus(enum.Enum):
	UNCERTAIN = "uncertain"
	SELECTED = "selected"
	REJECTED = "rejected"


@dataclass(frozen=True)
class TargetState:
	"""Decision state of one target sample"""

	status: TargetStatus
	class_id: int = None

	def __post_init__(self):
		if self.status is TargetStatus.SELECTED and self.class_id is None:
			oslpp.throw("A selected target needs a class id", ArgumentError)
		if self.status is not TargetStatus.SELECTED and self.class_id is not None:
			oslpp.throw(f"A {self.status.value} target carries no class id", ArgumentError)

	@classmethod
	def uncertain(cls):
		return cls(TargetStatus.UNCERTAIN)

	@classmethod
	def selected(cls, class_id):
		return cls(TargetStatus.SELECTED, int(class_id))

	@classmethod
	def rejected(cls):
		return cls(TargetStatus.REJECTED)

	@property
	def is_labeled(self):
		return self.status is not TargetStatus.UNCERTAIN


@dataclass(frozen=True, eq=False)
class SimilarityGraph:
	W: np.ndarray
	D: np.ndarray
	n_source: int

	@property
	def participant_count(self):
		return self.W.shape[0]

	@property
	def n_target(self):
		return self.participant_count - self.n_source

	@property
	def is_empty(self):
		return not self.W.any()


def states_from_decisions(n_target, selected, rejected):
	"""
	Build per-target states from the current decisions

	Args:
		n_target: number of target samples
		selected: mapping class id -> iterable of target indices
		rejected: iterable of target indices

	Returns:
		list[TargetState]
	"""
	states = [TargetState.uncertain()] * n_target
	for class_id, indices in selected.items():
		for i in indices:
			states[int(i)] = TargetState.selected(class_id)
	for i in rejected:
		states[int(i)] = TargetState.rejected()
	return states


def build_similarity(source_labels, target_states, known_classes=None):
	"""
	Build the open-set similarity matrix and its degree vector

	Args:
		source_labels: class id per source sample (non-empty)
		target_states: TargetState per target sample
		known_classes: known ids; defaults to the distinct source labels

	Returns:
		SimilarityGraph

	Raises:
		ArgumentError: empty source or a Selected class that is not known
	"""
	source = np.asarray(source_labels, dtype=np.int64)
	if source.ndim != 1 or source.size == 0:
		oslpp.throw("Similarity graph needs at least one source label", ArgumentError)

	known = set(source.tolist()) if known_classes is None else {int(c) for c in known_classes}
	unknown_label = max(known) + 1

	target = np.full(len(target_states), _NO_LABEL, dtype=np.int64)
	for i, state in enumerate(target_states):
		if state.status is TargetStatus.SELECTED:
			if state.class_id not in known:
				oslpp.throw(f"Target {i} selected as class {state.class_id}, which is not known", ArgumentError)
			target[i] = state.class_id
		elif state.status is TargetStatus.REJECTED:
			target[i] = unknown_label

	effective = np.concatenate([source, target])
	labeled = effective != _NO_LABEL
	W = (effective[:, None] == effective[None, :]) & labeled[:, None]
	W = W.astype(np.float64)
	D = W.sum(axis=1)

	W.setflags(write=False)
	D.setflags(write=False)
	return SimilarityGraph(W=W, D=D, n_source=int(source.size))


def laplacian(g):
	"""L = diag(D) - W (self-loops cancel)"""
	return np.diag(g.D) - g.W
