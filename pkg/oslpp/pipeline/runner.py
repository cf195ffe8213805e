# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Open-Set LPP Pipeline
=====================

End-to-end driver:

1. l2-normalize source and target features, fit one PCA on their union and
   project both.
2. Learn P_0 from a source-only graph (every target Uncertain).
3. Project, compute source class means, pseudo-label every target.
4. Seed n_r rejections from the least confident targets.
5. For k = 1..T: select, propagate rejections, rebuild the graph from source
   + selected + rejected, learn P_k, re-project, recompute means and
   pseudo-labels.
6. Rejected targets are predicted as the unknown class, all others keep their
   final pseudo-label.

Same inputs and hyper-parameters give bit-identical results.
"""

import time
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd

import oslpp
from oslpp.config import DEFAULT_SEED, PRESETS
from oslpp.data.datasets import check_compatible
from oslpp.exceptions import ArgumentError, PipelineError
from oslpp.graph.similarity import TargetState, build_similarity, states_from_decisions
from oslpp.numerics.linalg import l2_normalize_rows
from oslpp.numerics.pca import fit_pca, pca_transform
from oslpp.pipeline.projection import learn_projection, objective_value
from oslpp.pseudo.labelling import class_means, pseudo_label
from oslpp.pseudo.selection import propagate_rejections, seed_rejections, select, selection_fraction
from oslpp.utils.input_validator import InputValidator


@dataclass(frozen=True)
class Hyperparams:
	"""
	d_pca: PCA dimension
	d: OSLPP subspace dimension (d <= d_pca)
	T: number of selection/rejection iterations (T >= 2)
	n_r: number of seeded rejections (n_r >= 1)
	seed: recorded for reproducibility; the pipeline itself draws no random numbers
	"""

	d_pca: int
	d: int
	T: int
	n_r: int
	seed: int = DEFAULT_SEED

	def __post_init__(self):
		d_pca = InputValidator.validate_integer(self.d_pca, "d_pca", min_value=1)
		d = InputValidator.validate_integer(self.d, "d", min_value=1, max_value=d_pca)
		T = InputValidator.validate_integer(self.T, "T", min_value=2)
		n_r = InputValidator.validate_integer(self.n_r, "n_r", min_value=1)
		seed = InputValidator.validate_integer(self.seed, "seed")
		for name, value in (("d_pca", d_pca), ("d", d), ("T", T), ("n_r", n_r), ("seed", seed)):
			object.__setattr__(self, name, value)

	@classmethod
	def from_preset(cls, name, **overrides):
		"""Preset values with any non-None override applied"""
		if name not in PRESETS:
			oslpp.throw(f"Unknown preset {name!r}. Available: {', '.join(PRESETS)}", ArgumentError)
		values = dict(PRESETS[name])
		values.update({key: value for key, value in overrides.items() if value is not None})
		return cls(**values)

	def to_dict(self):
		return asdict(self)


@dataclass(frozen=True, eq=False)
class IterationRecord:
	iteration: int
	fraction: float
	selected_per_class: dict
	rejected_count: int
	overlap_count: int
	eigenvalues: np.ndarray
	objective: float
	seconds: float

	@property
	def selected_count(self):
		return sum(self.selected_per_class.values())

	def to_dict(self):
		# no timing fields: reports are byte-identical across runs
		return {
			"iteration": self.iteration,
			"fraction": self.fraction,
			"selected_per_class": {str(k): v for k, v in self.selected_per_class.items()},
			"selected_count": self.selected_count,
			"rejected_count": self.rejected_count,
			"overlap_count": self.overlap_count,
			"eigenvalues": [float(v) for v in self.eigenvalues],
			"objective": self.objective,
		}


@dataclass(eq=False)
class IterationTrace:
	initial_eigenvalues: np.ndarray = None
	initial_rejected: int = 0
	records: list = field(default_factory=list)

	def __len__(self):
		return len(self.records)

	def append(self, record):
		if self.records and record.rejected_count < self.records[-1].rejected_count:
			oslpp.throw("Rejected count decreased between iterations", PipelineError)
		self.records.append(record)

	def to_dict(self):
		return {
			"initial_eigenvalues": [float(v) for v in self.initial_eigenvalues],
			"initial_rejected": self.initial_rejected,
			"iterations": [record.to_dict() for record in self.records],
		}

	def to_frame(self):
		"""One row per iteration; per-class selections become `selected_<class>` columns"""
		rows = []
		for record in self.records:
			row = {
				"iteration": record.iteration,
				"fraction": record.fraction,
				"selected": record.selected_count,
				"rejected": record.rejected_count,
				"overlap": record.overlap_count,
				"objective": record.objective,
				"top_eigenvalue": float(record.eigenvalues[0]),
				"seconds": record.seconds,
			}
			row.update({f"selected_{k}": v for k, v in record.selected_per_class.items()})
			rows.append(row)
		return pd.DataFrame(rows)


@dataclass(frozen=True, eq=False)
class OsdaResult:
	predictions: np.ndarray
	projection: object
	trace: IterationTrace
	rejected: frozenset
	unknown_id: int

	@property
	def n_rejected(self):
		return len(self.rejected)


def _prepare_inputs(source, target, hp):
	Xs = l2_normalize_rows(source.features)
	Xt = l2_normalize_rows(target.features)
	model = fit_pca(np.vstack([Xs, Xt]), hp.d_pca)
	return np.vstack([pca_transform(model, Xs), pca_transform(model, Xt)])


def run(source, target, hp, on_embedding=None):
	"""
	Run the full open-set pipeline

	Args:
		source: SourceDataset
		target: TargetDataset
		hp: Hyperparams
		on_embedding: optional callback(k, Z_all) called with the projected
			source+target matrix after P_0 (k = 0) and after every iteration

	Returns:
		OsdaResult

	Raises:
		ArgumentError: incompatible data or hyper-parameters
		PipelineError: every target rejected before the final iteration
	"""
	log = oslpp.logger("pipeline")
	check_compatible(source, target)
	space = source.space
	n_s, n_t = source.n_samples, target.n_samples
	if not 1 <= hp.n_r < n_t:
		oslpp.throw(f"n_r={hp.n_r} must be smaller than the number of targets ({n_t})", ArgumentError)

	X_all = _prepare_inputs(source, target, hp)
	source_labels = source.labels

	def project(graph):
		P = learn_projection(X_all, graph, hp.d)
		Z = P.apply(X_all)
		if on_embedding is not None:
			on_embedding(k, Z)
		means = class_means(Z[:n_s], source_labels, space)
		return P, Z, pseudo_label(Z[n_s:], means)

	k = 0
	g = build_similarity(source_labels, [TargetState.uncertain()] * n_t, space.known_classes)
	P, Z, pl = project(g)
	rejected = seed_rejections(pl, hp.n_r)
	trace = IterationTrace(initial_eigenvalues=P.eigenvalues, initial_rejected=len(rejected))
	log.info(f"P_0 learned from {n_s} source samples; seeded {len(rejected)} rejections")

	for k in range(1, hp.T + 1):
		started = time.perf_counter()
		selected = select(pl, rejected, k, hp.T)
		selected_set = {int(i) for indices in selected.values() for i in indices}
		rejected = propagate_rejections(Z[n_s:], selected_set, rejected)

		if len(rejected) == n_t and k < hp.T:
			oslpp.throw(f"Every target sample was rejected at iteration {k} of {hp.T}", PipelineError)

		g = build_similarity(
			source_labels, states_from_decisions(n_t, selected, rejected), space.known_classes
		)
		P, Z, pl = project(g)

		record = IterationRecord(
			iteration=k,
			fraction=selection_fraction(k, hp.T),
			selected_per_class={int(c): int(len(idx)) for c, idx in selected.items()},
			rejected_count=len(rejected),
			overlap_count=len(selected_set & rejected),
			eigenvalues=P.eigenvalues,
			objective=objective_value(P, X_all, g),
			seconds=time.perf_counter() - started,
		)
		trace.append(record)
		log.info(
			f"iteration {k}/{hp.T}: selected={record.selected_count} rejected={record.rejected_count} "
			f"objective={record.objective:.6g}"
		)
		log.debug(f"iteration {k} eigenvalues: {np.array2string(P.eigenvalues, precision=6)}")

	rejected_mask = np.zeros(n_t, dtype=bool)
	rejected_mask[np.fromiter(rejected, dtype=np.int64, count=len(rejected))] = True
	predictions = np.where(rejected_mask, space.unknown_id, pl.labels).astype(np.int64)

	return OsdaResult(
		predictions=predictions,
		projection=P,
		trace=trace,
		rejected=frozenset(rejected),
		unknown_id=space.unknown_id,
	)
