# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Synthetic open-set domain-adaptation data
=========================================

Gaussian clusters with a translation-only domain shift:

- known class centers are drawn from N(0, scale^2 I) with pairwise distance
  >= 4 * spread
- source samples: center + N(0, spread^2 I)
- target known samples: center + shift_vector + N(0, spread^2 I), where
  shift_vector is one fixed random direction of norm `shift`
- unknown target samples: around n_unknown extra centers, each at distance
  >= unknown_margin from every known center

Random numbers come from numpy's PCG64 bit generator seeded with cfg.seed, so
the same config always yields the same arrays. Known classes use ids
0..n_known-1; every unknown-class target carries the unified unknown id n_known.
"""

import os
from dataclasses import asdict, dataclass

import numpy as np

import oslpp
from oslpp.config import SOURCE_FEATURES, SOURCE_LABELS, TARGET_FEATURES, TARGET_LABELS
from oslpp.data.datasets import SourceDataset, TargetDataset, build_label_space
from oslpp.data.feature_io import save_features, save_labels
from oslpp.exceptions import ArgumentError, GenerationError
from oslpp.utils.file_utils import FORMAT_CSV, FORMAT_F32
from oslpp.utils.input_validator import InputValidator

MAX_PLACEMENT_TRIES = 1000


@dataclass(frozen=True)
class SynthConfig:
	n_known: int = 3
	n_unknown: int = 2
	dim: int = 10
	per_class: int = 50
	shift: float = 1.0
	spread: float = 0.3
	unknown_margin: float = 3.0
	seed: int = 0

	def __post_init__(self):
		InputValidator.validate_integer(self.n_known, "n_known", min_value=2)
		InputValidator.validate_integer(self.n_unknown, "n_unknown", min_value=0)
		InputValidator.validate_integer(self.dim, "dim", min_value=1)
		InputValidator.validate_integer(self.per_class, "per_class", min_value=1)
		InputValidator.validate_integer(self.seed, "seed", min_value=0)
		InputValidator.validate_positive(self.shift, "shift")
		InputValidator.validate_positive(self.spread, "spread")
		InputValidator.validate_positive(self.unknown_margin, "unknown_margin")
		if self.unknown_margin <= 2 * self.spread:
			oslpp.throw(
				f"unknown_margin ({self.unknown_margin}) must exceed twice the spread ({2 * self.spread})",
				ArgumentError,
			)

	@property
	def center_scale(self):
		# typical center distance scale * sqrt(2 dim) ~ 2 * the largest margin
		margin = max(self.unknown_margin, 4.0 * self.spread)
		return 2.0 * margin / np.sqrt(2.0 * self.dim)

	def to_dict(self):
		return asdict(self)


def _place_centers(rng, count, dim, scale, fixed, min_dist, kind):
	centers = []
	for _ in range(count):
		for _ in range(MAX_PLACEMENT_TRIES):
			candidate = rng.normal(0.0, scale, size=dim)
			others = [*fixed, *centers] if kind == "known" else fixed
			if all(np.linalg.norm(candidate - other) >= min_dist for other in others):
				centers.append(candidate)
				break
		else:
			oslpp.throw(
				f"Could not place {count} {kind} centers {min_dist:.3g} apart in {dim} dimensions "
				f"after {MAX_PLACEMENT_TRIES} tries; use a larger dim",
				GenerationError,
			)
	return np.array(centers, dtype=np.float64).reshape(count, dim)


def generate(cfg):
	"""
	Generate a source dataset and a target dataset with ground truth

	Args:
		cfg: SynthConfig

	Returns:
		tuple: (SourceDataset, TargetDataset); target ground truth already
		uses the unified unknown id

	Raises:
		GenerationError: centers cannot be placed within the margins
	"""
	rng = np.random.Generator(np.random.PCG64(cfg.seed))
	scale = cfg.center_scale

	known_centers = _place_centers(rng, cfg.n_known, cfg.dim, scale, [], 4.0 * cfg.spread, "known")
	unknown_centers = _place_centers(
		rng, cfg.n_unknown, cfg.dim, scale, list(known_centers), cfg.unknown_margin, "unknown"
	)

	direction = rng.normal(size=cfg.dim)
	shift_vector = cfg.shift * direction / np.linalg.norm(direction)

	known_ids = np.repeat(np.arange(cfg.n_known), cfg.per_class)
	source_x = known_centers[known_ids] + rng.normal(0.0, cfg.spread, size=(known_ids.size, cfg.dim))
	target_known = (
		known_centers[known_ids] + shift_vector + rng.normal(0.0, cfg.spread, size=(known_ids.size, cfg.dim))
	)

	unknown_ids = np.repeat(np.arange(cfg.n_unknown), cfg.per_class)
	target_unknown = unknown_centers[unknown_ids] + rng.normal(
		0.0, cfg.spread, size=(unknown_ids.size, cfg.dim)
	)

	space = build_label_space(known_ids.tolist())
	source = SourceDataset(features=source_x, labels=known_ids, space=space)
	target = TargetDataset(
		features=np.vstack([target_known, target_unknown]),
		ground_truth=np.concatenate([known_ids, np.full(unknown_ids.size, space.unknown_id)]),
	)
	oslpp.logger("synth").info(
		f"generated {source.n_samples} source and {target.n_samples} target samples (seed {cfg.seed})"
	)
	return source, target


def write_dataset(source, target, out_dir, fmt=FORMAT_CSV):
	"""
	Write source/target features and labels into `out_dir`

	Returns:
		dict: role -> written path
	"""
	if fmt not in (FORMAT_CSV, FORMAT_F32):
		oslpp.throw(f"Unsupported feature format: {fmt}", ArgumentError)
	ext = ".csv" if fmt == FORMAT_CSV else ".bin"

	paths = {
		"source_features": os.path.join(out_dir, SOURCE_FEATURES + ext),
		"source_labels": os.path.join(out_dir, SOURCE_LABELS),
		"target_features": os.path.join(out_dir, TARGET_FEATURES + ext),
		"target_labels": os.path.join(out_dir, TARGET_LABELS),
	}
	save_features(paths["source_features"], source.features, fmt)
	save_labels(paths["source_labels"], source.labels)
	save_features(paths["target_features"], target.features, fmt)
	save_labels(paths["target_labels"], target.ground_truth)
	return paths
