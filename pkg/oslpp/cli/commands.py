# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
CLI Commands
============

Each command returns a process exit status. Component errors are caught by
`cli_command`, reported on stderr and turned into status 1; every output file
is written atomically.
"""

import functools
import itertools
import json
import os
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np
import pandas as pd

import oslpp
from oslpp import config
from oslpp.data.datasets import SourceDataset, TargetDataset, build_label_space
from oslpp.data.feature_io import load_features, load_labels, load_target_labels, save_features, save_labels
from oslpp.exceptions import ArgumentError, OslppError
from oslpp.metrics.evaluation import average_scores, evaluate
from oslpp.pipeline.runner import Hyperparams, run
from oslpp.synth.generator import generate, write_dataset
from oslpp.utils.file_utils import FORMAT_F32, atomic_write_frame, atomic_write_json, infer_format
from oslpp.utils.input_validator import InputValidator

SWEEP_FILE = "sweep.csv"
SWEEP_KEYS = ("d_pca", "d", "n_r", "T")
SWEEP_METRICS = ("os_star", "unk", "os", "hos")
ERROR_MARKER = "ERROR"
METRIC_LABELS = (("OS*", "os_star"), ("UNK", "unk"), ("OS", "os"), ("HOS", "hos"))


@dataclass
class RunConfig:
	source_features: str
	source_labels: str
	target_features: str
	hp: Hyperparams
	out_dir: str
	target_labels: str = None
	emit_embeddings: bool = False
	emit_trace: bool = False
	inputs: dict = field(init=False, default_factory=dict)

	def __post_init__(self):
		self.inputs = {
			"source_features": self.source_features,
			"source_labels": self.source_labels,
			"target_features": self.target_features,
			"target_labels": self.target_labels,
		}

	def validate(self):
		"""Check referenced paths exist and the output directory is writable"""
		for role, path in self.inputs.items():
			if role == "target_labels" and path is None:
				continue
			InputValidator.validate_file_path(path)
		InputValidator.validate_output_dir(self.out_dir)


def cli_command(fn):
	"""Turn package and OS errors into a stderr message and exit status 1"""

	@functools.wraps(fn)
	def wrapper(*args, **kwargs):
		try:
			return fn(*args, **kwargs)
		except (OslppError, OSError) as e:
			print(f"error: {e}", file=sys.stderr)
			return 1

	return wrapper


def load_datasets(run_config):
	"""
	Read source and target files named by the config

	Returns:
		tuple: (SourceDataset, TargetDataset)
	"""
	source_x = load_features(run_config.source_features, infer_format(run_config.source_features))
	source_y = load_labels(run_config.source_labels)
	space = build_label_space(source_y)
	source = SourceDataset(features=source_x, labels=source_y, space=space)

	target_x = load_features(run_config.target_features, infer_format(run_config.target_features))
	ground_truth = None
	if run_config.target_labels:
		ground_truth = load_target_labels(run_config.target_labels, space)
	return source, TargetDataset(features=target_x, ground_truth=ground_truth)


def format_metrics(report):
	return " ".join(f"{label}={getattr(report, key):.1f}" for label, key in METRIC_LABELS)


def build_report(run_config, source, target, result, eval_report=None):
	"""JSON-ready run report (stable, versioned schema)"""
	report = {
		"schema_version": config.REPORT_SCHEMA_VERSION,
		"version": oslpp.__version__,
		"hyperparams": run_config.hp.to_dict(),
		"inputs": dict(run_config.inputs),
		"n_source": source.n_samples,
		"n_target": target.n_samples,
		"label_space": {
			"known_classes": list(source.space.known_classes),
			"unknown_id": source.space.unknown_id,
		},
		"n_rejected": result.n_rejected,
		"trace": result.trace.to_dict(),
	}
	if eval_report is not None:
		report["metrics"] = eval_report.to_dict(decimals=1)
	return report


@cli_command
def cmd_run(run_config):
	"""
	Run the pipeline and write predictions, report and optional exports

	Writes into run_config.out_dir:
		predictions.txt, report.json, projection.bin,
		embeddings/embedding_<k>.bin (with emit_embeddings, k = 0..T),
		trace.csv (with emit_trace)
	"""
	log = oslpp.logger("cli")
	run_config.validate()
	source, target = load_datasets(run_config)

	on_embedding = None
	if run_config.emit_embeddings:
		embedding_dir = os.path.join(run_config.out_dir, config.EMBEDDING_DIR)

		def on_embedding(k, Z):
			save_features(os.path.join(embedding_dir, f"embedding_{k:02d}.bin"), Z, FORMAT_F32)

	result = run(source, target, run_config.hp, on_embedding=on_embedding)

	save_labels(os.path.join(run_config.out_dir, config.PREDICTIONS_FILE), result.predictions)
	save_features(os.path.join(run_config.out_dir, config.PROJECTION_FILE), result.projection.basis, FORMAT_F32)
	if run_config.emit_trace:
		atomic_write_frame(os.path.join(run_config.out_dir, config.TRACE_FILE), result.trace.to_frame())

	eval_report = None
	if target.has_ground_truth:
		eval_report = evaluate(result.predictions, target.ground_truth, source.space)
		print(format_metrics(eval_report))
	else:
		log.info("no target ground truth supplied; report omits metrics")

	atomic_write_json(
		os.path.join(run_config.out_dir, config.REPORT_FILE),
		build_report(run_config, source, target, result, eval_report),
	)
	return 0


def expand_grid(grid, base):
	"""
	All grid points in lexicographic (d_pca, d, n_r, T) order

	Args:
		grid: mapping of SWEEP_KEYS to value lists; absent keys use `base`
		base: Hyperparams supplying defaults

	Returns:
		list[dict]
	"""
	if not grid or not any(grid.get(key) for key in SWEEP_KEYS):
		oslpp.throw("Sweep grid is empty", ArgumentError)

	axes = []
	for key in SWEEP_KEYS:
		values = grid.get(key)
		if values is not None and len(values) == 0:
			oslpp.throw(f"Sweep grid for {key} is empty", ArgumentError)
		axes.append(sorted(set(values)) if values else [getattr(base, key)])
	return [dict(zip(SWEEP_KEYS, point)) for point in itertools.product(*axes)]


def _sweep_cell(job):
	source, target, point, seed = job
	row = dict(point)
	try:
		hp = Hyperparams(seed=seed, **point)
		result = run(source, target, hp)
		report = evaluate(result.predictions, target.ground_truth, source.space)
		row.update({key: round(getattr(report, key), 1) for key in SWEEP_METRICS})
		row["error"] = ""
	except OslppError as e:
		oslpp.log_error(str(e), f"sweep cell {point}")
		row.update({key: np.nan for key in SWEEP_METRICS})
		row["error"] = f"{ERROR_MARKER}: {e}"
	return row


@cli_command
def cmd_sweep(run_config, grid, num_proc=1):
	"""
	Run one pipeline per grid point and write sweep.csv

	Failed cells are kept with an error marker; the sweep carries on.
	"""
	run_config.validate()
	if not run_config.target_labels:
		oslpp.throw("A sweep needs target ground-truth labels to score each cell", ArgumentError)

	num_proc = InputValidator.validate_integer(num_proc, "num_proc", min_value=1)
	points = expand_grid(grid, run_config.hp)
	source, target = load_datasets(run_config)
	jobs = [(source, target, point, run_config.hp.seed) for point in points]

	if num_proc > 1:
		with Pool(num_proc) as pool:
			rows = pool.map(_sweep_cell, jobs)
	else:
		rows = [_sweep_cell(job) for job in jobs]

	df = pd.DataFrame(rows, columns=[*SWEEP_KEYS, *SWEEP_METRICS, "error"])
	atomic_write_frame(os.path.join(run_config.out_dir, SWEEP_FILE), df)
	print(df.to_string(index=False))
	return 0


@cli_command
def cmd_synth(cfg, out_dir, fmt="csv"):
	"""Generate a synthetic dataset and write its four files into out_dir"""
	InputValidator.validate_output_dir(out_dir)
	source, target = generate(cfg)
	paths = write_dataset(source, target, out_dir, fmt)
	for role, path in paths.items():
		print(f"{role}: {path}")
	return 0


@cli_command
def cmd_evaluate(predictions_path, source_labels_path, target_labels_path):
	"""Score a predictions file against target ground truth"""
	for path in (predictions_path, source_labels_path, target_labels_path):
		InputValidator.validate_file_path(path)

	space = build_label_space(load_labels(source_labels_path))
	predictions = load_labels(predictions_path)
	ground_truth = load_target_labels(target_labels_path, space)
	print(format_metrics(evaluate(predictions, ground_truth, space)))
	return 0


@cli_command
def cmd_summarize(report_paths):
	"""Average OS*/UNK/OS/HOS over several report.json files, e.g. one per task"""
	reports = []
	for path in report_paths:
		InputValidator.validate_file_path(path, allowed_extensions=[".json"])
		with open(path) as f:
			report = json.load(f)
		if "metrics" not in report:
			oslpp.throw(f"{path} holds no metrics; rerun with --target-labels", ArgumentError)
		reports.append(report["metrics"])

	means = average_scores(reports)
	print(" ".join(f"{label}={means[key]:.1f}" for label, key in METRIC_LABELS))
	return 0
