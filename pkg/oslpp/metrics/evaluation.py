# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Open-Set Evaluation Metrics
===========================

- OS*: mean per-class accuracy over the known classes
- UNK: accuracy on the unified unknown class
- OS:  mean per-class accuracy over known classes plus unknown,
       (|C| * OS* + UNK) / (|C| + 1)
- HOS: harmonic mean of OS* and UNK (0 when both are 0)

Percentages (0-100) at the API boundary, fractions internally.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

import oslpp
from oslpp.exceptions import ArgumentError, ShapeError, ValidationError

METRIC_KEYS = ("os_star", "unk", "os", "hos")


@dataclass(frozen=True)
class EvalReport:
	os_star: float
	unk: float
	os: float
	hos: float
	per_class_acc: dict = field(default_factory=dict)
	counts: dict = field(default_factory=dict)

	def metrics(self):
		return {key: getattr(self, key) for key in METRIC_KEYS}

	def to_dict(self, decimals=1):
		"""Report with metrics rounded the way published tables show them"""
		return {
			**{key: round(value, decimals) for key, value in self.metrics().items()},
			"per_class_acc": {str(k): round(v, decimals) for k, v in self.per_class_acc.items()},
			"counts": {str(k): int(v) for k, v in self.counts.items()},
		}


def hos(os_star, unk):
	"""Harmonic mean of OS* and UNK, both percentages; 0/0 is defined as 0"""
	total = os_star + unk
	if total <= 0:
		return 0.0
	return 2.0 * os_star * unk / total


def evaluate(predictions, ground_truth, space):
	"""
	Score open-set predictions

	Args:
		predictions: predicted id per target (known id or space.unknown_id)
		ground_truth: true id per target (known id or space.unknown_id)
		space: LabelSpace

	Returns:
		EvalReport

	Raises:
		ShapeError: lengths differ
		ArgumentError: a known class or the unknown class has no ground-truth sample
		ValidationError: ground truth holds ids outside the label space
	"""
	y_pred = np.asarray(predictions, dtype=np.int64)
	y_true = np.asarray(ground_truth, dtype=np.int64)
	if y_pred.shape != y_true.shape or y_true.ndim != 1:
		oslpp.throw(f"{y_pred.size} predictions but {y_true.size} ground-truth labels", ShapeError)

	classes = [*space.known_classes, space.unknown_id]
	outside = set(np.unique(y_true).tolist()).difference(classes)
	if outside:
		oslpp.throw(f"Ground truth holds ids {sorted(outside)} outside the label space", ValidationError)

	per_class = {}
	counts = {}
	for class_id in classes:
		members = y_true == class_id
		counts[class_id] = int(members.sum())
		if counts[class_id] == 0:
			name = "unknown class" if class_id == space.unknown_id else f"class {class_id}"
			oslpp.throw(f"The {name} has no ground-truth sample", ArgumentError)
		per_class[class_id] = float(np.mean(y_pred[members] == class_id))

	n_known = space.n_known
	os_star = sum(per_class[c] for c in space.known_classes) / n_known
	unk = per_class[space.unknown_id]
	os_all = (n_known * os_star + unk) / (n_known + 1)

	return EvalReport(
		os_star=100.0 * os_star,
		unk=100.0 * unk,
		os=100.0 * os_all,
		hos=hos(100.0 * os_star, 100.0 * unk),
		per_class_acc={c: 100.0 * acc for c, acc in per_class.items()},
		counts=counts,
	)


def average_scores(reports):
	"""
	Average each metric over several tasks

	Args:
		reports: EvalReports or mappings holding any of os_star, unk, os, hos

	Returns:
		dict: metric -> mean over the reports that carry it
	"""
	rows = [report.metrics() if isinstance(report, EvalReport) else dict(report) for report in reports]
	if not rows:
		oslpp.throw("Cannot average an empty list of reports", ArgumentError)

	df = pd.DataFrame(rows)
	columns = [key for key in METRIC_KEYS if key in df.columns]
	return {key: float(df[key].mean()) for key in columns}
