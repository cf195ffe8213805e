# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Command-line tests: run, sweep, synth, evaluate and summarize end to end on
small synthetic datasets
"""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import pandas as pd

from oslpp import config
from oslpp.cli.commands import RunConfig, cmd_run, cmd_sweep, expand_grid
from oslpp.cli.main import main
from oslpp.exceptions import ArgumentError
from oslpp.pipeline import Hyperparams


def call(argv):
	"""Run main() and capture its exit status, stdout and stderr"""
	out, err = io.StringIO(), io.StringIO()
	with redirect_stdout(out), redirect_stderr(err):
		status = main(argv)
	return status, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls._tmp = tempfile.TemporaryDirectory()
		cls.data_dir = os.path.join(cls._tmp.name, "data")
		status, _, err = call(["synth", "--out", cls.data_dir, "--n-known", "3", "--n-unknown", "2", "--per-class", "30"])
		assert status == 0, err

	@classmethod
	def tearDownClass(cls):
		cls._tmp.cleanup()

	def setUp(self):
		self.out_dir = tempfile.mkdtemp(dir=self._tmp.name)

	def data(self, name):
		return os.path.join(self.data_dir, name)

	def data_args(self, with_labels=True):
		args = [
			"--source-features", self.data("source_features.csv"),
			"--source-labels", self.data("source_labels.txt"),
			"--target-features", self.data("target_features.csv"),
			"--out", self.out_dir,
		]
		if with_labels:
			args += ["--target-labels", self.data("target_labels.txt")]
		return args

	def small_hp(self):
		return ["--dpca", "8", "--d", "4", "--iters", "6", "--nr", "30"]


class TestSynthCommand(CliTestCase):
	"""Test `oslpp synth`"""

	def test_four_files(self):
		"""Test the minimal config writes four files"""
		status, _, _ = call(["synth", "--out", self.out_dir, "--n-known", "2", "--n-unknown", "1", "--per-class", "5"])
		self.assertEqual(status, 0)
		self.assertEqual(
			sorted(os.listdir(self.out_dir)),
			["source_features.csv", "source_labels.txt", "target_features.csv", "target_labels.txt"],
		)

	def test_invalid_margin(self):
		"""Test an invalid margin exits non-zero"""
		status, _, err = call(["synth", "--out", self.out_dir, "--spread", "2.0", "--unknown-margin", "3.0"])
		self.assertEqual(status, 1)
		self.assertIn("unknown_margin", err)


class TestRunCommand(CliTestCase):
	"""Test `oslpp run`"""

	def test_run_with_ground_truth(self):
		"""Test predictions, report and metrics line"""
		status, out, err = call(["run", *self.data_args(), *self.small_hp()])
		self.assertEqual(status, 0, err)
		self.assertRegex(out, r"OS\*=\d+\.\d UNK=\d+\.\d OS=\d+\.\d HOS=\d+\.\d")

		with open(os.path.join(self.out_dir, config.REPORT_FILE)) as f:
			report = json.load(f)
		self.assertEqual(report["schema_version"], config.REPORT_SCHEMA_VERSION)
		self.assertEqual(report["hyperparams"]["T"], 6)
		self.assertEqual(len(report["trace"]["iterations"]), 6)
		self.assertIn("hos", report["metrics"])

		with open(os.path.join(self.out_dir, config.PREDICTIONS_FILE)) as f:
			self.assertEqual(len(f.read().splitlines()), 150)
		self.assertTrue(os.path.exists(os.path.join(self.out_dir, config.PROJECTION_FILE)))

	def test_run_without_ground_truth(self):
		"""Test the report omits metrics when no labels are given"""
		status, _, _ = call(["run", *self.data_args(with_labels=False), *self.small_hp()])
		self.assertEqual(status, 0)
		with open(os.path.join(self.out_dir, config.REPORT_FILE)) as f:
			self.assertNotIn("metrics", json.load(f))

	def test_emit_embeddings_and_trace(self):
		"""Test T + 1 embedding dumps and a trace table"""
		status, _, _ = call(["run", *self.data_args(), *self.small_hp(), "--emit-embeddings", "--emit-trace"])
		self.assertEqual(status, 0)
		self.assertEqual(len(os.listdir(os.path.join(self.out_dir, config.EMBEDDING_DIR))), 7)
		trace = pd.read_csv(os.path.join(self.out_dir, config.TRACE_FILE))
		self.assertEqual(trace["iteration"].tolist(), [1, 2, 3, 4, 5, 6])
		self.assertTrue(trace["rejected"].is_monotonic_increasing)

	def test_missing_features(self):
		"""Test a missing file exits non-zero naming the path"""
		hp = Hyperparams(d_pca=8, d=4, T=6, n_r=30)
		missing = self.data("absent.csv")
		run_config = RunConfig(
			source_features=missing,
			source_labels=self.data("source_labels.txt"),
			target_features=self.data("target_features.csv"),
			hp=hp,
			out_dir=self.out_dir,
		)
		err = io.StringIO()
		with redirect_stderr(err):
			self.assertEqual(cmd_run(run_config), 1)
		self.assertIn(missing, err.getvalue())

	def test_bad_hyperparams(self):
		"""Test d > d_pca exits non-zero"""
		status, _, err = call(["run", *self.data_args(), "--dpca", "4", "--d", "8"])
		self.assertEqual(status, 1)
		self.assertTrue(err.startswith("error: "))
		self.assertIn("d cannot be greater than 4", err)

	def test_evaluate_predictions(self):
		"""Test scoring a written predictions file gives the run's metrics"""
		_, run_out, _ = call(["run", *self.data_args(), *self.small_hp()])
		status, eval_out, _ = call([
			"evaluate",
			"--predictions", os.path.join(self.out_dir, config.PREDICTIONS_FILE),
			"--source-labels", self.data("source_labels.txt"),
			"--target-labels", self.data("target_labels.txt"),
		])
		self.assertEqual(status, 0)
		self.assertEqual(eval_out.strip(), run_out.strip())

	def test_summarize_reports(self):
		"""Test averaging the metrics of two reports"""
		call(["run", *self.data_args(), *self.small_hp()])
		report = os.path.join(self.out_dir, config.REPORT_FILE)
		status, out, _ = call(["summarize", report, report])
		self.assertEqual(status, 0)
		self.assertIn("HOS=", out)


class TestSweepCommand(CliTestCase):
	"""Test `oslpp sweep`"""

	def test_grid_order(self):
		"""Test points are sorted lexicographically with defaults filling the rest"""
		base = Hyperparams(d_pca=8, d=4, T=6, n_r=30)
		points = expand_grid({"T": [10, 6], "d": [2, 1]}, base)
		self.assertEqual(
			[(p["d_pca"], p["d"], p["n_r"], p["T"]) for p in points],
			[(8, 1, 30, 6), (8, 1, 30, 10), (8, 2, 30, 6), (8, 2, 30, 10)],
		)

	def test_empty_grid(self):
		"""Test an empty grid is an argument error"""
		with self.assertRaises(ArgumentError):
			expand_grid({}, Hyperparams(d_pca=8, d=4, T=6, n_r=30))
		with self.assertRaises(ArgumentError):
			expand_grid({"T": []}, Hyperparams(d_pca=8, d=4, T=6, n_r=30))

	def test_three_rows(self):
		"""Test T in {6, 8, 10} gives three rows"""
		status, _, err = call(["sweep", *self.data_args(), "--dpca", "8", "--d", "4", "--nr", "30", "--iters", "6", "8", "10"])
		self.assertEqual(status, 0, err)
		df = pd.read_csv(os.path.join(self.out_dir, "sweep.csv"))
		self.assertEqual(df["T"].tolist(), [6, 8, 10])
		self.assertTrue(df["hos"].notna().all())

	def test_failed_cell_recorded(self):
		"""Test an invalid cell is marked and the sweep carries on"""
		status, _, _ = call(["sweep", *self.data_args(), "--dpca", "8", "--d", "4", "12", "--nr", "30", "--iters", "6"])
		self.assertEqual(status, 0)
		df = pd.read_csv(os.path.join(self.out_dir, "sweep.csv"), keep_default_na=False)
		self.assertEqual(df["error"].tolist()[0], "")
		self.assertTrue(df["error"].tolist()[1].startswith("ERROR"))

	def test_needs_ground_truth(self):
		"""Test sweeps require target labels"""
		run_config = RunConfig(
			source_features=self.data("source_features.csv"),
			source_labels=self.data("source_labels.txt"),
			target_features=self.data("target_features.csv"),
			hp=Hyperparams(d_pca=8, d=4, T=6, n_r=30),
			out_dir=self.out_dir,
		)
		with redirect_stderr(io.StringIO()):
			self.assertEqual(cmd_sweep(run_config, {"T": [6]}), 1)


if __name__ == "__main__":
	unittest.main()
