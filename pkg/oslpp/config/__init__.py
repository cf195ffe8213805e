# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Settings and hyper-parameter presets

The presets reproduce the published defaults for the two benchmark datasets;
explicit CLI flags override any preset value.
"""

REPORT_SCHEMA_VERSION = 1

DEFAULT_PRESET = "office31"

PRESETS = {
	"office31": {
		"d_pca": 16,
		"d": 16,
		"T": 10,
		"n_r": 140,
	},
	"office-home": {
		"d_pca": 512,
		"d": 128,
		"T": 10,
		"n_r": 1200,
	},
}

DEFAULT_SEED = 0

# file names written by `oslpp run`
PREDICTIONS_FILE = "predictions.txt"
REPORT_FILE = "report.json"
TRACE_FILE = "trace.csv"
PROJECTION_FILE = "projection.bin"
EMBEDDING_DIR = "embeddings"

# file names written by `oslpp synth`
SOURCE_FEATURES = "source_features"
SOURCE_LABELS = "source_labels.txt"
TARGET_FEATURES = "target_features"
TARGET_LABELS = "target_labels.txt"
