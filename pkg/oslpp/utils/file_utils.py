# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
File Processing Utilities
=========================

Atomic writers and format detection shared by the data loaders, the synthetic
generator and the CLI report writers.
"""

import json
import os
import tempfile

import oslpp
from oslpp.exceptions import ArgumentError

FORMAT_CSV = "csv"
FORMAT_F32 = "f32-binary"

EXTENSION_FORMATS = {
	".csv": FORMAT_CSV,
	".bin": FORMAT_F32,
	".f32": FORMAT_F32,
}


def infer_format(file_path):
	"""
	Pick the feature file format from the file extension

	Args:
		file_path: Path of a feature file

	Returns:
		str: FORMAT_CSV or FORMAT_F32
	"""
	ext = os.path.splitext(os.fspath(file_path))[1].lower()
	if ext not in EXTENSION_FORMATS:
		oslpp.throw(
			f"Cannot infer feature format of {file_path}. Use one of: {', '.join(EXTENSION_FORMATS)}",
			ArgumentError,
		)
	return EXTENSION_FORMATS[ext]


def atomic_write_bytes(file_path, payload):
	"""
	Write bytes to `file_path` through a temp file in the same directory and
	rename it into place.

	Args:
		file_path: Destination path
		payload: bytes to write
	"""
	file_path = os.fspath(file_path)
	directory = os.path.dirname(os.path.abspath(file_path))
	os.makedirs(directory, exist_ok=True)

	fd, tmp_path = tempfile.mkstemp(prefix=".tmp-", dir=directory)
	try:
		with os.fdopen(fd, "wb") as handle:
			handle.write(payload)
			handle.flush()
			os.fsync(handle.fileno())
		os.replace(tmp_path, file_path)
	except BaseException:
		if os.path.exists(tmp_path):
			os.unlink(tmp_path)
		raise


def atomic_write_text(file_path, text):
	"""Write UTF-8 text atomically"""
	atomic_write_bytes(file_path, text.encode("utf-8"))


def atomic_write_json(file_path, data):
	"""Write `data` as indented JSON atomically"""
	atomic_write_text(file_path, json.dumps(data, indent=2, sort_keys=False) + "\n")


def atomic_write_frame(file_path, df):
	"""Write a pandas DataFrame as CSV atomically"""
	atomic_write_text(file_path, df.to_csv(index=False))
