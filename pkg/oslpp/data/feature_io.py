# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Feature and Label File I/O
==========================

Two feature formats are supported:

- csv: one sample per line, comma-separated decimals, no header. Read with
  pandas; blank lines and a leading UTF-8 BOM are ignored.
- f32-binary: little-endian uint64 row count, uint64 column count, then
  row-major little-endian float32 values.

Label files hold one integer class id per line.
"""

import io
import re

import numpy as np
import pandas as pd

import oslpp
from oslpp.data.datasets import as_feature_matrix, remap_unknown
from oslpp.exceptions import ArgumentError, ParseError, ShapeError, ValidationError
from oslpp.utils.file_utils import FORMAT_CSV, FORMAT_F32, atomic_write_bytes, atomic_write_text

HEADER_DTYPE = np.dtype("<u8")
VALUE_DTYPE = np.dtype("<f4")
HEADER_BYTES = 2 * HEADER_DTYPE.itemsize


def _read_bytes(file_path):
	try:
		with open(file_path, "rb") as handle:
			return handle.read()
	except FileNotFoundError:
		oslpp.throw(f"File not found: {file_path}", ArgumentError)


def _decode_text(payload, file_path):
	try:
		return payload.decode("utf-8-sig")
	except UnicodeDecodeError as e:
		oslpp.throw(f"{file_path}: not UTF-8 text (offset {e.start})", ParseError)


def _read_table(text, file_path, ragged_error=ShapeError):
	"""
	Read comma-separated text into a frame of strings

	Blank lines are skipped. Returns the frame and, per frame row, the line it
	came from in the file. Short rows come back padded with NaN.
	"""
	lines = text.splitlines()
	line_numbers = np.array([n for n, line in enumerate(lines, 1) if line.strip()], dtype=np.int64)
	if not len(line_numbers):
		oslpp.throw(f"{file_path}: no samples found", ParseError)

	content = "\n".join(lines[n - 1] for n in line_numbers)
	try:
		# only empty fields (including the padding of short rows) become NaN; "nan" stays text
		df = pd.read_csv(io.StringIO(content), header=None, dtype=str, keep_default_na=False, na_values=[""])
	except pd.errors.ParserError as e:
		# "Expected 2 fields in line 3, saw 3"
		match = re.search(r"fields in line (\d+)", str(e))
		if match is None:
			oslpp.throw(f"{file_path}: {e}", ParseError)
		row = min(int(match.group(1)), len(line_numbers)) - 1
		oslpp.throw(
			f"{file_path}: line {line_numbers[row]} has more values than line {line_numbers[0]} (ragged rows)",
			ragged_error,
		)
	return df, line_numbers


def _parse_csv(text, file_path):
	df, line_numbers = _read_table(text, file_path)

	short = df.isna().any(axis=1).to_numpy()
	if short.any():
		row = int(short.argmax())
		oslpp.throw(
			f"{file_path}: line {line_numbers[row]} has {int(df.iloc[row].notna().sum())} values, "
			f"expected {df.shape[1]} (ragged rows)",
			ShapeError,
		)

	try:
		return df.to_numpy(dtype=object).astype(np.float64)
	except ValueError:
		numeric = df.apply(pd.to_numeric, errors="coerce")
		spelled_nan = df.apply(lambda column: column.str.strip().str.lower().eq("nan"))
		bad = (numeric.isna() & ~spelled_nan).any(axis=1).to_numpy()
		oslpp.throw(f"{file_path}: non-numeric value at line {line_numbers[int(bad.argmax())]}", ParseError)


def _parse_f32(payload, file_path):
	if len(payload) < HEADER_BYTES:
		oslpp.throw(f"{file_path}: truncated header at offset {len(payload)}", ParseError)

	n_rows, n_cols = (int(v) for v in np.frombuffer(payload[:HEADER_BYTES], dtype=HEADER_DTYPE))
	expected = HEADER_BYTES + n_rows * n_cols * VALUE_DTYPE.itemsize
	if len(payload) != expected:
		oslpp.throw(
			f"{file_path}: header declares {n_rows}x{n_cols} values ({expected} bytes) "
			f"but the file has {len(payload)} bytes (mismatch at offset {min(len(payload), expected)})",
			ParseError,
		)

	values = np.frombuffer(payload[HEADER_BYTES:], dtype=VALUE_DTYPE)
	return values.reshape(n_rows, n_cols).astype(np.float64)


def load_features(file_path, fmt=FORMAT_CSV):
	"""
	Load a feature matrix

	Args:
		file_path: Path to the feature file
		fmt: FORMAT_CSV or FORMAT_F32

	Returns:
		np.ndarray: read-only float64 matrix

	Raises:
		ParseError: malformed file (message names the line or byte offset)
		ShapeError: ragged rows or an empty dimension
		ValidationError: NaN/Inf value
	"""
	payload = _read_bytes(file_path)

	if fmt == FORMAT_CSV:
		X = _parse_csv(_decode_text(payload, file_path), file_path)
	elif fmt == FORMAT_F32:
		X = _parse_f32(payload, file_path)
	else:
		oslpp.throw(f"Unsupported feature format: {fmt}", ArgumentError)

	return as_feature_matrix(X, str(file_path))


def save_features(file_path, X, fmt=FORMAT_CSV):
	"""
	Write a feature matrix atomically

	csv output uses 17 significant digits so float64 values round-trip
	exactly; f32-binary stores float32, exact for float32-representable input.
	"""
	X = np.asarray(X, dtype=np.float64)
	if X.ndim != 2:
		oslpp.throw(f"Cannot save a {X.ndim}-D array as a feature matrix", ShapeError)

	if fmt == FORMAT_CSV:
		buffer = io.StringIO()
		np.savetxt(buffer, X, fmt="%.17g", delimiter=",")
		atomic_write_text(file_path, buffer.getvalue())
	elif fmt == FORMAT_F32:
		header = np.array(X.shape, dtype=HEADER_DTYPE).tobytes()
		atomic_write_bytes(file_path, header + np.ascontiguousarray(X, dtype=VALUE_DTYPE).tobytes())
	else:
		oslpp.throw(f"Unsupported feature format: {fmt}", ArgumentError)


def load_labels(file_path):
	"""
	Load one integer class id per line, skipping blank lines

	Returns:
		list[int]: ids in file order

	Raises:
		ParseError: non-integer line
		ValidationError: file holds no labels
	"""
	text = _decode_text(_read_bytes(file_path), file_path)
	if not text.strip():
		oslpp.throw(f"{file_path}: label list is empty, datasets require at least one sample", ValidationError)

	df, line_numbers = _read_table(text, file_path, ragged_error=ParseError)
	if df.shape[1] != 1:
		row = int(df[1].notna().to_numpy().argmax())
		oslpp.throw(f"{file_path}: line {line_numbers[row]} holds more than one class id", ParseError)

	values = df[0].str.strip()
	ids = pd.to_numeric(values, errors="coerce")
	bad = (ids.isna() | (ids % 1 != 0)).to_numpy()
	if bad.any():
		row = int(bad.argmax())
		oslpp.throw(f"{file_path}: invalid class id {values.iloc[row]!r} at line {line_numbers[row]}", ParseError)
	return ids.astype(np.int64).tolist()


def load_target_labels(file_path, space):
	"""Load target ground truth and collapse unknown ids onto `space.unknown_id`"""
	return remap_unknown(load_labels(file_path), space).tolist()


def save_labels(file_path, labels):
	"""Write one id per line atomically"""
	atomic_write_text(file_path, "".join(f"{int(label)}\n" for label in labels))
