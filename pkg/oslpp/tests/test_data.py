# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Data loading and dataset validation tests
"""

import os
import tempfile
import unittest

import numpy as np

from oslpp.data import (
	LabelSpace,
	SourceDataset,
	TargetDataset,
	as_feature_matrix,
	build_label_space,
	check_compatible,
	load_features,
	load_labels,
	load_target_labels,
	remap_unknown,
	save_features,
	save_labels,
)
from oslpp.exceptions import ArgumentError, ParseError, ShapeError, ValidationError
from oslpp.utils.file_utils import FORMAT_CSV, FORMAT_F32


class FileTestCase(unittest.TestCase):
	def setUp(self):
		self._tmp = tempfile.TemporaryDirectory()
		self.tmp_dir = self._tmp.name

	def tearDown(self):
		self._tmp.cleanup()

	def write(self, name, content):
		path = os.path.join(self.tmp_dir, name)
		mode = "wb" if isinstance(content, bytes) else "w"
		with open(path, mode) as f:
			f.write(content)
		return path


class TestLoadFeatures(FileTestCase):
	"""Test feature file parsing"""

	def test_csv_two_by_two(self):
		"""Test a well-formed CSV parses row by row"""
		path = self.write("x.csv", "1.0,2.0\n3.0,4.0")
		X = load_features(path, FORMAT_CSV)
		np.testing.assert_array_equal(X, [[1.0, 2.0], [3.0, 4.0]])
		self.assertEqual(X.dtype, np.float64)

	def test_csv_ragged_rows(self):
		"""Test ragged CSV rows are a shape error"""
		path = self.write("x.csv", "1.0,2.0\n3.0")
		with self.assertRaises(ShapeError):
			load_features(path, FORMAT_CSV)

	def test_csv_non_numeric_names_line(self):
		"""Test a non-numeric value reports its line"""
		path = self.write("x.csv", "1.0,2.0\n3.0,abc\n")
		with self.assertRaisesRegex(ParseError, "line 2"):
			load_features(path, FORMAT_CSV)

	def test_csv_empty_file(self):
		"""Test an empty CSV file is rejected"""
		path = self.write("x.csv", "")
		with self.assertRaises(ParseError):
			load_features(path, FORMAT_CSV)

	def test_csv_nan_rejected(self):
		"""Test NaN values are rejected with their position"""
		path = self.write("x.csv", "1.0,nan\n")
		with self.assertRaisesRegex(ValidationError, "row 1, column 2"):
			load_features(path, FORMAT_CSV)

	def test_binary_header_and_values(self):
		"""Test a binary file with header (2, 3) and six floats"""
		values = np.arange(6, dtype="<f4")
		payload = np.array([2, 3], dtype="<u8").tobytes() + values.tobytes()
		path = self.write("x.bin", payload)
		X = load_features(path, FORMAT_F32)
		np.testing.assert_array_equal(X, values.reshape(2, 3))

	def test_binary_written_then_read(self):
		"""Test save_features and load_features agree on the binary layout"""
		X = np.array([[0.5, -1.25, 3.0], [2.0, 0.0, -0.75]])
		path = os.path.join(self.tmp_dir, "x.bin")
		save_features(path, X, FORMAT_F32)
		self.assertEqual(os.path.getsize(path), 16 + 6 * 4)
		np.testing.assert_array_equal(load_features(path, FORMAT_F32), X)

	def test_binary_truncated_payload(self):
		"""Test a header that promises more values than present"""
		payload = np.array([2, 3], dtype="<u8").tobytes() + np.zeros(5, dtype="<f4").tobytes()
		path = self.write("x.bin", payload)
		with self.assertRaisesRegex(ParseError, "offset"):
			load_features(path, FORMAT_F32)

	def test_binary_truncated_header(self):
		"""Test a file shorter than the header"""
		path = self.write("x.bin", b"\x01\x00")
		with self.assertRaises(ParseError):
			load_features(path, FORMAT_F32)

	def test_csv_keeps_full_precision(self):
		"""Test CSV output keeps every float64 digit"""
		X = np.array([[0.1, 1.0 / 3.0], [np.pi, -1e-300]])
		path = os.path.join(self.tmp_dir, "x.csv")
		save_features(path, X, FORMAT_CSV)
		np.testing.assert_array_equal(load_features(path, FORMAT_CSV), X)

	def test_csv_short_row_names_line(self):
		"""Test a short row is a shape error naming its line"""
		path = self.write("x.csv", "1.0,2.0,3.0\n4.0,5.0,6.0\n7.0,8.0\n")
		with self.assertRaisesRegex(ShapeError, "line 3 has 2 values, expected 3"):
			load_features(path, FORMAT_CSV)

	def test_csv_long_row_names_line(self):
		"""Test a row wider than the first is a shape error naming its line"""
		path = self.write("x.csv", "1.0,2.0\n3.0,4.0\n5.0,6.0,7.0\n")
		with self.assertRaisesRegex(ShapeError, "line 3"):
			load_features(path, FORMAT_CSV)

	def test_csv_byte_order_mark(self):
		"""Test a UTF-8 BOM written by spreadsheet tools is ignored"""
		path = self.write("x.csv", "\ufeff1.0,2.0\n3.0,4.0\n".encode("utf-8"))
		np.testing.assert_array_equal(load_features(path, FORMAT_CSV), [[1.0, 2.0], [3.0, 4.0]])

	def test_csv_blank_lines_skipped(self):
		"""Test blank lines do not shift the reported line of a later error"""
		path = self.write("x.csv", "1.0,2.0\n\n3.0,4.0\n\n")
		np.testing.assert_array_equal(load_features(path, FORMAT_CSV), [[1.0, 2.0], [3.0, 4.0]])

		path = self.write("y.csv", "1.0,2.0\n\n3.0,x\n")
		with self.assertRaisesRegex(ParseError, "line 3"):
			load_features(path, FORMAT_CSV)

	def test_csv_not_utf8(self):
		"""Test undecodable bytes are a parse error"""
		path = self.write("x.csv", b"1.0,\xff\n")
		with self.assertRaises(ParseError):
			load_features(path, FORMAT_CSV)

	def test_missing_file_names_path(self):
		"""Test a missing file raises with the path in the message"""
		path = os.path.join(self.tmp_dir, "absent.csv")
		with self.assertRaisesRegex(ArgumentError, "absent.csv"):
			load_features(path)

	def test_unknown_format(self):
		"""Test an unsupported format name"""
		path = self.write("x.csv", "1.0\n")
		with self.assertRaises(ArgumentError):
			load_features(path, "parquet")


class TestLoadLabels(FileTestCase):
	"""Test label file parsing"""

	def test_one_id_per_line(self):
		"""Test ids come back in file order"""
		self.assertEqual(load_labels(self.write("y.txt", "0\n0\n1")), [0, 0, 1])

	def test_empty_file(self):
		"""Test an empty label file is an error"""
		with self.assertRaises(ValidationError):
			load_labels(self.write("y.txt", ""))

	def test_bad_line_number(self):
		"""Test the failing line is named"""
		with self.assertRaisesRegex(ParseError, "line 2"):
			load_labels(self.write("y.txt", "2\nx"))

	def test_trailing_blank_line(self):
		"""Test blank lines, including a trailing one, are skipped"""
		self.assertEqual(load_labels(self.write("y.txt", "0\n1\n\n")), [0, 1])
		self.assertEqual(load_labels(self.write("z.txt", "0\n\n1\n")), [0, 1])

	def test_byte_order_mark(self):
		"""Test a leading BOM does not corrupt the first id"""
		self.assertEqual(load_labels(self.write("y.txt", "\ufeff4\n2\n".encode("utf-8"))), [4, 2])

	def test_fractional_id(self):
		"""Test a non-integer id is a parse error naming its line"""
		with self.assertRaisesRegex(ParseError, "line 3"):
			load_labels(self.write("y.txt", "1\n2\n2.5\n"))

	def test_two_ids_on_a_line(self):
		"""Test a line holding two ids is a parse error"""
		with self.assertRaises(ParseError):
			load_labels(self.write("y.txt", "1,2\n3,4\n"))

	def test_blank_only_file(self):
		"""Test a file of blank lines holds no labels"""
		with self.assertRaises(ValidationError):
			load_labels(self.write("y.txt", "\n\n"))

	def test_target_labels_collapse_unknowns(self):
		"""Test target ids outside the known classes become unknown_id"""
		space = build_label_space([0, 1, 2])
		path = self.write("y.txt", "0\n5\n2\n9\n")
		self.assertEqual(load_target_labels(path, space), [0, 3, 2, 3])

	def test_save_labels(self):
		"""Test labels are written one per line"""
		path = os.path.join(self.tmp_dir, "out", "y.txt")
		save_labels(path, np.array([3, 1, 4]))
		with open(path) as f:
			self.assertEqual(f.read(), "3\n1\n4\n")


class TestLabelSpace(unittest.TestCase):
	"""Test label space derivation"""

	def test_sorted_known_and_next_unknown(self):
		"""Test [0,0,1,2] gives known {0,1,2} and unknown 3"""
		space = build_label_space([0, 0, 1, 2])
		self.assertEqual(space.known_classes, (0, 1, 2))
		self.assertEqual(space.unknown_id, 3)

	def test_unsorted_gaps(self):
		"""Test [3,1,1,3,7] gives known {1,3,7} and unknown 8"""
		space = build_label_space([3, 1, 1, 3, 7])
		self.assertEqual(space.known_classes, (1, 3, 7))
		self.assertEqual(space.unknown_id, 8)
		self.assertEqual(space.index_of(7), 2)

	def test_order_insensitive(self):
		"""Test the label space ignores label order"""
		labels = [3, 1, 1, 3, 7, 7, 2]
		expected = build_label_space(labels)
		rng = np.random.default_rng(0)
		for _ in range(5):
			self.assertEqual(build_label_space(rng.permutation(labels).tolist()), expected)

	def test_idempotent(self):
		"""Test rebuilding from the known classes gives the same space"""
		space = build_label_space([3, 1, 1, 3, 7])
		self.assertEqual(build_label_space(list(space.known_classes)), space)

	def test_single_class_rejected(self):
		"""Test a label space needs two known classes"""
		with self.assertRaises(ArgumentError):
			build_label_space([5, 5])

	def test_empty_rejected(self):
		"""Test an empty label list"""
		with self.assertRaises(ArgumentError):
			build_label_space([])

	def test_unknown_collision(self):
		"""Test unknown_id must differ from every known class"""
		with self.assertRaises(ArgumentError):
			LabelSpace(known_classes=(0, 1), unknown_id=1)

	def test_remap_unknown(self):
		"""Test remapping keeps known ids"""
		space = build_label_space([1, 2])
		np.testing.assert_array_equal(remap_unknown([1, 7, 2, 0], space), [1, 3, 2, 3])


class TestDatasets(unittest.TestCase):
	"""Test dataset invariants"""

	def test_feature_matrix_is_read_only(self):
		"""Test validated matrices cannot be mutated"""
		X = as_feature_matrix([[1, 2], [3, 4]])
		with self.assertRaises(ValueError):
			X[0, 0] = 9.0

	def test_feature_matrix_must_be_2d(self):
		"""Test a vector is not a feature matrix"""
		with self.assertRaises(ShapeError):
			as_feature_matrix([1.0, 2.0])

	def test_source_label_count(self):
		"""Test feature rows and labels must match"""
		with self.assertRaises(ShapeError):
			SourceDataset(features=np.ones((3, 2)), labels=[0, 1])

	def test_source_missing_class(self):
		"""Test every known class needs a source sample"""
		space = LabelSpace(known_classes=(0, 1, 2), unknown_id=3)
		with self.assertRaises(ValidationError):
			SourceDataset(features=np.ones((2, 2)), labels=[0, 1], space=space)

	def test_source_label_outside_space(self):
		"""Test source labels must be known classes"""
		space = LabelSpace(known_classes=(0, 1), unknown_id=2)
		with self.assertRaises(ValidationError):
			SourceDataset(features=np.ones((3, 2)), labels=[0, 1, 2], space=space)

	def test_source_derives_space(self):
		"""Test the label space defaults to the source labels"""
		source = SourceDataset(features=np.ones((3, 2)), labels=[4, 2, 4])
		self.assertEqual(source.space.known_classes, (2, 4))
		self.assertEqual(source.n_samples, 3)

	def test_target_ground_truth_length(self):
		"""Test ground truth must cover every target row"""
		with self.assertRaises(ShapeError):
			TargetDataset(features=np.ones((3, 2)), ground_truth=[0, 1])

	def test_target_without_ground_truth(self):
		"""Test ground truth is optional"""
		target = TargetDataset(features=np.ones((3, 2)))
		self.assertFalse(target.has_ground_truth)

	def test_incompatible_dimensions(self):
		"""Test source and target must share their columns"""
		source = SourceDataset(features=np.ones((2, 3)), labels=[0, 1])
		target = TargetDataset(features=np.ones((2, 4)))
		with self.assertRaises(ShapeError):
			check_compatible(source, target)


if __name__ == "__main__":
	unittest.main()
