# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Input Validation Utilities
Validates user-supplied configuration values (hyper-parameters, generator
settings, CLI paths) before any computation starts
"""

import math
import os

import oslpp
from oslpp.exceptions import ArgumentError


class InputValidator:
	"""Centralized validation for configuration values and paths"""

	@staticmethod
	def validate_number(value, field_name, min_value=None, max_value=None, allow_negative=True):
		"""
		Validate a real-valued input

		Args:
			value: Value to validate
			field_name: Name of the field
			min_value: Minimum allowed value
			max_value: Maximum allowed value
			allow_negative: Allow negative numbers

		Returns:
			float: Validated number
		"""
		try:
			num = float(value)
		except (TypeError, ValueError):
			oslpp.throw(f"{field_name} must be a valid number", ArgumentError)

		if not math.isfinite(num):
			oslpp.throw(f"{field_name} must be finite", ArgumentError)

		if not allow_negative and num < 0:
			oslpp.throw(f"{field_name} cannot be negative", ArgumentError)

		if min_value is not None and num < min_value:
			oslpp.throw(f"{field_name} cannot be less than {min_value}", ArgumentError)

		if max_value is not None and num > max_value:
			oslpp.throw(f"{field_name} cannot be greater than {max_value}", ArgumentError)

		return num

	@staticmethod
	def validate_positive(value, field_name):
		"""Validate a strictly positive real"""
		num = InputValidator.validate_number(value, field_name)
		if num <= 0:
			oslpp.throw(f"{field_name} must be positive", ArgumentError)
		return num

	@staticmethod
	def validate_integer(value, field_name, min_value=None, max_value=None):
		"""
		Validate integer input

		Args:
			value: Value to validate
			field_name: Name of the field
			min_value: Minimum allowed value
			max_value: Maximum allowed value

		Returns:
			int: Validated integer
		"""
		if isinstance(value, bool):
			oslpp.throw(f"{field_name} must be a valid integer", ArgumentError)

		try:
			num = int(value.strip()) if isinstance(value, str) else int(value)
		except (TypeError, ValueError, OverflowError):
			oslpp.throw(f"{field_name} must be a valid integer", ArgumentError)

		# reject silent truncation of 2.5 -> 2
		if not isinstance(value, str) and num != value:
			oslpp.throw(f"{field_name} must be a valid integer", ArgumentError)

		if min_value is not None and num < min_value:
			oslpp.throw(f"{field_name} cannot be less than {min_value}", ArgumentError)

		if max_value is not None and num > max_value:
			oslpp.throw(f"{field_name} cannot be greater than {max_value}", ArgumentError)

		return num

	@staticmethod
	def validate_file_path(file_path, allowed_extensions=None, must_exist=True):
		"""
		Validate an input file path

		Args:
			file_path: File path to validate
			allowed_extensions: List of allowed file extensions
			must_exist: Require the file to exist

		Returns:
			str: Validated file path
		"""
		if not file_path:
			oslpp.throw("File path is required", ArgumentError)

		file_path = os.fspath(file_path)

		if allowed_extensions:
			ext = os.path.splitext(file_path)[1].lower()
			allowed = [e.lower() if e.startswith(".") else f".{e.lower()}" for e in allowed_extensions]
			if ext not in allowed:
				oslpp.throw(
					f"File type not allowed for {file_path}. Allowed types: {', '.join(allowed)}",
					ArgumentError,
				)

		if must_exist and not os.path.isfile(file_path):
			oslpp.throw(f"File not found: {file_path}", ArgumentError)

		return file_path

	@staticmethod
	def validate_output_dir(dir_path):
		"""
		Validate (and create) a writable output directory

		Returns:
			str: Directory path
		"""
		if not dir_path:
			oslpp.throw("Output directory is required", ArgumentError)

		dir_path = os.fspath(dir_path)
		if os.path.exists(dir_path) and not os.path.isdir(dir_path):
			oslpp.throw(f"Output path is not a directory: {dir_path}", ArgumentError)

		os.makedirs(dir_path, exist_ok=True)
		if not os.access(dir_path, os.W_OK):
			oslpp.throw(f"Output directory is not writable: {dir_path}", ArgumentError)

		return dir_path
