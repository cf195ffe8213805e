# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Exceptions
==========

Every module raises through `oslpp.throw` with one of the classes below so
callers can catch a whole family (e.g. every `ValidationError`).
"""


class OslppError(Exception):
	"""Base class for all errors raised by the package"""


class ValidationError(OslppError):
	"""A value or configuration failed validation"""


class ParseError(ValidationError):
	"""A feature or label file is malformed"""


class ShapeError(ValidationError):
	"""Ragged rows or mismatched matrix dimensions"""


class ArgumentError(ValidationError):
	"""An argument is out of range or a precondition does not hold"""


class NumericalError(OslppError):
	"""A factorization failed or produced non-finite values"""


class GenerationError(OslppError):
	"""The synthetic generator could not satisfy its placement margins"""


class PipelineError(OslppError):
	"""The iterative pipeline reached a state it cannot continue from"""


def throw(msg, exc=ValidationError):
	"""
	Raise `exc` with `msg`

	Args:
		msg: Error message
		exc: Exception class (default ValidationError)

	Raises:
		exc: Always
	"""
	raise exc(msg)
