__version__ = "0.1.0"

from oslpp.exceptions import (
	ArgumentError,
	GenerationError,
	NumericalError,
	OslppError,
	ParseError,
	PipelineError,
	ShapeError,
	ValidationError,
	throw,
)
from oslpp.utils.logger import log_error, logger
