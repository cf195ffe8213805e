# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
Logging helpers
===============

`logger()` hands out named loggers under the `oslpp` root, configured once
from the OSLPP_LOG_LEVEL environment variable. `log_error()` records a failure
that the caller recovers from.
"""

import logging
import os
import sys

LOG_LEVEL_ENV = "OSLPP_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"
ROOT_LOGGER = "oslpp"

_configured = False


def _level_from_env(default=logging.WARNING):
	value = os.environ.get(LOG_LEVEL_ENV, "").strip().upper()
	if not value:
		return default

	level = logging.getLevelName(value)
	return level if isinstance(level, int) else default


def _configure_root():
	global _configured
	if _configured:
		return

	root = logging.getLogger(ROOT_LOGGER)
	handler = logging.StreamHandler(sys.stderr)
	handler.setFormatter(logging.Formatter(LOG_FORMAT))
	root.addHandler(handler)
	root.setLevel(_level_from_env())
	root.propagate = False
	_configured = True


def logger(module=None):
	"""
	Get a package logger

	Args:
		module: Optional sub-name, e.g. "pipeline" gives "oslpp.pipeline"

	Returns:
		logging.Logger
	"""
	_configure_root()
	name = f"{ROOT_LOGGER}.{module}" if module else ROOT_LOGGER
	return logging.getLogger(name)


def set_level(level):
	"""Override the level picked up from the environment"""
	_configure_root()
	logging.getLogger(ROOT_LOGGER).setLevel(level)


def log_error(message, title=None):
	"""
	Log an error the caller recovers from

	Args:
		message: Error details
		title: Short label for the failing operation
	"""
	text = f"{title}: {message}" if title else str(message)
	logger().error(text)
