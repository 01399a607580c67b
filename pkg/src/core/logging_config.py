"""
Module loggers

The level comes from the OSCPHASE_LOG_LEVEL environment variable
(DEBUG, INFO, WARNING, ...). Default is WARNING.
"""
import logging
import os

_LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
_configured = False


def _configure_root():
    global _configured
    if _configured:
        return
    level_name = os.environ.get("OSCPHASE_LOG_LEVEL", "WARNING").upper()
    level = getattr(logging, level_name, logging.WARNING)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    root = logging.getLogger("src")
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Returns a module logger under the package root"""
    _configure_root()
    return logging.getLogger(name)


def set_level(level: int):
    """Overrides the package log level (used by --verbose)"""
    _configure_root()
    logging.getLogger("src").setLevel(level)
