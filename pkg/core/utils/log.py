"""
@description: Logging setup. Diagnostics go to stderr with a bracketed component prefix,
             reports go to stdout and never through the log.
"""
import logging
import sys

_FORMAT = "[%(component)s] %(levelname)s %(message)s"


class _ComponentFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        record.component = record.name.rsplit(".", 1)[-1]
        return True


def configure_logging(level: str | int = "WARNING") -> None:
    root = logging.getLogger("cm_closure")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler.addFilter(_ComponentFilter())
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
    root.propagate = False


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"cm_closure.{name}")
