"""Logging for hororigid runs.

All package messages go through `LOGGER`, which feeds two handlers sharing one
`IndentFormatter`:

* `COUNTER_HANDLER` writes into the in-memory `LOG` and keeps per-level counts.
  The `catalog` and `scan` commands read `COUNTER_HANDLER.problems` after their
  reports, so an error logged outside a report still fails the run.
* `CONSOLE_HANDLER` writes to standard error, so reports on standard output stay
  machine readable. The command line `-q` flag raises its level to ERROR.

Messages carry a one character level code and are indented by the depth of the
computation that emitted them: a catalog record, its parameter tuples and then
the individual orbit data. Use `nested` or `loggerinfo_push_pop` to open a level.

The handlers live for the whole process; `reset_log` clears them between runs.
"""

import logging
from collections import Counter
from contextlib import contextmanager
from functools import wraps
from io import StringIO
from typing import Any, Callable, Iterator, Optional, Type

LEVEL_CODES = {
    logging.DEBUG: ">",
    logging.INFO: "-",
    logging.WARNING: "?",
    logging.ERROR: "!",
    logging.CRITICAL: "X",
}


class LevelCodeFilter(logging.Filter):
    """Attach the single character `levelcode` used by `IndentFormatter`."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.levelcode = LEVEL_CODES.get(record.levelno, " ")
        return True


class CounterHandler(logging.StreamHandler):
    """A stream handler that tallies the records it emits by level name."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.counters: Counter = Counter()

    def emit(self, record: logging.LogRecord) -> None:
        self.counters[record.levelname] += 1
        super().emit(record)

    def reset(self) -> None:
        self.counters.clear()

    @property
    def problems(self) -> int:
        """Error and critical records emitted since the last reset."""
        return self.counters["ERROR"] + self.counters["CRITICAL"]


class IndentFormatter(logging.Formatter):
    """Format records as an indented level code followed by the message.

    A record logged with `extra={"join": values}` has the reprs of `values`
    appended to the message, separated by commas. This keeps long lists of
    roots or case labels out of f-strings at the call site.

    Args:
        fmt: The record format, which must use the `levelcode` attribute.
        datefmt: A date format string.
        indent: The text prepended once per depth level.
    """

    def __init__(
        self,
        fmt: str = "%(levelcode)s %(message)s",
        datefmt: Optional[str] = None,
        indent: str = "    ",
    ) -> None:
        super().__init__(fmt, datefmt)
        self.depth = 0
        self.indent = indent

    def push(self, n: int = 1) -> None:
        self.depth += n

    def pop(self, n: int = 1) -> None:
        self.depth = max(0, self.depth - n)

    def format(self, record: logging.LogRecord) -> str:
        if not hasattr(record, "levelcode"):
            record.levelcode = LEVEL_CODES.get(record.levelno, " ")

        text = super().format(record)
        values = getattr(record, "join", None)
        if values is not None:
            text += ", ".join(repr(val) for val in values)

        return self.indent * self.depth + text


LOGGER = logging.getLogger(__name__)
"""logging.Logger: The package logger."""

LOG = StringIO()
"""io.StringIO: The formatted messages of the current run."""

COUNTER_HANDLER = CounterHandler(LOG)
"""CounterHandler: Writes to `LOG` and counts records by level."""

CONSOLE_HANDLER = logging.StreamHandler()
"""logging.StreamHandler: Writes to standard error at INFO and above."""

FORMATTER = IndentFormatter()
"""IndentFormatter: Shared by both handlers, holds the current depth."""

for _handler in (COUNTER_HANDLER, CONSOLE_HANDLER):
    _handler.setFormatter(FORMATTER)
    LOGGER.addHandler(_handler)

LOGGER.addFilter(LevelCodeFilter())
LOGGER.setLevel(logging.DEBUG)
CONSOLE_HANDLER.setLevel(logging.INFO)


def reset_log() -> None:
    """Empty `LOG`, zero the counters and return to depth zero."""

    LOG.seek(0)
    LOG.truncate()
    COUNTER_HANDLER.reset()
    FORMATTER.depth = 0


@contextmanager
def nested(n: int = 1) -> Iterator[None]:
    """Indent messages emitted inside the block by `n` levels."""

    FORMATTER.push(n)
    try:
        yield
    finally:
        FORMATTER.pop(n)


def log_and_raise(
    msg: str, exception: Type[Exception], extra: Optional[dict] = None
) -> None:
    """Log `msg` as critical and raise `exception` with the same text.

    Used for input that the root system and cohomology code cannot run on.
    Cross-check differences are logged as errors instead, and the run goes on.

    Args:
        msg: The message.
        exception: The exception type to raise.
        extra: Passed to the logger, for example a `join` list.
    """

    LOGGER.critical(msg, extra=extra)
    raise exception(msg)


def loggerinfo_push_pop(wrapper_message: str) -> Callable:
    """Decorate a function to log `wrapper_message` and nest its own messages.

    Args:
        wrapper_message: The INFO message emitted before the call.
    """

    def decorator_func(function: Callable) -> Callable:
        @wraps(function)
        def wrapped_func(*args, **kwargs: Any):
            LOGGER.info(wrapper_message)
            with nested():
                return function(*args, **kwargs)

        return wrapped_func

    return decorator_func
