import logging
from functools import partial
from typing import Callable, Optional


class LoggingMixin:
    """
    Prefixes every message with a short context string, by default the class name. Subsystems pass their
    own logger (e.g., "lss.oracle") so logging.ini can route them separately.
    """
    def __init__(self, logger: Optional[logging.Logger] = None, extra_func: Optional[Callable[[], str]] = None):
        if logger is None:
            self.logger = logging.getLogger("lss")
        else:
            self.logger = logger
        if extra_func is None:
            self.extra_func = partial(str, self.__class__.__qualname__)
        else:
            self.extra_func = extra_func

    def _fmt(self, msg) -> str:
        return f"{self.extra_func()} {msg}"

    def info(self, msg, *args, **kwargs):
        self.logger.info(self._fmt(msg), *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(self._fmt(msg), *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        self.logger.warning(self._fmt(msg), *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self.logger.error(self._fmt(msg), *args, **kwargs)

    def exception(self, msg, *args, **kwargs):
        self.logger.exception(self._fmt(msg), *args, **kwargs)
