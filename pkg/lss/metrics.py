from typing import Optional

from pyformance import global_registry
from pyformance.meters import Counter, Timer


class MetricsMixin:
    """Counters and timers in the pyformance global registry, namespaced by module and class."""

    def _name(self, name):
        pkg = self.__class__.__module__
        clazz = self.__class__.__qualname__
        return f"{pkg}:{clazz}:{name}"

    def _full_name(self, name: str, event: Optional[str]) -> str:
        if event is not None:
            return self._name(f"{name}.{event}")
        return self._name(name)

    def counter(self, name: str, event: Optional[str] = None) -> Counter:
        return global_registry().counter(self._full_name(name, event))

    def timer(self, name: str, event: Optional[str] = None) -> Timer:
        return global_registry().timer(self._full_name(name, event))


def report_metrics(stream) -> None:
    """Write a one-off snapshot of every registered metric."""
    from pyformance.reporters import ConsoleReporter
    reporter = ConsoleReporter(registry=global_registry(), stream=stream)
    reporter.report_now()
