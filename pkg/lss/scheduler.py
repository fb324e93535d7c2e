import logging
from concurrent.futures import Executor, Future, ProcessPoolExecutor
from typing import Any, Callable, List

from lss.log import LoggingMixin


class _InlineFuture(Future):
    def __init__(self, fn: Callable[..., Any], *args):
        super().__init__()
        try:
            self.set_result(fn(*args))
        except BaseException as e:
            self.set_exception(e)


class Scheduler(LoggingMixin):
    """
    Fans independent verification jobs out over a process pool. With a single job everything runs inline
    in the calling process. Results are handed back in submission order.
    """
    def __init__(self, jobs: int = 1):
        super().__init__(logging.getLogger("lss.verify"))
        self.jobs = max(1, jobs)
        self.executor: Executor = ProcessPoolExecutor(max_workers=self.jobs) if self.jobs > 1 else None
        self._futures: List[Future] = list()

    def run(self, fn: Callable[..., Any], *args) -> Future:
        if self.executor is None:
            future = _InlineFuture(fn, *args)
        else:
            future = self.executor.submit(fn, *args)
        self._futures.append(future)
        return future

    def join(self) -> List[Any]:
        results = [future.result() for future in self._futures]
        self._futures.clear()
        return results

    def shutdown(self):
        if self.executor is not None:
            self.debug(f"Shutting down pool of {self.jobs} workers")
            for future in self._futures:
                if not future.running() and not future.done():
                    future.cancel()
            self.executor.shutdown(wait=True)
            self.executor = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()
