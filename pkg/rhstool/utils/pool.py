"""Worker pools for partitioned brute-force sweeps."""

import logging
from multiprocessing import Pool
from typing import Any, Callable, Iterable, List

logger = logging.getLogger(__name__)


class FakePool:
    """In-process stand-in with the ``Pool.map`` interface."""

    def map(self, func: Callable[[Any], Any], args: Iterable[Any]) -> List[Any]:
        return list(map(func, args))

    def __enter__(self) -> 'FakePool':
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        pass


def get_pool(jobs: int):
    """Return a process pool for ``jobs > 1``, otherwise a ``FakePool``.

    Both are context managers whose ``map`` preserves argument order, so
    callers can merge partial results deterministically.
    """
    if jobs <= 1:
        return FakePool()
    logger.debug("starting process pool with %d workers", jobs)
    return Pool(processes=jobs)

