from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_parallel(func: Callable[[T], R], items: Iterable[T], parallelism: int = 1) -> List[R]:
    """Map func over items on a worker pool, preserving input order.

    Every caller passes a pure function, so the result does not depend on the pool size.
    """
    work = list(items)
    if parallelism < 1:
        raise ValueError(f"parallelism must be at least 1, got {parallelism}")
    if parallelism == 1 or len(work) <= 1:
        return [func(item) for item in work]

    with ThreadPoolExecutor(max_workers=parallelism) as executor:
        return list(executor.map(func, work))
