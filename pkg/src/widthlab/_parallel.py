"""Thread fan-out over fixed blocks.

Work is always cut into the same blocks regardless of the worker count and
results come back in block order, so reductions built on top are bit-stable
at any level of parallelism.
"""

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "WIDTHLAB_THREADS"


def resolve_threads(threads=None) -> int:
    if threads is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        else:
            threads = os.cpu_count() or 1
    return max(1, int(threads))


def map_blocks(fn, n_blocks: int, threads=None) -> list:
    """``[fn(b) for b in range(n_blocks)]``, possibly evaluated concurrently."""
    workers = min(resolve_threads(threads), n_blocks)
    if workers <= 1:
        return [fn(b) for b in range(n_blocks)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(n_blocks)))
