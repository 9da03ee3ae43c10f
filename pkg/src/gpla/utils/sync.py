from __future__ import annotations

from collections.abc import Awaitable, Callable

import anyio
import anyio.to_thread


def with_limiter[**P, R](
    limiter: anyio.CapacityLimiter,
    func: Callable[P, R],
    *args: P.args,
    **kwargs: P.kwargs,
) -> Callable[[], Awaitable[R]]:
    """Wrap a blocking call so a task group can run it on a worker thread."""

    async def wrapper() -> R:
        return await anyio.to_thread.run_sync(
            lambda: func(*args, **kwargs), limiter=limiter
        )

    return wrapper
