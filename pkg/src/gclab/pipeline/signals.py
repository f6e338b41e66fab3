"""Ctrl+C handling shared by the parent process and its workers."""

from __future__ import annotations

import signal
import threading
from types import FrameType, TracebackType
from typing import Any


class InterruptGuard:
    """Context manager: the first SIGINT/SIGTERM sets a flag, the second aborts at once.

    Handlers are only swapped on the main thread; elsewhere the guard is inert.
    """

    def __init__(self) -> None:
        self._flag = threading.Event()
        self._saved: dict[int, Any] = {}

    @property
    def interrupted(self) -> bool:
        return self._flag.is_set()

    def _handle(self, signum: int, frame: FrameType | None) -> None:
        if self._flag.is_set():
            self._restore()
            raise KeyboardInterrupt
        self._flag.set()

    def _restore(self) -> None:
        for signum, handler in self._saved.items():
            signal.signal(signum, handler)
        self._saved.clear()

    def __enter__(self) -> InterruptGuard:
        if threading.current_thread() is threading.main_thread():
            for signum in (signal.SIGINT, signal.SIGTERM):
                self._saved[signum] = signal.getsignal(signum)
                signal.signal(signum, self._handle)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        if threading.current_thread() is threading.main_thread():
            self._restore()


def worker_init() -> None:
    """Workers ignore SIGINT; the parent decides when to stop."""
    signal.signal(signal.SIGINT, signal.SIG_IGN)
