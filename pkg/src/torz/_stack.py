"""Run deep recursive kernel work on a thread with a large stack."""
from __future__ import annotations

import sys
import threading

STACK_BYTES = 512 * 1024 * 1024
RECURSION_LIMIT = 200000


def run_deep(fn, *args, timeout=None, **kwargs):
    """Call ``fn`` on a big-stack thread and return its result (re-raising errors).

    With ``timeout`` (seconds) the caller stops waiting and gets ``TimeoutError``;
    the worker is a daemon thread and is abandoned.
    """
    box = {}

    def target():
        try:
            box["value"] = fn(*args, **kwargs)
        except BaseException as exc:  # re-raised in the caller's thread
            box["error"] = exc

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, RECURSION_LIMIT))
    old_size = threading.stack_size()
    threading.stack_size(STACK_BYTES)
    try:
        th = threading.Thread(target=target, daemon=True)
        th.start()
        th.join(timeout)
    finally:
        threading.stack_size(old_size)
    if th.is_alive():
        raise TimeoutError(f"no result within {timeout} s")
    if "error" in box:
        raise box["error"]
    return box.get("value")
