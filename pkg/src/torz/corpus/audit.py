"""Axiom audit: which computation-free constants a declaration rests on."""
from __future__ import annotations

from typing import FrozenSet

from ..checker import Environment
from ..diagnostics import Diagnostic, KernelError


def _unknown(name: str) -> KernelError:
    return KernelError(Diagnostic(None, 0, 0, name, "audit/unknown-name", f"no declaration named {name!r}"))


def axiom_audit(env: Environment, name: str) -> FrozenSet[str]:
    """Axioms (and ``squash``) in the transitive dependency closure of ``name``.

    The walk is iterative and results are memoized on the entries, which are
    shared between environments that extend one another.
    """
    root = env.get(name)
    if root is None:
        raise _unknown(name)
    if "audit" in root.cache:
        return root.cache["audit"]
    # post-order over the dependency graph so every child is done before its parent
    stack = [(root, False)]
    while stack:
        entry, expanded = stack.pop()
        if "audit" in entry.cache:
            continue
        deps = [env[d] for d in entry.deps if d in env]
        if not expanded:
            stack.append((entry, True))
            stack.extend((d, False) for d in deps if "audit" not in d.cache)
            continue
        acc = {entry.name} if entry.is_axiom_like else set()
        for d in deps:
            acc |= d.cache["audit"]
        entry.cache["audit"] = frozenset(acc)
    return root.cache["audit"]
