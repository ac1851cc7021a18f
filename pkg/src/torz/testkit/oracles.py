"""Independent reference constructions used to cross-check kernel computations."""
from __future__ import annotations

from ..syntax.terms import App, Global, Term


def iterate_term(step: str, times: int, start: Term) -> Term:
    """``step`` applied ``times`` times to ``start``, built syntactically."""
    t = start
    for _ in range(times):
        t = App(Global(step), t)
    return t


def expected_iteration(z: int, start: Term, forward: str = "succN", backward: str = "predN") -> Term:
    """What the inverse of evaluation at zero should produce at ``z`` for the
    constant family with the given forward and backward maps: the forward map
    ``z`` times for z >= 0 and the backward map ``-z`` times otherwise."""
    if z >= 0:
        return iterate_term(forward, z, start)
    return iterate_term(backward, -z, start)
