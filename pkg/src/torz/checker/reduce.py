"""Substitution-based reduction on terms.

This is the reference semantics the evaluator is tested against: single
leftmost-outermost steps, weak-head normalization, and full normalization by
iterated stepping.  It shares the iota table with the evaluator.
"""
from __future__ import annotations

from typing import Optional, Tuple

from ..syntax.terms import (
    App, Fst, Global, Lam, Pair, Pi, Sigma, Snd, app, instantiate, subst_levels, unapply,
)
from .primitives import CTOR_ARGS, ELIM_ARITY, FIRED


class _TApp:
    __slots__ = ("levels",)

    def __init__(self, levels):
        self.levels = levels

    def __call__(self, f, *args):
        return app(f, *args)

    def elim(self, name, args):
        return app(Global(name, self.levels), *args)


def _ctor_args(t):
    h, args = unapply(t)
    if isinstance(h, Global) and h.name in CTOR_ARGS and len(args) == CTOR_ARGS[h.name]:
        return h.name, args
    return None, None


def _iota(env, head: Global, args, major):
    cname, cargs = _ctor_args(major)
    if cname is None:
        return None
    rule = env.rules[head.name].get(cname)
    if rule is None:
        return None
    FIRED[head.name] += 1
    n = ELIM_ARITY[head.name]
    elim_args = list(args[:n - 1]) + [major]
    return app(rule(elim_args, list(cargs), _TApp(head.levels)), *args[n:])


def whnf(env, t):
    """Weak-head normal form: delta, beta, projections and the mode's iota rules."""
    while True:
        h, args = unapply(t)
        if isinstance(h, Lam) and args:
            t = app(instantiate(h.body, args[0]), *args[1:])
            continue
        if isinstance(h, (Fst, Snd)):
            inner = whnf(env, h.arg)
            if isinstance(inner, Pair):
                t = app(inner.fst if isinstance(h, Fst) else inner.snd, *args)
                continue
            return app(type(h)(inner), *args)
        if isinstance(h, Global):
            entry = env.get(h.name)
            if entry is not None and entry.kind == "def":
                t = app(subst_levels(entry.body, h.levels), *args)
                continue
            n = ELIM_ARITY.get(h.name)
            if n is not None and len(args) >= n:
                major = whnf(env, args[n - 1])
                r = _iota(env, h, args, major)
                if r is not None:
                    t = r
                    continue
                return app(h, *args[:n - 1], major, *args[n:])
        return t


def head_redex(env, t) -> Optional[Tuple[object, str]]:
    """Contract the redex at the root of ``t`` if there is one."""
    h, args = unapply(t)
    if isinstance(h, Lam) and args:
        return app(instantiate(h.body, args[0]), *args[1:]), "beta"
    if isinstance(h, (Fst, Snd)) and isinstance(h.arg, Pair):
        return app(h.arg.fst if isinstance(h, Fst) else h.arg.snd, *args), "beta"
    if isinstance(h, Global):
        entry = env.get(h.name)
        if entry is not None and entry.kind == "def":
            return app(subst_levels(entry.body, h.levels), *args), "delta"
        n = ELIM_ARITY.get(h.name)
        if n is not None and len(args) >= n:
            r = _iota(env, h, args, args[n - 1])
            if r is not None:
                return r, "iota"
    return None


def step(env, t) -> Optional[Tuple[object, str]]:
    """One leftmost-outermost beta/delta/iota step anywhere in ``t``, or None."""
    r = head_redex(env, t)
    if r is not None:
        return r
    h, args = unapply(t)
    if args:
        r = step(env, h)
        if r is not None:
            return app(r[0], *args), r[1]
        for k, a in enumerate(args):
            r = step(env, a)
            if r is not None:
                return app(h, *args[:k], r[0], *args[k + 1:]), r[1]
        return None
    if isinstance(t, (Fst, Snd)):
        r = step(env, t.arg)
        return (type(t)(r[0], t.span), r[1]) if r else None
    if isinstance(t, (Lam, Pi, Sigma)):
        a, b = (t.ann, t.body) if isinstance(t, Lam) else ((t.dom, t.cod) if isinstance(t, Pi) else (t.fst, t.snd))
        r = step(env, a)
        if r is not None:
            return type(t)(t.name, r[0], b, t.span), r[1]
        r = step(env, b)
        if r is not None:
            return type(t)(t.name, a, r[0], t.span), r[1]
        return None
    if isinstance(t, Pair):
        r = step(env, t.fst)
        if r is not None:
            return Pair(r[0], t.snd, t.span), r[1]
        r = step(env, t.snd)
        if r is not None:
            return Pair(t.fst, r[0], t.span), r[1]
    return None


def normalize_by_steps(env, t, limit: int = 100000):
    """Iterate :func:`step` to a normal form; raises if ``limit`` steps pass."""
    for _ in range(limit):
        r = step(env, t)
        if r is None:
            return t
        t = r[0]
    raise RuntimeError("step limit exceeded")
