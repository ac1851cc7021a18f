"""The trusted kernel: typing, reduction and conversion."""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

from ..diagnostics import Diagnostic, TypeCheckError
from ..syntax.terms import Declaration
from .env import Entry, Environment, entry_for
from .nbe import conv, evaluate, quote
from .primitives import FIRED, TRUNC_MODES
from .reduce import normalize_by_steps, step, whnf as _whnf
from .typing import Checker, Ctx

__all__ = [
    "Environment", "Entry", "Ctx", "Checker", "FIRED", "TRUNC_MODES",
    "make_ctx", "infer", "check", "whnf", "normalize", "convertible",
    "check_declaration", "step", "normalize_by_steps",
]

Context = Sequence[Tuple[str, object]]


def make_ctx(env: Environment, ctx: Context = (), level_names=()) -> Ctx:
    """Build a typing context from ``(name, type-term)`` pairs, outermost first."""
    c = Ctx()
    for name, ty in ctx:
        Checker(env, level_names=level_names).infer_sort(c, ty)
        c = c.bind(name, evaluate(env, ty, c.rho))
    return c


def _ctx(env, ctx, level_names):
    return ctx if isinstance(ctx, Ctx) else make_ctx(env, ctx, level_names)


def infer(env: Environment, ctx: Context, t, level_names=()):
    """Synthesize the type of ``t``; returns a (non-unfolded) type term."""
    c = _ctx(env, ctx, level_names)
    ty = Checker(env, level_names=level_names).infer(c, t)
    return quote(env, ty, c.depth, unfold=False)


def check(env: Environment, ctx: Context, t, ty, level_names=()) -> None:
    """Raise :class:`TypeCheckError` unless ``t : ty``."""
    c = _ctx(env, ctx, level_names)
    ch = Checker(env, level_names=level_names)
    ch.infer_sort(c, ty)
    ch.check(c, t, evaluate(env, ty, c.rho))


def whnf(env: Environment, t):
    return _whnf(env, t)


def normalize(env: Environment, ctx: Context, t):
    """Full beta-delta-iota normal form (by evaluation and read-back)."""
    depth = ctx.depth if isinstance(ctx, Ctx) else len(ctx)
    rho = ctx.rho if isinstance(ctx, Ctx) else make_ctx(env, ctx).rho
    return quote(env, evaluate(env, t, rho), depth, unfold=True)


def convertible(env: Environment, ctx: Context, t, u) -> bool:
    c = _ctx(env, ctx, ())
    return conv(env, evaluate(env, t, c.rho), evaluate(env, u, c.rho), c.depth)


def check_declaration(env: Environment, d: Declaration) -> Environment:
    """Check ``d`` against ``env`` and return the extended environment."""
    ch = Checker(env, file=d.file, definition=d.name, level_names=d.level_params)
    if d.name in env:
        ch.fail("type/duplicate-name", f"{d.name!r} is already declared", span=d.span)
    c = Ctx()
    ch.infer_sort(c, d.type, d.span)
    if d.body is not None:
        ch.check(c, d.body, evaluate(env, d.type, ()), d.span)
    return env._extend(entry_for(d))
