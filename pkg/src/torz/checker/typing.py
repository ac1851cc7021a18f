"""Bidirectional type checking over NbE values."""
from __future__ import annotations

from typing import Optional, Sequence

from ..diagnostics import Diagnostic, TypeCheckError
from ..syntax.levels import LMax, LSucc, level_eq, level_vars, normalize_level
from ..syntax.pretty import print_term
from ..syntax.terms import (
    App, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Var, shift,
)
from .nbe import conv, evaluate, global_type, inst, quote, vapp, vfst
from .values import Closure, VPi, VSigma, VSort, force, vvar

MAX_PRINT = 20000


class Ctx:
    """A typing context: names, type values, and the evaluation environment."""

    __slots__ = ("names", "types", "rho")

    def __init__(self, names=(), types=(), rho=()):
        self.names, self.types, self.rho = tuple(names), tuple(types), tuple(rho)

    @property
    def depth(self) -> int:
        return len(self.types)

    def bind(self, name: str, ty) -> "Ctx":
        d = len(self.types)
        return Ctx(self.names + (name,), self.types + (ty,), self.rho + (vvar(d),))


def _clip(s: str) -> str:
    return s if len(s) <= MAX_PRINT else s[:MAX_PRINT] + " ...[truncated]"


class Checker:
    def __init__(self, env, file: Optional[str] = None, definition: Optional[str] = None,
                 level_names: Sequence[str] = ()):
        self.env = env
        self.file = file
        self.definition = definition
        self.level_names = tuple(level_names)

    # -- diagnostics ---------------------------------------------------
    def fail(self, code: str, message: str, t=None, span=None):
        sp = getattr(t, "span", None) or span
        line, col = (sp.line, sp.col) if sp is not None else (0, 0)
        raise TypeCheckError(Diagnostic(self.file, line, col, self.definition, code, message))

    def show(self, ctx: Ctx, v, unfold: bool) -> str:
        t = quote(self.env, v, ctx.depth, unfold)
        return _clip(print_term(t, ctx.names, self.level_names))

    def show_term(self, ctx: Ctx, t) -> str:
        return _clip(print_term(t, ctx.names, self.level_names))

    def mismatch(self, ctx, t, expected, inferred, span):
        e, i = force(expected), force(inferred)
        code = "type/universe-mismatch" if isinstance(e, VSort) and isinstance(i, VSort) else "type/mismatch"
        msg = (f"type mismatch for {self.show_term(ctx, t)}\n"
               f"  expected: {self.show(ctx, expected, False)}\n"
               f"  inferred: {self.show(ctx, inferred, False)}\n"
               f"  expected (normal form): {self.show(ctx, expected, True)}\n"
               f"  inferred (normal form): {self.show(ctx, inferred, True)}")
        self.fail(code, msg, t, span)

    # -- helpers ---------------------------------------------------------
    def eval(self, ctx: Ctx, t):
        return evaluate(self.env, t, ctx.rho)

    def infer_sort(self, ctx: Ctx, t, span=None):
        ty = force(self.infer(ctx, t, span))
        if not isinstance(ty, VSort):
            self.fail("type/not-a-type",
                      f"expected a type, but {self.show_term(ctx, t)} has type {self.show(ctx, ty, False)}",
                      t, span)
        return ty.level

    def check_level_scope(self, level, t, span):
        bad = [i for i in level_vars(level) if i >= len(self.level_names)]
        if bad:
            self.fail("type/unknown-level", f"level variable #{bad[0]} is not in scope", t, span)

    # -- synthesis -------------------------------------------------------
    def infer(self, ctx: Ctx, t, span=None):
        span = getattr(t, "span", None) or span
        if isinstance(t, Var):
            if t.index >= ctx.depth:
                self.fail("type/unbound-variable", f"variable #{t.index} is out of scope", t, span)
            return ctx.types[-1 - t.index]
        if isinstance(t, App):
            fty = force(self.infer(ctx, t.fn, span))
            if not isinstance(fty, VPi):
                self.fail("type/not-a-function",
                          f"{self.show_term(ctx, t.fn)} is applied to an argument but has type "
                          f"{self.show(ctx, fty, False)}", t, span)
            self.check(ctx, t.arg, fty.dom, span)
            return inst(self.env, fty.cod, self.eval(ctx, t.arg))
        if isinstance(t, Global):
            entry = self.env.get(t.name)
            if entry is None:
                self.fail("type/unbound-global", f"unbound global {t.name!r}", t, span)
            if len(t.levels) != len(entry.level_params):
                self.fail("type/level-arity",
                          f"{t.name!r} takes {len(entry.level_params)} level argument(s), got {len(t.levels)}",
                          t, span)
            for l in t.levels:
                self.check_level_scope(l, t, span)
            return global_type(self.env, entry, t.levels)
        if isinstance(t, Sort):
            self.check_level_scope(t.level, t, span)
            return VSort(normalize_level(LSucc(t.level)))
        if isinstance(t, (Pi, Sigma)):
            dom, cod = (t.dom, t.cod) if isinstance(t, Pi) else (t.fst, t.snd)
            i = self.infer_sort(ctx, dom, span)
            j = self.infer_sort(ctx.bind(t.name, self.eval(ctx, dom)), cod, span)
            return VSort(normalize_level(LMax(i, j)))
        if isinstance(t, Lam):
            self.infer_sort(ctx, t.ann, span)
            a = self.eval(ctx, t.ann)
            inner = ctx.bind(t.name, a)
            bty = self.infer(inner, t.body, span)
            return VPi(t.name, a, Closure(ctx.rho, quote(self.env, bty, inner.depth, False)))
        if isinstance(t, Fst):
            sty = force(self.infer(ctx, t.arg, span))
            if not isinstance(sty, VSigma):
                self.fail("type/not-a-pair", f"fst of a term of type {self.show(ctx, sty, False)}", t, span)
            return sty.dom
        if isinstance(t, Snd):
            sty = force(self.infer(ctx, t.arg, span))
            if not isinstance(sty, VSigma):
                self.fail("type/not-a-pair", f"snd of a term of type {self.show(ctx, sty, False)}", t, span)
            return inst(self.env, sty.cod, vfst(self.env, self.eval(ctx, t.arg)))
        if isinstance(t, Pair):
            # without an expected type a pair gets the non-dependent product of its parts
            a = self.infer(ctx, t.fst, span)
            b = quote(self.env, self.infer(ctx, t.snd, span), ctx.depth, False)
            return VSigma("_", a, Closure(ctx.rho, shift(b, 1)))
        self.fail("type/malformed", f"not a term: {t!r}", t, span)

    # -- checking --------------------------------------------------------
    def check(self, ctx: Ctx, t, ty, span=None):
        span = getattr(t, "span", None) or span
        if isinstance(t, Lam):
            fty = force(ty)
            if not isinstance(fty, VPi):
                self.fail("type/mismatch",
                          f"a function was given where {self.show(ctx, ty, False)} was expected", t, span)
            self.infer_sort(ctx, t.ann, span)
            a = self.eval(ctx, t.ann)
            if not conv(self.env, a, fty.dom, ctx.depth):
                self.fail("type/mismatch",
                          f"binder annotation {self.show(ctx, a, False)} does not match the expected "
                          f"domain {self.show(ctx, fty.dom, False)}\n"
                          f"  annotation (normal form): {self.show(ctx, a, True)}\n"
                          f"  domain (normal form): {self.show(ctx, fty.dom, True)}", t.ann, span)
            inner = ctx.bind(t.name, fty.dom)
            self.check(inner, t.body, inst(self.env, fty.cod, inner.rho[-1]), span)
            return
        if isinstance(t, Pair):
            sty = force(ty)
            if not isinstance(sty, VSigma):
                self.fail("type/mismatch",
                          f"a pair was given where {self.show(ctx, ty, False)} was expected", t, span)
            self.check(ctx, t.fst, sty.dom, span)
            self.check(ctx, t.snd, inst(self.env, sty.cod, self.eval(ctx, t.fst)), span)
            return
        got = self.infer(ctx, t, span)
        if not conv(self.env, got, ty, ctx.depth):
            self.mismatch(ctx, t, ty, got, span)
