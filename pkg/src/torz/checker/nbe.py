"""Evaluation, read-back and conversion over semantic values."""
from __future__ import annotations

from ..syntax.levels import level_eq, level_key
from ..syntax.terms import (
    App, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Var, subst_levels,
)
from .primitives import CTOR_ARGS, ELIM_ARITY, FIRED
from .values import (
    APP, FST, SND, Closure, HConst, HVar, VGlued, VLam, VNeu, VPair, VPi, VSigma,
    VSort, force, vvar,
)


class EvalError(Exception):
    """Raised when evaluation meets an ill-typed shape (kernel bug or unchecked input)."""


def lkey(levels) -> tuple:
    return tuple(level_key(l) for l in levels)


def global_type(env, entry, levels):
    key = (env.mode, "t", lkey(levels))
    v = entry.cache.get(key)
    if v is None:
        v = evaluate(env, subst_levels(entry.type, levels), ())
        entry.cache[key] = v
    return v


def global_body(env, entry, levels):
    key = (env.mode, "b", lkey(levels))
    v = entry.cache.get(key)
    if v is None:
        v = evaluate(env, subst_levels(entry.body, levels), ())
        entry.cache[key] = v
    return v


def evaluate(env, t, rho: tuple):
    if isinstance(t, App):
        return vapp(env, evaluate(env, t.fn, rho), evaluate(env, t.arg, rho))
    if isinstance(t, Var):
        return rho[-1 - t.index]
    if isinstance(t, Global):
        entry = env.entries.get(t.name)
        if entry is None:
            raise EvalError(f"unbound global {t.name}")
        if entry.kind == "def":
            levels = t.levels
            return VGlued(t.name, levels, (), lambda: global_body(env, entry, levels))
        return VNeu(HConst(t.name, t.levels))
    if isinstance(t, Lam):
        return VLam(t.name, evaluate(env, t.ann, rho), Closure(rho, t.body))
    if isinstance(t, Pi):
        return VPi(t.name, evaluate(env, t.dom, rho), Closure(rho, t.cod))
    if isinstance(t, Sigma):
        return VSigma(t.name, evaluate(env, t.fst, rho), Closure(rho, t.snd))
    if isinstance(t, Pair):
        return VPair(evaluate(env, t.fst, rho), evaluate(env, t.snd, rho))
    if isinstance(t, Fst):
        return vfst(env, evaluate(env, t.arg, rho))
    if isinstance(t, Snd):
        return vsnd(env, evaluate(env, t.arg, rho))
    if isinstance(t, Sort):
        return VSort(t.level)
    raise EvalError(f"cannot evaluate {t!r}")


def inst(env, clo: Closure, v):
    return evaluate(env, clo.term, clo.env + (v,))


class _VApp:
    """Applicator handed to iota builders (value flavour)."""

    __slots__ = ("env", "levels")

    def __init__(self, env, levels):
        self.env, self.levels = env, levels

    def __call__(self, f, *args):
        for a in args:
            f = vapp(self.env, f, a)
        return f

    def elim(self, name, args):
        return self(VNeu(HConst(name, self.levels)), *args)


def _try_iota(env, head: HConst, spine: tuple):
    args = [fr[1] for fr in spine]
    major = force(args[-1])
    if not (isinstance(major, VNeu) and isinstance(major.head, HConst)):
        return None
    cname = major.head.name
    rule = env.rules[head.name].get(cname)
    if rule is None or len(major.spine) != CTOR_ARGS[cname]:
        return None
    if any(fr[0] != APP for fr in major.spine):
        return None
    FIRED[head.name] += 1
    return rule(args, [fr[1] for fr in major.spine], _VApp(env, head.levels))


def vapp(env, f, a):
    if isinstance(f, VLam):
        return evaluate(env, f.body.term, f.body.env + (a,))
    if isinstance(f, VGlued):
        return VGlued(f.name, f.levels, f.spine + ((APP, a),), lambda: vapp(env, f.unfold(), a))
    if isinstance(f, VNeu):
        spine = f.spine + ((APP, a),)
        h = f.head
        if isinstance(h, HConst) and len(spine) == ELIM_ARITY.get(h.name, -1):
            r = _try_iota(env, h, spine)
            if r is not None:
                return r
        return VNeu(h, spine)
    raise EvalError("application of a non-function")


def vfst(env, v):
    if isinstance(v, VPair):
        return v.fst
    if isinstance(v, VGlued):
        return VGlued(v.name, v.levels, v.spine + ((FST,),), lambda: vfst(env, v.unfold()))
    if isinstance(v, VNeu):
        return VNeu(v.head, v.spine + ((FST,),))
    raise EvalError("first projection of a non-pair")


def vsnd(env, v):
    if isinstance(v, VPair):
        return v.snd
    if isinstance(v, VGlued):
        return VGlued(v.name, v.levels, v.spine + ((SND,),), lambda: vsnd(env, v.unfold()))
    if isinstance(v, VNeu):
        return VNeu(v.head, v.spine + ((SND,),))
    raise EvalError("second projection of a non-pair")


# ---------------------------------------------------------------- read-back

def quote(env, v, depth: int, unfold: bool = True):
    """Read a value back to a term at context length ``depth``.

    With ``unfold`` every definition is expanded (the beta-delta-iota normal
    form); without it glued constants are printed by name.
    """
    if isinstance(v, VGlued):
        if unfold:
            return quote(env, force(v), depth, True)
        return _quote_spine(env, Global(v.name, v.levels), v.spine, depth, unfold)
    if isinstance(v, VNeu):
        h = v.head
        head = Var(depth - 1 - h.level) if isinstance(h, HVar) else Global(h.name, h.levels)
        return _quote_spine(env, head, v.spine, depth, unfold)
    if isinstance(v, VLam):
        return Lam(v.name, quote(env, v.ann, depth, unfold),
                   quote(env, inst(env, v.body, vvar(depth)), depth + 1, unfold))
    if isinstance(v, VPi):
        return Pi(v.name, quote(env, v.dom, depth, unfold),
                  quote(env, inst(env, v.cod, vvar(depth)), depth + 1, unfold))
    if isinstance(v, VSigma):
        return Sigma(v.name, quote(env, v.dom, depth, unfold),
                     quote(env, inst(env, v.cod, vvar(depth)), depth + 1, unfold))
    if isinstance(v, VPair):
        return Pair(quote(env, v.fst, depth, unfold), quote(env, v.snd, depth, unfold))
    if isinstance(v, VSort):
        return Sort(v.level)
    raise EvalError(f"cannot quote {v!r}")


def _quote_spine(env, head, spine, depth, unfold):
    t = head
    for fr in spine:
        if fr[0] == APP:
            t = App(t, quote(env, fr[1], depth, unfold))
        elif fr[0] == FST:
            t = Fst(t)
        else:
            t = Snd(t)
    return t


# ---------------------------------------------------------------- conversion

def _same_levels(a, b) -> bool:
    return len(a) == len(b) and all(level_eq(x, y) for x, y in zip(a, b))


def _spines_conv(env, s1, s2, depth) -> bool:
    if len(s1) != len(s2):
        return False
    for f1, f2 in zip(s1, s2):
        if f1[0] != f2[0]:
            return False
        if f1[0] == APP and not conv(env, f1[1], f2[1], depth):
            return False
    return True


def conv(env, a, b, depth: int) -> bool:
    """Beta-delta-iota-eta convertibility of two values at context length ``depth``."""
    if a is b:
        return True
    if isinstance(a, VGlued) or isinstance(b, VGlued):
        if isinstance(a, VGlued) and isinstance(b, VGlued):
            if a.name == b.name and _same_levels(a.levels, b.levels) \
                    and _spines_conv(env, a.spine, b.spine, depth):
                return True
            return conv(env, a.unfold(), b.unfold(), depth)
        if isinstance(a, VGlued):
            return conv(env, a.unfold(), b, depth)
        return conv(env, a, b.unfold(), depth)

    if isinstance(a, VLam):
        x = vvar(depth)
        return conv(env, inst(env, a.body, x), vapp(env, b, x), depth + 1)
    if isinstance(b, VLam):
        x = vvar(depth)
        return conv(env, vapp(env, a, x), inst(env, b.body, x), depth + 1)
    if isinstance(a, VPair):
        return conv(env, a.fst, vfst(env, b), depth) and conv(env, a.snd, vsnd(env, b), depth)
    if isinstance(b, VPair):
        return conv(env, vfst(env, a), b.fst, depth) and conv(env, vsnd(env, a), b.snd, depth)

    if isinstance(a, VSort):
        return isinstance(b, VSort) and level_eq(a.level, b.level)
    if isinstance(a, (VPi, VSigma)):
        if type(a) is not type(b) or not conv(env, a.dom, b.dom, depth):
            return False
        x = vvar(depth)
        return conv(env, inst(env, a.cod, x), inst(env, b.cod, x), depth + 1)
    if isinstance(a, VNeu):
        if not isinstance(b, VNeu):
            return False
        ha, hb = a.head, b.head
        if isinstance(ha, HVar):
            if not (isinstance(hb, HVar) and ha.level == hb.level):
                return False
        elif not (isinstance(hb, HConst) and ha.name == hb.name and _same_levels(ha.levels, hb.levels)):
            return False
        return _spines_conv(env, a.spine, b.spine, depth)
    return False
