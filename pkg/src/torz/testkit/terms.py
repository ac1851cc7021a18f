"""Term generators: typing-directed well-typed terms and raw scope-correct terms.

Every generator draws its decisions from a *chooser*.  A seeded random
chooser gives sampling; a replaying chooser walks the whole decision tree,
which enumerates all terms below a small fuel bound with the same code.
"""
from __future__ import annotations

import random
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..syntax.levels import LMax, LNum, LSucc, LVar
from ..syntax.terms import (
    App, Declaration, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Term, Var, app, shift,
)

L0 = LNum(0)
NAT = Global("Nat")
ZT = Global("Z")
UNIT = Global("Unit")


def arrow(a: Term, b: Term) -> Term:
    return Pi("_", a, shift(b, 1))


def prod(a: Term, b: Term) -> Term:
    return Sigma("_", a, shift(b, 1))


def sum_t(a: Term, b: Term) -> Term:
    return app(Global("Sum", (L0, L0)), a, b)


def trunc_t(a: Term) -> Term:
    return App(Global("Trunc", (L0,)), a)


def id_t(a: Term, x: Term, y: Term) -> Term:
    return app(Global("Id", (L0,)), a, x, y)


def is_prop(a: Term) -> Term:
    """``(x y : a) -> Id a x y`` for a closed type ``a``."""
    return Pi("x", a, Pi("y", shift(a, 1), id_t(shift(a, 2), Var(1), Var(0))))


# -- choosers -------------------------------------------------------------

class RandomChooser:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def pick(self, n: int) -> int:
        return self.rng.randrange(n)


class ReplayChooser:
    """Follows a fixed prefix of decisions, then always takes the first option."""

    def __init__(self, prefix: Sequence[int]):
        self.prefix = list(prefix)
        self.taken: List[int] = []
        self.arity: List[int] = []

    def pick(self, n: int) -> int:
        i = len(self.taken)
        c = self.prefix[i] if i < len(self.prefix) else 0
        self.taken.append(c)
        self.arity.append(n)
        return c


def enumerate_choices(build: Callable, limit: Optional[int] = None) -> Iterator:
    """Run ``build(chooser)`` once for every leaf of its decision tree."""
    prefix: List[int] = []
    count = 0
    while True:
        ch = ReplayChooser(prefix)
        yield build(ch)
        count += 1
        if limit is not None and count >= limit:
            return
        i = len(ch.taken) - 1
        while i >= 0 and ch.taken[i] + 1 >= ch.arity[i]:
            i -= 1
        if i < 0:
            return
        prefix = ch.taken[:i] + [ch.taken[i] + 1]


# -- well-typed terms over the primitive signature ------------------------

BASE_TYPES = (NAT, ZT, UNIT)
AUX_TYPES = (NAT, ZT, UNIT, arrow(NAT, NAT), prod(NAT, ZT))
CONTEXTS: Tuple[Tuple[Tuple[str, Term], ...], ...] = (
    (),
    (("n", NAT),),
    (("n", NAT), ("z", ZT)),
    (("f", arrow(NAT, NAT)), ("n", NAT)),
    (("n", NAT), ("h", is_prop(NAT))),
    (("z", ZT), ("h", is_prop(ZT))),
)


class TypedGen:
    """Typing-directed generation; all generated types are closed."""

    def __init__(self, chooser, ctx: Sequence[Tuple[str, Term]] = ()):
        self.ch = chooser
        self.ctx = list(ctx)

    def pick(self, options):
        return options[self.ch.pick(len(options))]

    def gen_type(self, depth: int) -> Term:
        if depth <= 0:
            return self.pick(BASE_TYPES)
        k = self.ch.pick(6)
        if k < 3:
            return BASE_TYPES[k]
        a, b = self.gen_type(depth - 1), self.gen_type(depth - 1)
        return (arrow, prod, sum_t)[k - 3](a, b)

    # the context is a list of closed types; Var i refers to ctx[-1 - i]
    def vars_of(self, ty: Term, ctx) -> List[Term]:
        return [Var(len(ctx) - 1 - k) for k, (_, t) in enumerate(ctx) if t == ty]

    def prop_hyp(self, ty: Term, ctx) -> Optional[Term]:
        vs = self.vars_of(is_prop(ty), ctx)
        return vs[0] if vs else None

    def gen(self, ty: Term, fuel: int, ctx=None) -> Term:
        ctx = self.ctx if ctx is None else ctx
        opts = [lambda v=v: v for v in self.vars_of(ty, ctx)]
        opts += self.intro_options(ty, fuel, ctx)
        if fuel > 0:
            opts += self.elim_options(ty, fuel - 1, ctx)
        return self.pick(opts)()

    def aux(self) -> Term:
        return self.pick(AUX_TYPES)

    def intro_options(self, ty, fuel, ctx):
        sub = max(fuel - 1, 0)
        if ty == NAT:
            out = [lambda: Global("zeroN")]
            if fuel > 0:
                out.append(lambda: App(Global("succN"), self.gen(NAT, sub, ctx)))
            return out
        if ty == ZT:
            out = [lambda: Global("zZero")]
            if fuel > 0:
                out += [lambda c=c: App(Global(c), self.gen(NAT, sub, ctx)) for c in ("zPos", "zNeg")]
            return out
        if ty == UNIT:
            return [lambda: Global("tt")]
        if isinstance(ty, Pi):
            return [lambda: Lam("x", ty.dom, self.gen(shift(ty.cod, -1), sub, ctx + [("x", ty.dom)]))]
        if isinstance(ty, Sigma):
            b = shift(ty.snd, -1)
            return [lambda: Pair(self.gen(ty.fst, sub, ctx), self.gen(b, sub, ctx))]
        head, args = _unapp(ty)
        if head == "Sum":
            a, b = args
            return [lambda: app(Global("inl", (L0, L0)), a, b, self.gen(a, sub, ctx)),
                    lambda: app(Global("inr", (L0, L0)), a, b, self.gen(b, sub, ctx))]
        if head == "Trunc":
            (a,) = args
            return [lambda: app(Global("tr", (L0,)), a, self.gen(a, sub, ctx))]
        return []

    def elim_options(self, ty, f, ctx):
        """Eliminations landing in ``ty``; subterms get fuel ``f``."""
        g = self.gen
        const = lambda dom: Lam("_", dom, shift(ty, 1))  # noqa: E731
        out = [
            # beta redex
            lambda: (lambda a: App(Lam("x", a, g(ty, f, ctx + [("x", a)])), g(a, f, ctx)))(self.aux()),
            lambda: (lambda a: App(g(arrow(a, ty), f, ctx), g(a, f, ctx)))(self.aux()),
            lambda: (lambda b: Fst(g(prod(ty, b), f, ctx)))(self.aux()),
            lambda: (lambda a: Snd(g(prod(a, ty), f, ctx)))(self.aux()),
            lambda: app(Global("natInd", (L0,)), const(NAT), g(ty, f, ctx),
                        Lam("n", NAT, Lam("r", shift(ty, 1), g(ty, f, ctx + [("n", NAT), ("r", ty)]))),
                        g(NAT, f, ctx)),
            lambda: app(Global("zInd", (L0,)), const(ZT), g(ty, f, ctx),
                        Lam("n", NAT, g(ty, f, ctx + [("n", NAT)])),
                        Lam("n", NAT, g(ty, f, ctx + [("n", NAT)])),
                        g(ZT, f, ctx)),
            lambda: app(Global("unitInd", (L0,)), const(UNIT), g(ty, f, ctx), g(UNIT, f, ctx)),
            lambda: self._sum_elim(ty, f, ctx),
            lambda: self._j(ty, f, ctx),
        ]
        h = self.prop_hyp(ty, ctx)
        if h is not None:
            out.append(lambda: self._trunc_rec(ty, f, ctx, h))
            out.append(lambda: self._trunc_ind(ty, f, ctx, h))
        return out

    def _sum_elim(self, ty, f, ctx):
        a, b = self.pick(BASE_TYPES), self.pick(BASE_TYPES)
        s = sum_t(a, b)
        return app(Global("sumInd", (L0, L0, L0)), a, b, Lam("_", s, shift(ty, 1)),
                   Lam("a", a, self.gen(ty, f, ctx + [("a", a)])),
                   Lam("b", b, self.gen(ty, f, ctx + [("b", b)])),
                   self.gen(s, f, ctx))

    def _j(self, ty, f, ctx):
        a = self.pick(BASE_TYPES)
        x = self.gen(a, f, ctx)
        # motive (y : a) (p : Id a x y) => ty, under two binders
        motive = Lam("y", a, Lam("p", id_t(shift(a, 1), shift(x, 1), Var(0)), shift(ty, 2)))
        return app(Global("J", (L0, L0)), a, x, motive, self.gen(ty, f, ctx), x,
                   app(Global("refl", (L0,)), a, x))

    def _trunc_rec(self, ty, f, ctx, h):
        a = self.pick(BASE_TYPES)
        return app(Global("truncRec", (L0, L0)), a, ty, h,
                   Lam("a", a, self.gen(ty, f, ctx + [("a", a)])),
                   self.gen(trunc_t(a), f, ctx))

    def _trunc_ind(self, ty, f, ctx, h):
        a = self.pick(BASE_TYPES)
        ta = trunc_t(a)
        return app(Global("truncInd", (L0, L0)), a, Lam("_", ta, shift(ty, 1)),
                   Lam("z", ta, shift(h, 1)),
                   Lam("a", a, self.gen(ty, f, ctx + [("a", a)])),
                   self.gen(ta, f, ctx))


def _unapp(t) -> Tuple[Optional[str], list]:
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return (t.name if isinstance(t, Global) else None), args


Sample = Tuple[Tuple[Tuple[str, Term], ...], Term, Term]  # context, term, type


def _typed(chooser, fuel: int, ctx=None, ty=None) -> Sample:
    g0 = TypedGen(chooser)
    ctx = CONTEXTS[chooser.pick(len(CONTEXTS))] if ctx is None else ctx
    g = TypedGen(chooser, ctx)
    ty = g0.gen_type(chooser.pick(2)) if ty is None else ty
    return tuple(ctx), g.gen(ty, fuel), ty


def gen_typed_term(seed: int, size: int) -> Tuple[Tuple[Tuple[str, Term], ...], Term]:
    """A well-typed, axiom-free term and its context, deterministic in ``seed``.

    ``size`` bounds the nesting of eliminations (fuel), at most 200.
    """
    ctx, t, _ = gen_typed_sample(seed, size)
    return ctx, t


def gen_typed_sample(seed: int, size: int, closed: bool = False, ty: Optional[Term] = None) -> Sample:
    if not 0 <= size <= 200:
        raise ValueError("size must be in 0..200")
    return _typed(RandomChooser(seed), size, () if closed else None, ty)


def enumerate_typed(fuel: int, ctx=(), ty: Term = NAT, limit: Optional[int] = None) -> Iterator[Sample]:
    """All terms of type ``ty`` in ``ctx`` up to ``fuel`` (aux types from a fixed list)."""
    return enumerate_choices(lambda ch: _typed(ch, fuel, ctx, ty), limit)


def typed_sample(count: int, seed: int = 0, size: int = 3, exhaustive_fuel: int = 1,
                 exhaustive_types: Sequence[Term] = (NAT, ZT)) -> List[Sample]:
    """Exhaustive small closed terms first (fuel <= ``exhaustive_fuel`` at the
    given goal types), then seeded random samples up to ``count``."""
    out: List[Sample] = []
    for ty in exhaustive_types:
        for s in enumerate_typed(exhaustive_fuel, (), ty):
            out.append(s)
            if len(out) >= count:
                return out
    rng = random.Random(seed)
    while len(out) < count:
        out.append(gen_typed_sample(rng.randrange(2 ** 32), rng.randint(1, size)))
    return out


# -- raw scope-correct terms and declarations ------------------------------

def gen_level(ch, nvars: int, depth: int = 2):
    k = ch.pick(4 if depth > 0 else 2)
    if k == 0 or (k == 1 and nvars == 0):
        return LNum(ch.pick(3))
    if k == 1:
        return LVar(ch.pick(nvars))
    if k == 2:
        return LSucc(gen_level(ch, nvars, depth - 1))
    return LMax(gen_level(ch, nvars, depth - 1), gen_level(ch, nvars, depth - 1))


RAW_GLOBALS = ("Nat", "zeroN", "succN", "Z", "zZero", "Unit", "tt")
RAW_POLY = ("Id", "refl", "Trunc", "tr")  # one level argument each


def gen_raw_term(ch, depth: int, scope: int, nlevels: int = 0) -> Term:
    """A scope-correct (not necessarily well-typed) term over ``scope`` variables."""
    leaf = 3 if depth <= 0 else 10
    k = ch.pick(leaf)
    if k == 0:
        return Var(ch.pick(scope)) if scope else Global(RAW_GLOBALS[ch.pick(len(RAW_GLOBALS))])
    if k == 1:
        return Global(RAW_GLOBALS[ch.pick(len(RAW_GLOBALS))])
    if k == 2:
        if ch.pick(2):
            return Sort(gen_level(ch, nlevels))
        return Global(RAW_POLY[ch.pick(len(RAW_POLY))], (gen_level(ch, nlevels),))
    d = depth - 1
    if k == 3:
        return App(gen_raw_term(ch, d, scope, nlevels), gen_raw_term(ch, d, scope, nlevels))
    if k == 4:
        return Lam(_hint(ch), gen_raw_term(ch, d, scope, nlevels), gen_raw_term(ch, d, scope + 1, nlevels))
    if k == 5:
        return Pi(_hint(ch), gen_raw_term(ch, d, scope, nlevels), gen_raw_term(ch, d, scope + 1, nlevels))
    if k == 6:
        return Sigma(_hint(ch), gen_raw_term(ch, d, scope, nlevels), gen_raw_term(ch, d, scope + 1, nlevels))
    if k == 7:
        return Pair(gen_raw_term(ch, d, scope, nlevels), gen_raw_term(ch, d, scope, nlevels))
    if k == 8:
        return Fst(gen_raw_term(ch, d, scope, nlevels))
    return Snd(gen_raw_term(ch, d, scope, nlevels))


def _hint(ch) -> str:
    # deliberately clashing hints exercise the printer's freshening
    return ("x", "y", "x", "_", "f'")[ch.pick(5)]


def gen_raw_decl(seed: int, size: int = 4, index: int = 0) -> Declaration:
    ch = RandomChooser(seed)
    nlev = ch.pick(3)
    params = ("i", "j")[:nlev]
    ty = gen_raw_term(ch, size, 0, nlev)
    if ch.pick(4) == 0:
        return Declaration(f"d{index}", params, "axiom", ty)
    return Declaration(f"d{index}", params, "def", ty, gen_raw_term(ch, size, 0, nlev))
