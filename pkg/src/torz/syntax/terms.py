"""Core term syntax with de Bruijn indices.

Name hints and source spans ride along on every node but take no part in
equality: ``==`` on terms is alpha-equality up to the literal shape of level
expressions; :func:`alpha_equal` also normalizes levels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .levels import Level, level_eq, subst_level


@dataclass(frozen=True, slots=True)
class Span:
    line: int
    col: int


def _span():
    return field(default=None, compare=False, repr=False)


def _hint():
    return field(default="_", compare=False)


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Sort:
    level: Level
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Global:
    name: str
    levels: tuple = ()
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Pi:
    name: str = field(compare=False)
    dom: "Term" = None
    cod: "Term" = None
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Lam:
    name: str = field(compare=False)
    ann: "Term" = None
    body: "Term" = None
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Sigma:
    name: str = field(compare=False)
    fst: "Term" = None
    snd: "Term" = None
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Pair:
    fst: "Term"
    snd: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Fst:
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True, slots=True)
class Snd:
    arg: "Term"
    span: Optional[Span] = _span()


Term = Union[Var, Sort, Global, Pi, Lam, App, Sigma, Pair, Fst, Snd]


@dataclass(frozen=True)
class Declaration:
    name: str
    level_params: tuple
    kind: str  # "def" | "axiom"
    type: Term
    body: Optional[Term] = None
    span: Optional[Span] = field(default=None, compare=False)
    file: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("def", "axiom"):
            raise ValueError(f"bad declaration kind {self.kind!r}")
        if (self.kind == "axiom") != (self.body is None):
            raise ValueError("axioms have no body; definitions need one")


def app(head: Term, *args: Term) -> Term:
    for a in args:
        head = App(head, a)
    return head


def unapply(t: Term) -> tuple:
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def shift(t: Term, d: int, cutoff: int = 0) -> Term:
    """Add ``d`` to every free index >= ``cutoff``."""
    if d == 0:
        return t
    return _shift(t, d, cutoff)


def _shift(t, d, c):
    if isinstance(t, Var):
        return Var(t.index + d, t.span) if t.index >= c else t
    if isinstance(t, (Sort, Global)):
        return t
    if isinstance(t, App):
        return App(_shift(t.fn, d, c), _shift(t.arg, d, c), t.span)
    if isinstance(t, Pi):
        return Pi(t.name, _shift(t.dom, d, c), _shift(t.cod, d, c + 1), t.span)
    if isinstance(t, Lam):
        return Lam(t.name, _shift(t.ann, d, c), _shift(t.body, d, c + 1), t.span)
    if isinstance(t, Sigma):
        return Sigma(t.name, _shift(t.fst, d, c), _shift(t.snd, d, c + 1), t.span)
    if isinstance(t, Pair):
        return Pair(_shift(t.fst, d, c), _shift(t.snd, d, c), t.span)
    if isinstance(t, Fst):
        return Fst(_shift(t.arg, d, c), t.span)
    if isinstance(t, Snd):
        return Snd(_shift(t.arg, d, c), t.span)
    raise TypeError(f"not a term: {t!r}")


def _subst(t, j, s):
    # replace Var j by s (s already valid at depth j), decrement indices above j
    if isinstance(t, Var):
        if t.index == j:
            return shift(s, j)
        if t.index > j:
            return Var(t.index - 1, t.span)
        return t
    if isinstance(t, (Sort, Global)):
        return t
    if isinstance(t, App):
        return App(_subst(t.fn, j, s), _subst(t.arg, j, s), t.span)
    if isinstance(t, Pi):
        return Pi(t.name, _subst(t.dom, j, s), _subst(t.cod, j + 1, s), t.span)
    if isinstance(t, Lam):
        return Lam(t.name, _subst(t.ann, j, s), _subst(t.body, j + 1, s), t.span)
    if isinstance(t, Sigma):
        return Sigma(t.name, _subst(t.fst, j, s), _subst(t.snd, j + 1, s), t.span)
    if isinstance(t, Pair):
        return Pair(_subst(t.fst, j, s), _subst(t.snd, j, s), t.span)
    if isinstance(t, Fst):
        return Fst(_subst(t.arg, j, s), t.span)
    if isinstance(t, Snd):
        return Snd(_subst(t.arg, j, s), t.span)
    raise TypeError(f"not a term: {t!r}")


def instantiate(body: Term, arg: Term) -> Term:
    """Substitute ``arg`` for index 0 of ``body`` (a term under one binder)."""
    return _subst(body, 0, arg)


def subst_levels(t: Term, args: Sequence[Level]) -> Term:
    """Instantiate level variables throughout ``t``."""
    if not args:
        return t
    if isinstance(t, Sort):
        return Sort(subst_level(t.level, args), t.span)
    if isinstance(t, Global):
        if not t.levels:
            return t
        return Global(t.name, tuple(subst_level(l, args) for l in t.levels), t.span)
    if isinstance(t, Var):
        return t
    if isinstance(t, App):
        return App(subst_levels(t.fn, args), subst_levels(t.arg, args), t.span)
    if isinstance(t, Pi):
        return Pi(t.name, subst_levels(t.dom, args), subst_levels(t.cod, args), t.span)
    if isinstance(t, Lam):
        return Lam(t.name, subst_levels(t.ann, args), subst_levels(t.body, args), t.span)
    if isinstance(t, Sigma):
        return Sigma(t.name, subst_levels(t.fst, args), subst_levels(t.snd, args), t.span)
    if isinstance(t, Pair):
        return Pair(subst_levels(t.fst, args), subst_levels(t.snd, args), t.span)
    if isinstance(t, Fst):
        return Fst(subst_levels(t.arg, args), t.span)
    if isinstance(t, Snd):
        return Snd(subst_levels(t.arg, args), t.span)
    raise TypeError(f"not a term: {t!r}")


def alpha_equal(t: Term, u: Term) -> bool:
    """Structural equality ignoring name hints and spans; levels normalized."""
    stack = [(t, u)]
    while stack:
        a, b = stack.pop()
        if type(a) is not type(b):
            return False
        if isinstance(a, Var):
            if a.index != b.index:
                return False
        elif isinstance(a, Sort):
            if not level_eq(a.level, b.level):
                return False
        elif isinstance(a, Global):
            if a.name != b.name or len(a.levels) != len(b.levels):
                return False
            if not all(level_eq(x, y) for x, y in zip(a.levels, b.levels)):
                return False
        elif isinstance(a, App):
            stack += [(a.fn, b.fn), (a.arg, b.arg)]
        elif isinstance(a, Pi):
            stack += [(a.dom, b.dom), (a.cod, b.cod)]
        elif isinstance(a, Lam):
            stack += [(a.ann, b.ann), (a.body, b.body)]
        elif isinstance(a, Sigma):
            stack += [(a.fst, b.fst), (a.snd, b.snd)]
        elif isinstance(a, Pair):
            stack += [(a.fst, b.fst), (a.snd, b.snd)]
        elif isinstance(a, (Fst, Snd)):
            stack.append((a.arg, b.arg))
        else:
            raise TypeError(f"not a term: {a!r}")
    return True


def free_in(t: Term, index: int) -> bool:
    """Does ``Var(index)`` (relative to t's top) occur free in ``t``?"""
    if isinstance(t, Var):
        return t.index == index
    if isinstance(t, (Sort, Global)):
        return False
    if isinstance(t, App):
        return free_in(t.fn, index) or free_in(t.arg, index)
    if isinstance(t, (Pi, Sigma)):
        a, b = (t.dom, t.cod) if isinstance(t, Pi) else (t.fst, t.snd)
        return free_in(a, index) or free_in(b, index + 1)
    if isinstance(t, Lam):
        return free_in(t.ann, index) or free_in(t.body, index + 1)
    if isinstance(t, Pair):
        return free_in(t.fst, index) or free_in(t.snd, index)
    return free_in(t.arg, index)


def globals_of(t: Term, acc: Optional[set] = None) -> set:
    acc = set() if acc is None else acc
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, Global):
            acc.add(x.name)
        elif isinstance(x, App):
            stack += [x.fn, x.arg]
        elif isinstance(x, Pi):
            stack += [x.dom, x.cod]
        elif isinstance(x, Lam):
            stack += [x.ann, x.body]
        elif isinstance(x, Sigma):
            stack += [x.fst, x.snd]
        elif isinstance(x, Pair):
            stack += [x.fst, x.snd]
        elif isinstance(x, (Fst, Snd)):
            stack.append(x.arg)
    return acc


def term_size(t: Term) -> int:
    n = 0
    stack = [t]
    while stack:
        x = stack.pop()
        n += 1
        if isinstance(x, App):
            stack += [x.fn, x.arg]
        elif isinstance(x, Pi):
            stack += [x.dom, x.cod]
        elif isinstance(x, Lam):
            stack += [x.ann, x.body]
        elif isinstance(x, Sigma):
            stack += [x.fst, x.snd]
        elif isinstance(x, Pair):
            stack += [x.fst, x.snd]
        elif isinstance(x, (Fst, Snd)):
            stack.append(x.arg)
    return n
