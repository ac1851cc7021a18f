"""Printing terms back to concrete syntax (re-parseable)."""
from __future__ import annotations

from typing import List, Sequence

from .levels import show_level
from .parse import KEYWORDS
from .terms import (
    App, Declaration, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Var,
    free_in, globals_of,
)

_TERM, _PROD, _APP, _ATOM = 0, 1, 2, 3


def _fresh(hint: str, taken) -> str:
    base = hint if hint and hint != "_" else "x"
    base = base.rstrip("0123456789") or base
    if base in KEYWORDS or base == "max":
        base = base + "_"
    if hint and hint != "_" and hint not in taken and hint not in KEYWORDS:
        return hint
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


class _Printer:
    def __init__(self, level_names: Sequence[str], avoid):
        self.level_names = tuple(level_names)
        self.avoid = set(avoid)

    def binder(self, hint, body, names):
        if not free_in(body, 0) and (hint == "_" or not hint):
            return "_"
        taken = set(n for n in names if n) | self.avoid
        return _fresh(hint, taken)

    def go(self, t, names: List[str], prec: int) -> str:
        if isinstance(t, Var):
            if t.index < len(names):
                return names[len(names) - 1 - t.index]
            return f"#{t.index}"
        if isinstance(t, Sort):
            s = "Type " + show_level(t.level, self.level_names)
            return s if prec <= _APP else f"({s})"
        if isinstance(t, Global):
            if t.levels:
                return t.name + " {" + " ".join(show_level(l, self.level_names) for l in t.levels) + "}"
            return t.name
        if isinstance(t, Pair):
            return f"<{self.go(t.fst, names, _TERM)}, {self.go(t.snd, names, _TERM)}>"
        if isinstance(t, (Fst, Snd)):
            kw = "fst" if isinstance(t, Fst) else "snd"
            s = f"{kw} {self.go(t.arg, names, _ATOM)}"
            return s if prec <= _APP else f"({s})"
        if isinstance(t, App):
            s = f"{self.go(t.fn, names, _APP)} {self.go(t.arg, names, _ATOM)}"
            return s if prec <= _APP else f"({s})"
        if isinstance(t, Lam):
            parts = []
            while isinstance(t, Lam):
                n = self.binder(t.name, t.body, names)
                parts.append(f"({n} : {self.go(t.ann, names, _TERM)})")
                names = names + [n]
                t = t.body
            s = "fun " + " ".join(parts) + " => " + self.go(t, names, _TERM)
            return s if prec <= _TERM else f"({s})"
        if isinstance(t, Pi):
            if not free_in(t.cod, 0):
                s = f"{self.go(t.dom, names, _PROD)} -> {self.go(t.cod, names + [None], _TERM)}"
            else:
                n = self.binder(t.name, t.cod, names)
                s = f"({n} : {self.go(t.dom, names, _TERM)}) -> {self.go(t.cod, names + [n], _TERM)}"
            return s if prec <= _TERM else f"({s})"
        if isinstance(t, Sigma):
            if not free_in(t.snd, 0):
                s = f"{self.go(t.fst, names, _APP)} * {self.go(t.snd, names + [None], _PROD)}"
                return s if prec <= _PROD else f"({s})"
            n = self.binder(t.name, t.snd, names)
            s = f"({n} : {self.go(t.fst, names, _TERM)}) * {self.go(t.snd, names + [n], _TERM)}"
            return s if prec <= _TERM else f"({s})"
        raise TypeError(f"not a term: {t!r}")


def print_term(t, names: Sequence[str] = (), level_names: Sequence[str] = ()) -> str:
    """Render ``t`` in a context whose bound names are ``names`` (outermost first)."""
    p = _Printer(level_names, globals_of(t) | set(names))
    return p.go(t, list(names), _TERM)


def print_decl(d: Declaration) -> str:
    lv = " {" + " ".join(d.level_params) + "}" if d.level_params else ""
    head = f"{'def' if d.kind == 'def' else 'axiom'} {d.name}{lv} : {print_term(d.type, (), d.level_params)}"
    if d.body is not None:
        head += f" :=\n  {print_term(d.body, (), d.level_params)}"
    return head
