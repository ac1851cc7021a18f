"""Semantic values for normalization by evaluation.

Definitions evaluate to *glued* values: the unfolded meaning is computed on
demand, so conversion can first compare two applications of the same
constant by their arguments before unfolding either one.
"""
from __future__ import annotations

from typing import Callable, Optional

APP, FST, SND = 0, 1, 2


class Value:
    __slots__ = ()


class VSort(Value):
    __slots__ = ("level",)

    def __init__(self, level):
        self.level = level


class Closure:
    __slots__ = ("env", "term")

    def __init__(self, env: tuple, term):
        self.env = env
        self.term = term


class VPi(Value):
    __slots__ = ("name", "dom", "cod")

    def __init__(self, name, dom, cod: Closure):
        self.name, self.dom, self.cod = name, dom, cod


class VSigma(Value):
    __slots__ = ("name", "dom", "cod")

    def __init__(self, name, dom, cod: Closure):
        self.name, self.dom, self.cod = name, dom, cod


class VLam(Value):
    __slots__ = ("name", "ann", "body")

    def __init__(self, name, ann, body: Closure):
        self.name, self.ann, self.body = name, ann, body


class VPair(Value):
    __slots__ = ("fst", "snd")

    def __init__(self, fst, snd):
        self.fst, self.snd = fst, snd


class HVar:
    __slots__ = ("level",)

    def __init__(self, level: int):
        self.level = level


class HConst:
    """Head constant: a primitive, an axiom, or a stuck eliminator."""
    __slots__ = ("name", "levels")

    def __init__(self, name: str, levels: tuple):
        self.name, self.levels = name, levels


class VNeu(Value):
    """A head applied to a spine of frames ``(APP, v)``, ``(FST,)``, ``(SND,)``."""
    __slots__ = ("head", "spine")

    def __init__(self, head, spine: tuple = ()):
        self.head, self.spine = head, spine


class VGlued(Value):
    """An unexpanded definition with spine; ``force`` unfolds it lazily."""
    __slots__ = ("name", "levels", "spine", "_thunk", "_val")

    def __init__(self, name, levels, spine, thunk: Callable[[], Value]):
        self.name, self.levels, self.spine = name, levels, spine
        self._thunk = thunk
        self._val: Optional[Value] = None

    def unfold(self) -> Value:
        if self._val is None:
            self._val = self._thunk()
            self._thunk = None
        return self._val


def force(v: Value) -> Value:
    while isinstance(v, VGlued):
        v = v.unfold()
    return v


def vvar(level: int) -> VNeu:
    return VNeu(HVar(level))
