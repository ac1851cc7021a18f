"""Universe level expressions.

A level is a numeral, a level variable (an index into the enclosing
declaration's level parameters), a successor, or a binary max.  Levels are
compared through a canonical normal form ``max(c, v1+k1, ..., vn+kn)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


@dataclass(frozen=True, slots=True)
class LNum:
    n: int


@dataclass(frozen=True, slots=True)
class LVar:
    index: int


@dataclass(frozen=True, slots=True)
class LSucc:
    arg: "Level"


@dataclass(frozen=True, slots=True)
class LMax:
    left: "Level"
    right: "Level"


Level = Union[LNum, LVar, LSucc, LMax]


def _collect(lv: Level, offset: int, const: list, vars_: dict) -> None:
    if isinstance(lv, LNum):
        const[0] = max(const[0], lv.n + offset)
    elif isinstance(lv, LVar):
        vars_[lv.index] = max(vars_.get(lv.index, -1), offset)
    elif isinstance(lv, LSucc):
        _collect(lv.arg, offset + 1, const, vars_)
    elif isinstance(lv, LMax):
        _collect(lv.left, offset, const, vars_)
        _collect(lv.right, offset, const, vars_)
    else:
        raise TypeError(f"not a level: {lv!r}")


def level_key(lv: Level) -> tuple:
    """Canonical key: (constant, ((var, offset), ...)), dominated parts dropped."""
    const = [0]
    vars_: dict = {}
    _collect(lv, 0, const, vars_)
    c = const[0]
    if vars_ and c <= max(vars_.values()):
        c = 0
    return c, tuple(sorted(vars_.items()))


def _from_key(key: tuple) -> Level:
    c, vs = key
    parts: list = []
    for idx, off in vs:
        t: Level = LVar(idx)
        for _ in range(off):
            t = LSucc(t)
        parts.append(t)
    if c or not parts:
        parts.insert(0, LNum(c))
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = LMax(p, out)
    return out


def normalize_level(lv: Level) -> Level:
    return _from_key(level_key(lv))


def level_eq(a: Level, b: Level) -> bool:
    return level_key(a) == level_key(b)


def lsucc(lv: Level) -> Level:
    return normalize_level(LSucc(lv))


def lmax(a: Level, b: Level) -> Level:
    return normalize_level(LMax(a, b))


def subst_level(lv: Level, args: Sequence[Level]) -> Level:
    """Replace level variable ``i`` by ``args[i]``."""
    if isinstance(lv, LVar):
        return args[lv.index]
    if isinstance(lv, LSucc):
        return LSucc(subst_level(lv.arg, args))
    if isinstance(lv, LMax):
        return LMax(subst_level(lv.left, args), subst_level(lv.right, args))
    return lv


def level_vars(lv: Level) -> set:
    return {i for i, _ in level_key(lv)[1]}


def show_level(lv: Level, names: Sequence[str] = (), atomic: bool = True) -> str:
    if isinstance(lv, LNum):
        return str(lv.n)
    if isinstance(lv, LVar):
        return names[lv.index] if lv.index < len(names) else f"u{lv.index}"
    if isinstance(lv, LSucc):
        return f"({show_level(lv.arg, names)} +1)"
    return f"(max {show_level(lv.left, names)} {show_level(lv.right, names)})"
