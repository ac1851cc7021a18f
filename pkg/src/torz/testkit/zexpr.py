"""Integer expressions with a big-integer reference semantics and a kernel encoding."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from ..syntax.terms import App, Global, Term

LITERAL_BOUND = 10 ** 6


@dataclass(frozen=True)
class Lit:
    value: int

    def __post_init__(self):
        if abs(self.value) > LITERAL_BOUND:
            raise ValueError(f"literal {self.value} exceeds {LITERAL_BOUND}")


@dataclass(frozen=True)
class Succ:
    arg: "ZExpr"


@dataclass(frozen=True)
class Pred:
    arg: "ZExpr"


@dataclass(frozen=True)
class Neg:
    arg: "ZExpr"


@dataclass(frozen=True)
class Plus:
    left: "ZExpr"
    right: "ZExpr"


@dataclass(frozen=True)
class Minus:
    left: "ZExpr"
    right: "ZExpr"


ZExpr = Union[Lit, Succ, Pred, Neg, Plus, Minus]
UNARY = (Succ, Pred, Neg)
BINARY = (Plus, Minus)


def z_oracle_eval(e: ZExpr) -> int:
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Succ):
        return z_oracle_eval(e.arg) + 1
    if isinstance(e, Pred):
        return z_oracle_eval(e.arg) - 1
    if isinstance(e, Neg):
        return -z_oracle_eval(e.arg)
    if isinstance(e, Plus):
        return z_oracle_eval(e.left) + z_oracle_eval(e.right)
    if isinstance(e, Minus):
        return z_oracle_eval(e.left) - z_oracle_eval(e.right)
    raise TypeError(f"not a ZExpr: {e!r}")


def size(e: ZExpr) -> int:
    """Number of operation nodes."""
    if isinstance(e, Lit):
        return 0
    if isinstance(e, UNARY):
        return 1 + size(e.arg)
    return 1 + size(e.left) + size(e.right)


# -- kernel encoding ----------------------------------------------------

_OPS = {Succ: "succZ", Pred: "predZ", Neg: "negZ", Plus: "plusZ", Minus: "minusZ"}


def nat_term(n: int) -> Term:
    t: Term = Global("zeroN")
    for _ in range(n):
        t = App(Global("succN"), t)
    return t


def int_term(n: int) -> Term:
    """Canonical numeral: zPos k is k+1 and zNeg k is -(k+1)."""
    if n == 0:
        return Global("zZero")
    if n > 0:
        return App(Global("zPos"), nat_term(n - 1))
    return App(Global("zNeg"), nat_term(-n - 1))


def encode(e: ZExpr) -> Term:
    """Kernel term for ``e``, built from the library's integer operations."""
    if isinstance(e, Lit):
        return int_term(e.value)
    op = Global(_OPS[type(e)])
    if isinstance(e, UNARY):
        return App(op, encode(e.arg))
    return App(App(op, encode(e.left)), encode(e.right))


def decode_nat(t: Term) -> int:
    n = 0
    while isinstance(t, App) and t.fn == Global("succN"):
        n += 1
        t = t.arg
    if t != Global("zeroN"):
        raise ValueError(f"not a canonical natural number: {t!r}")
    return n


def decode_numeral(t: Term) -> int:
    """Inverse of :func:`int_term` on canonical forms; rejects anything else."""
    if t == Global("zZero"):
        return 0
    if isinstance(t, App) and t.fn == Global("zPos"):
        return decode_nat(t.arg) + 1
    if isinstance(t, App) and t.fn == Global("zNeg"):
        return -decode_nat(t.arg) - 1
    raise ValueError(f"not a canonical integer: {t!r}")


# -- generation ----------------------------------------------------------

def gen_z_expr(seed: int, size: int, lit_bound: int = 6) -> ZExpr:
    """A random expression with exactly ``size`` operation nodes, deterministic in ``seed``."""
    if not 0 <= size <= 200:
        raise ValueError("size must be in 0..200")
    rng = random.Random(seed)

    def go(n: int) -> ZExpr:
        if n == 0:
            return Lit(rng.randint(-lit_bound, lit_bound))
        if n == 1 or rng.random() < 0.5:
            return rng.choice(UNARY)(go(n - 1))
        k = rng.randint(0, n - 1)
        return rng.choice(BINARY)(go(k), go(n - 1 - k))

    return go(size)


def enumerate_z_exprs(max_size: int, literals: Sequence[int] = (-2, -1, 0, 1, 2)) -> Iterator[ZExpr]:
    """Every expression with at most ``max_size`` operations over ``literals``."""
    by_size = {0: [Lit(v) for v in literals]}
    for n in range(1, max_size + 1):
        out = [c(e) for c in UNARY for e in by_size[n - 1]]
        for k in range(n):
            for a, b in itertools.product(by_size[k], by_size[n - 1 - k]):
                out.extend(c(a, b) for c in BINARY)
        by_size[n] = out
    for n in range(max_size + 1):
        yield from by_size[n]


def z_sample(count: int, seed: int = 0, exhaustive_upto: int = 2, max_size: int = 8) -> Iterator[ZExpr]:
    """Small sizes exhaustively first, then seeded random expressions."""
    produced = 0
    for e in enumerate_z_exprs(exhaustive_upto):
        if produced == count:
            return
        yield e
        produced += 1
    rng = random.Random(seed)
    while produced < count:
        yield gen_z_expr(rng.randrange(2 ** 32), rng.randint(exhaustive_upto + 1, max_size))
        produced += 1
