"""The kernel-given constants and their iota rules.

Types are written in the kernel's own concrete syntax and parsed once.  Each
entry carries its level parameters; eliminators also record the number of
explicit arguments up to and including the major premise (always last).
"""
from __future__ import annotations

from collections import Counter

# name, level params, type source, role
_TABLE = [
    ("Id", "i", "(A : Type i) -> A -> A -> Type i", "type"),
    ("refl", "i", "(A : Type i) (a : A) -> Id {i} A a a", "ctor"),
    ("J", "i j",
     "(A : Type i) (a : A) (C : (y : A) -> Id {i} A a y -> Type j) -> C a (refl {i} A a)"
     " -> (y : A) (p : Id {i} A a y) -> C y p", "elim"),
    ("Nat", "", "Type 0", "type"),
    ("zeroN", "", "Nat", "ctor"),
    ("succN", "", "Nat -> Nat", "ctor"),
    ("natInd", "j",
     "(P : Nat -> Type j) -> P zeroN -> ((n : Nat) -> P n -> P (succN n)) -> (n : Nat) -> P n",
     "elim"),
    ("Z", "", "Type 0", "type"),
    ("zZero", "", "Z", "ctor"),
    ("zPos", "", "Nat -> Z", "ctor"),
    ("zNeg", "", "Nat -> Z", "ctor"),
    ("zInd", "j",
     "(P : Z -> Type j) -> P zZero -> ((n : Nat) -> P (zPos n)) -> ((n : Nat) -> P (zNeg n))"
     " -> (z : Z) -> P z", "elim"),
    ("Empty", "", "Type 0", "type"),
    ("emptyInd", "j", "(P : Empty -> Type j) (e : Empty) -> P e", "elim"),
    ("Unit", "", "Type 0", "type"),
    ("tt", "", "Unit", "ctor"),
    ("unitInd", "j", "(P : Unit -> Type j) -> P tt -> (u : Unit) -> P u", "elim"),
    ("Sum", "i j", "Type i -> Type j -> Type (max i j)", "type"),
    ("inl", "i j", "(A : Type i) (B : Type j) -> A -> Sum {i j} A B", "ctor"),
    ("inr", "i j", "(A : Type i) (B : Type j) -> B -> Sum {i j} A B", "ctor"),
    ("sumInd", "i j k",
     "(A : Type i) (B : Type j) (P : Sum {i j} A B -> Type k)"
     " -> ((a : A) -> P (inl {i j} A B a)) -> ((b : B) -> P (inr {i j} A B b))"
     " -> (s : Sum {i j} A B) -> P s", "elim"),
    ("Trunc", "i", "Type i -> Type i", "type"),
    ("tr", "i", "(A : Type i) -> A -> Trunc {i} A", "ctor"),
    ("squash", "i", "(A : Type i) (x y : Trunc {i} A) -> Id {i} (Trunc {i} A) x y", "axiom"),
    ("truncRec", "i j",
     "(A : Type i) (P : Type j) -> ((x y : P) -> Id {j} P x y) -> (A -> P) -> Trunc {i} A -> P",
     "elim"),
    ("truncInd", "i j",
     "(A : Type i) (B : Trunc {i} A -> Type j) -> ((z : Trunc {i} A) (x y : B z) -> Id {j} (B z) x y)"
     " -> ((a : A) -> B (tr {i} A a)) -> (z : Trunc {i} A) -> B z", "elim"),
]

PRIMITIVE_ARITY = {name: len(lv.split()) for name, lv, _, _ in _TABLE}
PRIMITIVE_ROLE = {name: role for name, _, _, role in _TABLE}

# explicit arguments up to and including the major premise
ELIM_ARITY = {"J": 6, "natInd": 4, "zInd": 5, "emptyInd": 2, "unitInd": 3,
              "sumInd": 6, "truncRec": 5, "truncInd": 5}

# constructors and how many parameter arguments precede their fields
CTOR_PARAMS = {"refl": 2, "zeroN": 0, "succN": 0, "zZero": 0, "zPos": 0, "zNeg": 0,
               "tt": 0, "inl": 2, "inr": 2, "tr": 1}
CTOR_ARGS = {"refl": 2, "zeroN": 0, "succN": 1, "zZero": 0, "zPos": 1, "zNeg": 1,
             "tt": 0, "inl": 3, "inr": 3, "tr": 2}

TRUNC_MODES = ("jne", "jde")

# instrumentation: how often each iota rule has fired (reset freely in tests)
FIRED: Counter = Counter()


def primitive_sources():
    return [(name, tuple(lv.split()), src, role) for name, lv, src, role in _TABLE]


def iota_rules(mode: str) -> dict:
    """Map eliminator -> (major constructor name -> builder).

    A builder receives the eliminator's explicit argument list (major last)
    and the constructor's argument list, plus ``app`` (a generic applicator)
    and returns the reduct.  The same table drives the term-level reducer
    and the evaluator, so the two cannot drift apart.
    """
    if mode not in TRUNC_MODES:
        raise ValueError(f"unknown truncation mode {mode!r}")
    rules = {
        # J A a C c y (refl A' a') ~> c
        "J": {"refl": lambda e, c, app: e[3]},
        # natInd P pz ps zeroN ~> pz ; natInd P pz ps (succN n) ~> ps n (natInd P pz ps n)
        "natInd": {
            "zeroN": lambda e, c, app: e[1],
            "succN": lambda e, c, app: app(e[2], c[0], app.elim("natInd", e[:3] + [c[0]])),
        },
        "zInd": {
            "zZero": lambda e, c, app: e[1],
            "zPos": lambda e, c, app: app(e[2], c[0]),
            "zNeg": lambda e, c, app: app(e[3], c[0]),
        },
        "unitInd": {"tt": lambda e, c, app: e[1]},
        "sumInd": {
            "inl": lambda e, c, app: app(e[3], c[2]),
            "inr": lambda e, c, app: app(e[4], c[2]),
        },
        "emptyInd": {},
        # truncRec A P h g (tr A' a) ~> g a, in both modes
        "truncRec": {"tr": lambda e, c, app: app(e[3], c[1])},
    }
    if mode == "jde":
        rules["truncInd"] = {"tr": lambda e, c, app: app(e[3], c[1])}
    else:
        rules["truncInd"] = {}
    return rules
