"""Environments: immutable snapshots of checked declarations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from ..syntax.parse import parse_term
from ..syntax.terms import Declaration, globals_of
from .primitives import PRIMITIVE_ARITY, TRUNC_MODES, iota_rules, primitive_sources


@dataclass(eq=False)
class Entry:
    name: str
    level_params: tuple
    kind: str  # "def" | "axiom" | "primitive"
    type: object
    body: object = None
    role: Optional[str] = None  # primitives: type | ctor | elim | axiom
    decl: Optional[Declaration] = None
    deps: frozenset = frozenset()
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def is_axiom_like(self) -> bool:
        return self.kind == "axiom" or self.role == "axiom"


def _build_primitives() -> Dict[str, Entry]:
    out: Dict[str, Entry] = {}
    for name, lv, src, role in primitive_sources():
        ty = parse_term(src, level_names=lv, known=PRIMITIVE_ARITY)
        out[name] = Entry(name, lv, "primitive", ty, None, role, None, frozenset(globals_of(ty)))
    return out


_PRIMS = _build_primitives()


class Environment:
    """Ordered, append-only map of declarations plus the truncation mode."""

    __slots__ = ("entries", "order", "mode", "rules")

    def __init__(self, mode: str = "jne", entries: Optional[Dict[str, Entry]] = None,
                 order: Tuple[str, ...] = ()):
        if mode not in TRUNC_MODES:
            raise ValueError(f"trunc mode must be one of {TRUNC_MODES}, got {mode!r}")
        self.mode = mode
        self.entries = dict(_PRIMS) if entries is None else entries
        self.order = order
        self.rules = iota_rules(mode)

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def __getitem__(self, name: str) -> Entry:
        return self.entries[name]

    def get(self, name: str) -> Optional[Entry]:
        return self.entries.get(name)

    def __len__(self) -> int:
        return len(self.order)

    def declarations(self) -> Iterator[Entry]:
        for n in self.order:
            yield self.entries[n]

    def known_arities(self) -> Dict[str, int]:
        return {n: len(e.level_params) for n, e in self.entries.items()}

    def _extend(self, entry: Entry) -> "Environment":
        entries = dict(self.entries)
        entries[entry.name] = entry
        return Environment(self.mode, entries, self.order + (entry.name,))

    def with_mode(self, mode: str) -> "Environment":
        """Same declarations under another truncation mode (caches are per mode)."""
        return Environment(mode, self.entries, self.order)


def entry_for(decl: Declaration) -> Entry:
    deps = globals_of(decl.type)
    if decl.body is not None:
        deps |= globals_of(decl.body)
    return Entry(decl.name, decl.level_params, decl.kind, decl.type, decl.body,
                 None, decl, frozenset(deps))
