"""The corpus manifest: which items must exist, where, and what they may assume."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence

from .loader import LIB_FILES

AXIOM_NAMES = frozenset({"funext", "univalence", "squash"})


@dataclass(frozen=True)
class CorpusItem:
    name: str
    file: str
    tier: int
    anchor: str
    expected_axioms: FrozenSet[str]

    def __post_init__(self):
        if not 1 <= self.tier <= 4:
            raise ValueError(f"{self.name}: tier must be 1..4, got {self.tier}")
        extra = set(self.expected_axioms) - AXIOM_NAMES
        if extra:
            raise ValueError(f"{self.name}: unknown axioms {sorted(extra)}")


def parse_manifest(data: dict) -> List[CorpusItem]:
    items = []
    seen = set()
    for row in data["items"]:
        item = CorpusItem(row["name"], row["file"], int(row["tier"]), row.get("anchor", ""),
                          frozenset(row.get("expected_axioms", ())))
        if item.name in seen:
            raise ValueError(f"duplicate manifest item {item.name!r}")
        seen.add(item.name)
        items.append(item)
    _check_tier_order(items)
    return items


def _check_tier_order(items: Sequence[CorpusItem]) -> None:
    """Files may only be listed in nondecreasing tier order."""
    file_tier = {}
    for it in items:
        if file_tier.setdefault(it.file, it.tier) != it.tier:
            raise ValueError(f"file {it.file!r} appears with two tiers")
    order = [f for f in LIB_FILES if f in file_tier]
    tiers = [file_tier[f] for f in order]
    if tiers != sorted(tiers):
        raise ValueError("manifest tiers do not follow file dependency order")


def load_manifest(path: Optional[str] = None) -> List[CorpusItem]:
    """Read a manifest JSON file; ``None``/``"default"``/``"jde"`` pick the bundled ones."""
    if path in (None, "default"):
        text = (resources.files("torz.corpus") / "manifest.json").read_text(encoding="utf-8")
    elif path == "jde":
        text = (resources.files("torz.corpus") / "manifest_jde.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_manifest(json.loads(text))


def default_manifest() -> List[CorpusItem]:
    return load_manifest()


def jde_manifest() -> List[CorpusItem]:
    return load_manifest("jde")


def files_for(manifest: Sequence[CorpusItem], max_tier: int = 4) -> List[str]:
    """Library stems needed for the items up to ``max_tier``, in load order.

    Every file before the last one named is a prerequisite; ``jde_extras`` is
    only included when an item lives there.
    """
    wanted = {it.file for it in manifest if it.tier <= max_tier}
    if not wanted:
        return []
    last = max(LIB_FILES.index(f) for f in wanted)
    return [f for f in LIB_FILES[: last + 1] if f != "jde_extras" or f in wanted]
