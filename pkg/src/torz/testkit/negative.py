"""The negative corpus: ill-formed or ill-typed files with their expected diagnostics."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List


@dataclass(frozen=True)
class NegativeCase:
    name: str
    path: Path
    code: str
    line: int
    col: int

    @property
    def exit_code(self) -> int:
        """The CLI's documented exit status for this case."""
        return 2 if self.code.startswith("parse/") else 1


def negative_dir() -> Path:
    return Path(str(resources.files("torz.testkit") / "negative"))


def negative_cases() -> List[NegativeCase]:
    out = []
    for ht in sorted(negative_dir().glob("*.ht")):
        exp = json.loads(ht.with_suffix(".json").read_text(encoding="utf-8"))
        out.append(NegativeCase(ht.stem, ht, exp["code"], int(exp["line"]), int(exp["col"])))
    return out
