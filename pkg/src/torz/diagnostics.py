"""Structured diagnostics shared by the parser, the kernel and the CLI."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

FIELDS = ("file", "line", "col", "definition", "code", "severity", "message")


@dataclass(frozen=True)
class Diagnostic:
    file: Optional[str]
    line: int
    col: int
    definition: Optional[str]
    code: str
    message: str
    severity: str = "error"

    def to_json(self) -> str:
        d = asdict(self)
        return json.dumps({k: d[k] for k in FIELDS}, ensure_ascii=False)

    def __str__(self) -> str:
        where = f"{self.file or '<input>'}:{self.line}:{self.col}"
        who = f" [{self.definition}]" if self.definition else ""
        return f"{where}:{who} {self.severity} {self.code}: {self.message}"


class KernelError(Exception):
    """Base class; carries one or more diagnostics."""

    def __init__(self, diagnostics):
        if isinstance(diagnostics, Diagnostic):
            diagnostics = [diagnostics]
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))

    @property
    def diagnostic(self) -> Diagnostic:
        return self.diagnostics[0]

    @property
    def code(self) -> str:
        return self.diagnostics[0].code


class ParseError(KernelError):
    pass


class TypeCheckError(KernelError):
    pass


def emit_json(diagnostics: Iterable[Diagnostic]) -> str:
    """One JSON object per line; empty input gives empty output."""
    return "".join(d.to_json() + "\n" for d in diagnostics)
