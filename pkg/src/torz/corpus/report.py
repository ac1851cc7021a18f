"""Per-item corpus status: checked, failed or missing, with audit bounds."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .._stack import run_deep
from ..checker import Environment
from ..diagnostics import Diagnostic, KernelError
from .audit import axiom_audit
from .loader import load_corpus
from .manifest import CorpusItem


@dataclass
class ItemStatus:
    name: str
    tier: int
    status: str  # checked | failed | missing
    axioms: List[str]
    ms: float
    expected_axioms: List[str]

    @property
    def flagged(self) -> bool:
        """The audit exceeds the declared upper bound."""
        return not set(self.axioms) <= set(self.expected_axioms)

    def to_dict(self) -> dict:
        return {"name": self.name, "tier": self.tier, "status": self.status,
                "axioms": self.axioms, "ms": self.ms,
                "expected_axioms": self.expected_axioms, "flagged": self.flagged}


@dataclass
class CorpusReport:
    mode: str
    items: List[ItemStatus]
    diagnostics: List[Diagnostic] = field(default_factory=list)
    timed_out: bool = False
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(i.status == "checked" and not i.flagged for i in self.items)

    def to_dict(self) -> dict:
        return {"items": [i.to_dict() for i in self.items]}

    def counts(self) -> Dict[str, int]:
        out = {"checked": 0, "failed": 0, "missing": 0}
        for i in self.items:
            out[i.status] += 1
        return out

    def to_text(self) -> str:
        """Human-readable table; timings are left out so reruns compare equal."""
        lines = []
        for i in self.items:
            ax = ",".join(i.axioms) if i.status == "checked" else "-"
            flag = "  EXCEEDS " + ",".join(i.expected_axioms or ["none"]) if i.flagged else ""
            lines.append(f"tier {i.tier}  {i.status:<8} {i.name:<24} axioms: {ax or 'none'}{flag}")
        c = self.counts()
        lines.append(f"{c['checked']} checked, {c['failed']} failed, {c['missing']} missing "
                     f"({self.mode} mode)")
        return "\n".join(lines) + "\n"


def _stem(path) -> str:
    return Path(str(path)).stem


def corpus_report(env: Environment, manifest: Sequence[CorpusItem],
                  timings: Optional[Dict[str, float]] = None,
                  failed_file: Optional[str] = None) -> CorpusReport:
    """Status of every manifest item against an already-loaded environment.

    Items not in ``env`` are "failed" when their file is ``failed_file`` (the
    file where loading stopped) and "missing" otherwise.
    """
    timings = timings or {}
    declared = set(env.order)
    failed_stem = _stem(failed_file) if failed_file else None
    rows = []
    for it in manifest:
        if it.name in declared:
            status = "checked"
            axioms = sorted(axiom_audit(env, it.name))
        else:
            status = "failed" if it.file == failed_stem else "missing"
            axioms = []
        rows.append(ItemStatus(it.name, it.tier, status, axioms,
                               round(timings.get(it.name, 0.0) * 1000.0, 3),
                               sorted(it.expected_axioms)))
    return CorpusReport(env.mode, rows)


def run_report(manifest: Sequence[CorpusItem], files: Sequence, mode: str = "jne",
               deadline: Optional[float] = None) -> CorpusReport:
    """Load ``files`` (stopping at the first error) and report on ``manifest``."""
    timings: Dict[str, float] = {}
    state = {"env": Environment(mode)}

    def on_decl(fname, decl, seconds):
        timings[decl.name] = seconds

    def load():
        # keep the partial environment so a failure still reports what did check
        for f in files:
            state["env"] = load_corpus(state["env"], [f], on_decl, deadline)

    diagnostics: List[Diagnostic] = []
    failed_file = None
    timed_out = False
    t0 = time.perf_counter()
    try:
        run_deep(load)
    except KernelError as exc:
        diagnostics = exc.diagnostics
        failed_file = diagnostics[0].file
    except TimeoutError:
        timed_out = True
    rep = corpus_report(state["env"], manifest, timings, failed_file)
    rep.diagnostics = diagnostics
    rep.timed_out = timed_out
    rep.seconds = time.perf_counter() - t0
    return rep
