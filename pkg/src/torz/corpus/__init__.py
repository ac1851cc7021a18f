"""The formal library, its manifest, the axiom audit and status reports."""
from .audit import axiom_audit
from .loader import LIB_FILES, lib_path, load_corpus, resolve
from .manifest import CorpusItem, default_manifest, files_for, jde_manifest, load_manifest
from .report import CorpusReport, ItemStatus, corpus_report, run_report

__all__ = [
    "LIB_FILES", "lib_path", "load_corpus", "resolve", "axiom_audit",
    "CorpusItem", "default_manifest", "jde_manifest", "load_manifest", "files_for",
    "CorpusReport", "ItemStatus", "corpus_report", "run_report",
]
