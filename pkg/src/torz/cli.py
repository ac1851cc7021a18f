"""Command-line driver: check files, normalize or audit a definition, report on the corpus."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from ._stack import run_deep
from .checker import Environment, normalize
from .corpus import LIB_FILES, axiom_audit, load_corpus, load_manifest, resolve, run_report
from .diagnostics import Diagnostic, KernelError, ParseError, emit_json
from .syntax import print_term

EXIT_OK, EXIT_TYPE, EXIT_PARSE, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3, 4
COMMANDS = ("check", "normalize", "audit", "report")


@dataclass
class RunConfig:
    command: str
    files: List[str] = field(default_factory=list)
    name: Optional[str] = None  # normalize/audit target
    manifest: Optional[str] = None  # report
    trunc_mode: str = "jne"
    output: str = "text"
    timeout: float = 300.0

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command in ("check", "report") and not self.files:
            raise UsageError(f"{self.command} needs at least one file")
        if self.command in ("normalize", "audit") and not self.name:
            raise UsageError(f"{self.command} needs a definition name")
        if self.command == "report" and not self.manifest:
            raise UsageError("report needs a manifest")
        if self.trunc_mode not in ("jne", "jde"):
            raise UsageError(f"--trunc-mode must be jne or jde, not {self.trunc_mode!r}")
        if self.timeout <= 0:
            raise UsageError("--timeout must be positive")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--trunc-mode", choices=("jne", "jde"), default="jne",
                        help="whether only truncRec (jne) or also truncInd (jde) computes on tr")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timeout", type=float, default=300.0, help="wall-clock limit in seconds")

    p = _Parser(prog="torz", description="Check and inspect kernel-language files.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    c = sub.add_parser("check", parents=[common], help="typecheck files in order")
    c.add_argument("files", nargs="*")
    n = sub.add_parser("normalize", parents=[common], help="print the normal form of a definition's body")
    n.add_argument("name")
    n.add_argument("files", nargs="*")
    a = sub.add_parser("audit", parents=[common], help="list the axioms a declaration depends on")
    a.add_argument("name")
    a.add_argument("files", nargs="*")
    r = sub.add_parser("report", parents=[common], help="status of every manifest item")
    r.add_argument("manifest", help="manifest JSON path, or 'default' / 'jde' for the bundled ones")
    r.add_argument("files", nargs="*")
    return p


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    if ns.command is None:
        raise UsageError("no command given; expected one of " + ", ".join(COMMANDS))
    cfg = RunConfig(command=ns.command, files=list(ns.files), name=getattr(ns, "name", None),
                    manifest=getattr(ns, "manifest", None), trunc_mode=ns.trunc_mode,
                    output="json" if ns.json else "text", timeout=ns.timeout)
    cfg.validate()
    return cfg


def default_files(mode: str) -> List[str]:
    return [f for f in LIB_FILES if mode == "jde" or f != "jde_extras"]


class Runner:
    def __init__(self, cfg: RunConfig, out: TextIO, err: TextIO):
        self.cfg = cfg
        self.out = out
        self.err = err
        self.deadline = time.monotonic() + cfg.timeout

    @property
    def json(self) -> bool:
        return self.cfg.output == "json"

    def diagnose(self, diags: Sequence[Diagnostic]) -> None:
        if self.json:
            self.out.write(emit_json(diags))
        else:
            for d in diags:
                self.err.write(str(d) + "\n")

    def paths(self, files) -> List[Path]:
        out = []
        for f in files:
            p = resolve(f)
            if not p.is_file():
                raise UsageError(f"cannot read {f!r}")
            out.append(p)
        return out

    def remaining(self) -> float:
        return max(self.deadline - time.monotonic(), 0.001)

    def load(self, files, on_decl=None) -> Environment:
        env = Environment(self.cfg.trunc_mode)
        return run_deep(load_corpus, env, self.paths(files), on_decl, self.deadline,
                        timeout=self.remaining())

    def run(self) -> int:
        try:
            return getattr(self, "cmd_" + self.cfg.command)()
        except UsageError as exc:
            self.diagnose([Diagnostic(None, 0, 0, None, "cli/usage", str(exc))])
            return EXIT_USAGE
        except TimeoutError as exc:
            self.diagnose([Diagnostic(None, 0, 0, None, "cli/timeout",
                                      f"stopped after {self.cfg.timeout:g} s: {exc}")])
            return EXIT_TIMEOUT
        except KernelError as exc:
            self.diagnose(exc.diagnostics)
            return EXIT_PARSE if isinstance(exc, ParseError) else EXIT_TYPE

    def cmd_check(self) -> int:
        counts = {"def": 0, "axiom": 0}

        def on_decl(fname, decl, seconds):
            counts[decl.kind] += 1
            if not self.json:
                self.out.write(f"OK   {decl.name}\n")

        try:
            self.load(self.cfg.files, on_decl)
        except KernelError as exc:
            if not self.json:
                self.out.write(f"FAIL {exc.diagnostic.definition or exc.diagnostic.file}\n")
            raise
        if not self.json:
            total = counts["def"] + counts["axiom"]
            self.out.write(f"{total} declarations OK ({counts['def']} definitions, "
                           f"{counts['axiom']} axioms; {self.cfg.trunc_mode} mode)\n")
        return EXIT_OK

    def _lookup(self):
        env = self.load(self.cfg.files or default_files(self.cfg.trunc_mode))
        entry = env.get(self.cfg.name)
        if entry is None or entry.decl is None:
            raise UsageError(f"no declaration named {self.cfg.name!r} in the loaded files")
        return env, entry

    def cmd_normalize(self) -> int:
        env, entry = self._lookup()
        if entry.body is None:
            raise UsageError(f"{entry.name!r} is an axiom and has no body")
        nf = run_deep(normalize, env, (), entry.body, timeout=self.remaining())
        text = print_term(nf, level_names=entry.level_params)
        if self.json:
            self.out.write(json.dumps({"name": entry.name, "normal_form": text}) + "\n")
        else:
            self.out.write(text + "\n")
        return EXIT_OK

    def cmd_audit(self) -> int:
        env, entry = self._lookup()
        axioms = sorted(axiom_audit(env, entry.name))
        if self.json:
            self.out.write(json.dumps({"axioms": axioms}) + "\n")
        else:
            self.out.write((" ".join(axioms) if axioms else "(no axioms)") + "\n")
        return EXIT_OK

    def cmd_report(self) -> int:
        try:
            manifest = load_manifest(self.cfg.manifest)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"bad manifest {self.cfg.manifest!r}: {exc}") from None
        rep = run_report(manifest, self.paths(self.cfg.files), self.cfg.trunc_mode, self.deadline)
        if self.json:
            self.out.write(json.dumps(rep.to_dict()) + "\n")
        else:
            self.out.write(rep.to_text())
        if rep.diagnostics:
            self.err.write("".join(str(d) + "\n" for d in rep.diagnostics))
        if rep.timed_out:
            raise TimeoutError("report loading")
        if rep.diagnostics and rep.diagnostics[0].code.startswith("parse/"):
            return EXIT_PARSE
        bad = any(i.status == "failed" or i.flagged for i in rep.items)
        return EXIT_TYPE if bad or rep.diagnostics else EXIT_OK


def run(cfg: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    return Runner(cfg, out or sys.stdout, err or sys.stderr).run()


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    if list(argv) in (["-h"], ["--help"]):
        build_parser().print_help(out)
        return EXIT_OK
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        probe = RunConfig("check", output="json" if "--json" in argv else "text")
        Runner(probe, out, err).diagnose([Diagnostic(None, 0, 0, None, "cli/usage", str(exc))])
        return EXIT_USAGE
    return run(cfg, out, err)


if __name__ == "__main__":
    sys.exit(main())
