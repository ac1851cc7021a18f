"""Loading kernel-language files into an environment."""
from __future__ import annotations

import time
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..checker import Environment, check_declaration
from ..diagnostics import KernelError, TypeCheckError
from ..syntax.parse import parse_file, scan_declared_names, tokenize

LIB_FILES = ("prelude", "pathover", "trunc", "int", "torsor", "circle_rec", "circle_ind", "jde_extras")


def lib_path(stem: str) -> Path:
    """Path of a bundled corpus file, by stem (``prelude``) or file name."""
    name = stem if stem.endswith(".ht") else stem + ".ht"
    return Path(str(resources.files("torz.corpus") / "lib" / name))


def resolve(path_or_stem) -> Path:
    p = Path(path_or_stem)
    if p.exists():
        return p
    lp = lib_path(str(path_or_stem))
    if lp.exists():
        return lp
    return p


def parse_files(files: Sequence[Path], env: Environment):
    """Parse every file, letting each see the names declared in all of them."""
    sources = []
    known = env.known_arities()
    for f in files:
        text = Path(f).read_text(encoding="utf-8")
        sources.append((str(f), text))
        try:
            known.update(scan_declared_names(tokenize(text, str(f))))
        except KernelError:
            pass  # reported properly by parse_file below
    out = []
    for name, text in sources:
        out.append((name, parse_file(text, name, known)))
    return out


def load_corpus(env: Environment, files: Iterable, on_decl: Optional[Callable] = None,
                deadline: Optional[float] = None) -> Environment:
    """Check every declaration of ``files`` in order; stop at the first failure.

    ``on_decl(file, decl, seconds)`` is called after each successful check.
    Raises :class:`KernelError` (parse or type error) or :class:`TimeoutError`.
    """
    paths = [resolve(f) for f in files]
    for fname, decls in parse_files(paths, env):
        for d in decls:
            if deadline is not None and time.monotonic() > deadline:
                raise TimeoutError(f"timeout before {d.name}")
            t0 = time.perf_counter()
            env = check_declaration(env, d)
            if on_decl is not None:
                on_decl(fname, d, time.perf_counter() - t0)
    return env
