import re

import pytest

from torz._stack import run_deep
from torz.checker import Environment
from torz.corpus import LIB_FILES, load_corpus
from torz.syntax import parse_term

JNE_FILES = [f for f in LIB_FILES if f != "jde_extras"]


def deep(fn, *args, **kwargs):
    """Run kernel work on the big-stack thread the CLI also uses."""
    return run_deep(fn, *args, **kwargs)


def term(env, src, scope=(), level_names=()):
    return parse_term(src, scope=scope, known=env.known_arities(), level_names=level_names)


@pytest.fixture(scope="session")
def env_jne():
    return deep(load_corpus, Environment("jne"), JNE_FILES)


@pytest.fixture(scope="session")
def env_jde():
    return deep(load_corpus, Environment("jde"), list(LIB_FILES))


@pytest.fixture(scope="session")
def env_int():
    return deep(load_corpus, Environment("jne"), ["prelude", "int"])


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and rep.when in ("call", "setup"):
                n = int(m.group(1))
                if outcome != "passed" or n not in rows:
                    rows[n] = "PASS" if outcome == "passed" else "FAIL"
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(rows):
        terminalreporter.write_line(f"criterion {n}: {rows[n]}")
