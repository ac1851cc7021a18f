import io
import json
import shutil
import subprocess
import sys

import pytest

from torz.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def bad_file(tmp_path):
    f = tmp_path / "bad.ht"
    f.write_text("def bad : Type 0 :=")
    return f


@pytest.fixture
def ill_typed(tmp_path):
    f = tmp_path / "ill.ht"
    f.write_text("def fine : Nat := zeroN\ndef wrong : Nat := zZero\n")
    return f


class TestCheck:
    def test_ok(self):
        code, out, _ = run("check", "prelude", "pathover")
        assert code == 0
        assert "OK   ap" in out and "declarations OK" in out

    def test_json_success_is_silent(self):
        code, out, _ = run("check", "prelude", "--json")
        assert (code, out) == (0, "")

    def test_parse_error(self, bad_file):
        code, out, _ = run("check", str(bad_file), "--json")
        assert code == 2
        d = json.loads(out.splitlines()[0])
        assert d["code"] == "parse/unexpected-eof" and d["line"] == 1 and d["col"] == 20
        assert d["file"].endswith("bad.ht")
        assert {"file", "line", "col", "definition", "code", "message"} <= set(d)

    def test_type_error(self, ill_typed):
        code, out, err = run("check", str(ill_typed))
        assert code == 1
        assert "OK   fine" in out and "FAIL wrong" in out
        assert "type/mismatch" in err and ":2:" in err

    def test_type_error_json(self, ill_typed):
        code, out, _ = run("check", str(ill_typed), "--json")
        assert code == 1
        d = json.loads(out.splitlines()[0])
        assert d["definition"] == "wrong" and d["code"] == "type/mismatch"

    def test_mode_matters(self):
        files = ["prelude", "pathover", "trunc", "int", "torsor", "circle_rec", "circle_ind", "jde_extras"]
        assert run("check", *files, "--json")[0] == 1
        assert run("check", *files, "--json", "--trunc-mode", "jde")[0] == 0


class TestUsage:
    @pytest.mark.parametrize("argv", [
        (), ("frobnicate",), ("check", "--trunc-mode", "xyz"), ("normalize",),
        ("check", "no/such/file.ht"), ("check", "--timeout", "0"),
    ])
    def test_exit_three(self, argv):
        assert run(*argv)[0] == 3

    def test_usage_json(self):
        code, out, _ = run("check", "--json", "--trunc-mode", "xyz")
        assert code == 3 and json.loads(out)["code"] == "cli/usage"

    def test_unknown_name(self):
        assert run("audit", "nonexistent", "prelude")[0] == 3

    def test_normalize_axiom(self):
        assert run("normalize", "funext", "prelude")[0] == 3


class TestNormalizeAudit:
    def test_two_plus_two(self):
        code, out, _ = run("normalize", "two_plus_two")
        assert code == 0 and out == "zPos (succN (succN (succN zeroN)))\n"

    def test_normalize_json(self):
        code, out, _ = run("normalize", "two_plus_two", "--json")
        assert json.loads(out) == {"name": "two_plus_two",
                                   "normal_form": "zPos (succN (succN (succN zeroN)))"}

    def test_audit(self):
        code, out, _ = run("audit", "circle_recursion", "--json")
        assert code == 0 and json.loads(out) == {"axioms": ["funext", "squash", "univalence"]}
        assert run("audit", "plusZ_zero_right")[1] == "(no axioms)\n"

    def test_timeout(self):
        code, out, _ = run("normalize", "circle_induction", "--timeout", "0.05", "--json")
        assert code == 4 and json.loads(out.splitlines()[0])["code"] == "cli/timeout"


class TestReport:
    def test_json_schema(self):
        files = ["prelude", "pathover", "trunc", "int", "torsor", "circle_rec", "circle_ind"]
        code, out, _ = run("report", "default", *files, "--json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["items"]) > 0
        for row in doc["items"]:
            assert row["status"] in ("checked", "failed", "missing")
            assert isinstance(row["axioms"], list) and isinstance(row["ms"], float)

    def test_deterministic_text(self):
        a = run("report", "default", "prelude", "pathover", "trunc", "int")
        b = run("report", "default", "prelude", "pathover", "trunc", "int")
        assert a == b
        assert "missing" in a[1]

    def test_bad_manifest(self, tmp_path):
        m = tmp_path / "m.json"
        m.write_text("{not json")
        assert run("report", str(m), "prelude")[0] == 3
        assert run("report", "default")[0] == 3

    def test_parse_failure(self, bad_file):
        assert run("report", "default", "prelude", str(bad_file))[0] == 2


@pytest.mark.skipif(shutil.which("torz") is None, reason="console script not installed")
def test_installed_entry_point():
    p = subprocess.run(["torz", "normalize", "two_plus_two"], capture_output=True, text=True, timeout=300)
    assert p.returncode == 0 and p.stdout.strip() == "zPos (succN (succN (succN zeroN)))"
    p = subprocess.run(["torz"], capture_output=True, text=True, timeout=60)
    assert p.returncode == 3


def test_module_entry():
    p = subprocess.run([sys.executable, "-m", "torz.cli", "audit", "plusZ_zero_right", "--json"],
                       capture_output=True, text=True, timeout=300)
    assert p.returncode == 0 and json.loads(p.stdout) == {"axioms": []}
