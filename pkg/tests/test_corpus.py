import shutil

import pytest

from conftest import JNE_FILES, deep, term
from torz.checker import Environment, check
from torz.corpus import (
    LIB_FILES, CorpusItem, axiom_audit, default_manifest, files_for, jde_manifest, lib_path,
    load_corpus, load_manifest, run_report,
)
from torz.diagnostics import KernelError

BIG = frozenset({"funext", "squash", "univalence"})


class TestLoading:
    def test_every_manifest_item_is_declared(self, env_jne):
        missing = [it.name for it in default_manifest() if it.name not in env_jne]
        assert missing == []

    def test_jde_extras_check_only_in_jde(self, env_jde):
        for it in jde_manifest():
            assert it.name in env_jde
        with pytest.raises(KernelError):
            deep(load_corpus, Environment("jne"), list(LIB_FILES))

    def test_order_matters(self):
        files = ["prelude", "circle_ind", "pathover", "trunc", "int", "torsor", "circle_rec"]
        with pytest.raises(KernelError) as e:
            deep(load_corpus, Environment("jne"), files)
        d = e.value.diagnostics[0]
        assert d.code == "type/unbound-global" and d.file.endswith("circle_ind.ht")

    def test_required_names(self, env_jne):
        for name in ("loop", "circle_recursion", "circle_induction", "two_plus_two", "funext",
                     "univalence", "squash", "Z_sym_recursion", "plusZ_zero_right"):
            assert name in env_jne, name

    def test_axioms_are_axioms(self, env_jne):
        for name in ("funext", "univalence"):
            assert env_jne[name].kind == "axiom"
        assert env_jne["squash"].is_axiom_like


class TestAudit:
    @pytest.mark.parametrize("name,want", [
        ("plusZ_zero_right", frozenset()),
        ("Z_sym_recursion", frozenset({"funext"})),
        ("funext", frozenset({"funext"})),
        ("circle_recursion", BIG),
        ("circle_induction", BIG),
    ])
    def test_examples(self, env_jne, name, want):
        assert axiom_audit(env_jne, name) == want

    def test_monotone_along_dependencies(self, env_jne):
        for name in env_jne.order:
            mine = axiom_audit(env_jne, name)
            for dep in env_jne[name].deps:
                assert axiom_audit(env_jne, dep) <= mine, (name, dep)

    def test_unknown(self, env_jne):
        with pytest.raises(KernelError) as e:
            axiom_audit(env_jne, "no_such_thing")
        assert e.value.code == "audit/unknown-name"


class TestManifest:
    def test_bundled(self):
        items = default_manifest()
        assert {it.tier for it in items} == {1, 2, 3, 4}
        assert files_for(items) == JNE_FILES
        assert "jde_extras" in files_for(jde_manifest())

    def test_validation(self):
        with pytest.raises(ValueError):
            CorpusItem("x", "prelude", 5, "", frozenset())
        with pytest.raises(ValueError):
            CorpusItem("x", "prelude", 1, "", frozenset({"choice"}))

    def test_tiers_follow_file_order(self, tmp_path):
        bad = tmp_path / "m.json"
        bad.write_text('{"items": [{"name": "a", "file": "prelude", "tier": 2},'
                       ' {"name": "b", "file": "int", "tier": 1}]}')
        with pytest.raises(ValueError):
            load_manifest(str(bad))


class TestReport:
    def test_full_run(self):
        rep = run_report(default_manifest(), JNE_FILES)
        assert rep.ok and not rep.diagnostics
        assert rep.counts()["checked"] == len(rep.items)
        row = next(i for i in rep.items if i.name == "circle_recursion")
        assert row.axioms == sorted(BIG) and not row.flagged

    def test_partial_files_leave_items_missing(self):
        m = default_manifest()
        rep = run_report(m, files_for(m, 2))
        tiers = {i.tier: i.status for i in rep.items}
        assert tiers[1] == "checked" and tiers[4] == "missing"

    def test_tampered_file(self, tmp_path):
        for stem in JNE_FILES:
            shutil.copy(lib_path(stem), tmp_path / f"{stem}.ht")
        po = tmp_path / "pathover.ht"
        po.write_text("def broken_first : Nat := zZero\n" + po.read_text())
        rep = run_report(default_manifest(), [tmp_path / f"{s}.ht" for s in JNE_FILES])
        status = {i.name: i.status for i in rep.items}
        assert status["ap"] == "checked"
        assert status["PathOver"] == "failed"
        assert status["circle_recursion"] == "missing"
        assert rep.diagnostics[0].code == "type/mismatch"
        assert not rep.ok

    def test_bound_exceeded_is_flagged(self):
        m = [CorpusItem("Z_sym_recursion", "int", 2, "", frozenset())]
        rep = run_report(m, ["prelude", "pathover", "trunc", "int"])
        [row] = rep.items
        assert row.status == "checked" and row.flagged and not rep.ok
        assert "EXCEEDS" in rep.to_text()

    def test_json_shape(self):
        m = default_manifest()[:3]
        d = run_report(m, ["prelude"]).to_dict()
        assert set(d) == {"items"}
        assert set(d["items"][0]) == {"name", "tier", "status", "axioms", "ms",
                                      "expected_axioms", "flagged"}


def test_two_plus_two_and_a_restated_statement(env_jne):
    t = term(env_jne, "Id {0} Z two_plus_two (zPos (succN (succN (succN zeroN))))")
    deep(check, env_jne, [], term(env_jne, "refl {0} Z (plusZ two two)"), t)
