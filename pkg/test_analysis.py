#!/usr/bin/env python3
"""
Tests for the JSON loader, runtime settings, the corpus pipeline and the
command-line front end.
"""

import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from analysis.cli import main  # noqa: E402
from analysis.config import Settings  # noqa: E402
from analysis.loader import (dump_category, dump_presheaf, load_category, load_presheaf,  # noqa: E402
                             presheaf_from_json, resolve_presheaf, resolve_site)
from analysis.pipeline import CorpusEntry, CorpusPipeline, presheaf_entries, seed_corpus  # noqa: E402
from model.errors import AxiomViolation, MalformedInput  # noqa: E402
from model.fincat import category_to_dict  # noqa: E402
from model.presheaf import is_isomorphic, terminal_presheaf  # noqa: E402
from model.sites import build_chain2, build_delta, build_idempotent_monoid, collapsed_z, loop_y  # noqa: E402


class TestLoader:
    def test_category_round_trip(self, tmp_path):
        path = tmp_path / "chain.json"
        dump_category(build_chain2(), path)
        cat = load_category(path)
        assert cat.name == "chain2"
        assert cat.objects == ("0", "1")
        assert cat.n_morphisms == 3

    def test_unnamed_category_takes_file_stem(self, tmp_path):
        raw = category_to_dict(build_chain2())
        del raw["name"]
        path = tmp_path / "ordinal.json"
        path.write_text(json.dumps(raw))
        assert load_category(path).name == "ordinal"

    def test_schema_errors(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"objects": "a", "morphisms": [], "identities": {}}))
        with pytest.raises(MalformedInput, match="category at objects"):
            load_category(path)

    def test_missing_and_broken_files(self, tmp_path):
        with pytest.raises(MalformedInput, match="file not found"):
            load_category(tmp_path / "absent.json")
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(MalformedInput, match="not valid JSON"):
            load_category(path)

    def test_axiom_errors_pass_through(self, tmp_path):
        raw = category_to_dict(build_chain2())
        raw["morphisms"].append({"id": "1<0", "dom": "1", "cod": "0"})
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(AxiomViolation):
            load_category(path)

    def test_presheaf_round_trip(self, tmp_path):
        base = build_delta(2)
        Z = collapsed_z(base)
        path = tmp_path / "z.json"
        dump_presheaf(Z, path)
        again = load_presheaf(path)
        assert again.base.name == "delta:2"
        assert is_isomorphic(again, Z)

    def test_presheaf_with_inline_base(self):
        base = build_delta(1)
        raw = loop_y(base).to_dict()
        raw["base"] = category_to_dict(base)
        assert presheaf_from_json(raw).sizes() == (1, 2)

    def test_resolve(self, tmp_path):
        assert resolve_site("delta:2").n_morphisms == 31
        assert resolve_presheaf("loop_Y", "delta:1").sizes() == (1, 2)
        with pytest.raises(MalformedInput):
            resolve_presheaf("loop_Y")


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("TOPOS_WORKERS", "TOPOS_LOG_LEVEL", "TOPOS_DELTA_MAX", "TOPOS_FINSET_MAX"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings.from_env()
        assert settings.workers == 4
        assert settings.log_level == "WARNING"
        assert settings.size_limit("finset") == 4
        assert settings.size_limit("delta") == 6

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("TOPOS_WORKERS", "8")
        monkeypatch.setenv("TOPOS_LOG_LEVEL", "debug")
        monkeypatch.setenv("TOPOS_DELTA_MAX", "3")
        settings = Settings.from_env()
        assert (settings.workers, settings.log_level, settings.delta_max) == (8, "DEBUG", 3)

    def test_invalid_values_fall_back(self, monkeypatch):
        monkeypatch.setenv("TOPOS_WORKERS", "many")
        monkeypatch.setenv("TOPOS_LOG_LEVEL", "loud")
        settings = Settings.from_env()
        assert settings.workers == 4
        assert settings.log_level == "WARNING"
        monkeypatch.setenv("TOPOS_WORKERS", "0")
        assert Settings.from_env().workers == 1


class TestPipeline:
    def test_small_corpus(self):
        base = build_delta(2)
        pipeline = CorpusPipeline(presheaf_entries([loop_y(base), collapsed_z(base)]), parallel_workers=2)
        summary = pipeline.run()
        assert summary['success']
        assert (summary['instances'], summary['equivalent'], summary['one_way_only']) == (2, 1, 1)
        assert [r['name'] for r in summary['results']] == ["loop_Y", "collapsed_Z"]
        assert summary['results'][1]['status'] == "one_way_only"
        assert any("Corpus verified without violations" in line for line in pipeline.format_summary())

    def test_failures_are_counted(self):
        entries = [CorpusEntry("idempotent point", lambda: terminal_presheaf(build_idempotent_monoid()))]
        pipeline = CorpusPipeline(entries, parallel_workers=1)
        summary = pipeline.run()
        assert not summary['success']
        assert summary['errors'] == 1 and summary['violations'] == 0
        assert summary['results'][0]['error'] == "HYPOTHESIS_FAILED"

    def test_seed_corpus_entries(self):
        entries = seed_corpus()
        assert len(entries) == 40
        assert entries[0].name == "representable(0) over delta:3"
        assert entries[0].build().sizes() == (1, 1, 1, 1)
        assert sum(1 for entry in entries if entry.name.endswith("over finset:2")) == 5


class TestCli:
    def _json(self, capsys, argv):
        code = main(["--json"] + argv)
        return code, json.loads(capsys.readouterr().out)

    def test_no_command(self):
        assert main([]) == 2

    def test_dim(self, capsys):
        assert self._json(capsys, ["dim", "representable(2)", "--base", "delta:2"]) == (0, {"dim": 2})

    def test_depth(self, capsys):
        assert self._json(capsys, ["depth", "collapsed_Z", "--base", "delta:2"]) == (0, {"depth": 1})

    def test_missing_base(self, capsys):
        assert main(["dim", "loop_Y"]) == 2
        assert "error[MALFORMED_INPUT]" in capsys.readouterr().err

    def test_json_errors(self, capsys):
        assert main(["--json", "dim", "bogus", "--base", "delta:2"]) == 2
        error = json.loads(capsys.readouterr().err)
        assert error["error"] == "MALFORMED_INPUT"

    def test_theorem(self, capsys):
        code, payload = self._json(capsys, ["theorem", "collapsed_Z", "--base", "delta:2"])
        assert code == 0
        assert payload["theorem_status"] == "one_way_only"
        assert (payload["dim"], payload["depth"]) == (2, 1)

    def test_analyze_text(self, capsys):
        assert main(["analyze", "loop_Y", "--base", "delta:1"]) == 0
        out = capsys.readouterr().out
        assert "theorem: equivalent" in out
        assert "non-singular" in out

    def test_logic_eval(self, capsys):
        code, payload = self._json(capsys, ["logic", "eval", "--site", "chain2", "--formula", "ibd(0)"])
        assert code == 0
        assert payload["value"] == ["0"]
        assert not payload["satisfied"]

    def test_logic_eval_with_named_sieve(self, capsys):
        code, payload = self._json(capsys, ["logic", "eval", "--site", "chain2", "--formula", "const(U)",
                                            "--sieve", "U=0"])
        assert code == 0
        assert payload["value"] == ["0"]

    def test_formula_syntax_error(self, capsys):
        assert main(["logic", "eval", "--site", "chain2", "--formula", "top top"]) == 2
        assert "error[FORMULA_SYNTAX]" in capsys.readouterr().err

    def test_levels(self, capsys):
        code, payload = self._json(capsys, ["levels", "delta:2"])
        assert code == 0
        assert len(payload["levels"]) == 4

    def test_site(self, capsys):
        code, payload = self._json(capsys, ["site", "delta", "--max", "2"])
        assert code == 0
        assert payload["morphisms"] == 31
        assert payload["heights"] == {"[0]": 0, "[1]": 1, "[2]": 2}
        assert main(["site", "delta", "--max", "9"]) == 2
        assert "error[BUDGET_EXCEEDED]" in capsys.readouterr().err

    def test_site_out_and_validate(self, capsys, tmp_path):
        path = str(tmp_path / "finset2.json")
        assert main(["site", "finset", "--max", "2", "--out", path]) == 0
        capsys.readouterr()
        code, payload = self._json(capsys, ["validate", path])
        assert code == 0
        assert payload["valid"] and payload["morphisms"] == 8

    def test_presheaf_build(self, capsys, tmp_path):
        path = str(tmp_path / "loop.json")
        assert main(["presheaf", "build", "loop_Y", "--base", "delta:1", "--out", path]) == 0
        assert load_presheaf(path).sizes() == (1, 2)
