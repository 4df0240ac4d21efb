import json
import subprocess
import sys
from pathlib import Path

import pytest

from braid3_cosmetic import __version__
from braid3_cosmetic.cli import main, parse_batch_line, run_batch
from braid3_cosmetic.pipeline import Certificate, analyze
from braid3_cosmetic.wordopt import RewriteBudget

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_figure_eight(self, capsys):
        code, out, _ = run(["check", "s1 s2^-1 s1 s2^-1", "--format", "json"], capsys)
        c = json.loads(out)
        assert code == 0
        assert c["verdict"]["verdict"] == "NO_PCS" and c["verdict"]["reason"] == "BOYER_LINES"
        assert c["a2"] == -1

    def test_unknot_inconclusive(self, capsys):
        code, out, _ = run(["check", "s1 s2", "--format", "json"], capsys)
        c = json.loads(out)
        assert code == 11
        assert c["alexander"] == "1" and c["a2"] == 0
        assert c["genus"] == {"lower": 0, "upper": "0", "certified": True}
        assert "trivial knot" in c["verdict"]["notes"][0]

    def test_link_rejected(self, capsys):
        code, out, _ = run(["check", "s1 s1", "--format", "json"], capsys)
        assert code == 2
        err = json.loads(out)
        assert err["error"] == "not-a-knot" and "3 components" in err["message"]

    def test_parse_error(self, capsys):
        code, out, _ = run(["check", "s1 xq", "--format", "json"], capsys)
        assert code == 2 and json.loads(out)["error"] == "parse"

    def test_text_format(self, capsys):
        code, out, _ = run(["check", "s1 s2 s1 s2"], capsys)
        assert code == 0
        assert "verdict:         NO_PCS via BOYER_LINES" in out
        assert "alexander:       t^-1 - 1 + t" in out

    def test_quiet(self, capsys):
        code, out, err = run(["check", "s1 s2", "--quiet"], capsys)
        assert code == 11 and out == "" and err == ""

    def test_dump_diagram(self, capsys):
        code, out, err = run(["check", "s1 s2^-1 s1 s2^-1", "--dump-diagram", "--format", "json"], capsys)
        assert "0 s1 + after=P0 outer=U before=P1 inner=Q1" in err
        json.loads(out)

    def test_state_cap_downgrades_thickness(self, capsys):
        code, out, _ = run(["check", "s1 s2 s1 s2", "--max-states", "2", "--format", "json"], capsys)
        c = json.loads(out)
        assert c["thickness"]["active"] == "genus_bound"
        assert c["thickness"]["delta_span"] is None
        assert c["thickness"]["value"] == "10/3"
        assert any("exceeds 2" in n for n in c["notes"])

    def test_residual_exit_code(self, capsys, monkeypatch):
        # force a residual verdict by feeding a genus-2 knot with a2 = 0 through the ladder
        from braid3_cosmetic import pipeline
        from braid3_cosmetic.alexander import AlexanderData
        from braid3_cosmetic.laurent import LaurentPoly

        real = pipeline.alexander_poly

        def fake(w):
            d = real(w)
            return AlexanderData(LaurentPoly.from_ascending(-2, [1, -2, 3, -2, 1]), 0, 2, d.determinant)

        monkeypatch.setattr(pipeline, "alexander_poly", fake)
        code, out, _ = run(["check", "s1^5 s2", "--format", "json"], capsys)
        c = json.loads(out)
        assert code == 10
        assert c["verdict"]["verdict"] == "RESIDUAL"
        assert ["2", "-2"] in c["verdict"]["residual_slopes"]


class TestInvariants:
    def test_trefoil(self, capsys):
        code, out, _ = run(["invariants", "s1 s2 s1 s2", "--format", "json"], capsys)
        c = json.loads(out)
        assert code == 0 and c["verdict"] is None
        assert c["alexander"] == "t^-1 - 1 + t" and c["a2"] == 1
        assert (c["genus"]["lower"], c["genus"]["upper"]) == (1, "1")

    def test_figure_two_word(self, capsys):
        code, out, _ = run(["invariants", "a2 a3^-1 a1^2", "--format", "json"], capsys)
        c = json.loads(out)
        assert c["genus"]["upper"] == "1" and c["crossing_bound"] == 6 and c["alphabet"] == "band"

    def test_empty(self, capsys):
        code, out, _ = run(["invariants", "", "--format", "json"], capsys)
        assert code == 2 and json.loads(out)["error"] == "empty"


class TestBatch:
    def test_parse_line(self):
        assert parse_batch_line("# comment") is None
        assert parse_batch_line("   ") is None
        assert parse_batch_line("3_1: s1 s2 s1 s2  # trefoil") == ("3_1", "s1 s2 s1 s2")
        assert parse_batch_line("s1 s2") == (None, "s1 s2")
        with pytest.raises(ValueError):
            parse_batch_line("two words: s1 s2")

    def test_two_knots(self, tmp_path, capsys):
        f = tmp_path / "knots.txt"
        f.write_text("# census\n3_1: s1 s2 s1 s2\n4_1: s1 s2^-1 s1 s2^-1\n", encoding="utf-8")
        code, out, _ = run(["batch", str(f)], capsys)
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 0
        assert [x["label"] for x in lines[:2]] == ["3_1", "4_1"]
        assert all(x["certificate"]["verdict"]["verdict"] == "NO_PCS" for x in lines[:2])
        assert lines[2] == {"summary": {"NO_PCS": 2, "RESIDUAL": 0, "INCONCLUSIVE": 0, "ERROR": 0, "total": 2}}

    def test_empty_file(self, tmp_path, capsys):
        f = tmp_path / "empty.txt"
        f.write_text("", encoding="utf-8")
        code, out, _ = run(["batch", str(f)], capsys)
        assert code == 0
        assert [json.loads(x) for x in out.splitlines()] == [
            {"summary": {"NO_PCS": 0, "RESIDUAL": 0, "INCONCLUSIVE": 0, "ERROR": 0, "total": 0}}]

    def test_bad_line_continues(self, tmp_path, capsys):
        f = tmp_path / "mixed.txt"
        f.write_text("bad: s1 xq\nok: s1 s2\n", encoding="utf-8")
        code, out, _ = run(["batch", str(f)], capsys)
        lines = [json.loads(x) for x in out.splitlines()]
        assert lines[0]["label"] == "bad" and lines[0]["error"] == "parse" and lines[0]["line"] == 1
        assert lines[1]["certificate"]["verdict"]["verdict"] == "INCONCLUSIVE"
        assert lines[2]["summary"]["ERROR"] == 1 and lines[2]["summary"]["total"] == 2

    def test_missing_file(self, tmp_path, capsys):
        code, out, _ = run(["batch", str(tmp_path / "nope.txt")], capsys)
        assert code == 2

    def test_parallel_preserves_order(self):
        words = ["s1 s2 s1 s2", "s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s2", "s1^5 s2", "s1^3 s2^-1 s1 s2^-1"]
        lines = [f"k{i}: {w}" for i, w in enumerate(words)]
        serial = list(run_batch(lines, RewriteBudget(), 1000, jobs=1))
        parallel = list(run_batch(lines, RewriteBudget(), 1000, jobs=3))
        assert serial == parallel
        assert [x.get("label") for x in serial[:-1]] == [f"k{i}" for i in range(len(words))]


class TestCertificate:
    @pytest.mark.parametrize("word", ["s1 s2 s1 s2", "a2 a3^-1 a1^2", "s1 s2", "s1^5 s2"])
    def test_roundtrip(self, word):
        c = analyze(word)
        assert Certificate.from_json(c.to_json()) == c
        assert Certificate.from_json(c.to_json(indent=None)) == c

    def test_version_embedded(self):
        assert analyze("s1 s2").version == __version__

    @pytest.mark.parametrize("word, name", [("s1 s2 s1 s2", "trefoil"), ("s1 s2^-1 s1 s2^-1", "figure_eight")])
    def test_golden(self, word, name, capsys):
        code, out, _ = run(["check", word, "--format", "json"], capsys)
        assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braid3_cosmetic", "check", "s1 s1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "3 components" in proc.stderr
