"""CLI behavior: verdicts, exit codes, report determinism."""

import json

import pytest

from modtriples.cli import main
from modtriples.suites import SuiteConfig, run_suite

BOX = '{"total": {"kind": "proper"}, "plus": "1*P(inf)", "minus": "0"}'
BOXDUAL = '{"total": {"kind": "proper"}, "plus": "0", "minus": "1*P(inf)"}'
ID_CYCLE = (
    '{"source": %s, "target": %s,'
    ' "components": [{"a": {"num": "x"}, "b": {"num": "x"}, "mult": 1}]}' % (BOX, BOXDUAL)
)


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


class TestExitCodes:
    def test_affirmative(self, files, capsys):
        cycle = files("id.json", ID_CYCLE)
        assert main(["check", "admissible", "--cycle", cycle]) == 0
        assert "admissible: yes" in capsys.readouterr().out

    def test_negative(self, files, capsys):
        bad = ID_CYCLE.replace('"plus": "0", "minus": "1*P(inf)"', '"plus": "2*P(inf)", "minus": "0"')
        cycle = files("bad.json", bad)
        assert main(["check", "admissible", "--cycle", cycle]) == 1
        assert "admissible: no" in capsys.readouterr().out

    def test_error(self, files, capsys):
        broken = files("broken.json", '{"total": {"kind": "proper"}, "plus": "1*P(x^2-1)"}')
        assert main(["check", "class", "--triple", broken]) == 2
        assert "DegenerateInput" in capsys.readouterr().err

    def test_unsupported_composition(self, files, capsys):
        free = '{"total": {"kind": "proper"}, "plus": "0", "minus": "0"}'
        ident = files(
            "ident.json",
            '{"source": %s, "target": %s,'
            ' "components": [{"a": {"num": "x"}, "b": {"num": "x"}, "mult": 1}]}' % (free, free),
        )
        trans = files(
            "trans.json",
            '{"source": %s, "target": %s,'
            ' "components": [{"a": {"num": "x^2"}, "b": {"num": "x"}, "mult": 1}]}' % (free, free),
        )
        assert main(["compose", "--first", ident, "--second", trans]) == 2
        assert "UnsupportedComposition" in capsys.readouterr().err

    def test_unknown_suite(self, capsys):
        assert main(["suite", "--suites", "nope", "--samples", "1"]) == 2


class TestCommands:
    def test_separate(self, files, capsys):
        triple = files("t.json", '{"total": {"kind": "proper"}, "plus": "2*P(0)", "minus": "1*P(0)"}')
        assert main(["apply", "separate", "--triple", triple]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["triple"]["plus"] == "1*P(x)"
        assert out["triple"]["minus"] == "0"
        assert out["fundamental"] == "1*P(x)"

    def test_shift(self, files, capsys):
        triple = files("box.json", BOX)
        assert main(["apply", "shift", "--triple", triple, "--divisor", "1*P(inf)"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["is_iso"] is True
        assert out["source"]["plus"] == "2*P(inf)"

    def test_min_compactify(self, files, capsys):
        cycle = files(
            "sq.json",
            '{"source": {"total": {"kind": "open", "boundary": ["P(inf)"]},'
            ' "plus": "0", "minus": "0"},'
            ' "target": %s,'
            ' "components": [{"a": {"num": "x"}, "b": {"num": "x^2"}, "mult": 1}]}' % BOX,
        )
        assert main(["min-compactify", "--cycle", cycle]) == 0
        assert "n = 2" in capsys.readouterr().out

    def test_kappa_round(self, files, capsys):
        iy = files("o.json", '{"Y": "1*P(0)", "Z": "2*P(inf)"}')
        assert main(["apply", "kappa", "--iy", iy]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["plus"] == "2*P(inf)"
        back = files("t.json", json.dumps(out))
        assert main(["apply", "kappa-inv", "--triple", back]) == 0
        assert json.loads(capsys.readouterr().out) == {"Y": "1*P(x)", "Z": "2*P(inf)"}

    def test_p_and_q(self, files, capsys):
        triples = files(
            "ts.json",
            '[{"total": {"kind": "proper"}, "plus": "1*P(inf)", "minus": "1*P(0)"},'
            ' {"total": {"kind": "proper"}, "plus": "1*P(inf)", "minus": "0"}]',
        )
        assert main(["apply", "p", "--triples", triples]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out) == 1 and out[0]["minus"] == "0"
        triple = files("q.json", '{"total": {"kind": "proper"}, "plus": "1*P(0)", "minus": "1*P(inf)"}')
        assert main(["apply", "q", "--triple", triple]) == 0
        assert json.loads(capsys.readouterr().out)["infinity"] == "1*P(x)"

    def test_suite_verdict(self, capsys):
        assert main(["suite", "--suites", "fixtures", "--samples", "1", "--seed", "3"]) == 0
        assert "failed: 0" in capsys.readouterr().out


class TestDeterminism:
    def test_reports_identical_modulo_elapsed(self):
        cfg = SuiteConfig(seed=42, samples=5, suites=("key-lem", "roundtrip", "separation"))
        first = run_suite(cfg).to_json()
        second = run_suite(cfg).to_json()
        first.pop("elapsed_s")
        second.pop("elapsed_s")
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)

    def test_cli_json_deterministic(self, capsys):
        argv = ["suite", "--suites", "key-lem", "--samples", "3", "--seed", "11", "--json"]
        assert main(argv) == 0
        out1 = json.loads(capsys.readouterr().out)
        assert main(argv) == 0
        out2 = json.loads(capsys.readouterr().out)
        out1.pop("elapsed_s")
        out2.pop("elapsed_s")
        assert out1 == out2
        assert out1["schema"] == 1
