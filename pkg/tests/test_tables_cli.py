import json

import pytest

from hookbias.cli import main
from hookbias.hookgf import gf_b_2i
from hookbias.tables import CoefficientTable, CorruptTable, read_table, table_filename, write_table


def good_text():
    return "#series=x\n#trunc=2\n#version=1\n0\t1\n1\t-2\n2\t0\n"


class TestTables:
    def test_round_trip_bytes(self, tmp_path):
        t = CoefficientTable.from_series("b_2i[i=4]", gf_b_2i(4, 300))
        path = write_table(tmp_path / table_filename(t.name, 300), t)
        raw = path.read_bytes()
        back = read_table(path)
        assert back == t and back.to_series() == gf_b_2i(4, 300)
        write_table(tmp_path / "again.tsv", back)
        assert (tmp_path / "again.tsv").read_bytes() == raw

    def test_filename(self):
        assert table_filename("b_2i[i=4]", 2000) == "b_2i[i=4][N=2000].tsv"

    def test_loads_dumps(self):
        assert CoefficientTable.loads(good_text()).dumps() == good_text()

    @pytest.mark.parametrize("text,line", [
        (good_text().replace("#version=1", "#version=2"), 3),
        (good_text()[:-1], 6),
        (good_text().replace("1\t-2", "1\t-02"), 5),
        (good_text().replace("1\t-2", "1\t-2.0"), 5),
        (good_text().replace("1\t-2", "3\t-2"), 5),
        (good_text().replace("#trunc=2", "#trunc=5"), 6),
        ("#trunc=2\n", 1),
    ])
    def test_corrupt(self, text, line):
        with pytest.raises(CorruptTable) as exc:
            CoefficientTable.loads(text)
        assert exc.value.line == line

    def test_bad_utf8(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_bytes(b"\xff\xfe")
        with pytest.raises(CorruptTable):
            read_table(p)


class TestCli:
    def test_compute_tsv(self, capsys):
        assert main(["compute", "--series", "b2i", "--i", "3", "--N", "82"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("#series=b_2i[i=3]\n#trunc=82\n#version=1\n")
        assert "82\t515393\n" in out

    def test_compute_deterministic(self, capsys):
        main(["compute", "--series", "b32", "--N", "40", "--format", "json"])
        a = capsys.readouterr().out
        main(["compute", "--series", "b32", "--N", "40", "--format", "json"])
        assert a == capsys.readouterr().out
        assert json.loads(a)["series"] == "b_32"

    def test_missing_parameter(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--series", "b2i", "--N", "10"])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--series", "b32", "--N", "10", "--bogus"])
        assert exc.value.code == 2

    def test_N_cap(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--series", "b32", "--N", "20001"])
        assert exc.value.code == 2

    def test_export_import(self, tmp_path, capsys):
        assert main(["export", "--series", "b2i", "--i", "4", "--N", "120", "--dir", str(tmp_path)]) == 0
        path = tmp_path / "b_2i[i=4][N=120].tsv"
        assert path.exists()
        capsys.readouterr()
        assert main(["import", str(path), "--reexport", str(tmp_path / "copy.tsv")]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["series"] == "b_2i[i=4]" and info["trunc"] == 120
        assert (tmp_path / "copy.tsv").read_bytes() == path.read_bytes()

    def test_import_corrupt(self, tmp_path, capsys):
        p = tmp_path / "t.tsv"
        p.write_text(good_text().replace("#version=1", "#version=2"))
        assert main(["import", str(p)]) == 4
        assert "line 3" in capsys.readouterr().err

    def test_import_missing(self, tmp_path, capsys):
        assert main(["import", str(tmp_path / "nope.tsv")]) == 3

    def test_cache(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("HOOKBIAS_CACHE_DIR", str(tmp_path))
        main(["compute", "--series", "b32", "--N", "30"])
        first = capsys.readouterr().out
        assert (tmp_path / "b_32[N=30].tsv").exists()
        main(["compute", "--series", "b32", "--N", "30"])
        assert capsys.readouterr().out == first

    def test_verify_theorem1(self, capsys):
        assert main(["verify", "--campaign", "theorem1", "--N", "200", "--format", "json"]) == 0
        d = json.loads(capsys.readouterr().out)
        assert d["status"] == "pass" and d["check-name"] == "theorem1"

    def test_conjecture_failure_exits_zero(self, capsys):
        assert main(["verify", "--campaign", "even-k", "--k", "10", "--N", "100"]) == 0
        assert "fail" in capsys.readouterr().out

    def test_search(self, capsys):
        assert main(["search", "--k", "3", "--N", "100", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["params"]["minimal"] == 82

    def test_bijection_check(self, capsys):
        assert main(["bijection-check", "--i", "3", "--n", "33", "--format", "json"]) == 0
        d = json.loads(capsys.readouterr().out)
        assert d["status"] == "pass"
        assert any(w["values"].get("present") for w in d["witnesses"])

    def test_bijection_check_missing_i(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bijection-check", "--n", "33"])
        assert exc.value.code == 2

    def test_output_file(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["verify", "--campaign", "lemma23", "--N", "60", "--format", "json",
                     "--output", str(out)]) == 0
        assert json.loads(out.read_text())["status"] == "pass"
