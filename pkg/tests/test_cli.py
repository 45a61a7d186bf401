"""Ideal file parsing, CLI subcommands, exit codes, report artifacts."""

import json
import subprocess
import sys

import pytest

from multibound import corpus
from multibound.cli import main
from multibound.errors import ParseError
from multibound.ideal_io import (dump_ideal, load_ideal, parse_ideal_text,
                                 serialize_ideal)
from multibound.monomial import MonomialIdeal, Ring

TRIANGLE_DOC = '{"vars":["x","y","z"],"gens":[[1,1,0],[0,1,1],[1,0,1]]}'


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# -- parsing -------------------------------------------------------------


def test_parse_minimalizes():
    I, warnings = parse_ideal_text('{"vars":["x","y"],"gens":[[2,0],[1,1],[0,2]]}')
    assert set(I.vectors) == {(2, 0), (1, 1), (0, 2)}
    assert not warnings


def test_parse_warns_on_redundant_generators():
    I, warnings = parse_ideal_text('{"vars":["x","y"],"gens":[[1,0],[2,0]]}')
    assert I.vectors == ((1, 0),)
    assert warnings and "not minimal" in warnings[0]


def test_parse_zero_ideal_is_representable():
    I, _ = parse_ideal_text('{"vars":["x"],"gens":[]}')
    assert I.is_zero()


def test_parse_errors_carry_context():
    with pytest.raises(ParseError, match="gens\\[1\\]\\[0\\]"):
        parse_ideal_text('{"vars":["x","y"],"gens":[[1,0],[-1,2]]}')
    with pytest.raises(ParseError, match="line"):
        parse_ideal_text('{"vars": [')
    with pytest.raises(ParseError, match="missing field"):
        parse_ideal_text('{"vars":["x"]}')
    with pytest.raises(ParseError, match="distinct"):
        parse_ideal_text('{"vars":["x","x"],"gens":[[1,0]]}')


def test_round_trip_through_serialization():
    for entry in corpus.entries():
        I = entry.ideal()
        back, warnings = parse_ideal_text(serialize_ideal(I))
        assert back == I and not warnings


# -- subcommands ----------------------------------------------------------


def test_cli_verify_triangle(tmp_path, capsys):
    path = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["verify", path, "--K", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "PASS"
    assert (payload["limit_num"], payload["limit_den"]) == (3, 4)
    assert payload["fit"]["q"] == 2
    assert payload["classification"]["radicalSquarefree"] is True


def test_cli_bounds_ci(tmp_path, capsys):
    path = _write(tmp_path, "ci.ideal", '{"vars":["x","y"],"gens":[[2,0],[0,3]]}')
    assert main(["bounds", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["U"] == [15, 2]
    assert payload["L"] == [5, 1]
    assert payload["e"] == 6


def test_cli_reduction(tmp_path, capsys):
    j = _write(tmp_path, "j.ideal", '{"vars":["x","y"],"gens":[[2,0],[0,2]]}')
    i = _write(tmp_path, "m2.ideal", '{"vars":["x","y"],"gens":[[2,0],[1,1],[0,2]]}')
    assert main(["reduction", j, i]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["is_reduction"] is True and payload["witness_m"] == 1


def test_cli_betti_and_hilbert(tmp_path, capsys):
    path = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["betti", path]) == 0
    betti = json.loads(capsys.readouterr().out)
    assert [1, 2, 3] in betti["beta"] and [2, 3, 2] in betti["beta"]
    assert betti["reg"] == 2
    assert main(["hilbert", path]) == 0
    hil = json.loads(capsys.readouterr().out)
    assert hil["numerator"] == [1, 0, -3, 2]
    assert (hil["d"], hil["c"], hil["e"]) == (1, 2, 3)


def test_cli_mult_cross_check(tmp_path, capsys):
    path = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["mult", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["agree"] is True and payload["e_series"] == 3


def test_cli_decompose(tmp_path, capsys):
    path = _write(tmp_path, "x2xy.ideal", '{"vars":["x","y"],"gens":[[2,0],[1,1]]}')
    assert main(["decompose", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["E"] == 1
    assert payload["primes"][0]["vars"] == ["x"]


def test_cli_sweep_tabular(tmp_path, capsys):
    path = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["sweep", path, "--K", "3", "--format", "tabular"]) == 0
    out = capsys.readouterr().out
    assert "reg" in out and "e/U" in out


def test_cli_exit_codes(tmp_path, capsys):
    zero = _write(tmp_path, "zero.ideal", '{"vars":["x"],"gens":[]}')
    assert main(["verify", zero]) == 3
    bad = _write(tmp_path, "bad.ideal", "{nope")
    assert main(["hilbert", bad]) == 3
    missing = str(tmp_path / "absent.ideal")
    assert main(["hilbert", missing]) == 3
    tri = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["verify", tri, "--max-gens", "5"]) == 2
    assert main(["verify", tri, "--char", "6"]) == 3
    capsys.readouterr()


def test_cli_warns_on_stderr_for_redundant_input(tmp_path, capsys):
    path = _write(tmp_path, "red.ideal", '{"vars":["x","y"],"gens":[[1,0],[2,0]]}')
    assert main(["hilbert", path]) == 0
    assert "not minimal" in capsys.readouterr().err


def test_cli_out_writes_same_bytes(tmp_path, capsys):
    tri = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    out = tmp_path / "report.json"
    assert main(["verify", tri, "--out", str(out)]) == 0
    assert out.read_text() == capsys.readouterr().out


def test_cli_report_dir_artifacts(tmp_path, capsys):
    tri = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    rep = tmp_path / "report"
    assert main(["verify", tri, "--report-dir", str(rep)]) == 0
    capsys.readouterr()
    names = {p.name for p in rep.iterdir()}
    assert names == {"report.json", "records.csv", "ratio.png", "regularity.png"}
    assert (rep / "ratio.png").stat().st_size > 1000
    assert (rep / "regularity.png").stat().st_size > 1000
    csv_lines = (rep / "records.csv").read_text().splitlines()
    assert csv_lines[0].startswith("k,reg,")
    assert len(csv_lines) == 5
    report = json.loads((rep / "report.json").read_text())
    assert report["verdict"] == "PASS"


def test_cli_determinism_byte_for_byte(tmp_path, capsys):
    tri = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    assert main(["verify", tri]) == 0
    first = capsys.readouterr().out
    assert main(["verify", tri]) == 0
    assert capsys.readouterr().out == first


def test_cli_module_entry_point(tmp_path):
    path = _write(tmp_path, "tri.ideal", TRIANGLE_DOC)
    proc = subprocess.run(
        [sys.executable, "-m", "multibound", "verify", path, "--format", "tabular"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verdict: PASS" in proc.stdout


# -- corpus ------------------------------------------------------------------


def test_corpus_has_required_entries():
    names = {e.name for e in corpus.entries()}
    assert {"koszul-2", "koszul-3", "koszul-4", "ci-2-3", "ci-2-4", "triangle",
            "square", "m2-n2", "m3-n2", "m2-n3", "m3-n3", "x2-xy", "x2-xy-y2",
            "random-squarefree", "random-diffdeg"} <= names


def test_corpus_random_entries_are_reproducible():
    a = corpus.get("random-squarefree").gens
    b = corpus.get("random-squarefree").gens
    assert a == b
    assert corpus.get("random-diffdeg").ideal().is_equigenerated() is False


def test_cli_corpus_list_and_export(tmp_path, capsys):
    assert main(["corpus", "list"]) == 0
    listing = json.loads(capsys.readouterr().out)
    assert any(e["name"] == "triangle" for e in listing["entries"])
    assert main(["corpus", "export", "--dir", str(tmp_path / "c")]) == 0
    capsys.readouterr()
    exported = sorted(p.name for p in (tmp_path / "c").iterdir())
    assert "triangle.ideal" in exported
    I, warnings = load_ideal(tmp_path / "c" / "triangle.ideal")
    assert not warnings and len(I.gens) == 3
    assert main(["corpus", "export"]) == 3  # --dir is required
    capsys.readouterr()


def test_dump_and_load_ideal(tmp_path):
    I = MonomialIdeal.from_vectors(Ring.default(2), [(2, 0), (1, 1)])
    path = tmp_path / "i.ideal"
    dump_ideal(I, path)
    back, warnings = load_ideal(path)
    assert back == I and not warnings
