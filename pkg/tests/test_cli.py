import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod.cli import (DuplicateName, KindMismatch, ManifestSyntaxError, UnresolvedReference, parse_manifest,
                         run, serialise, strip_timing)
from nilprod.cli.main import main
from nilprod.cli.runner import parse_lincomb, parse_numbers
from nilprod.exactlin import GF, QQ, ZZ
from nilprod.table1 import table1

DEMO = Path(__file__).resolve().parents[1] / "manifests" / "demo.nil"


def test_single_line_declarations():
    m = parse_manifest("[fgab A] factors = [4]\n")
    assert len(m.declarations) == 1
    assert m.lookup("A").get("factors") == "[4]"
    h = parse_manifest("[lie h3] dim=3 bracket e1 e2 = e3\n").lookup("h3")
    assert h.get("dim") == "3" and h.get("bracket e1 e2") == "e3"


def test_error_positions():
    with pytest.raises(UnresolvedReference) as exc:
        parse_manifest("[fgab A] factors = [4]\n[commands]\ntensor fgab A B\n")
    assert exc.value.line == 3
    with pytest.raises(DuplicateName) as exc:
        parse_manifest("[fgab A] factors = [4]\n\n[fgab A] rank = 1\n")
    assert exc.value.line == 3
    with pytest.raises(KindMismatch):
        parse_manifest("[fgab A] factors = [4]\n[commands]\nhomology A\n")
    with pytest.raises(KindMismatch):
        parse_manifest("[fgab P] rank = 1\n[nil2alg X]\noperad = P\ndim = 1\n")
    with pytest.raises(ManifestSyntaxError) as exc:
        parse_manifest("[fgab A]\n  factors [4]\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(ManifestSyntaxError):
        parse_manifest("[widget w]\n")
    with pytest.raises(ManifestSyntaxError):
        parse_manifest("factors = [4]\n")


def test_value_syntax():
    assert parse_numbers("[[1, -1/2], [0, 3]]")[0][1] * 2 == -1
    with pytest.raises(ValueError):
        parse_numbers("[1, 2")
    assert parse_lincomb("2 e1 - 1/2 e3", 3, QQ) == [2, 0, Fraction(-1, 2)]
    with pytest.raises(ValueError):
        parse_lincomb("e4", 3, QQ)


names = st.text(alphabet="abcdefgh", min_size=1, max_size=4)
factor_lists = st.lists(st.sampled_from([0, 2, 3, 4, 6]), min_size=1, max_size=3)


@st.composite
def fgab_manifests(draw):
    ns = draw(st.lists(names, min_size=1, max_size=4, unique=True))
    lines = [f"[fgab {n}]\nfactors = {draw(factor_lists)}" for n in ns]
    lines.append("[commands]")
    for _ in range(draw(st.integers(0, 4))):
        lines.append(f"tensor fgab {draw(st.sampled_from(ns))} {draw(st.sampled_from(ns))}")
    return "\n".join(lines) + "\n"


@settings(max_examples=50, deadline=None)
@given(fgab_manifests())
def test_round_trip(text):
    m = parse_manifest(text)
    assert parse_manifest(serialise(m)) == m


def test_demo_round_trip_and_determinism():
    m = parse_manifest(DEMO.read_text())
    assert parse_manifest(serialise(m)) == m
    a = json.dumps(strip_timing(run(m, seed=11)), sort_keys=True)
    b = json.dumps(strip_timing(run(parse_manifest(DEMO.read_text()), seed=11)), sort_keys=True)
    assert a == b


def test_demo_results():
    doc = run(parse_manifest(DEMO.read_text()), seed=1)
    assert doc["schema"] == "nilprod.result/1" and doc["ok"]
    by_cmd = {r["command"]: r for r in doc["results"]}
    assert by_cmd["tensor fgab A B"]["output"]["invariant_factors"] == [2]
    assert by_cmd["ganea h3 z"]["output"]["dims"] == [2, 2, 1, 1, 2, 2]
    assert by_cmd["tensor xmod I I"]["output"]["middle"] == [0, 0, 0]


def test_failed_verdict_and_embedded_errors(tmp_path):
    text = "[lie g] dim = 2; bracket e1 e2 = e2\n[central c] algebra = g; span = derived\n[commands]\nganea g c\n"
    doc = run(parse_manifest(text))
    assert not doc["ok"] and doc["results"][0]["error"]["type"] == "NotCentral"
    path = tmp_path / "bad.nil"
    path.write_text(text)
    assert main(["run", str(path)]) == 1


def test_exit_codes(tmp_path, capsys):
    assert main(["check"]) == 0
    assert main(["check", "nonsense"]) == 2
    assert main(["table1", "--ring", "Z", "--left", "4", "--right", "6"]) == 0
    out = capsys.readouterr().out
    assert '"ok": true' in out
    bad = tmp_path / "bad.nil"
    bad.write_text("[fgab A\n")
    assert main(["run", str(bad)]) == 2
    assert main(["run", str(tmp_path / "missing.nil")]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_run_writes_json(tmp_path, capsys):
    src = tmp_path / "m.nil"
    src.write_text("[fgab A] factors = [4]\n[fgab B] factors = [6]\n[commands]\ntensor fgab A B\n")
    out = tmp_path / "out.json"
    assert main(["run", str(src), "--json", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["results"][0]["output"]["group"] == "Z/2"


def test_check_command_reports_suites(capsys):
    assert main(["check", "bilinearity", "--cases", "2", "--seed", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["suites"][0]["passed"] == doc["suites"][0]["cases"] > 0


def test_table_rows_over_a_field():
    rows = {r.row: r for r in table1(QQ, (2, 3))}
    assert rows["Lie"].result == 6 and rows["Leib"].result == 12 and rows["Mod_R"].result == 0
    assert all(r.match for r in rows.values())


def test_table_rows_over_the_integers_and_characteristic_two():
    rows = {r.row: r for r in table1(ZZ, left=[4], right=[6])}
    assert rows["Gp"].result == [2] and all(r.match for r in rows.values() if not r.skipped)
    rows2 = {r.row: r for r in table1(GF(2), (1, 1))}
    assert rows2["Lie"].skipped
