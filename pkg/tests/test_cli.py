"""The stv command line: exit codes, document shapes, determinism."""

import json
import shutil
import subprocess

import pytest

from supertrop import cli
from supertrop.fixtures import data_dir, load_supertropical


def fixture_path(name):
    return str(data_dir() / f"{name}.json")


def run(argv, out=None):
    if out is not None:
        argv = list(argv) + ["--out", str(out)]
    return cli.main(list(argv))


def load(out):
    return json.loads(out.read_text())


def test_check_supertropical_passes_on_z2(tmp_path):
    out = tmp_path / "rep.json"
    assert run(["check", fixture_path("z2"), "--which", "supertropical"], out) == 0
    doc = load(out)
    assert doc["ok"] is True
    assert doc["command"] == "check"
    assert doc["suite"] == "supertropical"
    assert doc["input"] == "z2.json"
    assert doc["mode"] == "exhaustive"
    assert doc["witnesses"] == []


def test_check_bipotent_fails_on_z2(tmp_path):
    out = tmp_path / "rep.json"
    assert run(["check", fixture_path("z2"), "--which", "bipotent"], out) == 1
    doc = load(out)
    assert doc["ok"] is False
    assert ["bipotent", ["1", "1"]] in doc["witnesses"]


def test_check_reports_witnesses_for_a_mutated_table(tmp_path):
    u = load_supertropical("z2")
    doc = u.table.to_json()
    doc["add"][1][2] = 1  # break commutativity on (1, g)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    out = tmp_path / "rep.json"
    assert run(["check", str(bad), "--which", "supertropical"], out) == 1
    rep = load(out)
    assert rep["ok"] is False
    assert rep["info"]["semiring_failed"] is True
    assert ["addition commutative", ["1", "g"]] in rep["witnesses"]


def test_check_ub_and_semiring_suites(tmp_path):
    for which in ("semiring", "ub"):
        assert run(["check", fixture_path("tg_chain4"), "--which", which]) == 0


def test_check_mfce_partition(tmp_path):
    part = tmp_path / "p.json"
    part.write_text(json.dumps([["0"], ["1", "g"], ["e"]]))
    assert run(["check", fixture_path("z2"), "--which", "mfce",
                "--partition", str(part)]) == 0
    part.write_text(json.dumps([["0", "1"], ["g"], ["e"]]))
    assert run(["check", fixture_path("z2"), "--which", "mfce",
                "--partition", str(part)]) == 1
    assert run(["check", fixture_path("z2"), "--which", "mfce"]) == 2


def test_check_text_format(tmp_path, capsys):
    assert run(["check", fixture_path("z4"), "--which", "supertropical",
                "--format", "text"]) == 0
    got = capsys.readouterr().out
    assert "supertropical on z4.json: ok" in got


def test_lattice_chains_and_crosscheck(tmp_path):
    out = tmp_path / "lat.json"
    assert run(["lattice", fixture_path("z2")], out) == 0
    doc = load(out)
    assert len(doc["nodes"]) == 3
    assert doc["hasse"] == [[0, 1], [1, 2]]
    assert doc["subgroup_crosscheck"]["match"] is True
    assert doc["subgroup_crosscheck"]["expected_relations"] == 3
    assert run(["lattice", fixture_path("z4")], out) == 0
    doc = load(out)
    assert len(doc["nodes"]) == 4
    assert doc["subgroup_crosscheck"]["subgroups"] == 3


def test_lattice_without_a_tangible_group(tmp_path):
    out = tmp_path / "lat.json"
    assert run(["lattice", fixture_path("bool_ghost")], out) == 0
    assert "subgroup_crosscheck" not in load(out)


def test_lattice_dot_and_bound(tmp_path):
    out = tmp_path / "lat.dot"
    assert run(["lattice", fixture_path("z2"), "--format", "dot"], out) == 0
    assert out.read_text().startswith("digraph")
    assert run(["lattice", fixture_path("z4"), "--bound", "2"]) == 3


def test_dot_is_lattice_only():
    assert run(["check", fixture_path("z2"), "--which", "bipotent",
                "--format", "dot"]) == 2


def test_kapranov_padic_small(tmp_path):
    out = tmp_path / "k.json"
    assert run(["kapranov", "--instance", "padic", "--samples", "40",
                "--seed", "1"], out) == 0
    doc = load(out)
    assert doc["checked"] == 40
    assert doc["corner_pass"] == 40
    assert doc["gs_pass"] == 40
    assert doc["failures"] == 0
    assert doc["tangibly_additive"] is True
    assert doc["first_witness"] is None


def test_kapranov_inject_nonroot_counts_rejections(tmp_path):
    out = tmp_path / "k.json"
    code = run(["kapranov", "--instance", "padic", "--samples", "40",
                "--seed", "1", "--inject-nonroot"], out)
    doc = load(out)
    assert doc["rejected_precondition"] > 0
    assert doc["checked"] + doc["rejected_precondition"] == 40
    assert code == 0
    assert doc["failures"] == 0


def test_corner_queries(tmp_path):
    out = tmp_path / "c.json"
    assert run(["corner", "x1^2 + x1 + 1", "1"], out) == 0
    doc = load(out)
    assert doc["in_locus"] is True
    assert sorted(doc["dominating"]) == [[0], [1], [2]]
    assert doc["command"] == "corner"
    assert run(["corner", "x1 + 1", "t"], out) == 0
    doc = load(out)
    assert doc["in_locus"] is False
    assert doc["dominating"] == [[0]]
    # extra point coordinates are ignored, missing ones are an error
    assert run(["corner", "x1 + 1", "t, t^2"], out) == 0
    assert run(["corner", "x1*x2 + 1", "t"]) == 2


def test_fixtures_listing_and_dump(tmp_path):
    out = tmp_path / "f.json"
    assert run(["fixtures"], out) == 0
    doc = load(out)
    assert doc["names"][0] == "bool_ghost"
    assert run(["fixtures", "z2"], out) == 0
    assert out.read_bytes() == (data_dir() / "z2.json").read_bytes()
    assert run(["fixtures", "nope"]) == 2


def test_seed_from_the_environment(tmp_path, monkeypatch):
    out = tmp_path / "k.json"
    monkeypatch.setenv("STV_SEED", "7")
    assert run(["kapranov", "--instance", "padic", "--samples", "5"], out) == 0
    assert load(out)["seed"] == 7
    monkeypatch.setenv("STV_SEED", "abc")
    assert run(["kapranov", "--instance", "padic", "--samples", "5"]) == 2


def test_input_errors_exit_two(tmp_path):
    assert run(["check", str(tmp_path / "missing.json"),
                "--which", "semiring"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["check", str(bad), "--which", "semiring"]) == 2


def test_console_script_is_installed():
    exe = shutil.which("stv")
    assert exe is not None
    got = subprocess.run([exe, "fixtures"], capture_output=True, text=True)
    assert got.returncode == 0
    assert "z2" in got.stdout
