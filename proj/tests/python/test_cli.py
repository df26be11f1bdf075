"""End-to-end tests of the residua command-line tool.

The ctest harness points RESIDUA_BIN at the built binary and
RESIDUA_FIXTURES at the orbit count fixture file.
"""

import json
import os
import subprocess

import pytest

BIN = os.environ["RESIDUA_BIN"]
FIXTURES = os.environ["RESIDUA_FIXTURES"]


def run(*args, **kwargs):
    return subprocess.run([BIN, *args], capture_output=True, text=True, **kwargs)


def test_enumerate_json_schema():
    r = run("enumerate", "--type", "B2", "--params", "long=1,short=2", "--format", "json")
    assert r.returncode == 0
    table = json.loads(r.stdout)
    assert table["schema_version"] == 1
    assert table["type"] == "B2"
    assert table["params"] == {"long": "1", "short": "2"}
    assert all(row["o"] == 0 for row in table["orbits"])


def test_enumerate_zero_parameter_single_orbit():
    r = run("enumerate", "--type", "A1", "--params", "all=0", "--format", "json")
    assert r.returncode == 0
    assert len(json.loads(r.stdout)["orbits"]) == 1


def test_unknown_type_exits_1_naming_valid_types():
    r = run("enumerate", "--type", "Q9")
    assert r.returncode == 1
    assert "valid types" in r.stderr
    assert "A1-A8" in r.stderr


def test_bad_params_exit_1():
    assert run("enumerate", "--type", "B2", "--params", "all=1,short=2").returncode == 1
    assert run("enumerate", "--type", "B2", "--params", "short=2").returncode == 1
    assert run("enumerate", "--type", "B2", "--params", "bogus").returncode == 1


def test_missing_subcommand_exits_1():
    assert run().returncode == 1
    assert run("--help").returncode == 0


def test_resource_cap_exits_2():
    r = run("enumerate", "--type", "B2", "--params", "all=1", "--max-scanned", "2")
    assert r.returncode == 2
    assert "scanned=" in r.stderr


def test_verify_passes_and_filters():
    r = run("verify", "--type", "G2", "--params", "long=1,short=1", "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["all_passed"] is True
    assert len(report["checks"]) == 6

    r = run("verify", "--type", "A2", "--params", "all=1", "--checks", "T2")
    assert r.returncode == 0
    assert "point-negation" in r.stdout

    assert run("verify", "--type", "A2", "--checks", "bogus").returncode == 1


def test_scan_grid_report():
    r = run("scan", "--type", "B2", "--ratios", "1/4,1/2,1,2,4", "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert [p["total_orbits"] for p in report["points"]] == [5, 4, 4, 5, 5]
    assert report["walls"] == []
    assert report["segments"] == [[0, 0], [1, 2], [3, 4]]

    r = run("scan", "--type", "B2", "--ratios", "1/4,1/2,3/4", "--format", "csv")
    assert r.returncode == 0
    rows = r.stdout.rstrip("\n").split("\n")
    assert len(rows) == 4
    assert rows[2].endswith(",1")  # 1/2 is a wall


def test_dynkin_diagram_and_counts(tmp_path):
    dot = tmp_path / "diagrams.dot"
    r = run("dynkin", "--type", "A2", "--fixtures", FIXTURES, "--format", "json",
            "--dot", str(dot))
    assert r.returncode == 0
    result = json.loads(r.stdout)
    assert result["diagrams"][0]["labels"] == ["2", "2"]
    assert result["counts"]["distinguished_expected"] == 1
    assert result["counts"]["nilpotent_expected"] == 3
    assert result["counts"]["match"] is True
    assert "graph" in dot.read_text()


def test_dynkin_fixture_mismatch_exits_3(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"A2": {"distinguished": 5, "nilpotent": 9, "source": "wrong"}}))
    r = run("dynkin", "--type", "A2", "--fixtures", str(bad))
    assert r.returncode == 3
    assert "match NO" in r.stdout


def test_plancherel_mass():
    r = run("plancherel", "--q", "2", "--format", "json")
    assert r.returncode == 0
    s = json.loads(r.stdout)
    assert abs(s["point_masses"][0]["mass"] - 1 / 3) < 1e-10
    assert s["point_masses"][0]["t"] == "q^-1"
    assert abs(s["total"] - 1.0) < 1e-10


def test_plancherel_decimal_and_cross_check(tmp_path):
    density = tmp_path / "density.csv"
    r = run("plancherel", "--q", "0.5", "--cross-check", "--samples", "16",
            "--density-csv", str(density))
    assert r.returncode == 0
    assert "support cross-check: pass" in r.stdout
    lines = density.read_text().rstrip("\n").split("\n")
    assert lines[0] == "schema_version,angle,value"
    assert len(lines) == 17

    assert run("plancherel", "--q", "-1").returncode == 1
    assert run("plancherel", "--q", "junk").returncode == 1


def test_diff_oracle_identity():
    r = run("diff-oracle", "--type", "B2", "--params", "long=1,short=3", "--format", "json")
    assert r.returncode == 0
    result = json.loads(r.stdout)
    assert result["equal"] is True
    assert result["enumerator_flats"] == result["oracle_flats"]


def test_byte_identical_output_across_runs_and_threads():
    outs = [
        run("enumerate", "--type", "G2", "--params", "all=1", "--format", "json",
            "--threads", t).stdout
        for t in ("1", "4", "1", "4")
    ]
    assert len(set(outs)) == 1


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "cache"
    args = ("enumerate", "--type", "B2", "--params", "long=1,short=2", "--format", "json",
            "--cache-dir", str(cache))
    cold = run(*args)
    assert cold.returncode == 0
    files = list(cache.iterdir())
    assert len(files) == 1
    assert files[0].name.startswith("B2-2-")

    hit = run(*args)
    assert hit.returncode == 0
    assert hit.stdout == cold.stdout
    assert files[0].read_text() == cold.stdout

    cold_csv = run("enumerate", "--type", "B2", "--params", "long=1,short=2",
                   "--format", "csv")
    hit_csv = run("enumerate", "--type", "B2", "--params", "long=1,short=2",
                  "--format", "csv", "--cache-dir", str(cache))
    assert hit_csv.stdout == cold_csv.stdout


def test_cache_env_var(tmp_path):
    env = dict(os.environ, RESIDUA_CACHE_DIR=str(tmp_path / "envcache"))
    r = run("enumerate", "--type", "A2", "--params", "all=1", "--format", "json", env=env)
    assert r.returncode == 0
    assert len(list((tmp_path / "envcache").iterdir())) == 1


def test_out_flag_writes_file(tmp_path):
    out = tmp_path / "table.json"
    piped = run("enumerate", "--type", "A2", "--params", "all=1", "--format", "json")
    r = run("enumerate", "--type", "A2", "--params", "all=1", "--format", "json",
            "--out", str(out))
    assert r.returncode == 0
    assert r.stdout == ""
    assert out.read_text() == piped.stdout


@pytest.mark.parametrize("cmd", ["verify", "dynkin", "diff-oracle"])
def test_csv_rejected_where_meaningless(cmd):
    extra = ("--fixtures", FIXTURES) if cmd == "dynkin" else ()
    r = run(cmd, "--type", "A2", "--format", "csv", *extra)
    assert r.returncode == 1
