"""Smoke tests for the Python extension (import path set by ctest)."""

from fractions import Fraction
from pathlib import Path

import pytest

import residua

FIXTURES = Path(__file__).resolve().parents[2] / "data" / "bala_carter.json"


def test_root_system_info():
    info = residua.root_system_info("B2")
    assert info["label"] == "B2"
    assert info["rank"] == 2
    assert info["num_roots"] == 8
    assert info["class_names"] == ["long", "short"]
    assert info["weyl_order"] == "8"


def test_enumerate_table_schema():
    table = residua.enumerate_table("B2", {"long": 1, "short": 2})
    assert table["schema_version"] == 1
    assert table["type"] == "B2"
    assert table["rank"] == 2
    assert table["params"] == {"long": "1", "short": "2"}
    assert all(row["o"] == 0 for row in table["orbits"])
    assert table["orbits"][0]["dim"] == 2


def test_enumerate_accepts_fractions():
    a = residua.enumerate_table("B2", {"long": 1, "short": Fraction(1, 2)})
    b = residua.enumerate_table("B2", {"long": "1", "short": "1/2"})
    assert a == b


def test_enumerate_csv_header():
    csv = residua.enumerate_csv("A2", {"all": 1})
    assert csv.startswith("schema_version,type,rank,params,dim,i,o,center,")
    assert len(csv.rstrip("\n").split("\n")) == 1 + 3  # header + three orbits


def test_bad_type_raises_value_error():
    with pytest.raises(ValueError, match="valid types"):
        residua.enumerate_table("Q9")


def test_resource_cap_raises_runtime_error():
    with pytest.raises(RuntimeError):
        residua.enumerate_table("B2", max_scanned=2)


def test_verify_all_checks_pass():
    report = residua.verify("G2", {"long": 1, "short": 1})
    assert report["all_passed"] is True
    assert len(report["checks"]) == 6
    report = residua.verify("A2", checks=["T2"])
    assert [c["alias"] for c in report["checks"]] == ["T2"]


def test_scan_walls():
    report = residua.scan("B2", ["1/4", "1/2", "3/4"])
    assert [p["total_orbits"] for p in report["points"]] == [5, 4, 5]
    assert report["walls"] == ["1/2"]


def test_dynkin_counts():
    result = residua.dynkin("A2", FIXTURES)
    assert result["counts"] == {
        "distinguished_expected": 1,
        "nilpotent_expected": 3,
        "distinguished_found": 1,
        "total_orbits_found": 3,
        "match": True,
    }
    assert result["diagrams"][0]["labels"] == ["2", "2"]


def test_spectrum_mass():
    s = residua.spectrum(2, samples=64)
    assert abs(s["point_masses"][0]["mass"] - 1 / 3) < 1e-10
    assert abs(s["total"] - 1.0) < 1e-10
    assert len(s["density"]) == 64
    assert residua.density_csv(2, samples=4).startswith("schema_version,angle,value\n")


def test_spectrum_rejects_nonpositive_q():
    with pytest.raises(ValueError):
        residua.spectrum(0)


def test_numeric_helpers():
    assert abs(residua.trace_of_one(2.0, 0.25) - 1.0) < 1e-10
    assert abs(residua.eta(2.0, 0j) - 1.0) < 1e-14
    assert residua.cross_check_support("2", "1") is True
    assert residua.cross_check_support("2", "-1") is False


def test_diff_oracle_identity():
    result = residua.diff_oracle("A2")
    assert result["equal"] is True
    assert result["enumerator_flats"] == 13
    assert result["only_enumerator"] == []
