import json
from pathlib import Path

import pytest

import onebranch as ob

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def test_classify_plane_curve():
    r = ob.classify("t^5,t^8")
    assert r["conductor"] == 28
    assert r["plane"] is True
    assert r["valuationVector"] == [5, 8]
    assert r["semigroup"][:4] == [0, 5, 8, 10]


def test_classify_non_plane():
    r = ob.classify(["t^3", "t^4", "t^5"], field="F5", char=5)
    assert r["plane"] is False
    assert r["conductor"] == 3


def test_end_chain_reaches_normalization():
    chain = ob.end_chain("t^5,t^8")
    assert chain[0]["index"] == 0
    assert chain[0]["conductor"] == 28
    assert chain[-1]["values"] == []  # values are listed below the conductor
    assert chain[-1]["conductor"] == 0
    conductors = [m["conductor"] for m in chain]
    assert conductors == sorted(conductors, reverse=True)


def test_isomorphic_shifted_ideal():
    a = json.loads((DATA / "r3star.json").read_text())
    b = json.loads((DATA / "r3star_shifted.json").read_text())
    r = ob.isomorphic(a, b, gens="t^3,t^5")
    assert r["isomorphic"] is True
    assert "witness" in r
    c = json.loads((DATA / "r3.json").read_text())
    assert ob.isomorphic(a, c, gens="t^3,t^5")["isomorphic"] is False


def test_enumerate_small_order():
    rows = ob.enumerate_classes("t^3,t^5", field="F3")
    assert len(rows) == 7
    assert all("representative" in row for row in rows)


def test_verify_end_chain():
    (report,) = ob.verify("end-chain")
    assert report["suite"] == "end-chain"
    assert all(c["ok"] for c in report["checks"])


def test_errors():
    with pytest.raises(ob.ParseError):
        ob.classify("t^^5")
    with pytest.raises(ValueError):
        ob.verify("no-such-suite")
    assert "cascade" in ob.suites
