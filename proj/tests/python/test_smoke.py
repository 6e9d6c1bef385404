import json
import os
from pathlib import Path

import pytest

import pnrd

DATA = Path(os.environ.get("PNRD_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def exe_document():
    return pnrd.Document((DATA / "exe.json").read_text())


def test_root_profile():
    assert pnrd.root_profile(["0", "1", "1"]) == {"positive": 0, "zero": 1, "negative": 1}
    assert pnrd.root_profile(["2", "-3", "0", "1"]) == {"positive": 2, "zero": 0, "negative": 1}


def test_poly_sqrt():
    assert pnrd.poly_sqrt(["1", "2", "1"]) == ["1", "1"]
    assert pnrd.poly_sqrt(["1", "1", "1"]) is None


def test_oracle():
    assert pnrd.oracle_chi([["2", "1"], ["1", "1"]]) == "1"
    assert pnrd.oracle_inertia([["0", "0"], ["0", "1"]]) == (1, 1, 0)
    assert pnrd.oracle_regcont([["0", "0"], ["0", "1"]], -5, 5) == 1
    with pytest.raises(pnrd.Error):
        pnrd.oracle_chi([["0", "1"], ["2", "0"]])


def test_document():
    doc = exe_document()
    assert doc.g == 2
    assert "L" in doc.classes
    assert doc.hilbert("L")["q"] == ["0", "1", "1"]
    assert doc.euler_char("ample2") == "4"
    assert doc.classify("L")["label"] == "WIT(1)-generic"
    assert doc.reg_cont("L") == 1
    assert doc.reg_cont("ample2", rank=2) == 1
    with pytest.raises(KeyError):
        doc.euler_char("missing")


def test_bad_document():
    with pytest.raises(pnrd.Error):
        pnrd.Document((DATA / "bad_type.json").read_text())


def test_cli_roundtrip():
    status, out, err = pnrd.run(["regcont", "--input", str(DATA / "exe.json"), "--class", "L", "--output", "json"])
    assert status == 0, err
    assert out.startswith('{"m":1,"g":2,')
    assert json.dumps(json.loads(out), separators=(",", ":")) + "\n" == out
    status, _, _ = pnrd.run(["chi", "--input", str(DATA / "not_square.json"), "--class", "theta"])
    assert status == 3
