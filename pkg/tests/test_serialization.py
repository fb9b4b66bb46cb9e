"""JSON and CSV round trips plus the malformed-input taxonomy."""

import pytest

from chogen.designs import ChoiceDesign
from chogen.errors import FormatError
from chogen.serialization import (design_from_dict, design_to_csv,
                                  design_to_dict, dumps, load, loads, save,
                                  save_csv)

D = ChoiceDesign.from_sets([("00", "11"), ("01", "10")])


def test_dict_round_trip_with_meta():
    doc = design_to_dict(D, {"model": "main-effects"})
    assert doc["n"] == 2 and doc["m"] == 2
    assert doc["sets"] == [["00", "11"], ["01", "10"]]
    design, meta = design_from_dict(doc)
    assert design == D
    assert meta == {"model": "main-effects"}


def test_text_round_trip_without_meta():
    design, meta = loads(dumps(D))
    assert design == D and meta == {}


def test_file_round_trip(tmp_path):
    path = tmp_path / "design.json"
    save(D, path, {"tag": 7})
    design, meta = load(path)
    assert design == D and meta == {"tag": 7}


def test_csv_export(tmp_path):
    expect = (
        "set,option,treatment\n"
        "1,1,00\n1,2,11\n2,1,01\n2,2,10\n"
    )
    assert design_to_csv(D) == expect
    path = tmp_path / "design.csv"
    save_csv(D, path)
    assert path.read_text() == expect


def test_malformed_documents():
    with pytest.raises(FormatError):
        design_from_dict(["not", "an", "object"])
    with pytest.raises(FormatError):
        design_from_dict({"n": 2})
    with pytest.raises(FormatError):
        design_from_dict({"sets": []})
    with pytest.raises(FormatError):
        design_from_dict({"sets": ["oops"]})
    with pytest.raises(FormatError):
        design_from_dict({"sets": [[7, 8]]})
    with pytest.raises(FormatError):
        design_from_dict({"sets": [["00", "2x"]]})
    with pytest.raises(FormatError):
        design_from_dict({"sets": [["00", "00"]]})
    with pytest.raises(FormatError):
        design_from_dict({"sets": [["00", "11"]], "meta": "text"})


def test_declared_shape_must_match():
    with pytest.raises(FormatError):
        design_from_dict({"n": 3, "sets": [["00", "11"]]})
    with pytest.raises(FormatError):
        design_from_dict({"m": 4, "sets": [["00", "11"]]})


def test_invalid_json_text():
    with pytest.raises(FormatError):
        loads("{nope")


def test_load_missing_file(tmp_path):
    with pytest.raises(FormatError):
        load(tmp_path / "absent.json")
