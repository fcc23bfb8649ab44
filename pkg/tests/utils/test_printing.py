import pytest

from qwalk_bolts.utils.printing import dicts_to_table, evidence_to_table


def test_table_with_pads():
    table = dicts_to_table([{"check": "gap", "passed": True}], pads=["<6", ">7"])
    assert table.splitlines() == ["check │ passed", "─" * 14, "gap   │   True"]


def test_nested_cells_as_json():
    table = evidence_to_table({"squares": [512, 18], "delta": None})
    assert table.splitlines()[2:] == ["squares│[512, 18]", "delta│None"]


def test_bad_input():
    with pytest.raises(ValueError):
        dicts_to_table([])
    with pytest.raises(ValueError):
        dicts_to_table([{"a": 1}], pads=["", ""])
    assert dicts_to_table([], keys=["a"]).splitlines()[0] == "a"
