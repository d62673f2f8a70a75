import json
from fractions import Fraction

import pytest

from poly_core import sqrt_in_extension
from reports import Report, ReportFormatError, emit_report, error_envelope


def sample(**kwargs):
    payload = {"n": 3, "value": Fraction(1, 2), "root": 1 + sqrt_in_extension(2)}
    return Report("sample", payload, **kwargs)


def test_json_envelope():
    document = json.loads(emit_report(sample()))
    assert document["success"] is True
    assert document["command"] == "sample"
    assert document["verified"] is True
    assert document["value"] == "1/2"
    assert document["root"] == {"a": "1/1", "b": "1/1", "minpoly": ["0/1", "-2/1"]}


def test_falsified_report_keeps_success():
    document = json.loads(emit_report(sample(verified=False)))
    assert document["success"] is True
    assert document["verified"] is False


def test_csv_rows():
    report = sample(rows=[{"n": 3, "hf": [1, 3, 3, 1], "c": Fraction(2, 3)}, {"n": 4, "extra": True}])
    lines = emit_report(report, "csv").splitlines()
    assert lines[0] == "n,hf,c,extra"
    assert lines[1] == '3,"[1, 3, 3, 1]",2/3,'
    assert lines[2] == "4,,,True"


def test_text_uses_prepared_text():
    assert emit_report(sample(text="1 3 3 1"), "text") == "1 3 3 1\n"


def test_text_falls_back_to_payload():
    text = emit_report(sample(verified=False), "text")
    assert text.startswith("sample: FALSIFIED")
    assert "  value: 1/2" in text


@pytest.mark.parametrize("fmt", ["csv", "svg"])
def test_unsupported_pairs(fmt):
    with pytest.raises(ReportFormatError):
        emit_report(sample(), fmt)


def test_unknown_format():
    with pytest.raises(ReportFormatError):
        emit_report(sample(), "xml")


def test_svg_passthrough():
    assert emit_report(sample(svg="<svg/>"), "svg") == "<svg/>"


def test_error_envelope():
    assert json.loads(error_envelope("bad form")) == {"success": False, "error": "bad form"}
