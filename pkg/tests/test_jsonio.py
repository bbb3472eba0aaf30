import json
import math

import numpy as np
import pytest

from normtrace import jsonio
from normtrace.errors import MatrixFileError


def test_dumps_is_valid_json_and_deterministic():
    obj = {"b": [1, 2.5, "x"], "a": {"nested": [True, None]}}
    t1 = jsonio.dumps(obj)
    t2 = jsonio.dumps(obj)
    assert t1 == t2
    assert json.loads(t1) == obj


def test_dumps_float_precision_round_trips():
    x = 0.1 + 0.2
    assert json.loads(jsonio.dumps({"v": x}))["v"] == x
    assert json.loads(jsonio.dumps({"v": 1e-300}))["v"] == 1e-300


def test_dumps_infinities_become_strings():
    t = jsonio.dumps({"p": math.inf, "q": -math.inf})
    payload = json.loads(t)
    assert payload == {"p": "inf", "q": "-inf"}
    with pytest.raises(ValueError):
        jsonio.dumps({"v": math.nan})


def test_matrix_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    m = (rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))) / np.sqrt(2)
    path = tmp_path / "m.json"
    jsonio.write_matrix_file(path, m)
    back = jsonio.read_matrix_file(path)
    assert back.dtype == np.complex128
    assert np.array_equal(back, m)


def test_matrix_text_shape():
    text = jsonio.matrix_to_text(np.array([[1.0 + 2.0j]]))
    payload = json.loads(text)
    assert payload["rows"] == 1 and payload["cols"] == 1
    assert payload["data"] == [[1.0, 2.0]]
    assert text.endswith("\n")


@pytest.mark.parametrize(
    "bad",
    [
        '{"rows": 1, "cols": 1}',
        '{"rows": 1, "cols": 2, "data": [[1, 0]]}',
        '{"rows": 1, "cols": 1, "data": [[1]]}',
        '{"rows": 1, "cols": 1, "data": [["a", 0]]}',
        '{"rows": 0, "cols": 1, "data": []}',
        '{"rows": 1, "cols": 1, "data": [[true, 0]]}',
        "[1, 2, 3]",
        "not json",
    ],
)
def test_matrix_from_text_rejects_malformed(bad):
    with pytest.raises(MatrixFileError):
        jsonio.matrix_from_text(bad)


def test_matrix_to_text_rejects_non_finite():
    with pytest.raises(MatrixFileError):
        jsonio.matrix_to_text(np.array([[np.inf]]))
