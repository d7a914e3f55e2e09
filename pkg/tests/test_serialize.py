import json

from hypothesis import given

from tropalg import BOOLEAN, MAXPLUS, MINPLUS, ZERO, Matrix, UnivariatePoly, classify, det_report
from tropalg.serialize import (
    det_report_to_json, form_from_json, matrix_from_json, matrix_to_json, poly_from_json,
    poly_to_json, report_to_json, roots_to_json, vector_from_json, vector_to_json,
)
from tropalg.polynomials import roots

from strategies import matrices, maxplus_values


def test_matrix_schema():
    a = Matrix(MAXPLUS, [[2, 1], [1, ZERO]])
    obj = matrix_to_json(a)
    assert obj == {"semifield": "maxplus", "rows": 2, "cols": 2, "entries": [["2", "1"], ["1", "-inf"]]}
    assert matrix_from_json(obj) == a


def test_minplus_and_f1_values():
    assert vector_to_json(MINPLUS, (ZERO, 3)) == ["+inf", "3"]
    assert vector_to_json(BOOLEAN, (0, 1)) == [0, 1]
    assert vector_from_json(BOOLEAN, [0, 1]) == (0, 1)


@given(matrices(max_dim=4, entries=maxplus_values))
def test_matrix_round_trip(a):
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(a)))) == a


def test_rationals_as_strings():
    obj = {"semifield": "maxplus", "entries": [["1/2", "-3/4"]]}
    a = matrix_from_json(obj)
    assert matrix_to_json(a)["entries"] == [["1/2", "-3/4"]]


def test_polynomial_schema():
    obj = {"semifield": "maxplus", "coeffs": {"0": "4", "1": "3", "2": "0"}}
    p = poly_from_json(obj)
    assert p == UnivariatePoly(MAXPLUS, {0: 4, 1: 3, 2: 0})
    assert poly_to_json(p) == obj
    assert roots_to_json(MAXPLUS, roots(p)) == {
        "semifield": "maxplus",
        "roots": [{"value": "3", "multiplicity": 1}, {"value": "1", "multiplicity": 1}]}


def test_form_inputs():
    assert form_from_json({"coefficients": ["0", "-inf"]}).coefficients == (0, ZERO)
    assert form_from_json({"entries": [["1", "2"]]}).coefficients == (1, 2)


def test_reports():
    g3 = Matrix(MAXPLUS, [[0, 0, ZERO], [ZERO, 0, 0], [0, ZERO, 0]])
    obj = report_to_json(classify(g3), MAXPLUS)
    assert obj["d_singular"] and not obj["D_singular"]
    assert obj["witness"]["x"] == ["0", "0", "0"]
    a1 = matrix_from_json(obj["witness"]["a1"])
    a2 = matrix_from_json(obj["witness"]["a2"])
    assert a1.shape == a2.shape == (3, 3)
    d = det_report_to_json(det_report(Matrix(MAXPLUS, [[2, 1], [1, 2]])), MAXPLUS)
    assert d["det"] == "4" and d["det_minus"] == "2"
    assert d["optimal_odd"] == [{"image": [2, 1], "parity": "odd"}]
