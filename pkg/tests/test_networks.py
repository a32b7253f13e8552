import json
from fractions import Fraction

import pytest

from src.algebra.series import Series
from src.algebra.words import Alphabet, enumerate_words
from src.core.exceptions import (
    AlphabetMismatchError,
    DimensionMismatchError,
    ParseError,
    SpecValidationError,
)
from src.engine.representation import coefficient, generating_series
from src.models.builders import (
    build_additive,
    build_cascade,
    build_multiplicative,
    build_representation,
    network_from_series,
)
from src.models.composition import compose
from src.models.network_spec import (
    NodeSpec,
    WeightMatrix,
    factorial_geometric,
    network_document,
    parse_network_spec,
)


def _co(c, *word):
    return c.support.get(tuple(word), Fraction(0))


def _single_node(kind, terms, degree=3, M=None):
    doc = {"m": 1, "kind": kind, "degree": degree, "nodes": [{"series": {"terms": terms}}]}
    doc["M"] = M if M is not None else [["1"]]
    return doc


# =================================================================
# REDES ADITIVAS
# =================================================================

def test_additive_single_node_closed_forms(x1, make_polynomial):
    for _ in range(20):
        c = make_polynomial(x1, 3)
        rep = build_additive(network_from_series("additive", [c], [[1]], 3))
        c0 = _co(c)
        expected = {
            (): c0,
            (1,): _co(c, 1),
            (0,): _co(c, 0) + _co(c, 1) * c0,
            (1, 1): _co(c, 1, 1),
            (0, 1): _co(c, 0, 1) + _co(c, 1) ** 2 + _co(c, 1, 1) * c0,
            (1, 0): _co(c, 1, 0) + _co(c, 1, 1) * c0,
            (0, 0): (_co(c, 0, 0) + _co(c, 1) * _co(c, 0) + _co(c, 1, 0) * c0 + _co(c, 0, 1) * c0
                     + _co(c, 1) ** 2 * c0 + _co(c, 1, 1) * c0 ** 2),
        }
        for word, value in expected.items():
            assert coefficient(rep, 1, word) == value, word


def test_additive_feedback_weight_scales_drift_coefficient(x1):
    c = Series(x1, {(): 3, (1,): 2, (0,): 5})
    rep = build_additive(network_from_series("additive", [c], [[Fraction(1, 2)]], 2))
    assert coefficient(rep, 1, (0,)) == 5 + 2 * Fraction(1, 2) * 3


def test_additive_two_nodes_closed_forms(make_polynomial):
    X2 = Alphabet(2)
    c1 = make_polynomial(X2, 3, letters=(0, 1))
    c2 = make_polynomial(X2, 3, letters=(0, 2))
    rep = build_additive(network_from_series("additive", [c1, c2], [[0, 1], [1, 0]], 3))
    s2 = _co(c2)
    expected = {
        (): _co(c1), (1,): _co(c1, 1), (2,): 0,
        (0,): _co(c1, 0) + _co(c1, 1) * s2,
        (1, 1): _co(c1, 1, 1), (1, 2): 0, (2, 1): 0, (2, 2): 0,
        (1, 0): _co(c1, 1, 0) + _co(c1, 1, 1) * s2,
        (0, 1): _co(c1, 0, 1) + _co(c1, 1, 1) * s2,
    }
    for word, value in expected.items():
        assert coefficient(rep, 1, word) == value, word
    assert coefficient(rep, 2, (0,)) == _co(c2, 0) + _co(c2, 2) * _co(c1)


def test_additive_three_nodes_closed_forms(make_polynomial):
    X3 = Alphabet(3)
    c1, c2, c3 = (make_polynomial(X3, 3, letters=(0, i)) for i in (1, 2, 3))
    ones = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    rep = build_additive(network_from_series("additive", [c1, c2, c3], ones, 3))
    feedback = _co(c2) + _co(c3)
    assert coefficient(rep, 1, ()) == _co(c1)
    assert coefficient(rep, 1, (1,)) == _co(c1, 1)
    assert coefficient(rep, 1, (1, 1)) == _co(c1, 1, 1)
    assert coefficient(rep, 1, (0,)) == _co(c1, 0) + _co(c1, 1) * feedback
    assert coefficient(rep, 1, (1, 0)) == _co(c1, 1, 0) + _co(c1, 1, 1) * feedback
    assert coefficient(rep, 1, (0, 1)) == _co(c1, 0, 1) + _co(c1, 1, 1) * feedback
    for word in ((2,), (3,), (1, 2), (1, 3), (3, 3)):
        assert coefficient(rep, 1, word) == 0


def test_zero_weights_decouple_the_network(make_polynomial):
    X2 = Alphabet(2)
    c1 = make_polynomial(X2, 3, letters=(0, 1))
    c2 = make_polynomial(X2, 3, letters=(0, 2))
    rep = build_additive(network_from_series("additive", [c1, c2], [[0, 0], [0, 0]], 3))
    assert generating_series(rep, 1, 3) == c1
    assert generating_series(rep, 2, 3) == c2


# =================================================================
# REDES MULTIPLICATIVAS
# =================================================================

def test_multiplicative_single_node_closed_forms(x1, make_polynomial):
    for _ in range(10):
        c = make_polynomial(x1, 3)
        rep = build_multiplicative(network_from_series("multiplicative", [c], [[1]], 3))
        c0 = _co(c)
        expected = {
            (): c0,
            (0,): _co(c, 0),
            (1,): _co(c, 1) * c0,
            (0, 0): _co(c, 0, 0),
            (0, 1): _co(c, 0, 1) * c0,
            (1, 0): _co(c, 1, 0) * c0 + _co(c, 1) * _co(c, 0),
            (1, 1): _co(c, 1, 1) * c0 ** 2 + _co(c, 1) ** 2 * c0,
        }
        for word, value in expected.items():
            assert coefficient(rep, 1, word) == value, word


def test_multiplicative_factorial_loop(x1):
    c = factorial_geometric(x1, 1, 4)
    d = generating_series(build_multiplicative(network_from_series("multiplicative", [c], [[1]], 4)), 1, 4)
    assert [_co(d, *(1,) * k) for k in range(5)] == [1, 1, 3, 15, 105]
    assert all(_co(d, *w) == 0 for w in enumerate_words(x1, 4) if 0 in w)


def test_multiplicative_zero_weight_kills_input_path(make_polynomial):
    X2 = Alphabet(2)
    c1 = make_polynomial(X2, 2, letters=(0, 1))
    c2 = make_polynomial(X2, 2, letters=(0, 2))
    rep = build_multiplicative(network_from_series("multiplicative", [c1, c2], [[1, 0], [2, 3]], 2))
    for word in ((1,), (1, 0), (0, 1), (1, 1)):
        assert coefficient(rep, 1, word) == 0
    assert coefficient(rep, 2, (2,)) == 6 * _co(c2, 2) * _co(c1) * _co(c2)


def test_multiplicative_unit_series_is_open_loop(x1):
    rep = build_multiplicative(network_from_series("multiplicative", [Series.one(x1)], [[1]], 3))
    assert generating_series(rep, 1, 3) == Series.one(x1)


# =================================================================
# CASCATA
# =================================================================

def test_cascade_with_zero_inner_series_keeps_drift_words(x1, make_polynomial):
    c = make_polynomial(x1, 3)
    d = generating_series(build_cascade(c, Series.zero(x1)), 1, 3)
    expected = Series(x1, {(0,) * k: _co(c, *(0,) * k) for k in range(4)})
    assert d == expected
    assert compose(c, (Series.zero(x1),), 3) == expected


def test_cascade_needs_single_input_alphabet(x2):
    with pytest.raises(DimensionMismatchError):
        build_cascade(Series.one(x2), Series.one(x2))


def test_build_representation_dispatches_on_kind(x1):
    spec = network_from_series("cascade", [Series.word(x1, (1, 1)), Series.letter(x1, 1)], degree=4)
    rep = build_representation(spec)
    assert rep.label == "cascade"
    assert generating_series(rep, 1, 4) == Series(x1, {(0, 1, 0, 1): 1, (0, 0, 1, 1): 2})


# =================================================================
# ESPECIFICAÇÃO DE REDE
# =================================================================

def test_parse_minimal_additive_document(x1):
    spec = parse_network_spec(_single_node("additive", [{"word": "x1", "coeff": "1"}]))
    assert spec.m == 1 and spec.kind == "additive" and spec.degree == 3
    assert spec.series[0] == Series.letter(x1, 1)
    assert spec.series[0].cap == 3
    assert spec.M[1, 1] == 1


def test_parse_reads_json_text_and_files(tmp_path):
    doc = _single_node("additive", [{"word": "", "coeff": "-1/2"}, {"word": "x0 x1", "coeff": 3}])
    from_text = parse_network_spec(json.dumps(doc))
    path = tmp_path / "rede.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    from_file = parse_network_spec(str(path))
    assert from_text.series == from_file.series
    assert from_file.series[0].coefficient(()) == Fraction(-1, 2)


def test_parse_rejects_invalid_json():
    with pytest.raises(ParseError, match="invalid JSON"):
        parse_network_spec('{"m": 1,')


def test_degree_argument_overrides_document():
    doc = _single_node("additive", [{"word": "x1 x1 x1", "coeff": "1"}], degree=5)
    assert parse_network_spec(doc).series[0].coefficient((1, 1, 1)) == 1
    truncated = parse_network_spec(doc, degree=2)
    assert truncated.degree == 2
    assert truncated.series[0].is_zero


def test_degree_falls_back_to_environment(monkeypatch):
    monkeypatch.setenv("CFNET_DEFAULT_DEGREE", "2")
    doc = _single_node("additive", [{"word": "x1", "coeff": "1"}])
    del doc["degree"]
    assert parse_network_spec(doc).degree == 2


def test_foreign_letter_is_reported_with_node(x2):
    doc = _single_node("additive", [{"word": "x2", "coeff": "1"}])
    doc.update(m=2, M=[["0", "0"], ["0", "0"]])
    doc["nodes"].append({"series": {"terms": [{"word": "x2", "coeff": "1"}]}})
    with pytest.raises(AlphabetMismatchError, match=r"nodes\[0\]: node 1 uses foreign letter x2"):
        parse_network_spec(doc)


def test_bad_word_and_coefficient_are_path_qualified():
    doc = _single_node("additive", [{"word": "x1 z", "coeff": "1"}])
    with pytest.raises(ParseError, match=r"nodes\[0\]\.series\.terms\[0\]\.word"):
        parse_network_spec(doc)
    doc = _single_node("additive", [{"word": "x1", "coeff": "1/0"}])
    with pytest.raises(ParseError, match=r"nodes\[0\]\.series\.terms\[0\]\.coeff"):
        parse_network_spec(doc)
    doc = _single_node("additive", [{"word": "x1", "coeff": "1"}], M=[["a"]])
    with pytest.raises(ParseError, match=r"M\[0\]\[0\]"):
        parse_network_spec(doc)


def test_schema_violations_raise_validation_error():
    doc = _single_node("feedback", [{"word": "x1", "coeff": "1"}])
    with pytest.raises(SpecValidationError, match="kind: expected one of"):
        parse_network_spec(doc)
    doc = _single_node("additive", [{"word": "x1", "coeff": "1"}], M=[["1"], ["0"]])
    with pytest.raises(SpecValidationError, match="M: expected 1 rows"):
        parse_network_spec(doc)


def test_factorial_geometric_builtin(x1):
    doc = {"m": 1, "kind": "multiplicative", "degree": 3, "M": [["1"]],
           "nodes": [{"series": {"builtin": "factorial_geometric", "letter": 1}}]}
    spec = parse_network_spec(doc)
    assert spec.series[0] == Series(x1, {(): 1, (1,): 1, (1, 1): 2, (1, 1, 1): 6})
    assert factorial_geometric(x1, 1, 3) == spec.series[0]


def test_cascade_document_ignores_weights(x1):
    doc = {"m": 2, "kind": "cascade", "degree": 4, "M": [["5"]],
           "nodes": [{"series": {"terms": [{"word": "x1 x1", "coeff": "1"}]}},
                     {"series": {"terms": [{"word": "x1", "coeff": "1"}]}}]}
    spec = parse_network_spec(doc)
    assert spec.alphabet == x1
    assert spec.M.is_zero
    assert [node.input_letter for node in spec.nodes] == [1, 1]


def test_cascade_document_needs_two_nodes():
    doc = {"m": 1, "kind": "cascade", "nodes": [{"series": {"terms": []}}]}
    with pytest.raises(SpecValidationError):
        parse_network_spec(doc)


def test_network_document_round_trip(make_polynomial):
    X2 = Alphabet(2)
    c1 = make_polynomial(X2, 2, letters=(0, 1))
    c2 = make_polynomial(X2, 2, letters=(0, 2))
    doc = network_document("additive", [c1, c2], [[0, Fraction(1, 3)], [1, 0]], degree=2)
    spec = parse_network_spec(json.loads(json.dumps(doc)))
    assert spec.series == (c1, c2)
    assert spec.M[1, 2] == Fraction(1, 3)


def test_node_and_matrix_invariants(x2):
    with pytest.raises(AlphabetMismatchError, match="node 1 uses foreign letter x2"):
        NodeSpec(1, Series.letter(x2, 2), 1)
    with pytest.raises(DimensionMismatchError):
        WeightMatrix.from_rows([[1, 2]])
    assert WeightMatrix.from_rows([[2, 3], [0, 1]]).row_product(1) == 6
