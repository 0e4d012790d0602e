import json

import pytest

from hopfwit.entwine import entwining_from_doi_koppinen, entwining_relative_hopf, flip_entwining
from hopfwit.errors import ContextMismatch, ParseError
from hopfwit.exactfield import GF, QQ, FieldSpec, field_construct
from hopfwit.serialize import (
    content_hash, dump, load_entwining, load_field, load_matrix, load_module, load_structure,
    witness_from_json, witness_to_json,
)
from hopfwit.strucalg import (
    S3_TABLE, cyclic_group_table, group_algebra, regular_module, sweedler_h4,
)
from hopfwit.witness import solve_normalized_integral, solve_theta


def rt(obj):
    return json.loads(json.dumps(dump(obj)))


@pytest.mark.parametrize("H", [group_algebra(S3_TABLE, GF(5)), sweedler_h4(QQ()),
                               group_algebra(cyclic_group_table(2), field_construct(
                                   FieldSpec.ratfunc(3, "u")))],
                         ids=["S3/GF5", "H4", "C2/ratfunc"])
def test_presentation_round_trip(H):
    back = load_structure(rt(H))
    assert back == H
    assert content_hash(back) == content_hash(H)


def test_parts_round_trip():
    H = sweedler_h4(QQ())
    assert load_structure(rt(H.algebra)) == H.algebra
    assert load_structure(rt(H.coalgebra)) == H.coalgebra
    M = regular_module(H.algebra)
    assert load_module(rt(M)) == M


def test_entwining_forms():
    H = group_algebra(cyclic_group_table(2), QQ())
    e = entwining_relative_hopf(H)
    assert load_entwining(rt(e)).psi == e.psi
    assert load_entwining(rt(e.datum)).psi == e.psi
    assert load_entwining({"construction": "relative-hopf", "L": dump(H)}).psi == e.psi
    assert load_entwining({"construction": "flip", "A": dump(H.algebra)}).psi == \
        flip_entwining(H.algebra).psi
    with pytest.raises(ParseError):
        load_entwining({"construction": "mystery"})


def test_matrix_forms():
    F = QQ()
    m = load_matrix(F, [["1/2", 0], [1, "3"]])
    assert load_matrix(F, m.to_json()) == m
    with pytest.raises(ParseError):
        load_matrix(F, "nope")


def test_malformed_presentations():
    with pytest.raises(ParseError):
        load_structure([])
    with pytest.raises(ParseError):
        load_structure({"field": {"kind": "Q"}, "dim": 2, "mult": [[1]]})
    with pytest.raises(ParseError):
        load_structure({"field": {"kind": "Q"}, "dim": "two"})
    with pytest.raises(ParseError):
        load_field("Q")


def test_witness_round_trip_and_context():
    H = group_algebra(cyclic_group_table(2), QQ())
    w = solve_normalized_integral(H)
    obj = json.loads(json.dumps(witness_to_json(w)))
    back = witness_from_json(obj, {"H": load_structure(rt(H))})
    assert back.data == w.data and back.verify().passed
    other = group_algebra(cyclic_group_table(3), QQ())
    with pytest.raises(ContextMismatch):
        witness_from_json(obj, {"H": other})


def test_theta_witness_round_trip():
    H = sweedler_h4(QQ())
    e = entwining_relative_hopf(H)
    w = solve_theta(e)
    obj = json.loads(json.dumps(witness_to_json(w)))
    back = witness_from_json(obj, {"entwining": load_entwining(rt(e))})
    assert back.verify().passed
