import json

import pytest

from gtkl.perms import chain_from_bits
from gtkl.serialize import (
    chain_from_json,
    chain_to_json,
    matrix_from_json,
    matrix_to_json,
    module_to_json,
    parse_shape,
    parse_tableau,
    permutation_from_json,
    transition_from_json,
    transition_to_json,
)
from gtkl.tableaux import Tableau, TableauError


def test_parse():
    assert parse_tableau("1,2,4/3,5") == Tableau.of([[1, 2, 4], [3, 5]])
    assert parse_tableau("[[1,3],[2]]") == Tableau.of([[1, 3], [2]])
    assert parse_shape("3,2,2") == (3, 2, 2)
    assert parse_shape("[2,1]") == (2, 1)
    with pytest.raises(TableauError):
        parse_shape("1,2")


def test_roundtrips(ws):
    chain = chain_from_bits(6, "1001")
    assert chain_from_json(json.loads(json.dumps(chain_to_json(chain)))) == chain
    assert permutation_from_json([2, 1, 3]) == (2, 1, 3)
    m = [[1, -2], [0, 3]]
    assert matrix_from_json(matrix_to_json(m)) == m
    tm = ws.transition((3, 1), "01")
    back = transition_from_json(json.loads(json.dumps(transition_to_json(tm))))
    assert back["order"] == list(tm.order) and back["entries"] == tm.entries
    assert back["phi"] == tm.phi
    data = module_to_json(ws.module((2, 1)))
    # basis order is (1,2/3), (1,3/2); column j is the image of basis vector j
    assert data["basis"] == [[[1, 2], [3]], [[1, 3], [2]]]
    assert data["generators"]["1"] == [["1/1", "0/1"], ["1/1", "-1/1"]]
    assert data["generators"]["2"] == [["-1/1", "1/1"], ["0/1", "1/1"]]
