import json

import pytest

from hstarcodes import io
from hstarcodes.codes import simplex_code
from hstarcodes.config import Caps, load_caps, parse_caps
from hstarcodes.errors import HStarError
from hstarcodes.finitefield import make_field
from hstarcodes.bernoulli import nonvanishing_sweep
from hstarcodes.groups import lambda_of
from hstarcodes.lattice import LatticePolytope, LatticeSimplex


def test_caps_from_env():
    assert load_caps({}) == Caps()
    assert load_caps({"HSTAR_CAPS": '{"volume": 5}'}).volume == 5
    with pytest.raises(HStarError):
        load_caps({"HSTAR_CAPS": '{"bogus": 1}'})
    with pytest.raises(HStarError):
        load_caps({"HSTAR_CAPS": '{"volume": 0}'})
    with pytest.raises(HStarError):
        parse_caps("[1]")


def test_big_integers_as_strings():
    big = 2**70
    assert io.enc_int(big) == str(big)
    assert io.enc_int(5) == 5
    assert io.dec_int(str(big)) == big
    with pytest.raises(HStarError):
        io.dec_int(1.5)
    s = io.polytope_from_json({"dim": 1, "vertices": [["0"], [str(big)]]})
    assert s.volume == big
    assert io.polytope_to_json(s)["vertices"][1] == [str(big)]


def test_polytope_round_trip():
    obj = {"dim": 2, "vertices": [[0, 0], [2, 0], [0, 2]]}
    s = io.polytope_from_json(obj)
    assert isinstance(s, LatticeSimplex)
    assert io.polytope_to_json(s) == obj
    sq = io.polytope_from_json({"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]})
    assert isinstance(sq, LatticePolytope)
    with pytest.raises(HStarError):
        io.polytope_from_json({"dim": 3, "vertices": [[0, 0]]})


def test_group_round_trip():
    g = lambda_of(LatticeSimplex([[0, 0], [2, 0], [0, 2]]))
    obj = io.group_to_json(g)
    assert obj["elements"][0] == ["0", "0", "0"]
    assert io.group_from_json(obj) == g
    # zero may be left out on input
    obj["elements"] = obj["elements"][1:]
    assert io.group_from_json(obj) == g


def test_code_formats():
    code = simplex_code(3, 2)
    obj = io.code_to_json(code)
    assert io.code_from_json(obj) == code
    assert io.read_code(json.dumps(obj)) == code
    assert io.read_code("# simplex code\n0 1 1 1\n1 0 1 2\n", 3) == code
    with pytest.raises(HStarError):
        io.read_code("0 1 1 1\n", None)
    with pytest.raises(HStarError):
        io.read_code("0 1 3 1\n", 3)
    with pytest.raises(HStarError):
        io.code_from_json(obj, p=5)


def test_sweep_format():
    obj = io.sweep_to_json(nonvanishing_sweep(make_field(3, 2)))
    assert obj["p"] == 3 and obj["r"] == 2
    assert obj["modulus"] == [1, 0, 1] and obj["generator"] == [1, 1]
    assert obj["characters"][1] == {"j": 1, "odd": True, "is_zero": False,
                                    "norm_square": "1/3", "value": obj["characters"][1]["value"]}
    json.dumps(obj)
