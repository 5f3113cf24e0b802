import json
from fractions import Fraction

import pytest

from generators import random_divisor, random_graph
from reesfiber import io
from reesfiber.dualgraph import QDivisor
from reesfiber.errors import InputError
from reesfiber.oracle import FiltrationSpecM


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (5, Fraction(5)), (" 1/3 ", Fraction(1, 3))])
def test_parse_rational(text, value):
    assert io.parse_rational(text) == value


@pytest.mark.parametrize("bad", ["2/4", "1/0", "1.5", "a/b", "", 0.5, True, None, [1]])
def test_parse_rational_rejects(bad):
    with pytest.raises(InputError):
        io.parse_rational(bad)


def test_format_rational():
    assert io.format_rational(Fraction(6, 3)) == "2"
    assert io.format_rational(Fraction(-1, 3)) == "-1/3"


def test_graph_round_trip(rng):
    for _ in range(30):
        g = random_graph(rng)
        back = io.graph_from_json(json.loads(io.dumps(io.graph_to_json(g))))
        assert back.matrix == g.matrix
        assert back.curves == g.curves
        assert back.externals == g.externals


def test_divisor_round_trip(rng):
    for _ in range(30):
        d = random_divisor(rng, random_graph(rng))
        assert io.divisor_from_json(io.divisor_to_json(d)) == d


def test_divisor_rejects_bad_keys():
    with pytest.raises(InputError):
        io.divisor_from_json({"exc": {"E1": "1"}})
    with pytest.raises(InputError):
        io.divisor_from_json({"exc": {"0": "-1"}})
    with pytest.raises(InputError):
        io.divisor_from_json([1, 2])


def test_graph_missing_fields():
    with pytest.raises(InputError, match="self_int"):
        io.graph_from_json({"curves": [{"id": 0}]})
    with pytest.raises(InputError):
        io.graph_from_json({"curves": [{"id": 0, "self_int": "-1"}]})
    with pytest.raises(InputError):
        io.graph_from_json({})


def test_load_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError, match="invalid JSON"):
        io.load_json(bad)
    with pytest.raises(InputError, match="cannot read"):
        io.load_json(tmp_path / "missing.json")


def test_sbl_file_shapes():
    assert io.sbl_components_from_json({"sbl": {"provider": "explicit", "components": [[0, 1]]}}) == [[0, 1]]
    assert io.sbl_components_from_json({"components": []}) == []
    with pytest.raises(InputError):
        io.sbl_components_from_json({"sbl": {"provider": "rational"}})
    with pytest.raises(InputError):
        io.sbl_components_from_json({"sbl": {"components": [0, 1]}})


def test_spec_round_trip():
    spec = FiltrationSpecM.of(((1, 2), 1), ((2, 1), "1/2"))
    assert io.spec_from_json(io.spec_to_json(spec)) == spec
    with pytest.raises(InputError):
        io.spec_from_json({"terms": [{"wx": 2, "wy": 4, "a": "1"}]})


def test_dumps_is_sorted():
    assert io.dumps({"b": 1, "a": 2}).index('"a"') < io.dumps({"b": 1, "a": 2}).index('"b"')
    assert io.divisor_to_json(QDivisor({0: Fraction(2, 3)}, {"F": 1})) == {"exc": {"0": "2/3"}, "ext": {"F": "1"}}
