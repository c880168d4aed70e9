import json
import math

import pytest

from qcheeger.gauss1d import INF, IntervalSet, omega_T
from qcheeger.serialization import SchemaError, dumps, load, loads, shape_from_dict, shape_to_dict
from qcheeger.shapes2d import Annulus, ConvexPolygon, Disc, ShapeUnion, StarShape, annulus_family, flower

OBJECTS = [
    Disc(1.0),
    Disc(0.1 + 0.2, (1 / 3, -2 / 7)),
    Annulus(0.5, 1.25, (0.1, 0.0)),
    ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)]),
    StarShape(0.9, ((2, 0.1, -0.05), (5, 1 / 30, 0.0)), (0.2, 0.3)),
    ShapeUnion((Disc(0.5), Annulus(1.0, 1.5))),
    IntervalSet.of((-INF, -1.0), (0.25, 1 / 3), (4.0, INF)),
]


@pytest.mark.parametrize("obj", OBJECTS, ids=lambda o: type(o).__name__)
def test_round_trip_is_exact(obj):
    back = loads(dumps(obj))
    assert back == obj
    assert dumps(back) == dumps(obj)


def test_infinite_sentinels():
    doc = shape_to_dict(omega_T(4.0))
    assert doc["intervals"] == [["-inf", "-1.0"], ["4.0", "inf"]]
    json.dumps(doc, allow_nan=False)


def test_plain_numbers_accepted():
    assert shape_from_dict({"schema_version": 1, "kind": "disc", "radius": 2}) == Disc(2.0)


def test_family_kinds():
    assert shape_from_dict({"kind": "flower", "j": 5, "eps": "0.1"}) == flower(5, 0.1)
    assert shape_from_dict({"kind": "annulus_family", "j": 4}) == annulus_family(4)[0]
    assert shape_from_dict({"kind": "omega_T", "T": 3}) == omega_T(3.0)


def test_load_from_file(tmp_path):
    path = tmp_path / "disc.json"
    path.write_text(dumps(Disc(1.0)))
    assert load(path) == Disc(1.0)


@pytest.mark.parametrize("doc", [
    {"schema_version": 2, "kind": "disc", "radius": "1"},
    {"kind": "hexagon"},
    {"kind": "disc"},
    {"kind": "disc", "radius": "nan"},
    {"kind": "disc", "radius": "inf"},
    {"kind": "disc", "radius": "-1"},
    {"kind": "disc", "radius": True},
    {"kind": "disc", "radius": "1", "center": [0]},
    {"kind": "polygon", "vertices": [[0, 0], [1, 0], [2, 0]]},
    {"kind": "intervals", "intervals": [["1", "0"]]},
    {"kind": "intervals", "intervals": [["inf", "inf"]]},
    [1, 2],
])
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        shape_from_dict(doc)


def test_invalid_json_text():
    with pytest.raises(SchemaError):
        loads("{not json")


def test_unserializable():
    with pytest.raises(TypeError):
        shape_to_dict(object())


def test_repr_strings_round_trip_doubles():
    x = math.nextafter(1.0, 2.0)
    assert loads(dumps(Disc(x))).radius == x
