import pytest

from rectdrop.errors import ScriptError
from rectdrop.geometry import Skyline
from rectdrop.rdds import new_rdds
from rectdrop.wire import (
    dumps_skyline,
    format_script,
    loads_skyline,
    parse_script,
    skyline_to_wire,
    wire_to_skyline,
)


def test_wire_roundtrip_fresh_board():
    sky = new_rdds(10).snapshot()
    assert loads_skyline(dumps_skyline(sky)) == sky


def test_wire_roundtrip_after_ops(rng):
    r = new_rdds(37)
    for _ in range(200):
        w = rng.randint(1, 12)
        r.update(w, rng.randint(1, 5), rng.randint(0, 37 - w))
    sky = r.snapshot()
    assert loads_skyline(dumps_skyline(sky)) == sky


def test_wire_shape():
    obj = skyline_to_wire(Skyline(6, ((0, 0), (2, 5))))
    assert obj == {"board_width": 6, "runs": [[0, 0], [2, 5]]}


def test_wire_rejects_non_canonical():
    with pytest.raises(ValueError):
        wire_to_skyline({"board_width": 6, "runs": [[1, 0]]})
    with pytest.raises(ValueError):
        wire_to_skyline({"board_width": 6, "runs": [[0, 2], [3, 2]]})
    with pytest.raises(ValueError):
        wire_to_skyline({"board_width": 6, "runs": [[0, 2], [6, 3]]})


def test_parse_script():
    ops = parse_script("# a comment\nU 4 3 0\n\nQ 3 2\n")
    assert ops == [("U", 4, 3, 0), ("Q", 3, 2)]
    assert parse_script(format_script(ops)) == ops


def test_parse_script_errors_carry_line_numbers():
    with pytest.raises(ScriptError) as e:
        parse_script("U 4 3 0\nQ nope 2\n")
    assert e.value.lineno == 2
    with pytest.raises(ScriptError):
        parse_script("U 1 2\n")  # missing x
