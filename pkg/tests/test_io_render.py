from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epg import io
from epg.bipartite import construct_comb
from epg.graph import BuildSequence, CliqueCover, gen_cycle
from epg.grid import GridPath, Representation, make_pretzel
from epg.render import RenderOptions, render_svg

from conftest import alternating_paths

DATA = Path(__file__).parent / "data"


@given(st.lists(alternating_paths(), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_json_roundtrip(paths):
    rep = Representation({f"v{i}": p for i, p in enumerate(paths)})
    text = io.representation_to_json(rep)
    back = io.representation_from_json(text)
    assert back == io.canonical(rep)
    assert io.representation_to_json(back) == text


def test_json_fractions_and_orientation():
    rep = Representation({"b": GridPath(((2, 0), (Fraction(1, 2), 0))), "a": GridPath(((0, 0), (0, 1)))})
    text = io.representation_to_json(rep)
    assert text == '{\n  "a": [[0, 0], [0, 1]],\n  "b": [["1/2", 0], [2, 0]]\n}\n'
    assert io.representation_from_json(text)["b"].corners == ((Fraction(1, 2), 0), (2, 0))


@pytest.mark.parametrize(
    "text",
    ["not json", "[1, 2]", '{"a": []}', '{"a": [[0, 0, 1]]}', '{"a": [[true, 0]]}', '{"a": [["x", 0]]}'],
)
def test_json_errors(text):
    with pytest.raises(io.FormatError):
        io.representation_from_json(text)


def test_file_helpers(tmp_path):
    rep = construct_comb(2, 3)
    io.write_representation(rep, tmp_path / "r.json")
    assert io.read_representation(tmp_path / "r.json") == io.canonical(rep)
    g = gen_cycle(5)
    io.write_graph(g, tmp_path / "g.txt")
    assert io.read_graph(tmp_path / "g.txt") == g


def test_cover_and_sequence_formats():
    cover = CliqueCover.of([[["a", "b"], ["c"]], [["b", "c"]]])
    assert io.cover_from_json(io.cover_to_json(cover)) == cover
    seq = BuildSequence(2, ("a", "b", "c"), (("d", ("a", "c")),), ("_pad0",))
    assert io.sequence_from_json(io.sequence_to_json(seq)) == seq
    with pytest.raises(io.FormatError):
        io.sequence_from_json('{"k": 2}')
    with pytest.raises(io.FormatError):
        io.cover_from_json('{"a": 1}')


def test_assignment_text():
    assert io.assignment_from_text("x true\ny 0  # note\n\nz TRUE\n") == {"x": True, "y": False, "z": True}
    with pytest.raises(io.FormatError):
        io.assignment_from_text("x maybe\n")


def test_svg_golden():
    assert render_svg(construct_comb(3, 10)) == (DATA / "comb_3_10.svg").read_text()


def test_svg_is_stable_and_complete():
    rep = construct_comb(3, 4)
    a, b = render_svg(rep), render_svg(rep)
    assert a == b
    assert a.count("<polyline") == len(rep)
    assert 'data-vertex="b4"' in a


def test_svg_empty():
    out = render_svg(Representation({}))
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")
    assert "<polyline" not in out


def test_svg_pretzel_crossings():
    p, q = make_pretzel(3)
    out = render_svg(Representation({"p": p, "q": q}), RenderOptions(crossings=True, labels=False))
    assert out.count('class="crossing"') == 12
    assert "<text" not in out


def test_render_options_checked():
    with pytest.raises(ValueError):
        RenderOptions(cell_size=0)
    with pytest.raises(ValueError):
        RenderOptions(cell_size=10, path_offset=5)
