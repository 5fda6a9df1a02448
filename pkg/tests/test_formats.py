from pathlib import Path

import pytest
from hypothesis import given

from conftest import generated_instances, graphs
from onechroma import fixtures as F
from onechroma.coloring import exact_chromatic_index
from onechroma.drawing import validate_drawing
from onechroma.formats import (
    ParseError,
    detect_format,
    format_coloring,
    format_edgelist,
    format_opg,
    load,
    parse_edgelist,
    parse_opg,
)
from onechroma.generator import GenSpec, Mode, gen_theorem1_instance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.mark.parametrize("name", sorted({**F.CURATED, **F.EXTRA}))
def test_shipped_fixture_matches_builder(name):
    build = {**F.CURATED, **F.EXTRA}[name]
    assert load(FIXTURES / f"{name}.opg") == build()


def test_shipped_petersen():
    assert load(FIXTURES / "petersen.el") == F.petersen()


@pytest.mark.parametrize("name,seed,mode", [
    ("gen_bipartite_s7", 7, Mode.BIPARTITE),
    ("gen_trianglefree_s8", 8, Mode.TRIANGLE_FREE),
])
def test_shipped_generated_fixtures_reproduce(name, seed, mode):
    d = load(FIXTURES / f"{name}.opg")
    inst = gen_theorem1_instance(GenSpec(seed, 30, 7, 5, mode))
    assert d == inst.drawing


def test_bad_fixture_parses_but_does_not_validate():
    d = load(FIXTURES / "bad_shared_endpoint.opg")
    assert "shared endpoint" in validate_drawing(d).kinds()


def test_detect_format():
    assert detect_format("# c\n\nopg 1\nv 0\n") == "opg"
    assert detect_format("v 3\n") == "edgelist"
    assert detect_format("") == "edgelist"


def test_edgelist_comments_and_blank_lines():
    g = parse_edgelist("# hi\nv 3\n\ne 0 1  # trailing\ne 2 1\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text,lineno,fragment", [
    ("v 3\ne 0 3\n", 2, "out of range"),
    ("v 3\ne 0 1\ne 1 0\n", 3, "duplicate"),
    ("v 3\ne 1 1\n", 2, "loop"),
    ("v x\n", 1, "integer"),
    ("e 0 1\n", 1, "before vertex count"),
    ("v 3\nq 1\n", 2, "unknown record"),
    ("v 3\nv 4\n", 2, "repeated"),
])
def test_edgelist_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_edgelist(text, "g.el")
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"g.el:{lineno}:")


def test_edgelist_missing_header():
    with pytest.raises(ParseError, match="missing"):
        parse_edgelist("")


@pytest.mark.parametrize("text,lineno,fragment", [
    ("opg 2\n", 1, "magic"),
    ("opg 1\nv 2\nx (0 1) (1 0) 3\n", 3, "orientation"),
    ("opg 1\nv 2\nx 0 1 2 3\n", 3, "expected 'x"),
    ("opg 1\nv 2\nr 0: 1\ne 0 1\n", 4, "out of order"),
    ("opg 1\nv 2\ne 0 1\nr 5: 1\n", 4, "out of range"),
    ("opg 1\nv 2\ne 0 1\nr 0: 1\nr 0: 1\n", 5, "second rotation"),
    ("opg 1\nv 2\ne 0 1\nr 0 1\n", 4, "r u: tokens"),
    ("opg 1\nv 2\ne 0 1\nr 0: q\n", 4, "integer"),
    ("opg 1\ne 0 1\n", 2, "missing"),
])
def test_opg_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_opg(text)
    assert exc.value.lineno == lineno


def test_opg_empty_file():
    with pytest.raises(ParseError, match="empty"):
        parse_opg("# nothing\n")


def test_opg_header_is_a_comment():
    text = format_opg(F.hexx(), {"seed": 3})
    assert "# seed: 3" in text
    assert parse_opg(text) == F.hexx()


def test_coloring_listing():
    text = format_coloring(exact_chromatic_index(F.cycle_graph(4)).witness)
    lines = text.splitlines()
    assert lines[0] == "colors 2"
    assert [ln.split()[1:3] for ln in lines[1:]] == [["0", "1"], ["0", "3"], ["1", "2"], ["2", "3"]]


@given(graphs())
def test_edgelist_roundtrip(g):
    assert parse_edgelist(format_edgelist(g)) == g


@given(generated_instances())
def test_opg_roundtrip(inst):
    text = format_opg(inst.drawing, inst.metadata())
    assert parse_opg(text) == inst.drawing
    assert format_opg(parse_opg(text)) == format_opg(inst.drawing)
