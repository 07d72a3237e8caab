"""Tests for the ideal text, degree, JSON and Macaulay2 formats."""
from pathlib import Path

import pytest

from models.complex import SimplicialComplex
from models.errors import DimensionMismatchError, ParseError
from models.monomial import MonomialIdeal, ideal_sum, power
from models.vertices import to_mask
from services.degree_complex import degree_complex_direct, reference_degree_complex
from utils.formats import (
    complex_from_dict,
    complex_to_dict,
    dumps,
    format_ideal,
    format_monomial,
    macaulay2_ring,
    one_based_mask,
    parse_gamma,
    parse_ideal,
    read_macaulay2_fixture,
    to_macaulay2,
)


def test_parse_ideal_basic():
    I = parse_ideal("n=4; x1*x2, x2^2*x3")
    assert I.n == 4
    assert I.generators == ((0, 2, 1, 0), (1, 1, 0, 0))


def test_parse_ideal_infers_n_and_merges_factors():
    I = parse_ideal("x1^2*x1, x3")
    assert I.n == 3
    assert I.generators == ((0, 0, 1), (3, 0, 0))


def test_parse_ideal_comments_and_whitespace():
    text = "# triangle\nn=3;\n  x1*x2,\n  x2*x3,  # second edge\n  x1*x3\n"
    assert parse_ideal(text) == parse_ideal("n=3; x1*x2, x2*x3, x1*x3")


def test_constant_ideals():
    assert parse_ideal("n=2; 0") == MonomialIdeal.zero(2)
    assert parse_ideal("n=2; 1") == MonomialIdeal.unit(2)
    assert parse_ideal("1", n=3) == MonomialIdeal.unit(3)
    with pytest.raises(ParseError):
        parse_ideal("0")
    with pytest.raises(ParseError):
        parse_ideal("n=2; 2")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("n=3; x1*y2", 1, 9),
        ("n=3;\nx1, x4", 2, 5),
        ("x1^0", 1, 4),
        ("x1 x2", 1, 4),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as excinfo:
        parse_ideal(text)
    assert (excinfo.value.line, excinfo.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(excinfo.value)


def test_parse_ideal_rejects():
    with pytest.raises(ParseError):
        parse_ideal("")
    with pytest.raises(ParseError):
        parse_ideal("x1,")
    with pytest.raises(ParseError):
        parse_ideal("n=25; x1")
    with pytest.raises(ParseError):
        parse_ideal("x0")
    with pytest.raises(DimensionMismatchError):
        parse_ideal("n=3; x1", n=4)


def test_format_round_trip():
    for text in ("n=4; x1*x2, x2^2*x3", "n=2; 0", "n=2; 1", "n=5; x5^3"):
        I = parse_ideal(text)
        assert parse_ideal(format_ideal(I)) == I
    assert format_monomial((0, 2, 1)) == "x2^2*x3"
    assert format_monomial((0, 0)) == "1"


def test_parse_gamma():
    assert parse_gamma("0, -1,2") == (0, -1, 2)
    assert parse_gamma("") == ()
    with pytest.raises(ParseError) as excinfo:
        parse_gamma("0,a")
    assert excinfo.value.column == 2
    with pytest.raises(DimensionMismatchError):
        parse_gamma("0,0", n=3)


def test_complex_json_round_trip():
    c = SimplicialComplex.from_faces(4, [to_mask([0, 1]), to_mask([2])])
    data = complex_to_dict(c)
    assert data == {"n": 4, "kind": "proper", "facets": [[1, 2], [3]]}
    assert complex_from_dict(data) == c
    for special in (SimplicialComplex.void(2), SimplicialComplex.irrelevant(2)):
        assert complex_from_dict(complex_to_dict(special)) == special
    assert dumps(data) == '{"facets": [[1, 2], [3]], "kind": "proper", "n": 4}'


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "proper", "facets": [[1]]},
        {"n": 2, "kind": "odd"},
        {"n": 2, "kind": "proper", "facets": []},
        {"n": 2, "kind": "proper", "facets": [[3]]},
    ],
)
def test_complex_json_rejects(data):
    with pytest.raises(ParseError):
        complex_from_dict(data)


def test_one_based_mask():
    assert one_based_mask([1, 3]) == 0b101


def test_macaulay2_syntax():
    assert macaulay2_ring(3) == "S = QQ[x_1..x_3]"
    assert to_macaulay2(SimplicialComplex.void(2)) == "simplicialComplex monomialIdeal 1_S"
    assert to_macaulay2(SimplicialComplex.irrelevant(2)) == "simplicialComplex {1_S}"
    c = SimplicialComplex.from_faces(3, [to_mask([0, 2]), to_mask([1])])
    assert to_macaulay2(c) == "simplicialComplex {x_1*x_3, x_2}"


def test_macaulay2_fixture(worked_example):
    lines = [
        line
        for line in (Path(__file__).parent / "fixtures" / "macaulay2" / "worked_example.m2").read_text().splitlines()
        if line and not line.startswith("--")
    ]
    direct = degree_complex_direct(power(ideal_sum(worked_example["I"], worked_example["J"]), 3), worked_example["gamma"])
    assert lines == [macaulay2_ring(8), to_macaulay2(direct)]


MACAULAY2_FIXTURES = sorted((Path(__file__).parent / "fixtures" / "macaulay2").glob("*.m2"))


@pytest.mark.parametrize("path", [p for p in MACAULAY2_FIXTURES if p.stem != "worked_example"], ids=lambda p: p.stem)
def test_macaulay2_fixtures_match_both_engines(path):
    fixture = read_macaulay2_fixture(path)
    assert fixture.ideal is not None and fixture.gamma is not None
    for engine in (degree_complex_direct, reference_degree_complex):
        complex_ = engine(fixture.ideal, fixture.gamma)
        assert (macaulay2_ring(fixture.ideal.n), to_macaulay2(complex_)) == fixture.lines, engine.__name__


def test_read_macaulay2_fixture(tmp_path):
    path = tmp_path / "edge.m2"
    path.write_text("-- ideal: n=2; x1*x2\n-- gamma: 0,-1\nS = QQ[x_1..x_2]\n\nsimplicialComplex {1_S}\n")
    fixture = read_macaulay2_fixture(path)
    assert fixture.name == "edge"
    assert fixture.ideal == parse_ideal("n=2; x1*x2")
    assert fixture.gamma == (0, -1)
    assert fixture.lines == ("S = QQ[x_1..x_2]", "simplicialComplex {1_S}")
    assert read_macaulay2_fixture(MACAULAY2_FIXTURES[0].parent / "worked_example.m2").ideal is None
    path.write_text("-- ideal: n=2; x1\n-- gamma: 0\n")
    with pytest.raises(DimensionMismatchError):
        read_macaulay2_fixture(path)
