import pytest

from latpath.paths import (
    Decomposition,
    Path,
    PathClass,
    PathError,
    classify,
    decompose,
    format_path,
    parse_path,
    recompose,
)
from latpath.steps import D, StepSet, U, V, make_family

FIG1 = "U6 D2 U1 V D1 V U2 D1 V3 U1 V2"
BIG = StepSet.parse("V,U6,U5,U4,U3,U2,U1,U0,D1,D2")


def test_parse_format_roundtrip():
    p = parse_path("U3 D2 U1 V U2 V3 U1 D1")
    assert len(p) == 10 and p.n == 6
    assert format_path(p) == "U3 D2 U1 V U2 V3 U1 D1"
    assert parse_path("U1^2 V") == Path([U(1), U(1), V])
    assert format_path(Path()) == "-" and parse_path("-") == Path()
    with pytest.raises(PathError):
        parse_path("U1 W")


def test_endpoint_and_heights():
    p = parse_path(FIG1)
    assert p.endpoint() == (7, -1)
    assert min(p.heights()[:-1]) >= 0


def test_classification():
    A = make_family("A", 1, 2)
    assert classify(parse_path("U1 D2"), A) == (PathClass.PRIMARY, 1)
    assert classify(parse_path("D1 U1"), A).kind is PathClass.FREE_ONLY
    assert classify(parse_path("U1 D3"), A).kind is PathClass.NOT_IN_SET
    # a lone run of vertical steps is free, never primary
    assert classify(parse_path("V2"), A).kind is PathClass.FREE_ONLY


def test_fig1_decomposition():
    dec = decompose(parse_path(FIG1), BIG)
    assert dec.shape == (1, 4, 4)
    assert dec.lambdas == (0, 0, 1, 1, 0)
    assert [format_path(s) for _, s in dec.subpaths] == ["D2", "U1 V D1", "U2 D1 V2", "U1 V2"]
    assert [m for m, _ in dec.subpaths] == [2, 1, 1, 1]
    assert recompose(dec) == parse_path(FIG1)


def test_companion_path_shape():
    dec = decompose(parse_path("U4 D2 U0 D1 U0 D1 D1"))
    assert dec.shape == (1, 4, 4)
    assert [format_path(s) for _, s in dec.subpaths] == ["D2", "U0 D1", "U0 D1", "D1"]


@pytest.mark.parametrize(
    "word,shape,lambdas",
    [
        ("U2 V2", (0, 0, 0), (2,)),
        ("U0 V", (1, 0, -1), (1,)),
        ("D3", (3, 0, -3), ()),
        ("D1", (1, 0, -1), (0,)),
        ("U1 D1 V", (1, 1, 0), (0, 1)),
        ("U1 D3", (2, 1, 1), (0,)),
    ],
)
def test_small_shapes(word, shape, lambdas):
    dec = decompose(parse_path(word))
    assert dec.shape == shape and dec.lambdas == lambdas
    assert recompose(dec) == parse_path(word)


def test_zero_primary_tail():
    dec = decompose(parse_path("U1 D1 U0 U2 V2"))
    assert dec.shape == (0, 1, 1)
    assert format_path(dec.tail) == "U0 U2 V2"


def test_decompose_rejects_free_paths():
    with pytest.raises(PathError):
        decompose(parse_path("D1 U1"))
    with pytest.raises(PathError):
        decompose(Path())


def test_recompose_validates():
    bad = Decomposition(U(2), (1, 0, 0), (1,), ())
    with pytest.raises(PathError):
        recompose(bad)
    with pytest.raises(PathError):
        recompose(Decomposition(U(1), (2, 1, 1), (0,), ((1, Path([D(1)])),)))
