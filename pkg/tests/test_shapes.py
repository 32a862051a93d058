import pytest
from hypothesis import given
from hypothesis import strategies as st

from cominrule.poset import build_box_poset
from cominrule.shapes import (
    Shape,
    ShapeError,
    SkewShape,
    all_shapes,
    complement,
    dual,
    parse_shape,
    print_shape,
    rotate_shape,
    shortroots,
)

from conftest import SPACES


def _comp_tuple(shape):
    """Tuple of the shape whose complement is rotate(shape)."""
    P = shape.poset
    return print_shape(Shape(P, P.full & ~rotate_shape(shape)))


@pytest.mark.parametrize("space,n", [("E6", 27), ("E7", 56), ("QB:4", 8), ("QB:6", 12), ("Gr:2,4", 6), ("LG:4", 16)])
def test_shape_counts(space, n):
    assert len(all_shapes(space)) == n


def test_order_is_size_then_mask(poset):
    S = all_shapes(poset)
    keys = [(len(s), s.mask) for s in S]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(poset.is_ideal(s.mask) for s in S)


@pytest.mark.parametrize("space,nu,comp", [
    ("Gr:4,7", "4,2,1", "(3,2)"),
    ("LG:4", "3,1", "(4,2)"),
    ("QD:6", "1,1,1,1,1", "(1,1,1,2)"),
    ("QD:5", "1,1,1,1", "(1,1,1,1)"),
    ("QB:4", "1,1,1,1", "(1,1,1)"),
    ("E7", "1,1,1,2,3,3,1", "(1,1,1,2,5,5)"),
])
def test_rotate_examples(space, nu, comp):
    assert _comp_tuple(parse_shape(nu, space)) == comp


def test_rotate_empty():
    P = build_box_poset("E6")
    assert rotate_shape(Shape(P, 0)) == 0


def test_dual_is_an_involution(poset):
    for s in all_shapes(poset):
        d = dual(s)
        assert poset.is_ideal(d.mask)
        assert dual(d) == s
        assert len(d) == len(poset) - len(s)
        assert complement(s) == poset.full & ~s.mask


def test_shortroots_examples():
    L = build_box_poset("LG:4")
    assert shortroots(SkewShape(parse_shape("2,1", L), parse_shape("4,2", L))) == 3
    Q = build_box_poset("QB:4")
    assert shortroots(SkewShape(parse_shape("1,1", Q), parse_shape("1,1,1,1", Q))) == 1
    for s in all_shapes("E7"):
        assert shortroots(s) == 0


def test_shortroots_additive(poset):
    S = all_shapes(poset)
    for a in S[::3]:
        for b in S:
            if a <= b:
                assert shortroots(SkewShape(a, b)) == shortroots(b) - shortroots(a)


def test_parse_examples():
    assert len(parse_shape("(4,2,1)", "Gr:4,7")) == 7
    assert len(parse_shape("(1,1,2,3,1)", "E6")) == 8
    assert len(parse_shape("()", "E6")) == 0
    assert len(parse_shape("full", "E7")) == 27
    assert print_shape(parse_shape("4,2,1,0,0", "Gr:4,7")) == "(4,2,1)"


@pytest.mark.parametrize("text,col", [("5,1", "column 1"), ("1,2", "column 2"), ("4,4,4,4,4", "column 2"), ("4,x", None)])
def test_parse_errors(text, col):
    with pytest.raises(ShapeError) as exc:
        parse_shape(text, "LG:4")
    if col:
        assert col in str(exc.value)


def test_round_trip_every_space(poset):
    for s in all_shapes(poset):
        assert parse_shape(print_shape(s), poset) == s


@given(st.sampled_from(SPACES), st.data())
def test_skew_requires_containment(space, data):
    S = all_shapes(space)
    a = data.draw(st.sampled_from(S))
    b = data.draw(st.sampled_from(S))
    if a <= b:
        assert len(SkewShape(a, b)) == len(b) - len(a)
    else:
        with pytest.raises(ShapeError):
            SkewShape(a, b)


def test_shapes_from_different_spaces_do_not_mix():
    a = parse_shape("1", "OG:5")
    b = parse_shape("1", "OGmin:4")
    assert a != b
    with pytest.raises(ShapeError):
        SkewShape(a, b)
