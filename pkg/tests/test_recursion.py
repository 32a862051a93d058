import pytest

from cominrule.poset import popcount
from cominrule.schubert import full_table
from cominrule.shapes import _ideal_masks
from cominrule.verify import recursion as R
from cominrule.verify.recursion import (
    RECURSIONS,
    RecursionData,
    RecursionInvariantError,
    build_recursion,
    check_recursion,
)


@pytest.mark.parametrize("name,image,L,gamma,tup", [
    ("E6", 10, 1, 5, "(1,1,2,3,3,1)/(1)"),
    ("E7a", 16, 1, 10, "(1,1,1,2,4,4,2,1,1)/(1)"),
    ("E7b", 15, 6, 6, "(1,1,1,2,5,5,3,3)/(1,1,1,1,1,1)"),
])
def test_construction(name, image, L, gamma, tup):
    rec = build_recursion(name)
    s = rec.summary()
    assert (s["image"], s["L"], s["Gamma"]) == (image, L, gamma)
    assert s["image_tuple"] == tup
    assert image + L + gamma == len(rec.big)
    assert popcount(rec.image) == len(rec.small)


def test_bar_hat_inverse():
    rec = build_recursion("E7b")
    for m in _ideal_masks(rec.small):
        assert rec.bar(rec.hat(m)) == m


@pytest.mark.parametrize("name", ["E6", "E7a", "E7b"])
def test_identity_holds(name):
    rec = build_recursion(name)
    out = check_recursion(rec)
    assert out["checked"] > 1000
    assert out["violations"] == []


def test_unknown_recursion():
    with pytest.raises(ValueError):
        build_recursion("E8")


def test_bad_delta_is_caught(monkeypatch):
    bad = dict(RECURSIONS)
    d = RECURSIONS["E6"]
    bad["E6"] = RecursionData("E6", d.small, d.big, d.node_map, (2,))
    monkeypatch.setattr(R, "RECURSIONS", bad)
    with pytest.raises(RecursionInvariantError):
        build_recursion("E6")


def test_bad_node_map_is_caught(monkeypatch):
    bad = dict(RECURSIONS)
    d = RECURSIONS["E6"]
    bad["E6"] = RecursionData("E6", d.small, d.big, {1: 2, 2: 3, 3: 4, 4: 5, 5: 6}, d.delta_word)
    monkeypatch.setattr(R, "RECURSIONS", bad)
    with pytest.raises(RecursionInvariantError):
        build_recursion("E6")


def test_corrupted_table_is_caught():
    rec = build_recursion("E6")
    t = full_table(rec.big)
    key = next(k for k, v in t.entries.items() if v and k[0] & rec.L == rec.L and not k[2] & rec.Gamma
               and popcount(k[0]) > 1)
    t.entries[key] += 1
    out = check_recursion(rec, table_big=t)
    assert out["violations"]
