import pytest
from hypothesis import given
from hypothesis import strategies as st

from cominrule.poset import build_box_poset
from cominrule.schubert import lrc
from cominrule.shapes import all_shapes
from cominrule.verify.oracle import lr_coefficient, lr_oracle_typeA


@pytest.mark.parametrize("lam,mu,nu,c", [
    ((1,), (1,), (2,), 1),
    ((1,), (1,), (1, 1), 1),
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((3, 1), (2, 1), (4, 2, 1), 2),
    ((2, 1), (2, 1), (4, 2), 1),
    ((2,), (2,), (2, 1, 1), 0),
    ((), (2, 1), (2, 1), 1),
])
def test_known_values(lam, mu, nu, c):
    assert lr_coefficient(lam, mu, nu) == c


def test_rejects_non_partitions():
    with pytest.raises(ValueError):
        lr_coefficient((1, 2), (1,), (2, 2))
    with pytest.raises(ValueError):
        lr_oracle_typeA((5,), (), (5,), 2, 4)


partitions = st.lists(st.integers(0, 4), max_size=4).map(lambda p: tuple(sorted(p, reverse=True)))


@given(partitions, partitions, partitions)
def test_symmetry(lam, mu, nu):
    assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def _conj(p):
    return tuple(sum(1 for x in p if x > i) for i in range(p[0] if p else 0))


@given(partitions, partitions, partitions)
def test_conjugation_invariance(lam, mu, nu):
    assert lr_coefficient(lam, mu, nu) == lr_coefficient(_conj(lam), _conj(mu), _conj(nu))


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 5), (3, 6)])
def test_rule_matches_oracle(k, n):
    P = build_box_poset(f"Gr:{k},{n}")
    S = all_shapes(P)
    for a in S:
        for b in S:
            for c in S:
                assert lrc(a, b, c) == lr_oracle_typeA(a.columns, b.columns, c.columns, k, n)
