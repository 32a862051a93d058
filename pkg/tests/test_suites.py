import pytest

from cominrule.verify.suites import SUITES, SuiteConfig, UnknownSuite, check_cross_isomorphisms, run_suite

CASES = [
    ("confluence", "Gr:3,6"), ("confluence", "LG:4"), ("confluence", "E6"), ("confluence", "QD:6"),
    ("infusion", "Gr:3,6"), ("infusion", "QB:4"), ("infusion", "E7"),
    ("axioms", "LG:3"), ("axioms", "QD:5"), ("axioms", "E6"),
    ("duality", "OG:5"), ("duality", "E6"), ("duality", "Gr:2,5"),
    ("chevalley", "QB:5"), ("chevalley", "QD:6"), ("chevalley", "LG:4"),
    ("associativity", "LG:3"), ("associativity", "Gr:2,5"),
    ("recursion", "E6"),
    ("oracle", "Gr:2,5"),
    ("isomorphism", "OGmin:4"), ("isomorphism", "LG:3"), ("isomorphism", "Pmin:3"), ("isomorphism", "OG:4"), ("isomorphism", "LG:2"),
]


@pytest.mark.parametrize("suite,space", CASES)
def test_suite_passes(suite, space):
    rep = run_suite(space, suite, seed=1, trials=60)
    assert rep.passed, rep.text()
    assert rep.trials > 0


# on a chain every skew shape has a single filling, so a wrong infusion cannot show
@pytest.mark.parametrize("suite,space", [c for c in CASES if c != ("infusion", "QB:4")])
def test_corruption_is_detected(suite, space):
    rep = run_suite(space, suite, seed=1, trials=60, corrupt=True)
    assert not rep.passed


def test_seed_determinism():
    a = run_suite("LG:4", "confluence", seed=5, trials=40)
    b = run_suite("LG:4", "confluence", seed=5, trials=40)
    assert (a.trials, a.violations) == (b.trials, b.violations)
    bad = [run_suite("LG:4", "confluence", seed=5, trials=40, corrupt=True).violations for _ in range(2)]
    assert bad[0] == bad[1]


def test_report_format():
    rep = run_suite("Gr:2,4", "axioms")
    d = rep.to_dict()
    assert d["suite"] == "axioms" and d["space"] == "Gr:2,4" and d["violations"] == []
    assert rep.text().startswith("axioms on Gr:2,4: PASS")


def test_unknown_suite_and_wrong_space():
    with pytest.raises(UnknownSuite):
        run_suite("E6", "nonsense")
    with pytest.raises(UnknownSuite):
        run_suite("E6", "oracle")
    with pytest.raises(UnknownSuite):
        run_suite("Gr:2,4", "recursion")


def test_every_suite_is_listed():
    assert len(SUITES) == 9


def test_cross_isomorphisms():
    rep = check_cross_isomorphisms(SuiteConfig())
    assert rep.passed, rep.text()
    assert rep.trials > 1000
