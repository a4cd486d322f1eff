import pytest

from koszulkit.suites import (
    SUITES,
    run_colon_split,
    run_ek_agreement,
    run_suite,
)


@pytest.mark.parametrize("name,trials", [
    ("lemmas3", 60),
    ("2cyc", 6),
    ("main1", 3),
    ("main", 3),
    ("ah", 3),
    ("extremal", 4),
    ("lemma-h", 3),
])
def test_suites_pass_smoke(name, trials):
    result = run_suite(name, seed="pytest", trials=trials)
    assert result.passed, result.refutations
    assert result.performed >= trials


def test_suite_replay_determinism():
    a = run_suite("2cyc", seed="replay", trials=3)
    b = run_suite("2cyc", seed="replay", trials=3)
    assert a.passed == b.passed
    assert a.performed == b.performed
    assert a.refutations == b.refutations


def test_extra_suites():
    assert run_ek_agreement("pytest", 4).passed
    assert run_colon_split("pytest", 6).passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus", seed="x", trials=1)
    assert set(SUITES) == {"lemmas3", "2cyc", "main1", "main",
                           "ah", "extremal", "lemma-h"}
