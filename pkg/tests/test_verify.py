import pytest

from positroids.core.affperm import enumerate_perms
from positroids.core.errors import ParameterError
from positroids.core.verify import FROZEN_COUNTS, SUITES, run_suites


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name, run_config):
    result = SUITES[name](run_config)
    assert result["suite"] == name
    assert result["checked"] > 0
    assert result["failures"] == 0, result["counterexamples"][:3]


def test_frozen_counts():
    for (n, k), expected in FROZEN_COUNTS.items():
        assert len(enumerate_perms(n, k, "bounded")) == expected


def test_report_shape(run_config):
    report = run_suites("enumeration", run_config)
    assert report["passed"]
    assert report["seed"] == 7
    assert report["config"]["n_max"] == 4
    assert [s["suite"] for s in report["suites"]] == ["enumeration"]
    assert report["suites"][0]["notes"]["counts"]["2,4"] == {"bounded": 33, "plus": len(enumerate_perms(4, 2, "plus"))}


def test_ranks_notes(run_config):
    notes = SUITES["ranks"](run_config)["notes"]
    assert notes["rotation_checked"] == 3 * 6
    assert 0 <= notes["rotation_exact"] <= notes["rotation_checked"]
    assert notes["strata_seen"] >= 1


def test_jacobi_records_untwisted(run_config):
    notes = SUITES["jacobi"](run_config)["notes"]
    assert set(notes["untwisted_passed"]) == {"1,2", "1,3", "2,4"}


def test_bruhat_is_capped(run_config):
    notes = SUITES["bruhat"](run_config)["notes"]
    assert notes["n_max"] == 4
    assert notes["covers"] >= notes["covers_of_length_one"] > 0


def test_unknown_suite(run_config):
    with pytest.raises(ParameterError):
        run_suites("everything", run_config)
