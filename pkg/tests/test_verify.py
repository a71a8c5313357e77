"""Cross-check suites used by the verify subcommand."""

import pytest

from dimercorr.verify import (
    SUITES,
    check_gibbs_equivalence,
    check_ppt_agreement,
    check_wootters_closed_form,
    run_suites,
)


def test_suite_names():
    assert SUITES == ("gibbs", "wootters", "ppt", "ensemble")


def test_gibbs_check_passes():
    result = check_gibbs_equivalence(samples=50, seed=3)
    assert result.passed
    assert result.residual < 1e-10
    assert result.suite == "gibbs"


def test_wootters_checks_pass():
    results = check_wootters_closed_form()
    assert len(results) == 2
    assert all(r.passed for r in results)


def test_ppt_check_passes_for_several_seeds():
    for seed in (1, 2, 3):
        result = check_ppt_agreement(samples=200, seed=seed)
        assert result.passed
        assert result.residual == 0.0


def test_run_suites_all():
    results = run_suites("all", samples=50)
    assert {r.suite for r in results} == set(SUITES)
    assert all(r.passed for r in results)


def test_run_suites_single():
    results = run_suites("ppt", samples=100)
    assert [r.suite for r in results] == ["ppt"]


def test_run_suites_rejects_unknown_name():
    with pytest.raises(ValueError):
        run_suites("bogus")
