import pytest
from graph_strategies import complete

from hamgen_errors import CapacityError, InapplicableError, UsageError
from hamgen_report import FAIL, PASS, SKIP, VerificationReport, dumps, suite_document
from hamgen_settings import activate
from hamgen_suites import (
    SUITES,
    Check,
    SuiteOptions,
    run_checks,
    run_suite,
    suite_checks,
)


def _raise(exc):
    def run():
        raise exc

    return run


def test_run_checks_sorts_and_skips_capacity_problems(capsys):
    checks = [
        Check("b", lambda: VerificationReport.evaluate("", {}, {})),
        Check("c", _raise(CapacityError("too big"))),
        Check("a", _raise(InapplicableError("not bipartite"))),
    ]
    reports = run_checks(checks, threads=1)
    assert [r.check_id for r in reports] == ["a", "b", "c"]
    assert [r.status for r in reports] == [SKIP, PASS, SKIP]
    assert reports[2].note == "too big"
    assert "skipping c: too big" in capsys.readouterr().err


def test_run_checks_lets_other_errors_through():
    with pytest.raises(ValueError):
        run_checks([Check("a", _raise(ValueError("bad")))], threads=1)


def test_unknown_suite():
    with pytest.raises(UsageError) as exc:
        suite_checks("nope", SuiteOptions())
    assert "lemma-a" in str(exc.value)


def test_every_suite_builds_checks():
    for name in sorted(SUITES):
        options = SuiteOptions(rs=(4, 5), graph=complete(4), samples=2)
        checks = suite_checks(name, options)
        assert checks, name
        ids = [c.check_id for c in checks]
        assert len(ids) == len(set(ids)), name


def test_lemma_a_check_ids_follow_parity():
    ids = {c.check_id for c in suite_checks("lemma-a", SuiteOptions(rs=(4, 5)))}
    assert "a6.pr.r=4" in ids
    assert "a7.m.r=5" in ids
    assert "a6.pr.r=5" not in ids
    assert "a16.pr-boxtimes.r=4" in ids
    assert "a28.pr-boxminus.r=4" in ids
    assert "minus.pr-boxminus-minus.r=4" in ids
    assert "minus-symmetry.m-boxminus-minus.r=6" in ids


def test_two_apex_hosts_keep_both_ladder_involutions():
    checks = [
        c for c in suite_checks("lemma-a", SuiteOptions(rs=(4,)))
        if c.check_id.startswith("minus-symmetry.")
    ]
    assert len(checks) == 4
    reports = run_checks(checks, threads=1)
    assert [r.status for r in reports] == [PASS] * 4


@pytest.mark.parametrize(
    "name, options",
    [
        ("counterexamples", SuiteOptions()),
        ("x7", SuiteOptions()),
        ("nsi", SuiteOptions(rs=(4,))),
        ("symdiff", SuiteOptions(rs=(4, 6))),
        ("cb", SuiteOptions(rs=(4, 5))),
        ("bandwidth", SuiteOptions(rs=(4,))),
    ],
)
def test_small_suites_have_no_failures(name, options):
    reports = run_suite(name, options, threads=1)
    assert reports
    failed = [r.check_id for r in reports if r.status == FAIL]
    assert failed == []


def test_lift_suite_is_seeded():
    options = SuiteOptions(rs=(4,), samples=3, seed=11)
    first = run_suite("lift", options, threads=1)
    second = run_suite("lift", options, threads=1)
    assert [r.status for r in first] != []
    assert all(r.status != FAIL for r in first)
    assert suite_document("lift", first, False) == suite_document("lift", second, False)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_threads_do_not_change_the_document(name):
    options = SuiteOptions(rs=(4,), graph=complete(4), samples=2, seed=5)
    documents = []
    for threads in (1, 8):
        activate({"threads": threads})
        reports = run_suite(name, options)
        documents.append(dumps(suite_document(name, reports, with_elapsed=False)))
    assert documents[0] == documents[1]


def test_profile_needs_a_graph():
    with pytest.raises(UsageError):
        suite_checks("profile", SuiteOptions())


def test_profile_of_k4():
    reports = run_suite("profile", SuiteOptions(graph=complete(4)), threads=1)
    values = {r.check_id: r.computed for r in reports}
    assert all(r.status == PASS for r in reports)
    assert values["profile.basics"]["basics"] == {"f0": 4, "f1": 6, "betti1": 3}
    assert values["profile.connectivity"]["connectivity"] == 3
    assert values["profile.bipartite"]["bipartite"] is False
    assert values["profile.prism"]["prism"] is False
