"""Acceptance gate: run the full verification battery once, then assert each
top-level criterion and print one PASS/FAIL line per criterion.

Criterion 1 is known red and is left red on purpose.  Its frozen degree
inventory for (c, h) = (1/2, 1/2) admits singular vectors only at degrees
{2, 3} below 9, but the kernel search finds a third, genuine one at degree 7
(annihilated by L(1) and L(2), contained in the submodule generated by the
degree-2 and degree-3 vectors, and matching the alternating partition-count
character p(n) - p(n-2) - p(n-3) + p(n-7) + ...).  The inventory is asserted
as stated rather than widened to fit the engine.
"""

import time

import pytest

from virfock.battery import run_battery

CRITERION_LABELS = {
    1: "singular-vector golden set and degree inventory",
    2: "classification identity with formal weight",
    3: "degree-6 state on L(-2)v: expansion, proportionality, reported scalar",
    4: "characteristic-7 degeneration suite",
    5: "determinant -7 induction step",
    6: "character equalities across characteristics",
    7: "algebraic property suites",
    8: "independent dimension oracle",
}

EXPECTED_CHECK_COUNT = 45
KNOWN_RED = "singular/no-others-below-9"


@pytest.fixture(scope="module")
def battery():
    t0 = time.perf_counter()
    report = run_battery()
    return report, time.perf_counter() - t0


def gate(report, num):
    """Collect the checks tagged with one criterion and print its gate line."""
    checks = [r for r in report.results if r.criterion == num]
    assert checks, f"no battery checks are tagged with criterion {num}"
    bad = [r for r in checks if r.status == "fail"]
    reported = [r for r in checks if r.status == "value"]
    line = f"CRITERION {num} {CRITERION_LABELS[num]}: {'PASS' if not bad else 'FAIL'}"
    if reported:
        line += " [reported: " + "; ".join(r.detail for r in reported) + "]"
    print(line)
    return checks, bad


def failure_text(bad):
    return "; ".join(f"{r.name}: {r.detail}" for r in bad)


def test_criterion_1_singular_vector_golden_set_and_inventory(battery):
    report, _ = battery
    checks, bad = gate(report, 1)
    golden = [r for r in checks if "/golden-" in r.name]
    assert len(golden) == 6, "expected six golden singular-vector checks"
    broken = [r for r in golden if r.status != "pass"]
    assert not broken, "golden vectors mismatched: " + failure_text(broken)
    generated = next(r for r in checks if r.name == "singular/radical-generated")
    assert generated.status == "pass", generated.detail
    assert not bad, (
        "the frozen degree inventory is incomplete and this check is left red "
        "deliberately: " + failure_text(bad) + ".  The degree-7 vector at "
        "h = 1/2 is genuinely singular (killed by L(1) and L(2)) and lies in "
        "the submodule generated by the degree-2 and degree-3 vectors, as the "
        "passing radical-generated check shows; it also matches the "
        "alternating character p(n) - p(n-2) - p(n-3) + p(n-7) + ... for this "
        "highest weight.  The inventory is asserted as stated, not widened."
    )


def test_criterion_2_classification_identity(battery):
    report, _ = battery
    checks, bad = gate(report, 2)
    assert {r.name for r in checks} == {
        "classify/identity",
        "classify/intermediates",
        "classify/annihilation-s-h0",
        "classify/annihilation-s-h16",
    }
    assert not bad, failure_text(bad)


def test_criterion_3_weight_expansions_and_reported_scalar(battery):
    report, _ = battery
    checks, bad = gate(report, 3)
    assert not bad, failure_text(bad)
    scalar = next(r for r in checks if r.name == "expansion/h0-scalar")
    assert scalar.status == "value"
    assert "66 = 2 * 3 * 11" in scalar.detail, scalar.detail


def test_criterion_4_characteristic_7_suite(battery):
    report, _ = battery
    checks, bad = gate(report, 4)
    assert len(checks) == 7
    assert not bad, failure_text(bad)


def test_criterion_5_determinant_minus_7(battery):
    report, _ = battery
    checks, bad = gate(report, 5)
    assert {r.name for r in checks} == {"det7/matrix", "det7/rank-mod-p"}
    assert not bad, failure_text(bad)


def test_criterion_6_character_equalities(battery):
    report, _ = battery
    checks, bad = gate(report, 6)
    assert {r.name for r in checks} == {
        "characters/char0",
        "characters/char3",
        "characters/char5",
        "characters/char11",
        "characters/char13",
        "characters/char7-h0-anomaly",
    }
    assert not bad, failure_text(bad)


def test_criterion_7_property_suites(battery):
    report, _ = battery
    checks, bad = gate(report, 7)
    assert len(checks) == 11
    assert not bad, failure_text(bad)


def test_criterion_8_dimension_oracle(battery):
    report, _ = battery
    checks, bad = gate(report, 8)
    assert [r.name for r in checks] == ["oracle/dims-q"]
    assert not bad, failure_text(bad)


def test_every_check_is_tagged_with_one_criterion(battery):
    report, _ = battery
    assert len(report.results) == EXPECTED_CHECK_COUNT
    assert all(r.criterion in CRITERION_LABELS for r in report.results)
    names = [r.name for r in report.results]
    assert len(names) == len(set(names))


def test_no_unexpected_failures(battery):
    report, _ = battery
    unexpected = [r for r in report.failures if r.name != KNOWN_RED]
    assert not unexpected, failure_text(unexpected)


def test_battery_runs_under_two_minutes(battery):
    _, elapsed = battery
    print(f"full battery elapsed: {elapsed:.2f}s")
    assert elapsed < 120.0
