"""Proof replay drivers: step layout, status algebra, grid
certificates, mutation sensitivity, deterministic serialization."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monocert import certify
from monocert.certify import (
    ANCHORS,
    FAIL,
    INCONCLUSIVE,
    PASS,
    GridCertificate,
    VerificationReport,
    _anchor_step,
    explore_remark2,
    grid_monotone_certificate,
    meet_status,
    report_to_json_obj,
    report_to_json_text,
    report_to_text,
    verify_lemma2,
    verify_remark1,
    verify_theorem1,
    verify_theorem2,
)
from monocert.enclosure import DomainError, Enclosure
from monocert.exactpoly import RationalPolynomial
from monocert.specfun import IntervalPolynomial
from monocert.targets import P6_PAIRS, gamma_log_ratio, log_ball_volume_root


def _ids(report: VerificationReport):
    return [s.id for s in report.steps]


def _failed_ids(report: VerificationReport):
    return [s.id for s in report.steps if s.status != PASS]


# -- the four drivers in their default configuration ----------------

def test_lemma_driver_green():
    r = verify_lemma2()
    assert r.overall == PASS
    assert len(r.steps) == 19
    assert _ids(r) == sorted(_ids(r))
    assert len(set(_ids(r))) == 19


def test_increasing_theorem_driver_green():
    r = verify_theorem1()
    assert r.overall == PASS
    assert len(r.steps) == 6
    assert _ids(r) == sorted(_ids(r))


def test_decreasing_theorem_driver_green():
    r = verify_theorem2(n_max=60)
    assert r.overall == PASS
    assert len(r.steps) == 9
    assert _ids(r) == sorted(_ids(r))


def test_tail_trend_driver_green():
    r = verify_remark1(n_max=50)
    assert r.overall == PASS
    assert len(r.steps) == 4
    assert _ids(r) == sorted(_ids(r))


def test_driver_argument_validation():
    with pytest.raises(DomainError):
        verify_theorem2(n_max=3)
    with pytest.raises(DomainError):
        verify_theorem2(n_max=True)
    with pytest.raises(DomainError):
        verify_theorem2(n_max=10.0)
    with pytest.raises(DomainError):
        verify_remark1(n_max=5)


# -- status meet ----------------------------------------------------

def test_meet_status_table():
    assert meet_status([]) == PASS
    assert meet_status([PASS, PASS]) == PASS
    assert meet_status([PASS, INCONCLUSIVE]) == INCONCLUSIVE
    assert meet_status([INCONCLUSIVE, FAIL, PASS]) == FAIL


@given(st.lists(st.sampled_from([PASS, FAIL, INCONCLUSIVE])))
def test_meet_status_is_worst_element(statuses):
    got = meet_status(statuses)
    if FAIL in statuses:
        assert got == FAIL
    elif INCONCLUSIVE in statuses:
        assert got == INCONCLUSIVE
    else:
        assert got == PASS


# -- anchor comparison semantics ------------------------------------

def test_anchor_step_pass_fail_inconclusive():
    a = 3.468
    assert _anchor_step("t/01", "d", Enclosure(3.4679, 3.4681), a).status == PASS
    # proven outside the band
    assert _anchor_step("t/01", "d", Enclosure(3.5, 3.6), a).status == FAIL
    # contains the anchor but too wide for the band
    assert _anchor_step("t/01", "d", Enclosure(3.0, 4.0), a).status == INCONCLUSIVE
    # straddles the band edge without leaving it
    assert _anchor_step("t/01", "d", Enclosure(3.457, 3.459), a).status == INCONCLUSIVE


def test_anchor_step_sign_requirement():
    # inside the band around a negative anchor but sign not yet proven:
    # hi == 0 leaves the true value possibly negative, so inconclusive
    near_zero = _anchor_step("t/02", "d", Enclosure(-0.0005, 0.0), -0.005)
    assert near_zero.status == INCONCLUSIVE
    proven = _anchor_step("t/02", "d", Enclosure(-0.0055, -0.0052), -0.005)
    assert proven.status == PASS
    # lo >= 0 proves the wrong side even while touching the band
    wrong_side = _anchor_step("t/03", "d", Enclosure(0.0, 0.001), -0.005)
    assert wrong_side.status == FAIL


# -- mutation sensitivity (spot checks; the full matrix runs in the
#    acceptance suite) ----------------------------------------------

def test_flipped_anchor_fails_exactly_its_step():
    r = verify_lemma2(anchors={"p6_at_0": -ANCHORS["p6_at_0"]})
    assert r.overall == FAIL
    assert _failed_ids(r) == ["lemma2/17-p6-at-0"]


def test_quintic_mutant_fails_exactly_the_endpoint_step():
    # x^3 coefficient 2 -> 1: still one sign change, still certifiable,
    # but the printed value at 1 drops from 8 to 7
    mutant = RationalPolynomial((-1, 1, 2, 1, 3, 1))
    r = verify_lemma2(polys={"p4": mutant})
    assert r.overall == FAIL
    assert _failed_ids(r) == ["lemma2/12-p4-at-1"]


def test_constant_term_mutant_breaks_sign_change_count():
    # -1 -> +1 gives two sign changes, so the positivity step itself
    # must go red
    mutant = RationalPolynomial((1, -1, 3, 1))
    r = verify_lemma2(polys={"p1": mutant})
    assert r.overall == FAIL
    assert "lemma2/01-p1-positive" in _failed_ids(r)


def test_logpi_mutant_breaks_coefficient_signs():
    # replacing the log-pi constant by 2 flips the linear coefficient
    # of the interval cubic negative: sign pattern check goes red
    mutant = IntervalPolynomial(tuple(a + 2 * b for a, b in P6_PAIRS))
    r = verify_lemma2(polys={"p6": mutant})
    assert r.overall == FAIL
    assert "lemma2/16-p6-positive" in _failed_ids(r)


# -- grid certificates ----------------------------------------------

def test_grid_certificate_small_window():
    cert = grid_monotone_certificate("gamma_log_ratio", 2.0, 3.0, 0.1, "increasing")
    assert cert.status == "certified"
    assert len(cert.grid) == 11
    assert cert.verified_pairs == 10
    assert cert.offending_pair is None


def test_grid_certificate_refutes_wrong_direction():
    cert = grid_monotone_certificate("gamma_log_ratio", 0.0, 1.0, 0.01, "decreasing")
    assert cert.status == FAIL
    assert cert.offending_pair == (0.0, 0.01)


def test_grid_certificate_snaps_near_integer_points():
    # 100 * 0.01 accumulates to 1.0000000000000002 in float; the grid
    # must land exactly on the removable singularity instead
    cert = grid_monotone_certificate("gamma_log_ratio", 0.0, 2.0, 0.01, "increasing")
    assert cert.status == "certified"
    assert 1.0 in cert.grid
    assert all(abs(p - 1.0) > 1e-9 or p == 1.0 for p in cert.grid)


def test_grid_certificate_validation():
    with pytest.raises(DomainError):
        grid_monotone_certificate("no_such_function", 0.0, 1.0, 0.1, "increasing")
    with pytest.raises(DomainError):
        grid_monotone_certificate("gamma_log_ratio", 0.0, 1.0, 0.1, "sideways")


def test_grid_certificate_soundness_resample():
    """Between each adjacent certified pair, midpoints of fresh random
    samples must respect the certified direction."""
    cert = grid_monotone_certificate("gamma_log_ratio", 2.0, 3.0, 0.1, "increasing")
    assert cert.status == "certified"
    rng = random.Random(4111)
    for a, b in zip(cert.grid, cert.grid[1:]):
        points = sorted({a, b} | {a + (b - a) * rng.random() for _ in range(10)})
        mids = [gamma_log_ratio(t).mid for t in points]
        assert all(u < v for u, v in zip(mids, mids[1:])), (a, b)


def test_grid_certificate_soundness_resample_decreasing():
    cert = grid_monotone_certificate(
        "log_ball_volume_root", 2.0, 3.0, 0.1, "decreasing"
    )
    assert cert.status == "certified"
    rng = random.Random(4112)
    for a, b in zip(cert.grid, cert.grid[1:]):
        points = sorted({a, b} | {a + (b - a) * rng.random() for _ in range(10)})
        mids = [log_ball_volume_root(t).mid for t in points]
        assert all(u > v for u, v in zip(mids, mids[1:])), (a, b)


# -- exploration never touches verdicts -----------------------------

def test_exploration_is_labelled_and_inert():
    before = report_to_json_text(verify_lemma2())
    survey = explore_remark2()
    assert survey["label"] == "EXPLORATORY"
    assert survey["theorem"] == "remark2-conjecture"
    assert "verdict" not in survey
    assert "continuous" in survey and "sequence" in survey
    after = report_to_json_text(verify_lemma2())
    assert before == after


def test_exploration_argument_validation():
    with pytest.raises(DomainError):
        explore_remark2(grid=[2.0, 3.0])
    with pytest.raises(DomainError):
        explore_remark2(grid=[3.0, 2.5, 2.0])
    with pytest.raises(DomainError):
        explore_remark2(n_max=4)


# -- serialization --------------------------------------------------

def test_report_json_schema():
    r = verify_remark1(n_max=40)
    obj = report_to_json_obj(r)
    assert set(obj) == {"theorem", "overall", "steps"}
    assert obj["theorem"] == "remark1"
    for step in obj["steps"]:
        assert set(step) == {
            "id", "description", "status", "computed", "expected", "tolerance",
        }
        if step["computed"] is not None:
            assert set(step["computed"]) == {"lo", "hi"}
            enc = Enclosure.from_json_obj(step["computed"])
            assert enc.lo <= enc.hi


def test_report_json_text_is_canonical():
    r = verify_lemma2()
    text = report_to_json_text(r)
    assert text.endswith("\n")
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n" == text


def test_report_determinism_across_runs():
    a = report_to_json_text(verify_theorem2(n_max=40))
    b = report_to_json_text(verify_theorem2(n_max=40))
    assert a == b


def test_report_text_rendering():
    r = verify_lemma2()
    text = report_to_text(r)
    lines = text.splitlines()
    assert lines[0] == "lemma2: PASS"
    assert sum(1 for ln in lines if ln.lstrip().startswith("[")) == 19
    assert all("pass" in ln for ln in lines if ln.lstrip().startswith("["))
