"""Target function family against mpmath oracles and exact identities.

The oracle recomputes every value from its defining formula at 40
digits, so nothing here depends on frozen decimal literals.
"""

import math
from fractions import Fraction

import mpmath
import pytest

from monocert.enclosure import DomainError, Enclosure, LN_PI
from monocert.targets import (
    CHAIN_TOKENS,
    GUARD_RADIUS,
    GuardZoneError,
    LEMMA_POLYS,
    LEMMA_VALUE_AT_ONE,
    RATE_NUMERATOR,
    SEQUENCE_MODES,
    ball_root_slope_chain,
    ball_volume_root,
    chain_interval_poly,
    chain_rate_bound_rational,
    chain_rate_bound_with_log,
    fg_ratio,
    fg_ratio_core,
    fg_ratio_core_rate,
    fg_ratio_core_rate_lower_bound,
    gamma_log_ratio,
    log_ball_volume_root,
    log_omega_sequence_term,
    log_unit_ball_volume,
    log_volume_sequence_value,
    omega_sequence_term,
    pair_derivative,
    unit_ball_volume,
    volume_sequence_value,
)

mpmath.mp.dps = 40


def _fr(value) -> Fraction:
    return Fraction(mpmath.nstr(value, 30, strip_zeros=False))


def _contains(enc: Enclosure, fr: Fraction, slack=Fraction(1, 10**20)) -> bool:
    return Fraction(enc.lo) - slack <= fr <= Fraction(enc.hi) + slack


def _oracle_big_f(x) -> Fraction:
    x = mpmath.mpf(x)
    return _fr(mpmath.loggamma(x + 1) / (mpmath.log(x * x + 1) - mpmath.log(x + 1)))


def _oracle_log_big_g(x) -> Fraction:
    x = mpmath.mpf(x)
    num = x * mpmath.log(mpmath.pi) - mpmath.loggamma(x + 1)
    return _fr(num / (mpmath.log(x * x + 1) - mpmath.log(x + 1)))


# -- increasing target ----------------------------------------------

def test_gamma_log_ratio_generic_points():
    for x in (0.5, 2.0, 3.7, 10.0, 49.5):
        assert _contains(gamma_log_ratio(x), _oracle_big_f(x)), x


def test_gamma_log_ratio_exact_limits():
    at0 = gamma_log_ratio(0)
    assert _contains(at0, _fr(mpmath.euler))
    assert at0.width < 1e-15
    at1 = gamma_log_ratio(1.0)
    assert _contains(at1, _fr(2 * (1 - mpmath.euler)))
    assert at1.width < 1e-15


def test_gamma_log_ratio_guard_zones_and_domain():
    with pytest.raises(GuardZoneError):
        gamma_log_ratio(1e-9)
    with pytest.raises(GuardZoneError):
        gamma_log_ratio(1.0 + GUARD_RADIUS / 2)
    with pytest.raises(DomainError):
        gamma_log_ratio(-0.25)
    assert isinstance(GuardZoneError("x"), ValueError)


# -- decreasing target ----------------------------------------------

def test_log_ball_volume_root_against_oracle():
    for x in (1.0 + 2.0**-10, 1.5, 2.0, 10.0, 50.0, 1e6):
        assert _contains(log_ball_volume_root(x), _oracle_log_big_g(x)), x


def test_ball_volume_root_value_domain():
    g2 = ball_volume_root(2.0)
    assert _contains(g2, _fr(mpmath.exp(_oracle_log_big_g(2.0))), Fraction(1, 10**9))
    with pytest.raises(OverflowError):
        ball_volume_root(1.0 + 2.0**-10)  # log value ~2345, exp overflows


def test_ball_volume_root_domain_error():
    with pytest.raises(DomainError):
        log_ball_volume_root(1.0)
    with pytest.raises(DomainError):
        log_ball_volume_root(0.5)
    with pytest.raises(DomainError):
        log_ball_volume_root(1.0 + GUARD_RADIUS / 2)


# -- slope ratio and its derivative core ----------------------------

def test_fg_ratio_values():
    assert _contains(fg_ratio(1.0), _fr(2 * (1 - mpmath.euler)))
    # general form: psi(x+1) * (x^2+1)(x+1) / (2x^2+x-1... ) is not
    # restated here; spot values come straight from the derivative quotient
    x = mpmath.mpf(2)
    truth = (mpmath.psi(0, x + 1) * ((x * x + 1) * (x + 1))
             / ((2 * x) * (x + 1) - (x * x + 1)))
    assert _contains(fg_ratio(2.0), _fr(truth))


def test_fg_ratio_increasing_sample():
    vals = [fg_ratio(x) for x in (1.0, 2.0, 5.0, 20.0)]
    for a, b in zip(vals, vals[1:]):
        assert a.hi < b.lo


def test_fg_ratio_core_anchor_value():
    truth = 8 * (mpmath.pi**2 / 6 - 1) - 4 * (1 - mpmath.euler)
    assert _contains(fg_ratio_core(1), _fr(truth))


def test_fg_ratio_core_rate_matches_psi_combination():
    # rate = 4*p1*psi' ... spelled with polygamma orders 0..2 at x+1
    for x in (1.0, 2.0, 7.5):
        mx = mpmath.mpf(x)
        p1 = -1 - mx + 3 * mx**2 + mx**3
        p3 = -1 + 2 * mx**2 + 8 * mx**3 + 3 * mx**4
        p4 = -1 + mx + 2 * mx**2 + 2 * mx**3 + 3 * mx**4 + mx**5
        truth = (4 * p1 * mpmath.psi(0, mx + 1)
                 + 2 * p3 * mpmath.psi(1, mx + 1)
                 + p4 * mpmath.psi(2, mx + 1))
        assert _contains(fg_ratio_core_rate(x), _fr(truth)), x


def test_fg_ratio_core_rate_finite_difference():
    h = 1e-5
    for x in (1.5, 3.0, 8.0):
        fd = (fg_ratio_core(x + h) - fg_ratio_core(x - h)) / (2 * h)
        rate = fg_ratio_core_rate(x)
        tol = fd.width + rate.width + 1e-3
        assert abs(fd.mid - rate.mid) < tol, x


def test_rate_lower_bound_exact_and_lifted():
    assert fg_ratio_core_rate_lower_bound(Fraction(1)) == Fraction(37, 3)
    assert fg_ratio_core_rate_lower_bound(Fraction(2)) == Fraction(1066, 9)
    enc = fg_ratio_core_rate_lower_bound(1.0)
    assert isinstance(enc, Enclosure)
    assert enc.contains(Fraction(37, 3))


def test_rate_dominates_lower_bound_on_samples():
    for k in range(2, 41):
        x = Fraction(k, 2)
        bound = fg_ratio_core_rate_lower_bound(x)
        assert bound > 0
        assert fg_ratio_core_rate(x).lo > bound


def test_rate_numerator_shift():
    shifted = RATE_NUMERATOR.taylor_shift(Fraction(1))
    assert tuple(shifted.coeffs) == (148, 712, 1364, 1272, 611, 144, 13)
    assert RATE_NUMERATOR.eval_at(Fraction(1)) == 148


# -- lemma polynomial table -----------------------------------------

def test_lemma_polynomials_endpoint_table():
    assert set(LEMMA_POLYS) == {"p1", "p2", "p3", "p4", "p5"}
    for name, p in LEMMA_POLYS.items():
        assert p.eval_at(Fraction(0)) == -1
        assert p.eval_at(Fraction(1)) == LEMMA_VALUE_AT_ONE[name]
        assert p.descartes_sign_changes() == 1
    assert LEMMA_POLYS["p1"] == LEMMA_POLYS["p2"]


# -- sign chain -----------------------------------------------------

def _log_pi():
    return mpmath.log(mpmath.pi)


def test_chain_values_at_one():
    cases = {
        "h": -_log_pi(),
        "h1": (8 * (mpmath.pi**2 / 6 - 1) - 4 * (1 - mpmath.euler)
               + 4 * _log_pi()),
        "h2": -244 + 96 * _log_pi(),
        "h2p": -1056 + 512 * _log_pi(),
        "h2pp": -3656 + 1712 * _log_pi(),
        "h2ppp": -(9648 - 3984 * _log_pi()),
    }
    for token, truth in cases.items():
        assert _contains(ball_root_slope_chain(token, 1), _fr(truth)), token


def test_chain_tokens_and_errors():
    assert set(CHAIN_TOKENS) == {"h", "h1", "h2", "h2p", "h2pp", "h2ppp"}
    with pytest.raises(DomainError):
        ball_root_slope_chain("h3", 1.0)
    with pytest.raises(DomainError):
        ball_root_slope_chain("h", 0.5)


def test_chain_polynomial_tail_signs():
    # h2 and its derivatives are all negative on [1, 20] samples
    for token in ("h2", "h2p", "h2pp", "h2ppp"):
        for x in (1.0, 2.0, 10.0, 20.0):
            assert ball_root_slope_chain(token, x).strictly_negative, (token, x)


def test_third_derivative_is_negated_quartic_table():
    a = chain_interval_poly("h2ppp")
    b = chain_interval_poly("p6")
    assert a.degree == b.degree == 3
    for ca, cb in zip(a.coeffs, b.coeffs):
        assert ca.lo == -cb.hi and ca.hi == -cb.lo


def test_pair_derivative_formal_rule():
    assert pair_derivative(((1, 2), (3, 4), (5, 6))) == ((3, 4), (10, 12))
    assert pair_derivative(((7, 7),)) == ()


def test_chain_finite_differences():
    """Each h2 family member's finite difference matches the next
    member: the quotient-rule algebra behind the printed derivative
    table, checked numerically with a curvature-aware tolerance."""
    h = 1e-4
    tail = chain_interval_poly("h2ppp")
    third = {"h2": tail, "h2p": tail.derivative(),
             "h2pp": tail.derivative().derivative()}
    pairs = [("h2", "h2p"), ("h2p", "h2pp"), ("h2pp", "h2ppp")]
    for x in (1.25, 2.0, 5.0, 12.0):
        for low, high in pairs:
            fd = (ball_root_slope_chain(low, x + h)
                  - ball_root_slope_chain(low, x - h)) / (2 * h)
            d = ball_root_slope_chain(high, x)
            straddle = third[low].eval(Enclosure(x - h, x + h))
            curvature = max(abs(straddle.lo), abs(straddle.hi))
            tol = fd.width + d.width + (h * h / 6) * curvature + 1e-7
            assert abs(fd.mid - d.mid) < tol, (low, x)


def test_rate_bound_pair_at_one():
    lg = _log_pi()
    with_log = (60 - 32 * lg + 32 * mpmath.log(2)) / 4
    rational = (244 - 96 * lg) / 12
    assert _contains(chain_rate_bound_with_log(1.0), _fr(with_log))
    assert _contains(chain_rate_bound_rational(1.0), _fr(rational))
    assert chain_rate_bound_with_log(1.0).lo > chain_rate_bound_rational(1.0).hi


def test_rate_bound_ordering_holds_along_ray():
    for x in (1.0, 1.5, 3.0, 10.0, 20.0):
        assert chain_rate_bound_with_log(x).lo > chain_rate_bound_rational(x).hi, x


# -- ball volumes and the dimension sequence ------------------------

def _oracle_log_omega(n) -> Fraction:
    n = mpmath.mpf(n)
    return _fr(n / 2 * mpmath.log(mpmath.pi) - mpmath.loggamma(1 + n / 2))


def test_unit_ball_volume_small_dimensions():
    assert unit_ball_volume(1).contains(Fraction(2)) or (
        unit_ball_volume(1).lo < 2 < unit_ball_volume(1).hi
    )
    assert _contains(unit_ball_volume(2), _fr(mpmath.pi), Fraction(1, 10**10))
    assert _contains(unit_ball_volume(5), _fr(8 * mpmath.pi**2 / 15),
                     Fraction(1, 10**10))
    assert _contains(log_unit_ball_volume(100), _oracle_log_omega(100))


def test_omega_term_equals_decreasing_target_at_half_dimension():
    for n in range(3, 41):
        term = omega_sequence_term(n)
        direct = ball_volume_root(n / 2)
        assert term.lo == direct.lo and term.hi == direct.hi, n


def test_omega_term_log_form():
    for n in (3, 7, 64, 200):
        want = _oracle_log_big_g(mpmath.mpf(n) / 2)
        assert _contains(log_omega_sequence_term(n), want), n


def test_sequence_modes_against_oracle():
    assert SEQUENCE_MODES == ("unit", "inv_n", "inv_nlnn", "paper")
    assert _contains(log_volume_sequence_value(7, "unit"), _oracle_log_omega(7))
    assert _contains(
        log_volume_sequence_value(5, "inv_n"), _oracle_log_omega(5) / 5
    )
    n = mpmath.mpf(9)
    want = _fr((9 / 2 * mpmath.log(mpmath.pi) - mpmath.loggamma(1 + n / 2))
               / (n * mpmath.log(n)))
    assert _contains(log_volume_sequence_value(9, "inv_nlnn"), want)
    t = volume_sequence_value(2, "inv_nlnn")
    assert _contains(t, _fr(mpmath.pi ** (1 / (2 * mpmath.log(2)))),
                     Fraction(1, 10**10))
    p = volume_sequence_value(4, "paper")
    q = omega_sequence_term(4)
    assert p.lo == q.lo and p.hi == q.hi


def test_sequence_mode_domain_errors():
    with pytest.raises(DomainError):
        log_volume_sequence_value(1, "inv_nlnn")
    with pytest.raises(DomainError):
        log_volume_sequence_value(2, "paper")
    with pytest.raises(DomainError):
        log_volume_sequence_value(3, "median")
    with pytest.raises(DomainError):
        unit_ball_volume(0)
    with pytest.raises(DomainError):
        omega_sequence_term(2)
    with pytest.raises(DomainError):
        unit_ball_volume(True)
    with pytest.raises(DomainError):
        unit_ball_volume(2.0)


def test_far_tail_values():
    # n = 10^5: the 1/n root is deep below 1, the 1/(n ln n) root is
    # still near exp(-1/2)
    v = volume_sequence_value(10**5, "inv_n")
    n = mpmath.mpf(10**5)
    want = _fr(mpmath.exp(
        (n / 2 * mpmath.log(mpmath.pi) - mpmath.loggamma(1 + n / 2)) / n
    ))
    assert _contains(v, want, Fraction(1, 10**10))
    w = volume_sequence_value(10**6, "inv_nlnn")
    assert 0.6 < w.lo < w.hi < 0.7


def test_scalar_validation():
    with pytest.raises(DomainError):
        gamma_log_ratio(True)
    with pytest.raises(DomainError):
        fg_ratio(0.25)
    with pytest.raises(DomainError):
        fg_ratio_core("two")
