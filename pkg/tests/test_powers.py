from fractions import Fraction
import random

import pytest

from runrich.powers import (
    MAX_POWER_LENGTH,
    PowerProfile,
    epsilon_threshold,
    lower_bound,
    power,
    power_profile,
    predict_runs_in_power,
    verify_long_run_lemma,
    verify_power_formula,
)
from runrich.runs import LemmaViolation, Run, count_runs, enumerate_runs_naive


def test_power():
    assert power("ab", 3) == b"ababab"
    assert power("abc", 0) == b""
    assert power("abc", 1) == b"abc"
    with pytest.raises(ValueError):
        power("a", -1)


def test_profile_of_fixture(tau1558):
    p = power_profile(tau1558)
    assert (p.length, p.r2, p.r3) == (1558, 2915, 4374)
    assert (p.growth, p.offset) == (1459, 3)
    assert p.alpha == Fraction(1459, 1558) == lower_bound(p)


def test_profile_of_single_symbol():
    # oracle: "a" has no run, "aa" and "aaa" one each
    counts = [len(enumerate_runs_naive("a" * k)) for k in (1, 2, 3)]
    assert counts == [0, 1, 1]
    p = power_profile("a")
    assert (p.r1, p.r2, p.r3, p.growth, p.offset, p.alpha) == (0, 1, 1, 0, -1, 0)


def test_profile_rejects_empty():
    with pytest.raises(ValueError):
        power_profile("")


def test_prediction_reproduces_inputs_and_extends(tau1558):
    p = power_profile(tau1558)
    assert predict_runs_in_power(p, 2) == 2915
    assert predict_runs_in_power(p, 3) == 4374
    assert predict_runs_in_power(p, 4) == 5833 == count_runs(tau1558 * 4)
    with pytest.raises(ValueError):
        predict_runs_in_power(p, 1)


def test_headline_profile_arithmetic():
    p = PowerProfile(60064, 56714, 113448, 170181)
    assert (p.growth, p.offset) == (56733, 18)
    assert all(predict_runs_in_power(p, k) == 56733 * k - 18 for k in range(2, 50))
    assert lower_bound(p) == Fraction(56733, 60064)
    assert epsilon_threshold(p, Fraction(1, 1000)) == 56715001


def test_epsilon_threshold():
    p = PowerProfile(1558, 1455, 2915, 4374)
    assert epsilon_threshold(p, Fraction(1, 100)) == 145601
    assert epsilon_threshold(p, "1/100") == 145601
    flat = PowerProfile(2, 0, 1, 1)  # growth 0, offset -1
    assert epsilon_threshold(flat, Fraction(1, 2)) == 3
    zero = PowerProfile(4, 0, 1, 2)
    assert zero.growth - zero.offset == 0
    assert epsilon_threshold(zero, Fraction(1, 7)) == 1
    for bad in (0, -1, Fraction(-1, 3)):
        with pytest.raises(ValueError):
            epsilon_threshold(p, bad)


def test_threshold_bound_holds_numerically(tau1558):
    """Past the threshold, the run count of the largest fitting power beats (alpha - eps) n."""
    p = power_profile(tau1558)
    eps = Fraction(1, 10)
    N = epsilon_threshold(p, eps)
    for n in (N, N + 1, N + 777, 3 * N):
        k = n // p.length + 1
        assert Fraction(predict_runs_in_power(p, k - 1), n) > p.alpha - eps


def test_formula_on_fixture(tau1558):
    report = verify_power_formula(tau1558, 5)
    assert report.ok
    assert [r.actual for r in report.rows] == [2915, 4374, 5833, 7292]


@pytest.mark.parametrize("w, k_max", [("ab", 6), ("abcacabc", 4), ("a", 5), ("aab", 6)])
def test_formula_small(w, k_max):
    report = verify_power_formula(w, k_max)
    assert report.ok
    assert [r.actual for r in report.rows] == [len(enumerate_runs_naive(w.encode() * k)) for k in range(2, k_max + 1)]


def test_formula_argument_checks():
    with pytest.raises(ValueError):
        verify_power_formula("ab", 1)
    with pytest.raises(ValueError):
        verify_power_formula("ab", 6, cap=11)
    with pytest.raises(ValueError):
        verify_power_formula("a" * 1000, MAX_POWER_LENGTH)


def test_formula_random_sweep():
    rng = random.Random(11)
    for _ in range(300):
        w = bytes(rng.choice(b"01") for _ in range(rng.randint(1, 16)))
        assert verify_power_formula(w, 6).ok, w


def test_long_run_lemma_examples():
    w = b"abcacabc"
    assert verify_long_run_lemma(w, 3) == [Run(1, 24, 8)]
    assert Run(8, 10, 5) in enumerate_runs_naive(w * 3)
    assert verify_long_run_lemma("aa", 3) == [Run(1, 6, 1)]
    assert verify_long_run_lemma("abab", 4) == [Run(1, 16, 2)]
    with pytest.raises(ValueError):
        verify_long_run_lemma("ab", 2)


def test_long_run_lemma_detects_violation(monkeypatch):
    import runrich.powers as powers

    monkeypatch.setattr(powers, "enumerate_runs", lambda w: [Run(2, len(w) - 1, 1)])
    with pytest.raises(LemmaViolation):
        powers.verify_long_run_lemma("ab", 3)


def test_long_run_lemma_random():
    rng = random.Random(5)
    for _ in range(200):
        w = bytes(rng.choice(b"01") for _ in range(rng.randint(1, 12)))
        for k in (3, 4):
            assert len(verify_long_run_lemma(w, k)) <= 1
