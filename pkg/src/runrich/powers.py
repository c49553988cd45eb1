"""Run counts of string powers and the lower-bound ratio they imply."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging

from runrich.runs import LemmaViolation, Run, TextLike, as_text, count_runs, enumerate_runs, primitive_root

log = logging.getLogger(__name__)

# Longest power the verification helpers will materialise.
MAX_POWER_LENGTH = 2_000_000


def power(w: TextLike, k: int) -> bytes:
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    return as_text(w) * k


@dataclass(frozen=True)
class PowerProfile:
    """Run counts of ``w``, ``w^2`` and ``w^3``.

    ``growth`` is the number of runs gained per extra copy and ``offset`` the
    constant term, so that ``run(w^k) == growth * k - offset`` for ``k >= 2``.
    ``offset`` may be negative (``w = "a"`` gives -1).
    """

    length: int
    r1: int
    r2: int
    r3: int

    @property
    def growth(self) -> int:
        return self.r3 - self.r2

    @property
    def offset(self) -> int:
        return 2 * self.r3 - 3 * self.r2

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.growth, self.length)


def power_profile(w: TextLike) -> PowerProfile:
    w = as_text(w)
    if not w:
        raise ValueError("text must be non-empty")
    profile = PowerProfile(len(w), count_runs(w), count_runs(w * 2), count_runs(w * 3))
    if profile.growth < 0:
        log.warning("run count dropped from w^2 to w^3 (growth=%d)", profile.growth)
    return profile


def predict_runs_in_power(profile: PowerProfile, k: int) -> int:
    if k < 2:
        raise ValueError(f"the closed form holds for k >= 2, got k={k}")
    return profile.growth * k - profile.offset


def lower_bound(profile: PowerProfile) -> Fraction:
    return profile.alpha


def epsilon_threshold(profile: PowerProfile, eps) -> int:
    """Smallest positive N with ``N > (growth - offset) / eps``."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    bound = Fraction(profile.growth - profile.offset) / eps
    return max(1, bound.__floor__() + 1)


@dataclass(frozen=True)
class FormulaRow:
    k: int
    predicted: int
    actual: int

    @property
    def match(self) -> bool:
        return self.predicted == self.actual


@dataclass(frozen=True)
class FormulaReport:
    profile: PowerProfile
    rows: tuple[FormulaRow, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(row.match for row in self.rows)


def _check_capacity(w: bytes, k: int, cap: int) -> None:
    if len(w) * k > cap:
        raise ValueError(f"w^{k} would have {len(w) * k} symbols, above the cap of {cap}")


def verify_power_formula(w: TextLike, k_max: int = 5, *, cap: int = MAX_POWER_LENGTH) -> FormulaReport:
    """Compare the closed form against direct enumeration for k = 2..k_max."""
    w = as_text(w)
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2, got {k_max}")
    _check_capacity(w, k_max, cap)
    profile = power_profile(w)
    rows = []
    for k in range(2, k_max + 1):
        actual = {2: profile.r2, 3: profile.r3}.get(k)
        if actual is None:
            actual = count_runs(w * k)
        rows.append(FormulaRow(k, predict_runs_in_power(profile, k), actual))
    return FormulaReport(profile, tuple(rows))


def verify_long_run_lemma(w: TextLike, k: int, *, cap: int = MAX_POWER_LENGTH) -> list[Run]:
    """Return the runs of ``w^k`` spanning at least ``2|w|`` symbols.

    Each must be the whole of ``w^k`` with the primitive root's length as
    period; anything else raises ``LemmaViolation``.
    """
    w = as_text(w)
    if k < 3:
        raise ValueError(f"the long-run property is stated for k >= 3, got k={k}")
    if not w:
        raise ValueError("text must be non-empty")
    _check_capacity(w, k, cap)
    n = len(w)
    expected = Run(1, k * n, len(primitive_root(w)[0]))
    long_runs = [r for r in enumerate_runs(w * k) if r.length >= 2 * n]
    for r in long_runs:
        if r != expected:
            raise LemmaViolation(f"run {tuple(r)} of w^{k} has length >= {2 * n} but is not {tuple(expected)}")
    return long_runs
