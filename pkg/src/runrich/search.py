"""Beam search for run-rich binary strings.

Starting from ``"0"``, every buffered string is extended by ``0`` and ``1``;
the children are ranked by how many runs one more copy adds
(``run(w^3) - run(w^2)``) and the best ``buffer_size`` survive to the next
round.  Strings whose ratio ``score / |w|`` beats the record threshold are
kept on a leaderboard.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, TextIO

from runrich.codec import BINARY, FormatError, decode_hex, encode_hex
from runrich.runs import TextLike, as_text, count_runs, enumerate_runs

# Previous best lower bound 3/(1+sqrt 5) ~ 0.927, as an exact rational.
DEFAULT_THRESHOLD = Fraction(927, 1000)

_COMPLEMENT = bytes.maketrans(b"01", b"10")


def _binary(w: TextLike) -> bytes:
    w = as_text(w)
    if not w:
        raise ValueError("text must be non-empty")
    if w.strip(BINARY):
        raise ValueError("search strings must be over the alphabet {0, 1}")
    return w


def complement(w: bytes) -> bytes:
    return w.translate(_COMPLEMENT)


def canonical(w: bytes) -> bytes:
    return min(w, complement(w))


def score(w: TextLike) -> int:
    """``run(w^3) - run(w^2)`` from a single enumeration of ``w^3``.

    The runs of ``w^2`` are exactly the runs of ``w^3`` cut at position
    ``2|w|`` that still span two periods, so the score counts the runs of
    ``w^3`` that do not survive the cut.
    """
    w = _binary(w)
    cut = 2 * len(w)
    return sum(1 for r in enumerate_runs(w * 3) if min(r.end, cut) - r.start + 1 < 2 * r.period)


@dataclass(frozen=True)
class SearchConfig:
    buffer_size: int = 100
    max_length: int = 60
    record_threshold: Fraction = DEFAULT_THRESHOLD
    canonicalize_complement: bool = True
    keep: int = 100
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "record_threshold", Fraction(self.record_threshold))
        for name in ("buffer_size", "max_length", "keep", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


@dataclass(frozen=True, order=False)
class Candidate:
    text: bytes
    score: int
    alpha: Fraction

    @classmethod
    def scored(cls, text: bytes, value: int) -> "Candidate":
        return cls(text, value, Fraction(value, len(text)))

    def rank_key(self):
        return (-self.alpha, len(self.text), self.text)


@dataclass(frozen=True)
class RoundStats:
    round: int
    buffer_best_score: int
    buffer_best_alpha: Fraction
    leader_best_alpha: Fraction | None


@dataclass
class Leaderboard:
    entries: list[Candidate] = field(default_factory=list)
    history: list[RoundStats] = field(default_factory=list)

    @property
    def best(self) -> Candidate | None:
        return self.entries[0] if self.entries else None

    def merge(self, candidates: Iterable[Candidate], keep: int) -> None:
        pool = {c.text: c for c in self.entries}
        for c in candidates:
            pool.setdefault(c.text, c)
        self.entries = sorted(pool.values(), key=Candidate.rank_key)[:keep]


def _fmt_alpha(a: Fraction | None) -> str:
    return "-" if a is None else f"{float(a):.6f}"


def beam_search(config: SearchConfig, progress: TextIO | None = None) -> Leaderboard:
    board = Leaderboard()
    buffer = [b"0"]
    pool = ProcessPoolExecutor(config.workers) if config.workers > 1 else None
    try:
        for length in range(1, config.max_length + 1):
            if length == 1:
                children = buffer
            else:
                children = [w + c for w in buffer for c in (b"0", b"1")]
            if config.canonicalize_complement:
                children = list(dict.fromkeys(canonical(w) for w in children))
            if pool is None:
                scores = list(map(score, children))
            else:
                scores = list(pool.map(score, children, chunksize=max(1, len(children) // (4 * config.workers))))
            ranked = sorted(
                (Candidate.scored(w, s) for w, s in zip(children, scores)),
                key=lambda c: (-c.score, c.text),
            )
            survivors = ranked[: config.buffer_size]
            buffer = [c.text for c in survivors]
            board.merge((c for c in ranked if c.alpha > config.record_threshold), config.keep)

            stats = RoundStats(
                length,
                survivors[0].score,
                max(c.alpha for c in survivors),
                board.best.alpha if board.best else None,
            )
            board.history.append(stats)
            if progress is not None:
                print(
                    f"round={length} buffer_best_score={stats.buffer_best_score} "
                    f"buffer_best_alpha={_fmt_alpha(stats.buffer_best_alpha)} "
                    f"leader_best_alpha={_fmt_alpha(stats.leader_best_alpha)}",
                    file=progress,
                    flush=True,
                )
    finally:
        if pool is not None:
            pool.shutdown()
    return board


@dataclass(frozen=True)
class Mismatch:
    index: int
    candidate: Candidate
    reason: str


def verify_leaderboard(entries: Iterable[Candidate]) -> list[Mismatch]:
    """Recompute every entry with two independent enumerations; return the disagreements."""
    problems = []
    for index, c in enumerate(entries):
        w = as_text(c.text)
        actual = count_runs(w * 3) - count_runs(w * 2)
        if c.score != actual:
            problems.append(Mismatch(index, c, f"score {c.score} != recomputed {actual}"))
        if c.alpha != Fraction(actual, len(w)):
            problems.append(Mismatch(index, c, f"alpha {c.alpha} != recomputed {Fraction(actual, len(w))}"))
    return problems


HEADER = "# alpha score length hex"


def format_leaderboard(entries: Iterable[Candidate]) -> str:
    lines = [HEADER]
    for c in entries:
        a = c.alpha
        lines.append(f"{a.numerator}/{a.denominator} {c.score} {len(c.text)} {encode_hex(c.text).digits}")
    return "\n".join(lines) + "\n"


def parse_leaderboard(content: str) -> list[Candidate]:
    entries = []
    for lineno, line in enumerate(content.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise FormatError(f"line {lineno}: expected 'alpha score length hex'")
        alpha, value, length, digits = parts
        try:
            entries.append(Candidate(decode_hex(digits, int(length)), int(value), Fraction(alpha)))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return entries
