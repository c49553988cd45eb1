"""Maximal repetitions (runs) of a string.

A run is reported as a triple ``(start, length, period)`` with a 1-based
``start`` and the minimal period of the covered substring.  Texts are byte
strings; ``str`` input is accepted and encoded as Latin-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple, Union

import numpy as np

from runrich._suffix import LCE, next_smaller, suffix_array

TextLike = Union[bytes, bytearray, str]

# Cited upper bound on runs per symbol, used as a sanity ceiling.
RUNS_CEILING = 1.048

# Texts up to this length go through the pure-Python engine.
SMALL_TEXT = 1024

_INVERT = bytes(range(255, -1, -1))


class LemmaViolation(AssertionError):
    """A proven combinatorial lemma failed on concrete input; indicates a bug."""


def as_text(w: TextLike) -> bytes:
    if isinstance(w, str):
        return w.encode("latin-1")
    return bytes(w)


class Run(NamedTuple):
    start: int
    length: int
    period: int

    @property
    def end(self) -> int:
        """1-based inclusive end position."""
        return self.start + self.length - 1

    @property
    def exponent(self) -> float:
        return self.length / self.period


@dataclass(frozen=True)
class RunSet:
    runs: tuple[Run, ...]
    source_length: int

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[Run]:
        return iter(self.runs)

    def __contains__(self, item) -> bool:
        return tuple(item) in set(self.runs)

    @classmethod
    def from_triples(cls, triples, source_length: int) -> "RunSet":
        return cls(tuple(sorted(Run(*t) for t in triples)), source_length)


def _require_nonempty(w: bytes) -> None:
    if not w:
        raise ValueError("text must be non-empty")


def is_period(w: TextLike, p: int) -> bool:
    w = as_text(w)
    if p < 1:
        raise ValueError(f"period must be positive, got {p}")
    return w[p:] == w[: len(w) - p] if p < len(w) else True


def minimal_period(w: TextLike) -> int:
    """Smallest period of ``w``: its length minus its longest border."""
    w = as_text(w)
    _require_nonempty(w)
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


def primitive_root(w: TextLike) -> tuple[bytes, int]:
    """Return ``(u, t)`` with ``u`` primitive and ``w == u * t``."""
    w = as_text(w)
    p = minimal_period(w)
    if len(w) % p:
        return w, 1
    return w[:p], len(w) // p


@dataclass(frozen=True)
class PeriodicityVerdict:
    p: int
    q: int
    gcd: int
    premise: bool
    gcd_is_period: bool


def check_periodicity_lemma(w: TextLike, p: int, q: int) -> PeriodicityVerdict:
    """Check Fine and Wilf on concrete periods ``p`` and ``q`` of ``w``.

    Raises ``ValueError`` if either is not a period, and ``LemmaViolation``
    if the premise ``p + q - gcd(p, q) <= |w|`` holds but the gcd is not a
    period.
    """
    w = as_text(w)
    for x in (p, q):
        if not is_period(w, x):
            raise ValueError(f"{x} is not a period of the text")
    g = gcd(p, q)
    premise = p + q - g <= len(w)
    g_period = is_period(w, g)
    if premise and not g_period:
        raise LemmaViolation(f"periods {p}, {q} of length-{len(w)} text but gcd {g} is not a period")
    return PeriodicityVerdict(p, q, g, premise, g_period)


def enumerate_runs_naive(w: TextLike) -> RunSet:
    """Reference enumeration straight from the definition.

    For every candidate period ``p`` the maximal blocks of positions with
    ``w[t] == w[t + p]`` give the maximal ``p``-periodic intervals; such an
    interval is a run when it spans at least ``2p`` symbols and ``p`` is its
    smallest period.  Quadratic time; used as the oracle.
    """
    w = as_text(w)
    n = len(w)
    found = []
    for p in range(1, n // 2 + 1):
        t = 0
        while t < n - p:
            if w[t] != w[t + p]:
                t += 1
                continue
            a = t
            while t < n - p and w[t] == w[t + p]:
                t += 1
            start, stop = a, t + p  # half-open interval
            if stop - start >= 2 * p and not any(
                all(w[x] == w[x + q] for x in range(start, stop - q)) for q in range(1, p)
            ):
                found.append((start + 1, stop - start, p))
    return RunSet.from_triples(found, n)


def _runs_small(w: bytes) -> list[tuple[int, int, int]]:
    n = len(w)
    half = n // 2
    found: dict[tuple[int, int], int] = {}
    positions = range(n)
    for text in (w, w.translate(_INVERT)):
        sa = sorted(positions, key=lambda i: text[i:])
        rank = sorted(positions, key=sa.__getitem__)
        nss = [n] * n
        stack: list[int] = []
        push = stack.append
        pop = stack.pop
        for i in positions:
            r = rank[i]
            while stack and rank[stack[-1]] > r:
                nss[pop()] = i
            push(i)

        last: dict[int, tuple[int, int]] = {}
        for i in positions:
            j = nss[i]
            p = j - i
            if p > half:
                continue
            prev = last.get(p)
            if prev is not None and prev[0] <= i and j <= prev[1]:
                continue
            e = j
            while e < n and w[e] == w[e - p]:
                e += 1
            s = i
            while s and w[s - 1] == w[s - 1 + p]:
                s -= 1
            if e - s >= 2 * p:
                found[(s, e - s)] = p
                last[p] = (s, e)
    return [(s + 1, length, p) for (s, length), p in found.items()]


def _runs_large(w: bytes) -> list[tuple[int, int, int]]:
    n = len(w)
    codes = np.frombuffer(w, dtype=np.uint8)
    sa, isa = suffix_array(codes)
    ends = [next_smaller(isa), next_smaller(suffix_array(255 - codes)[1])]
    forward = LCE(codes, sa, isa)
    backward = LCE(codes[::-1].copy())

    i = np.concatenate([np.arange(n, dtype=np.int64)] * 2)
    j = np.concatenate(ends)
    p = j - i
    keep = 2 * p <= n
    i, j, p = i[keep], j[keep], p[keep]

    right = np.zeros(len(i), dtype=np.int64)
    m = j < n
    right[m] = forward.query(i[m], j[m])
    left = np.zeros(len(i), dtype=np.int64)
    m = i > 0
    # common suffix ending at i-1 and j-1 == common prefix in the reversed text
    left[m] = backward.query(n - i[m], n - j[m])

    ok = left + right >= p
    start = (i - left)[ok]
    length = (p + left + right)[ok]
    period = p[ok]
    _, first = np.unique(start * (n + 1) + length, return_index=True)
    return list(zip((start[first] + 1).tolist(), length[first].tolist(), period[first].tolist()))


def enumerate_runs(w: TextLike) -> RunSet:
    """All runs of ``w`` in canonical ``(start, length, period)`` order.

    Every run has a Lyndon root, with respect to one of the two symbol
    orders, that is the longest Lyndon word starting at its position.  Those
    words end where the next lexicographically smaller suffix starts, so each
    position yields one candidate period per order which is then extended in
    both directions with longest-common-extension queries.
    """
    w = as_text(w)
    if len(w) < 2:
        return RunSet((), len(w))
    triples = _runs_small(w) if len(w) <= SMALL_TEXT else _runs_large(w)
    return RunSet.from_triples(triples, len(w))


def count_runs(w: TextLike) -> int:
    return len(enumerate_runs(w))
