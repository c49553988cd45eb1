from pathlib import Path

import pytest

from runrich import runs
from runrich.runs import RUNS_CEILING, RunSet

DATA = Path(runs.__file__).parent / "data"
PAPER_EXAMPLE = "aabaabaaaacaacac"

# Every RunSet built during the session is checked against the ceiling.
CEILING = {"checked": 0, "violations": []}
_from_triples = RunSet.from_triples.__func__


def _tracked(cls, triples, source_length):
    rs = _from_triples(cls, triples, source_length)
    CEILING["checked"] += 1
    if len(rs) > RUNS_CEILING * source_length:
        CEILING["violations"].append((source_length, len(rs)))
    return rs


RunSet.from_triples = classmethod(_tracked)

ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def pytest_sessionfinish(session, exitstatus):
    if CEILING["violations"]:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    tr.section("run ceiling")
    tr.write_line(
        f"run sets checked={CEILING['checked']} above {RUNS_CEILING}*n: {len(CEILING['violations'])}"
    )
    if ACCEPTANCE:
        tr.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            status, title, detail = ACCEPTANCE[number]
            tr.write_line(f"[{status}] {number:2d}. {title}" + (f"  ({detail})" if detail else ""))


@pytest.fixture(scope="session")
def tau1558() -> bytes:
    return b"".join((DATA / "tau1558.txt").read_bytes().split())


def brute_force_runs(w: bytes) -> set:
    """Runs by trying every substring; cubic-plus, for tiny inputs only."""
    n = len(w)
    out = set()
    for i in range(n):
        for j in range(i + 2, n + 1):
            u = w[i:j]
            p = next(q for q in range(1, len(u) + 1) if u[q:] == u[: len(u) - q])
            if 2 * p > len(u):
                continue
            if i > 0 and w[i - 1] == w[i - 1 + p]:
                continue
            if j < n and w[j] == w[j - p]:
                continue
            out.add((i + 1, j - i, p))
    return out
