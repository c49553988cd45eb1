"""Suffix array, LCP array and O(1) longest-common-extension queries (numpy)."""

import numpy as np


def suffix_array(codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(sa, isa)`` by prefix doubling.

    Suffixes compare lexicographically with a proper prefix sorting first,
    so the empty continuation is smaller than every symbol.
    """
    n = len(codes)
    if n == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    rank = codes.astype(np.int64) + 1
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        key = rank * (int(rank.max()) + 1) + second
        sa = np.argsort(key, kind="stable")
        sorted_key = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([1], 1 + np.cumsum(sorted_key[1:] != sorted_key[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n or k >= n:
            break
        k *= 2
    return sa, rank - 1


def lcp_array(codes: np.ndarray, sa: np.ndarray, isa: np.ndarray) -> np.ndarray:
    """Kasai et al.: ``lcp[r]`` is the common prefix of suffixes ``sa[r-1]`` and ``sa[r]``."""
    n = len(codes)
    s = codes.tolist()
    sa_l = sa.tolist()
    isa_l = isa.tolist()
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = isa_l[i]
        if r == 0:
            h = 0
            continue
        j = sa_l[r - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


def next_smaller(isa: np.ndarray) -> np.ndarray:
    """For each position, the nearest position to the right with a smaller suffix rank (n if none)."""
    ranks = isa.tolist()
    n = len(ranks)
    out = [n] * n
    stack: list[int] = []
    for i, r in enumerate(ranks):
        while stack and ranks[stack[-1]] > r:
            out[stack.pop()] = i
        stack.append(i)
    return np.asarray(out, dtype=np.int64)


class LCE:
    """Longest common extension of two suffixes via a sparse-table RMQ over the LCP array."""

    def __init__(self, codes: np.ndarray, sa: np.ndarray | None = None, isa: np.ndarray | None = None):
        if sa is None or isa is None:
            sa, isa = suffix_array(codes)
        self.n = n = len(codes)
        self.isa = isa
        lcp = lcp_array(codes, sa, isa)
        levels = max(1, int(n).bit_length())
        table = np.zeros((levels, n), dtype=np.int64)
        table[0] = lcp
        width = 1
        for k in range(1, levels):
            if 2 * width > n:
                break
            table[k, : n - 2 * width + 1] = np.minimum(
                table[k - 1, : n - 2 * width + 1], table[k - 1, width : n - width + 1]
            )
            width *= 2
        self.table = table
        self.log2 = np.zeros(n + 1, dtype=np.int64)
        if n >= 2:
            self.log2[2:] = np.floor(np.log2(np.arange(2, n + 1))).astype(np.int64)

    def query(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorised LCE for distinct in-range position pairs."""
        ra = self.isa[a]
        rb = self.isa[b]
        lo = np.minimum(ra, rb) + 1
        hi = np.maximum(ra, rb)
        k = self.log2[hi - lo + 1]
        return np.minimum(self.table[k, lo], self.table[k, hi - (1 << k) + 1])
