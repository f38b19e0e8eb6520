"""First occurrences of large values of rho and the logarithmic upper bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from paperfold.regular_eval import rho_rec_many

_SCAN_CHUNK = 1 << 16


@dataclass(frozen=True)
class GrowthRecord:
    i: int
    a_scan: Optional[int]
    b_closed: int

    @property
    def match(self) -> bool:
        return self.a_scan == self.b_closed


@dataclass(frozen=True)
class BoundReport:
    N: int
    passed: bool
    violations: tuple[int, ...]
    equality: tuple[int, ...]


def b_closed_form(i: int) -> int:
    """(2^i + 1)/3 for odd i, (2^i + 2)/3 for even i."""
    if i < 1:
        raise ValueError(f"level must be >= 1, got {i}")
    q, r = divmod(2**i + (1 if i % 2 else 2), 3)
    assert r == 0
    return q


def a_of_i(i: int) -> GrowthRecord:
    """Smallest n with rho(n) = i + 1, scanning no further than B(i) + 1."""
    b = b_closed_form(i)
    limit = b + 1
    start = 1
    while start <= limit:
        stop = min(start + _SCAN_CHUNK, limit + 1)
        hits = np.flatnonzero(rho_rec_many(np.arange(start, stop)) == i + 1)
        if hits.size:
            return GrowthRecord(i, start + int(hits[0]), b)
        start = stop
    return GrowthRecord(i, None, b)


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def bound_check(N: int) -> BoundReport:
    """Check rho(n) <= ceil(log2 n) + 2 for 2 <= n <= N; also list where equality holds."""
    if N < 2:
        raise ValueError("bound_check needs N >= 2")
    ns = np.arange(2, N + 1, dtype=np.int64)
    # ceil(log2 n) = bit length of n - 1
    bound = _bit_length(ns - 1) + 2
    rho = rho_rec_many(ns)
    violations = ns[rho > bound]
    equality = ns[rho == bound]
    return BoundReport(
        N=N,
        passed=violations.size == 0,
        violations=tuple(int(v) for v in violations[:10]),
        equality=tuple(int(v) for v in equality),
    )


def _bit_length(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.int64)
    a = a.copy()
    while np.any(a):
        nz = a > 0
        out[nz] += 1
        a >>= 1
    return out
