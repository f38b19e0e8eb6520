"""Brute-force abelian complexity of the paperfolding word.

Every length-n window of a prefix is examined. A prefix is accepted only
once it provably contains every factor of length n:

* n >= 7: the number of distinct length-n factors seen equals 4n, the
  known subword complexity of the paperfolding word;
* n <= 6: the balance spectrum is unchanged when the prefix is doubled and
  rho(n) agrees with the published table of initial values.

Distinct factors are counted exactly with a suffix array and LCP array of
the prefix (no hashing).
"""

from __future__ import annotations

import concurrent.futures as cf
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Iterable, Optional

import numpy as np

from paperfold.report import CheckResult
from paperfold.word_core import FactorWord, PaperfoldingPrefix, prefix

DEFAULT_PREFIX_CAP = 2**28

# rho(1..20) as published
INITIAL_VALUES = (2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5)


@dataclass(frozen=True)
class DeltaSpectrum:
    n: int
    values: tuple[int, ...]

    @property
    def M(self) -> int:
        return self.values[-1]

    def is_symmetric(self) -> bool:
        return self.values == tuple(-v for v in reversed(self.values))

    def has_step_two(self) -> bool:
        return all(b - a == 2 for a, b in zip(self.values, self.values[1:]))

    def is_full_progression(self) -> bool:
        """values == (-M, -M+2, ..., M)"""
        return self.values == tuple(range(-self.M, self.M + 1, 2))


@dataclass(frozen=True)
class ComplexityRecord:
    n: int
    M: int
    rho: int
    spectrum: DeltaSpectrum
    certified: bool
    prefix_used: int
    factor_count: Optional[int] = None


class CertificationError(RuntimeError):
    """No prefix within the cap could be certified complete for length n."""

    def __init__(self, message: str, record: ComplexityRecord):
        super().__init__(message)
        self.record = record


def delta(w: FactorWord) -> int:
    """Number of 0s minus number of 1s."""
    if isinstance(w, str):
        return w.count("0") - w.count("1")
    ones = sum(int(x) for x in w)
    return len(w) - 2 * ones


def _window_deltas(bits: np.ndarray, n: int) -> np.ndarray:
    # running balance; window delta = balance leaving minus balance entering
    steps = 1 - 2 * bits.astype(np.int64)
    balance = np.concatenate(([0], np.cumsum(steps)))
    return balance[n:] - balance[:-n]


def window_deltas(p: PaperfoldingPrefix, n: int) -> DeltaSpectrum:
    """Distinct balances over all length-n windows of ``p``, sorted."""
    if not 1 <= n <= p.length:
        raise ValueError(f"window length {n} outside 1..{p.length}")
    values = np.unique(_window_deltas(p.bits(), n))
    return DeltaSpectrum(n, tuple(int(v) for v in values))


def suffix_array(bits: np.ndarray) -> np.ndarray:
    """Suffix array by prefix doubling over integer ranks."""
    size = len(bits)
    if size == 0:
        return np.zeros(0, dtype=np.int64)
    rank = bits.astype(np.int64)
    k = 1
    while True:
        second = np.zeros(size, dtype=np.int64)
        if k < size:
            second[: size - k] = rank[k:] + 1
        key = rank * (size + 1) + second
        sa = np.argsort(key, kind="stable")
        ordered = key[sa]
        rank = np.empty(size, dtype=np.int64)
        rank[sa] = np.concatenate(([0], np.cumsum(ordered[1:] != ordered[:-1])))
        if rank[sa[-1]] == size - 1 or k >= size:
            return sa
        k *= 2


def lcp_array(bits: np.ndarray, sa: np.ndarray) -> np.ndarray:
    """lcp[i] = longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0 (Kasai)."""
    size = len(bits)
    text = bits.tolist()
    order = sa.tolist()
    rank = [0] * size
    for i, s in enumerate(order):
        rank[s] = i
    lcp = [0] * size
    h = 0
    for i in range(size):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = order[r - 1]
        while i + h < size and j + h < size and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.array(lcp, dtype=np.int64)


class FactorIndex:
    """Suffix structures over the paperfolding prefix of length ``text_len``.

    Two windows of length n starting at i and j are equal exactly when the
    suffixes at i and j share at least n letters, so equal windows form
    contiguous runs in suffix order.
    """

    def __init__(self, text_len: int):
        self.text_len = text_len
        self.bits = prefix(text_len).bits()
        self.sa = suffix_array(self.bits)
        self.lcp = lcp_array(self.bits, self.sa)

    def _groups(self, n: int, length: int):
        if not 1 <= n <= length <= self.text_len:
            raise ValueError(f"need 1 <= n={n} <= length={length} <= {self.text_len}")
        group = np.cumsum(self.lcp < n)
        inside = self.sa <= length - n
        g = group[inside]
        first = np.ones(g.size, dtype=bool)
        first[1:] = g[1:] != g[:-1]
        return self.sa[inside], first

    def distinct_count(self, n: int, length: int) -> int:
        """Number of distinct length-n factors of the first ``length`` letters."""
        _, first = self._groups(n, length)
        return int(np.count_nonzero(first))

    def distinct_factors(self, n: int, length: int) -> list[str]:
        starts, first = self._groups(n, length)
        chars = self.bits.tobytes().translate(bytes.maketrans(b"\x00\x01", b"01")).decode()
        return [chars[s : s + n] for s in starts[first].tolist()]


@lru_cache(maxsize=4)
def factor_index(text_len: int) -> FactorIndex:
    return FactorIndex(text_len)


def _index_for(length: int) -> FactorIndex:
    text_len = 1 << max(length - 1, 0).bit_length()
    return factor_index(text_len)


def _spectrum_of(bits: np.ndarray, n: int) -> DeltaSpectrum:
    return DeltaSpectrum(n, tuple(int(v) for v in np.unique(_window_deltas(bits, n))))


def _record(n: int, spectrum: DeltaSpectrum, certified: bool, length: int, count=None):
    return ComplexityRecord(
        n=n,
        M=spectrum.M,
        rho=len(spectrum.values),
        spectrum=spectrum,
        certified=certified,
        prefix_used=length,
        factor_count=count,
    )


def rho_oracle(n: int, cap: int = DEFAULT_PREFIX_CAP) -> ComplexityRecord:
    """rho(n) from exhaustive windowing over a certified-complete prefix.

    The prefix starts at 16n letters and doubles until the completeness
    certificate holds. Raises CertificationError once the next prefix would
    exceed ``cap`` letters.
    """
    if n < 1:
        raise ValueError(f"rho is defined for n >= 1, got {n}")
    length = 16 * n
    last = None
    while True:
        needed = length if n >= 7 else 2 * length
        if needed > cap:
            if last is None:
                last = _record(n, DeltaSpectrum(n, (0,)), False, 0)
            raise CertificationError(
                f"length {n}: no certified prefix within {cap} letters", last
            )
        index = _index_for(needed)
        bits = index.bits[:length]
        spectrum = _spectrum_of(bits, n)
        count = index.distinct_count(n, length)
        if n >= 7:
            certified = count == 4 * n
        else:
            doubled = _spectrum_of(index.bits[: 2 * length], n)
            certified = doubled == spectrum and len(spectrum.values) == INITIAL_VALUES[n - 1]
        last = _record(n, spectrum, certified, length, count)
        if certified:
            return last
        length *= 2


def rho_oracle_many(ns: Iterable[int], parallel: bool = False, workers=None,
                    cap: int = DEFAULT_PREFIX_CAP) -> list[ComplexityRecord]:
    """rho_oracle over several lengths; results are returned in input order.

    With ``parallel`` the lengths are sharded over worker processes, each of
    which builds its own prefix buffers.
    """
    ns = list(ns)
    if not parallel or len(ns) < 2:
        return [rho_oracle(n, cap) for n in ns]
    with cf.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(partial(rho_oracle, cap=cap), ns, chunksize=max(1, len(ns) // 64)))


def distinct_factor_count(n: int, cap: int = DEFAULT_PREFIX_CAP) -> int:
    """Distinct length-n factors found in the certified prefix."""
    return rho_oracle(n, cap).factor_count


def factor_set(n: int, cap: int = DEFAULT_PREFIX_CAP) -> set[str]:
    """All distinct length-n factors (as '0'/'1' strings) of the certified prefix."""
    rec = rho_oracle(n, cap)
    return set(_index_for(rec.prefix_used).distinct_factors(n, rec.prefix_used))


def maximal_factor_endpoints_check(n: int, cap: int = DEFAULT_PREFIX_CAP) -> CheckResult:
    """No window of balance M(n) may both start and end with a 1."""
    if n < 2:
        raise ValueError("maximal_factor_endpoints_check needs n >= 2")
    rec = rho_oracle(n, cap)
    bits = _index_for(rec.prefix_used).bits[: rec.prefix_used]
    deltas = _window_deltas(bits, n)
    starts = np.flatnonzero(deltas == rec.M)
    bad = starts[(bits[starts] == 1) & (bits[starts + n - 1] == 1)]
    if bad.size:
        return CheckResult("maximal-endpoints", f"n={n}", False, f"window at position {int(bad[0]) + 1}")
    return CheckResult("maximal-endpoints", f"n={n}", True)
