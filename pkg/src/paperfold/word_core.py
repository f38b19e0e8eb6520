"""Generation of the ordinary paperfolding word f = f_1 f_2 f_3 ...

Two independent generators are provided: the odd-part formula and the
Toeplitz gap-filling construction. Positions are 1-based on every public
interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence, Union

import numpy as np

from paperfold.report import CheckResult

Letter = Literal[0, 1]
FactorWord = Union[str, Sequence[int]]

_FLIP = str.maketrans("01", "10")


@dataclass(frozen=True)
class PaperfoldingPrefix:
    """f_1..f_length stored one letter per bit (little-endian bit order)."""

    packed: bytes
    length: int

    @classmethod
    def from_bits(cls, bits: np.ndarray) -> "PaperfoldingPrefix":
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.size and bits.max() > 1:
            raise ValueError("letters must be 0 or 1")
        return cls(np.packbits(bits, bitorder="little").tobytes(), int(bits.size))

    def bits(self) -> np.ndarray:
        """Unpacked letters as a 0-based uint8 array (entry i holds f_{i+1})."""
        raw = np.frombuffer(self.packed, dtype=np.uint8)
        return np.unpackbits(raw, count=self.length, bitorder="little")

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.length:
            raise IndexError(f"position {n} outside 1..{self.length}")
        byte = self.packed[(n - 1) >> 3]
        return (byte >> ((n - 1) & 7)) & 1

    def __str__(self) -> str:
        return self.bits().tobytes().translate(bytes.maketrans(b"\x00\x01", b"01")).decode()


def letter_at(n: int) -> int:
    """Return f_n: 0 if the odd part of n is 1 mod 4, else 1."""
    if n < 1:
        raise ValueError(f"paperfolding positions start at 1, got {n}")
    odd = n >> ((n & -n).bit_length() - 1)
    return (odd >> 1) & 1


def prefix(length: int) -> PaperfoldingPrefix:
    """f_1..f_length from the odd-part formula."""
    if length < 0:
        raise ValueError("length must be non-negative")
    n = np.arange(1, length + 1, dtype=np.uint64)
    lowbit = n & (~n + np.uint64(1))
    bits = ((n // lowbit) >> np.uint64(1)) & np.uint64(1)
    return PaperfoldingPrefix.from_bits(bits.astype(np.uint8))


def toeplitz_prefix(length: int) -> PaperfoldingPrefix:
    """f_1..f_length by repeated gap filling.

    Each round writes 0,1,0,1,... into every other remaining gap, starting
    with the first gap. Only the first ``length`` cells are ever touched.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    buf = np.zeros(length, dtype=np.uint8)
    gaps = np.arange(length, dtype=np.int64)
    while gaps.size:
        filled = gaps[0::2]
        buf[filled] = np.arange(filled.size, dtype=np.int64) & 1
        gaps = gaps[1::2]
    return PaperfoldingPrefix.from_bits(buf)


def reverse_complement(w: FactorWord) -> FactorWord:
    """Reverse ``w`` and swap 0 <-> 1. Strings stay strings, sequences become tuples."""
    if isinstance(w, str):
        return w.translate(_FLIP)[::-1]
    return tuple(1 - int(x) for x in reversed(w))


def kernel_letter_identities_check(N: int) -> CheckResult:
    """Check f(2n) = f(n), f(4n+1) = 0 and f(4n+3) = 1 for all indices up to N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    f = np.concatenate(([0], prefix(N).bits())).astype(np.int8)  # f[n] == f_n
    name = "kernel-letters"
    rng = f"1..{N}"
    half = np.arange(1, N // 2 + 1)
    bad = half[f[2 * half] != f[half]]
    if bad.size:
        return CheckResult(name, rng, False, f"f({2 * int(bad[0])}) != f({int(bad[0])})")
    for residue, want in ((1, 0), (3, 1)):
        idx = np.arange(residue, N + 1, 4)
        bad = idx[f[idx] != want]
        if bad.size:
            return CheckResult(name, rng, False, f"f({int(bad[0])}) != {want}")
    return CheckResult(name, rng, True)
