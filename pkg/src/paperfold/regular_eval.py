"""Logarithmic-time evaluation of rho(n) for the paperfolding word.

Two routes are implemented: direct reduction with the ten residue rules
below, and a 9-dimensional 2-linear representation built from them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

RHO_ONE = 2


@dataclass(frozen=True)
class RecurrenceRule:
    """rho(n) = rho((n - residue) * num / den + target_offset) + additive
    for every n congruent to ``residue`` modulo ``modulus``."""

    family: str
    modulus: int
    residue: int
    target_coeff: tuple[int, int]
    target_offset: int
    additive: int

    def matches(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def target(self, n: int) -> int:
        num, den = self.target_coeff
        return (n - self.residue) // den * num + self.target_offset


def _family(name, modulus, residues, coeff, offset, additive):
    return [RecurrenceRule(name, modulus, r, coeff, offset, additive) for r in residues]


RULE_TABLE: tuple[RecurrenceRule, ...] = tuple(
    _family("rho(4n)=rho(2n)", 4, (0,), (1, 2), 0, 0)
    + _family("rho(4n+2)=rho(2n+1)+1", 4, (2,), (1, 2), 1, 1)
    + _family("rho(16n+1)=rho(8n+1)", 16, (1,), (1, 2), 1, 0)
    + _family("rho(16n+{3,7,9,13})=rho(2n+1)+2", 16, (3, 7, 9, 13), (1, 8), 1, 2)
    + _family("rho(16n+5)=rho(4n+1)+2", 16, (5,), (1, 4), 1, 2)
    + _family("rho(16n+11)=rho(4n+3)+2", 16, (11,), (1, 4), 3, 2)
    + _family("rho(16n+15)=rho(2n+2)+1", 16, (15,), (1, 8), 2, 1)
)

# lookup by n mod 16; evens are covered by the mod-4 rules
_BY_RESIDUE16 = {
    r16: next(rule for rule in RULE_TABLE if rule.matches(r16 + 16))
    for r16 in range(16)
}


def matching_rules(n: int) -> list[RecurrenceRule]:
    return [rule for rule in RULE_TABLE if rule.matches(n)]


def reduce_step(n: int) -> tuple[int, int]:
    """Apply the unique matching rule once: returns (smaller index, additive)."""
    if n < 2:
        raise ValueError(f"reduce_step needs n >= 2, got {n}")
    rule = _BY_RESIDUE16[n & 15]
    return rule.target(n), rule.additive


def reduction_path(n: int) -> list[int]:
    """Indices visited while reducing n down to 1 (both ends included)."""
    if n < 1:
        raise ValueError(f"rho is defined for n >= 1, got {n}")
    path = [n]
    while n > 1:
        n, _ = reduce_step(n)
        path.append(n)
    return path


def rho_rec(n: int) -> int:
    """Exact rho(n) by repeated rule application, additive constants summed."""
    if n < 1:
        raise ValueError(f"rho is defined for n >= 1, got {n}")
    total = RHO_ONE
    while n > 1:
        n, add = reduce_step(n)
        total += add
    return total


# Vectorised form of the same reduction for bulk sweeps.
_V_DEN = np.zeros(16, dtype=np.int64)
_V_NUM = np.zeros(16, dtype=np.int64)
_V_OFF = np.zeros(16, dtype=np.int64)
_V_ADD = np.zeros(16, dtype=np.int64)
_V_RES = np.zeros(16, dtype=np.int64)
for _r, _rule in _BY_RESIDUE16.items():
    _V_NUM[_r], _V_DEN[_r] = _rule.target_coeff
    _V_OFF[_r] = _rule.target_offset
    _V_ADD[_r] = _rule.additive
    _V_RES[_r] = _rule.residue


def rho_rec_many(ns: Iterable[int] | np.ndarray, return_steps: bool = False):
    """rho_rec applied elementwise to an integer array (all entries >= 1, < 2**63).

    With ``return_steps`` also returns how many rule applications each entry took.
    """
    idx = np.array(ns, dtype=np.int64, copy=True).ravel()
    if idx.size and idx.min() < 1:
        raise ValueError("rho is defined for n >= 1")
    total = np.full(idx.shape, RHO_ONE, dtype=np.int64)
    steps = np.zeros(idx.shape, dtype=np.int64)
    live = np.flatnonzero(idx > 1)
    while live.size:
        cur = idx[live]
        r = cur & 15
        nxt = (cur - _V_RES[r]) // _V_DEN[r] * _V_NUM[r] + _V_OFF[r]
        total[live] += _V_ADD[r]
        steps[live] += 1
        idx[live] = nxt
        live = live[nxt > 1]
    return (total, steps) if return_steps else total


def rho_table(N: int) -> np.ndarray:
    """Array t with t[n] = rho(n) for 1 <= n <= N; t[0] is unused (-1)."""
    t = np.full(N + 1, -1, dtype=np.int64)
    if N >= 1:
        t[1:] = rho_rec_many(np.arange(1, N + 1))
    return t


BASIS = (
    "rho(2n+1)",
    "rho(2n+2)",
    "rho(4n+1)",
    "rho(4n+3)",
    "rho(8n+1)",
    "rho(8n+5)",
    "rho(8n+3)",
    "rho(8n+7)",
    "1",
)
# (scale, shift) so that basis sequence j is n -> rho(scale*n + shift)
_BASIS_AFFINE = ((2, 1), (2, 2), (4, 1), (4, 3), (8, 1), (8, 5), (8, 3), (8, 7))
CONST = 8

# (coordinate, parity) -> (source coordinate, additive constant), i.e.
# s_coord(2n + parity) = s_source(n) + additive
REFINEMENTS: dict[tuple[int, int], tuple[int, int]] = {
    (0, 0): (2, 0), (0, 1): (3, 0),
    (1, 0): (0, 1), (1, 1): (1, 0),
    (2, 0): (4, 0), (2, 1): (5, 0),
    (3, 0): (6, 0), (3, 1): (7, 0),
    (4, 0): (4, 0), (4, 1): (0, 2),
    (5, 0): (2, 2), (5, 1): (0, 2),
    (6, 0): (0, 2), (6, 1): (3, 2),
    (7, 0): (0, 2), (7, 1): (1, 1),
}


class LinearRepresentationError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearRepresentation:
    dim: int
    v0: tuple[int, ...]
    M0: tuple[tuple[int, ...], ...]
    M1: tuple[tuple[int, ...], ...]
    basis: tuple[str, ...] = BASIS
    extract_odd: int = 0
    extract_even: int = 1

    def matrix(self, bit: int) -> np.ndarray:
        return np.array(self.M1 if bit else self.M0, dtype=np.int64)

    def to_json(self) -> str:
        doc = {
            "dim": self.dim,
            "v0": list(self.v0),
            "M0": [list(row) for row in self.M0],
            "M1": [list(row) for row in self.M1],
            "basis": list(self.basis),
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "LinearRepresentation":
        doc = json.loads(text)
        return cls(
            dim=doc["dim"],
            v0=tuple(doc["v0"]),
            M0=tuple(tuple(r) for r in doc["M0"]),
            M1=tuple(tuple(r) for r in doc["M1"]),
            basis=tuple(doc["basis"]),
        )


def basis_vector(n: int) -> list[int]:
    """V(n) = (s1(n), ..., s8(n), 1), each entry evaluated with rho_rec."""
    return [rho_rec(a * n + b) for a, b in _BASIS_AFFINE] + [1]


def _identity_name(coord: int, parity: int, source: int, add: int) -> str:
    lhs = f"s{coord + 1}(2n+{parity})"
    rhs = f"s{source + 1}(n)" + (f"+{add}" if add else "")
    return f"{lhs} = {rhs}"


def build_linear_representation(verify_up_to: int = 2**10, refinements=None) -> LinearRepresentation:
    """Assemble M0, M1 from the refinement identities and check every row.

    Each row is tested against rho_rec for 0 <= n <= verify_up_to; the first
    failing identity raises LinearRepresentationError.
    """
    if refinements is None:
        refinements = REFINEMENTS
    dim = len(BASIS)
    mats = [np.zeros((dim, dim), dtype=np.int64) for _ in range(2)]
    for (coord, parity), (source, add) in refinements.items():
        mats[parity][coord, source] += 1
        mats[parity][coord, CONST] += add
    for parity in (0, 1):
        mats[parity][CONST, CONST] = 1

    vectors = np.array([basis_vector(n) for n in range(2 * verify_up_to + 2)], dtype=np.int64)
    for parity in (0, 1):
        lhs = vectors[2 * np.arange(verify_up_to + 1) + parity]
        rhs = vectors[: verify_up_to + 1] @ mats[parity].T
        for coord in range(dim):
            bad = np.flatnonzero(lhs[:, coord] != rhs[:, coord])
            if bad.size:
                source, add = refinements.get((coord, parity), (CONST, 0))
                raise LinearRepresentationError(
                    f"identity {_identity_name(coord, parity, source, add)} "
                    f"fails at n={int(bad[0])}"
                )

    return LinearRepresentation(
        dim=dim,
        v0=tuple(int(x) for x in vectors[0]),
        M0=tuple(tuple(int(x) for x in row) for row in mats[0]),
        M1=tuple(tuple(int(x) for x in row) for row in mats[1]),
    )


_DEFAULT_REP: LinearRepresentation | None = None


def default_representation() -> LinearRepresentation:
    global _DEFAULT_REP
    if _DEFAULT_REP is None:
        _DEFAULT_REP = build_linear_representation()
    return _DEFAULT_REP


def rho_linrep(n: int, rep: LinearRepresentation | None = None) -> int:
    """rho(n) as a matrix product over the binary digits of m.

    n = 2m+1 reads coordinate s1 of V(m), n = 2m+2 reads s2. The extraction
    row is multiplied by M_b for each bit b of m, least significant first,
    and finally by V(0).
    """
    if n < 1:
        raise ValueError(f"rho is defined for n >= 1, got {n}")
    if rep is None:
        rep = default_representation()
    m, odd = divmod(n - 1, 2)
    mats = (rep.matrix(0), rep.matrix(1))
    row = np.zeros(rep.dim, dtype=np.int64)
    row[rep.extract_even if odd else rep.extract_odd] = 1
    while m:
        row = row @ mats[m & 1]
        m >>= 1
    return int(row @ np.array(rep.v0, dtype=np.int64))


@dataclass(frozen=True)
class KernelQuery:
    e: int
    c: int
    count: int

    def __post_init__(self):
        if self.e < 0 or not 0 <= self.c < 2**self.e:
            raise ValueError(f"kernel offset must satisfy 0 <= c < 2^e, got e={self.e}, c={self.c}")
        if self.count < 0:
            raise ValueError("count must be non-negative")


def kernel_terms(q: KernelQuery) -> Iterator[tuple[int, int, int]]:
    """Yield (k, 2^e k + c, rho) for the first q.count indices that are >= 1."""
    step = 2**q.e
    emitted = 0
    k = 0
    while emitted < q.count:
        index = step * k + q.c
        if index >= 1:
            yield k, index, rho_rec(index)
            emitted += 1
        k += 1


def kernel_sequence(q: KernelQuery) -> list[int]:
    return [rho for _, _, rho in kernel_terms(q)]

