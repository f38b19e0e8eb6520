"""Named invariant suites, each capped by a maximum index."""

from __future__ import annotations

from typing import Callable

from paperfold import abelian_oracle as oracle
from paperfold.growth import a_of_i, b_closed_form, bound_check
from paperfold.regular_eval import default_representation, rho_linrep, rho_rec, rho_table
from paperfold.report import CheckResult, VerificationReport
from paperfold.word_core import prefix, reverse_complement, toeplitz_prefix

ORACLE_RANGE = 4096
STRUCTURE_RANGE = 512
REVCOMP_RANGE = 64
SWEEP_RANGE = 2**20
LINREP_RANGE = 2**14
MAX_POWER = 40
MAX_LEVEL = 21


def _vacuous(name: str) -> CheckResult:
    return CheckResult(name, "empty", True, detail="nothing to check")


def check_rec_vs_oracle(max_n: int, parallel: bool = False, cap: int = oracle.DEFAULT_PREFIX_CAP,
                        **_) -> CheckResult:
    top = min(ORACLE_RANGE, max_n)
    table = rho_table(top)
    if parallel:
        records = oracle.rho_oracle_many(range(1, top + 1), parallel=True, cap=cap)
    else:
        records = (oracle.rho_oracle(n, cap) for n in range(1, top + 1))
    for rec in records:
        if not rec.certified or rec.rho != table[rec.n]:
            return CheckResult("rec-vs-oracle", f"1..{top}", False, rec.n,
                               f"oracle={rec.rho} rec={int(table[rec.n])} certified={rec.certified}")
    return CheckResult("rec-vs-oracle", f"1..{top}", True)


def check_step(max_n: int, **_) -> CheckResult:
    top = min(SWEEP_RANGE, max_n)
    if top < 2:
        return _vacuous("step")
    table = rho_table(top)
    diffs = abs(table[2:] - table[1:-1])
    bad = (diffs != 1).nonzero()[0]
    if bad.size:
        return CheckResult("step", f"1..{top}", False, int(bad[0]) + 1)
    return CheckResult("step", f"1..{top}", True)


def check_spectrum(max_n: int, cap: int = oracle.DEFAULT_PREFIX_CAP, **_) -> CheckResult:
    top = min(STRUCTURE_RANGE, max_n)
    for n in range(1, top + 1):
        rec = oracle.rho_oracle(n, cap)
        s = rec.spectrum
        if not (s.is_full_progression() and s.is_symmetric() and rec.rho == rec.M + 1):
            return CheckResult("spectrum", f"1..{top}", False, n, f"values={s.values}")
    return CheckResult("spectrum", f"1..{top}", True)


def check_factor_count(max_n: int, cap: int = oracle.DEFAULT_PREFIX_CAP, **_) -> CheckResult:
    top = min(STRUCTURE_RANGE, max_n)
    if top < 7:
        return _vacuous("factor-count")
    for n in range(7, top + 1):
        count = oracle.distinct_factor_count(n, cap)
        if count != 4 * n:
            return CheckResult("factor-count", f"7..{top}", False, n, f"count={count}")
    return CheckResult("factor-count", f"7..{top}", True)


def check_revcomp(max_n: int, cap: int = oracle.DEFAULT_PREFIX_CAP, **_) -> CheckResult:
    top = min(REVCOMP_RANGE, max_n)
    for n in range(1, top + 1):
        factors = oracle.factor_set(n, cap)
        for w in factors:
            rc = reverse_complement(w)
            if rc not in factors or oracle.delta(rc) != -oracle.delta(w):
                return CheckResult("revcomp", f"1..{top}", False, w)
    return CheckResult("revcomp", f"1..{top}", True)


def check_maximal_endpoints(max_n: int, cap: int = oracle.DEFAULT_PREFIX_CAP, **_) -> CheckResult:
    top = min(STRUCTURE_RANGE, max_n)
    if top < 2:
        return _vacuous("maximal-endpoints")
    for n in range(2, top + 1):
        res = oracle.maximal_factor_endpoints_check(n, cap)
        if not res.passed:
            return CheckResult("maximal-endpoints", f"2..{top}", False, n, str(res.counterexample))
    return CheckResult("maximal-endpoints", f"2..{top}", True)


def check_powers(max_n: int, **_) -> CheckResult:
    top = min(MAX_POWER, max_n.bit_length() - 1)
    if top < 1:
        return _vacuous("powers")
    for k in range(1, top + 1):
        if rho_rec(2**k) != 3:
            return CheckResult("powers", f"k=1..{top}", False, f"2^{k}")
    return CheckResult("powers", f"k=1..{top}", True)


def check_bound(max_n: int, **_) -> CheckResult:
    top = min(SWEEP_RANGE, max_n)
    if top < 2:
        return _vacuous("bound")
    rep = bound_check(top)
    first = rep.violations[0] if rep.violations else None
    return CheckResult("bound", f"2..{top}", rep.passed, first, f"{len(rep.equality)} indices attain equality")


def check_growth(max_n: int, **_) -> CheckResult:
    levels = [i for i in range(1, MAX_LEVEL + 1) if b_closed_form(i) <= max_n]
    if not levels:
        return _vacuous("growth")
    for i in levels:
        rec = a_of_i(i)
        if not rec.match:
            return CheckResult("growth", f"i=1..{levels[-1]}", False, i, f"A={rec.a_scan} B={rec.b_closed}")
    return CheckResult("growth", f"i=1..{levels[-1]}", True)


def check_linrep(max_n: int, **_) -> CheckResult:
    top = min(LINREP_RANGE, max_n)
    rep = default_representation()
    table = rho_table(top)
    for n in range(1, top + 1):
        if rho_linrep(n, rep) != table[n]:
            return CheckResult("linrep", f"1..{top}", False, n)
    return CheckResult("linrep", f"1..{top}", True)


def check_toeplitz(max_n: int, **_) -> CheckResult:
    top = min(SWEEP_RANGE, max_n)
    for length in sorted(set(range(0, min(top, 64) + 1)) | {top}):
        if toeplitz_prefix(length) != prefix(length):
            return CheckResult("toeplitz", f"L<={top}", False, length)
    return CheckResult("toeplitz", f"L<={top}", True)


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "rec-vs-oracle": check_rec_vs_oracle,
    "step": check_step,
    "spectrum": check_spectrum,
    "factor-count": check_factor_count,
    "revcomp": check_revcomp,
    "maximal-endpoints": check_maximal_endpoints,
    "powers": check_powers,
    "bound": check_bound,
    "growth": check_growth,
    "linrep": check_linrep,
    "toeplitz": check_toeplitz,
}


def run_checks(names, max_n: int, parallel: bool = False,
               cap: int = oracle.DEFAULT_PREFIX_CAP) -> VerificationReport:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(", ".join(unknown))
    report = VerificationReport()
    for name in names:
        try:
            result = CHECKS[name](max_n, parallel=parallel, cap=cap)
        except oracle.CertificationError as exc:
            result = CheckResult(name, f"<={max_n}", False, exc.record.n, "certification failed")
        report.checks.append(result)
    return report
