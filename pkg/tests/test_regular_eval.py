import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from paperfold.regular_eval import (
    BASIS,
    RULE_TABLE,
    KernelQuery,
    LinearRepresentation,
    LinearRepresentationError,
    REFINEMENTS,
    build_linear_representation,
    kernel_sequence,
    matching_rules,
    reduce_step,
    reduction_path,
    rho_linrep,
    rho_rec,
    rho_rec_many,
    rho_table,
)

from conftest import TABLE


@pytest.fixture(scope="module")
def rep():
    return build_linear_representation()


@pytest.mark.parametrize("n, expected", [(20, (10, 0)), (11, (3, 2)), (33, (17, 0)), (2, (1, 1)), (15, (2, 1))])
def test_reduce_step(n, expected):
    assert reduce_step(n) == expected


@pytest.mark.parametrize("n", [0, 1, -3])
def test_reduce_step_domain(n):
    with pytest.raises(ValueError):
        reduce_step(n)


def test_rule_table_has_seven_families():
    assert len({r.family for r in RULE_TABLE}) == 7
    assert len(RULE_TABLE) == 10


def test_rule_table_totality():
    ns = np.arange(2, 2**20 + 1, dtype=np.int64)
    hits = np.zeros(ns.shape, dtype=np.int64)
    for rule in RULE_TABLE:
        hits += (ns % rule.modulus) == rule.residue
    assert np.all(hits == 1)


@given(st.integers(min_value=2, max_value=2**62))
def test_rule_unique_and_decreasing(n):
    rules = matching_rules(n)
    assert len(rules) == 1
    target, _ = reduce_step(n)
    assert 1 <= target < n


def test_n1_is_fixed_point_of_16n1_rule():
    (rule,) = matching_rules(1)
    assert rule.family == "rho(16n+1)=rho(8n+1)"
    assert rule.target(1) == 1


@pytest.mark.parametrize("n, expected", [(20, 5), (16, 3), (1366, 13), (1, 2), (19, 6)])
def test_rho_rec(n, expected):
    assert rho_rec(n) == expected


def test_rho_rec_table():
    assert [rho_rec(n) for n in range(1, 21)] == TABLE


def test_rho_rec_domain():
    with pytest.raises(ValueError):
        rho_rec(0)
    with pytest.raises(ValueError):
        rho_rec_many([3, 0])


def test_vectorised_matches_scalar():
    ns = list(range(1, 5000)) + [2**40 + 17, 2**62 - 1]
    assert rho_rec_many(ns).tolist() == [rho_rec(n) for n in ns]


def test_sixteen_n_plus_three_carries_plus_two():
    # rho(19) = rho(3) + 2, not rho(3)
    assert rho_rec(19) == rho_rec(3) + 2 == 6


def test_reduction_step_bound():
    ns = np.arange(2, 2**20 + 1)
    _, steps = rho_rec_many(ns, return_steps=True)
    ceil_log = np.ceil(np.log2(ns.astype(np.float64))).astype(np.int64)
    assert np.all(steps <= 4 * ceil_log)
    sample = ns[::997]
    assert [len(reduction_path(int(n))) - 1 for n in sample] == steps[::997].tolist()


def test_reduction_path_ends_at_one():
    assert reduction_path(1366)[-1] == 1
    assert reduction_path(1) == [1]


@pytest.mark.parametrize("k", range(1, 41))
def test_powers_of_two(k):
    assert rho_rec(2**k) == 3


def test_linear_representation_shape(rep):
    assert rep.dim == 9
    assert rep.v0 == (2, 3, 2, 4, 2, 4, 4, 4, 1)
    assert len(rep.M0) == len(rep.M1) == 9
    assert all(len(row) == 9 for row in rep.M0 + rep.M1)
    assert rep.basis == BASIS


def test_refinement_identities_listed():
    # s1(2n)=s3(n), s2(2n)=s1(n)+1, s8(2n+1)=s2(n)+1, ...
    assert REFINEMENTS[(0, 0)] == (2, 0)
    assert REFINEMENTS[(1, 0)] == (0, 1)
    assert REFINEMENTS[(4, 1)] == (0, 2)
    assert REFINEMENTS[(7, 1)] == (1, 1)


def test_matrix_identities_hold_beyond_build_range(rep):
    M = (np.array(rep.M0), np.array(rep.M1))
    from paperfold.regular_eval import basis_vector

    for n in range(0, 5000, 13):
        v = np.array(basis_vector(n))
        assert (M[0] @ v).tolist() == basis_vector(2 * n)
        assert (M[1] @ v).tolist() == basis_vector(2 * n + 1)


@pytest.mark.parametrize("n, expected", [(1, 2), (11, 6), (4096, 3), (19, 6)])
def test_rho_linrep(rep, n, expected):
    assert rho_linrep(n, rep) == expected


def test_rho_linrep_equivalence(rep):
    table = rho_table(2**14)
    assert all(rho_linrep(n, rep) == table[n] for n in range(1, 2**14 + 1))


@given(st.integers(min_value=1, max_value=2**62))
def test_rho_linrep_large(n):
    assert rho_linrep(n) == rho_rec(n)


def test_rho_linrep_domain(rep):
    with pytest.raises(ValueError):
        rho_linrep(0, rep)


def test_builder_names_failing_identity():
    broken = dict(REFINEMENTS)
    broken[(5, 0)] = (2, 1)  # true identity is s6(2n) = s3(n) + 2
    with pytest.raises(LinearRepresentationError, match=r"s6\(2n\+0\) = s3\(n\)\+1"):
        build_linear_representation(refinements=broken)


def test_json_roundtrip(rep):
    doc = json.loads(rep.to_json())
    assert set(doc) == {"dim", "v0", "M0", "M1", "basis"}
    assert doc["dim"] == 9 and doc["basis"][0] == "rho(2n+1)"
    back = LinearRepresentation.from_json(rep.to_json())
    assert back == rep


@pytest.mark.parametrize(
    "e, c, count, expected",
    [(1, 1, 5, [2, 4, 4, 4, 4]), (2, 2, 4, [3, 5, 5, 5]), (3, 1, 3, [2, 4, 4]), (0, 0, 3, [2, 3, 4])],
)
def test_kernel_sequence(e, c, count, expected):
    assert kernel_sequence(KernelQuery(e, c, count)) == expected


def test_kernel_query_validation():
    with pytest.raises(ValueError):
        KernelQuery(2, 4, 3)
    with pytest.raises(ValueError):
        KernelQuery(1, 0, -1)
