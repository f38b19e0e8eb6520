import pytest

from paperfold.growth import a_of_i, b_closed_form, bound_check, ceil_log2
from paperfold.regular_eval import rho_rec

from conftest import TABLE


@pytest.mark.parametrize("i, expected", [(1, 1), (2, 2), (3, 3), (4, 6), (5, 11), (12, 1366), (21, 699051)])
def test_b_closed_form(i, expected):
    assert b_closed_form(i) == expected


def test_b_closed_form_domain():
    with pytest.raises(ValueError):
        b_closed_form(0)


@pytest.mark.parametrize("i", range(2, 200))
def test_b_at_most_doubles(i):
    assert b_closed_form(i) <= 2 * b_closed_form(i - 1)


def test_first_occurrence_from_table():
    # brute-force first occurrences straight from the published values
    for i in range(1, 6):
        first = next(n for n, r in enumerate(TABLE, start=1) if r == i + 1)
        assert a_of_i(i).a_scan == first


@pytest.mark.parametrize("i, a", [(1, 1), (5, 11), (12, 1366), (21, 699051)])
def test_a_of_i(i, a):
    rec = a_of_i(i)
    assert rec.a_scan == a and rec.match


def test_all_levels_match():
    for i in range(1, 22):
        rec = a_of_i(i)
        assert rec.match
        assert rho_rec(rec.b_closed) == i + 1
        assert all(rho_rec(n) != i + 1 for n in range(1, min(rec.b_closed, 3000)))


def test_bound_check_small():
    rep = bound_check(20)
    assert rep.passed
    expected = tuple(n for n in range(2, 21) if TABLE[n - 1] == ceil_log2(n) + 2)
    assert rep.equality == expected == (2, 3, 6, 11)


def test_bound_check_n2():
    rep = bound_check(2)
    assert rep.passed and rep.equality == (2,)


def test_bound_check_large():
    rep = bound_check(2**20)
    assert rep.passed and rep.violations == ()
    # equality is attained at each first occurrence B(i), i >= 2
    assert all(b_closed_form(i) in rep.equality for i in range(2, 21))


def test_bound_check_domain():
    with pytest.raises(ValueError):
        bound_check(1)
