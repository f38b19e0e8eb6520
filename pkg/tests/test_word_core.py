import numpy as np
import pytest
from hypothesis import given, strategies as st

from paperfold.word_core import (
    PaperfoldingPrefix,
    kernel_letter_identities_check,
    letter_at,
    prefix,
    reverse_complement,
    toeplitz_prefix,
)
from paperfold.abelian_oracle import delta

from conftest import PREFIX31, naive_letter, naive_word


@pytest.mark.parametrize("n, expected", [(1, 0), (12, 1), (2**20, 0), (3, 1), (2**63 - 1, 1)])
def test_letter_at(n, expected):
    assert letter_at(n) == expected


@pytest.mark.parametrize("bad", [0, -5])
def test_letter_at_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        letter_at(bad)


def test_letter_at_matches_displayed_prefix():
    assert "".join(str(letter_at(n)) for n in range(1, 32)) == PREFIX31


@pytest.mark.parametrize("length, expected", [(7, "0010011"), (0, ""), (31, PREFIX31)])
def test_prefix(length, expected):
    p = prefix(length)
    assert str(p) == expected
    assert len(p) == length


@pytest.mark.parametrize("length, expected", [(15, "001001100011011"), (1, "0"), (0, "")])
def test_toeplitz_prefix(length, expected):
    assert str(toeplitz_prefix(length)) == expected


def test_prefix_is_packed_one_bit_per_letter():
    p = prefix(1000)
    assert len(p.packed) == 125
    assert p[12] == 1 and p[1] == 0
    with pytest.raises(IndexError):
        p[0]
    with pytest.raises(IndexError):
        p[1001]


def test_prefix_against_naive_formula():
    assert str(prefix(5000)) == naive_word(5000)


@given(st.integers(min_value=0, max_value=3000))
def test_toeplitz_equals_formula(length):
    assert toeplitz_prefix(length) == prefix(length)


def test_toeplitz_equals_formula_at_2_pow_20():
    assert toeplitz_prefix(2**20) == prefix(2**20)
    assert toeplitz_prefix(2**20 - 1) == prefix(2**20 - 1)


@given(st.integers(min_value=1, max_value=2**62))
def test_letter_identities(n):
    assert letter_at(2 * n) == letter_at(n)
    assert letter_at(4 * n + 1) == 0
    assert letter_at(4 * n + 3) == 1
    assert letter_at(n) == naive_letter(n)


@pytest.mark.parametrize("N", [1, 31, 10**5])
def test_kernel_letter_identities_check(N):
    assert kernel_letter_identities_check(N).passed


def test_from_bits_rejects_non_binary():
    with pytest.raises(ValueError):
        PaperfoldingPrefix.from_bits(np.array([0, 2, 1]))


@pytest.mark.parametrize("w, expected", [("001", "011"), ("", ""), ("01", "01"), ((0, 0, 1), (0, 1, 1))])
def test_reverse_complement(w, expected):
    assert reverse_complement(w) == expected


@given(st.text(alphabet="01", max_size=200))
def test_reverse_complement_involution_and_negates_balance(w):
    assert reverse_complement(reverse_complement(w)) == w
    assert delta(reverse_complement(w)) == -delta(w)
