import pytest

# rho(1..20) as published with the word's initial values
TABLE = [2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5]
PREFIX31 = "0010011000110110001001110011011"


def naive_letter(n):
    while n % 2 == 0:
        n //= 2
    return 0 if n % 4 == 1 else 1


def naive_word(length):
    return "".join(str(naive_letter(i)) for i in range(1, length + 1))


def naive_factors(word, n):
    return {word[i:i + n] for i in range(len(word) - n + 1)}


def naive_balance(w):
    return w.count("0") - w.count("1")


@pytest.fixture(scope="session")
def long_word():
    # every factor of length <= 64 occurs well inside this prefix
    return naive_word(1 << 14)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
