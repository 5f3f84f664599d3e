import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphsym import DomainError, compose, identity, inverse, signature, transposition
from graphsym.perm import as_permutation


def _inversion_count(p):
    return sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )


def test_signature_identity():
    assert signature(identity(4)) == 1


def test_signature_single_transposition():
    assert signature(transposition(5, 1, 3)) == -1


@pytest.mark.parametrize("n,expected", [(5, 1), (4, -1)])
def test_signature_full_cycle(n, expected):
    cycle = [(i + 1) % n for i in range(n)]
    assert signature(cycle) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_signature_equals_inversion_parity_exhaustive(n):
    for p in itertools.permutations(range(n)):
        assert signature(p) == (-1) ** _inversion_count(p)


@given(st.permutations(range(6)), st.permutations(range(6)))
def test_signature_multiplicative(p, q):
    assert signature(compose(p, q)) == signature(p) * signature(q)


@given(st.permutations(range(5)))
def test_inverse_composes_to_identity(p):
    assert list(compose(p, inverse(p))) == list(identity(5))
    assert list(compose(inverse(p), p)) == list(identity(5))


def test_compose_applies_right_argument_first():
    # (p o q)(i) = p[q[i]]
    p = [1, 2, 0]
    q = [0, 2, 1]
    assert list(compose(p, q)) == [p[q[i]] for i in range(3)]


def test_as_permutation_rejects_invalid():
    with pytest.raises(DomainError):
        as_permutation([0, 0, 1])
    with pytest.raises(DomainError):
        as_permutation([0, 3, 1])
    with pytest.raises(DomainError):
        as_permutation([])


def test_transposition_validation():
    with pytest.raises(DomainError):
        transposition(3, 1, 1)
    with pytest.raises(DomainError):
        transposition(3, 0, 3)


def test_compose_size_mismatch():
    with pytest.raises(DomainError):
        compose([0, 1], [0, 1, 2])
