from fractions import Fraction
from math import factorial

import pytest

from invhilb.partitions import (
    Partition,
    centralizer_order,
    character_table,
    class_size,
    conjugate,
    enumerate_partitions,
    hook_dimension,
    orthogonality_check,
    parse_partition,
    partition_union,
    row_orthogonality_check,
    sign,
)
from invhilb.series import DensePoly, FactoredSeries, expand

P = Partition.of


def _partitions_backtrack(n):
    # independent oracle: every multiset of parts, grown in nondecreasing order
    out = []

    def rec(remaining, smallest, acc):
        if remaining == 0:
            out.append(tuple(sorted(acc, reverse=True)))
            return
        for p in range(smallest, remaining + 1):
            rec(remaining - p, p, acc + [p])

    rec(n, 1, [])
    return out


def test_enumerate_small():
    assert enumerate_partitions(0) == [Partition(())]
    assert enumerate_partitions(3) == [P(3), P(2, 1), P(1, 1, 1)]
    assert len(enumerate_partitions(4)) == 5


def test_enumeration_order_is_reverse_lex():
    parts = [p.parts for p in enumerate_partitions(7)]
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("n", range(0, 16))
def test_partition_counts_two_oracles(n):
    ours = enumerate_partitions(n)
    assert len(set(ours)) == len(ours)
    assert sorted(p.parts for p in ours) == sorted(_partitions_backtrack(n))
    gen = expand(FactoredSeries([1], {i: 1 for i in range(1, n + 1)}), n)
    assert gen[n] == len(ours)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert parse_partition("1,2,1") == P(2, 1, 1)
    with pytest.raises(ValueError):
        parse_partition("2,x")


def test_multiplicities():
    lam = P(3, 1, 1)
    assert lam.multiplicities == {1: 2, 3: 1}
    assert sum(i * r for i, r in lam.multiplicities.items()) == lam.n
    assert Partition.from_multiplicities({1: 2, 3: 1}) == lam


def test_conjugate_examples():
    assert conjugate(P(5)) == P(1, 1, 1, 1, 1)
    assert conjugate(P(2, 1)) == P(2, 1)
    assert conjugate(P(4, 2, 1)) == P(3, 2, 1, 1)


def test_conjugate_involution():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_centralizer_order():
    assert centralizer_order(P(1, 1, 1, 1)) == 24
    assert centralizer_order(P(2, 1)) == 2
    assert sum(factorial(4) // centralizer_order(l) for l in enumerate_partitions(4)) == 24
    for n in range(1, 9):
        assert sum(class_size(l) for l in enumerate_partitions(n)) == factorial(n)


def test_partition_union():
    assert partition_union(P(2, 1), P(1, 1, 1)) == P(2, 1, 1, 1, 1)
    assert P(3, 1) + Partition(()) == P(3, 1)
    mu, nu = P(3, 2), P(2, 2, 1)
    assert (mu + nu).n == mu.n + nu.n


def test_character_table_bounds():
    with pytest.raises(ValueError):
        character_table(0)
    with pytest.raises(ValueError):
        character_table(13)


def test_character_rows():
    for n in range(1, 8):
        t = character_table(n)
        trivial, sgn = P(n), Partition((1,) * n)
        for rho in t.partitions:
            assert t.value(trivial, rho) == 1
            assert t.value(sgn, rho) == (-1) ** (n - rho.length)
            assert t.value(sgn, rho) == sign(rho)


def test_chi_21_at_identity():
    # hook lengths of (2,1) are 3, 1, 1
    assert character_table(3).value(P(2, 1), P(1, 1, 1)) == factorial(3) // (3 * 1 * 1)


def test_known_s4_table():
    t = character_table(4)
    # classes in order (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    assert t.values == (
        (1, 1, 1, 1, 1),
        (-1, 0, -1, 1, 3),
        (0, -1, 2, 0, 2),
        (1, 0, -1, -1, 3),
        (-1, 1, 1, -1, 1),
    )


def test_orthogonality_check():
    t2 = character_table(2)
    assert t2.values == ((1, 1), (-1, 1))
    assert orthogonality_check(t2)
    assert orthogonality_check(character_table(5))
    assert not orthogonality_check(character_table(5).with_entry(2, 3, character_table(5).values[2][3] + 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality_relations(n):
    t = character_table(n)
    assert orthogonality_check(t)
    assert row_orthogonality_check(t)


def test_row_orthogonality_detects_mutation():
    t = character_table(4)
    assert not row_orthogonality_check(t.with_entry(0, 0, 2))


def test_hook_dimension_matches_identity_column():
    for n in range(1, 9):
        t = character_table(n)
        ident = Partition((1,) * n)
        for lam in t.partitions:
            assert t.value(lam, ident) == hook_dimension(lam)


def test_sign_twist_under_conjugation():
    for n in range(1, 7):
        t = character_table(n)
        for lam in t.partitions:
            for rho in t.partitions:
                assert t.value(conjugate(lam), rho) == sign(rho) * t.value(lam, rho)


def test_table_entries_integral():
    t = character_table(10)
    assert all(isinstance(v, int) for row in t.values for v in row)
    assert sum(Fraction(row[-1] ** 2) for row in t.values) == factorial(10)
