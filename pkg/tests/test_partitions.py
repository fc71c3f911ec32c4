from itertools import product
from math import comb, factorial

import pytest
import sympy

from frobhom.errors import InputError, NotSurjective
from frobhom.fixtures import fixture_groups, tracial_pairs
from frobhom.frobenius import PhiEvaluator
from frobhom.groups import group_algebra
from frobhom.fixtures import _class_function
from frobhom.partitions import (
    SetPartition,
    SetPartitionVector,
    all_partitions,
    amalgamated_unions,
    bell,
    chi,
    chi_closed_form,
    functional_of_partition,
    functional_of_vector,
    partition_product,
    pullback,
    verify_lemma10,
)


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_counts_are_bell_numbers(n):
    parts = all_partitions(n)
    assert len(parts) == len(set(parts)) == bell(n) == sympy.bell(n)


def test_set_partition_is_canonical():
    assert SetPartition([(3, 1), (2,)]) == SetPartition([(2,), (1, 3)])
    with pytest.raises(InputError):
        SetPartition([(1, 3)])


def test_chi_small_cases():
    assert dict(chi(1)) == {SetPartition([(1,)]): 1}
    assert dict(chi(2)) == {SetPartition.discrete(2): 1, SetPartition.full(2): -1}
    c3 = chi(3)
    assert c3[SetPartition.discrete(3)] == 1
    assert c3[SetPartition.full(3)] == 2
    for pair in ((1, 2), (1, 3), (2, 3)):
        rest = ({1, 2, 3} - set(pair)).pop()
        assert c3[SetPartition([pair, (rest,)])] == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_chi_closed_form_and_total(n):
    c = chi(n)
    assert dict(c) == dict(chi_closed_form(n))
    assert sum(abs(v) for v in c.values()) == factorial(n)


def test_partition_product_examples():
    assert dict(partition_product(chi(1), chi(1))) == {SetPartition.discrete(2): 1}
    d2 = SetPartitionVector({SetPartition.discrete(2): 1})
    assert dict(partition_product(d2, d2)) == {SetPartition.discrete(4): 1}
    p = partition_product(chi(2), chi(1))
    assert dict(p) == {SetPartition.discrete(3): 1, SetPartition([(1, 2), (3,)]): -1}


def test_pullback_examples():
    v = chi(3)
    assert dict(pullback([1, 2, 3], v)) == dict(v)
    one = SetPartitionVector({SetPartition([(1,)]): 1})
    assert dict(pullback([1, 1], one)) == {SetPartition.full(2): 1}
    with pytest.raises(NotSurjective):
        pullback([1, 1], chi(2))


@pytest.mark.parametrize("nx,ny", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (1, 5)])
def test_union_counts_match_partial_injections(nx, ny):
    expected = sum(comb(nx, k) * comb(ny, k) * factorial(k) for k in range(min(nx, ny) + 1))
    unions = amalgamated_unions(nx, ny)
    assert len(unions) == len(set(unions)) == expected


def test_union_examples():
    assert len(amalgamated_unions(1, 1)) == 2
    assert len(amalgamated_unions(2, 2)) == 7
    assert amalgamated_unions(1, 1)[0] == (1, 2)


@pytest.mark.parametrize("nx,ny", [(nx, ny) for nx in range(1, 6) for ny in range(1, 7 - nx)
                                   if nx + ny <= 5])
def test_lemma10_small(nx, ny):
    assert verify_lemma10(nx, ny)


@pytest.mark.parametrize("nx,ny", [(nx, 7 - nx) for nx in range(1, 7)] +
                         [(nx, 6 - nx) for nx in range(1, 6)])
def test_lemma10_large(nx, ny):
    assert verify_lemma10(nx, ny)


def test_functional_of_partition_examples():
    name, A, f = tracial_pairs(1)[3]
    ev = PhiEvaluator(A, f)
    elems = [A.e(0), A.e(1), A.e(1)]
    assert functional_of_partition(ev, SetPartition.discrete(3), elems) == \
        f(elems[0]) * f(elems[1]) * f(elems[2])
    assert functional_of_partition(ev, SetPartition.full(2), elems[:2]) == \
        f(A.mul(elems[0], elems[1]))


def test_chi_bridge_on_commutative_fixture():
    name, A, f = next(p for p in tracial_pairs(4) if p[0] == "CG[C4]")
    ev = PhiEvaluator(A, f)
    for n in (1, 2, 3):
        tab = ev.table(n)
        for idx in product(range(A.dim), repeat=n):
            assert functional_of_vector(ev, chi(n), [A.e(i) for i in idx]) == tab[idx]


def test_chi_bridge_block_order_on_s3():
    G = fixture_groups()["S3"]
    A = group_algebra(G)
    ev = PhiEvaluator(A, _class_function(G))
    tab = ev.table(3)
    mismatches = 0
    for idx in product(range(6), repeat=3):
        elems = [A.e(i) for i in idx]
        assert functional_of_vector(ev, chi(3), elems, "cycles") == tab[idx]
        if functional_of_vector(ev, chi(3), elems, "ascending") != tab[idx]:
            mismatches += 1
    assert mismatches > 0
    with pytest.raises(InputError):
        functional_of_vector(ev, chi(3), [A.e(0)] * 3, "random")
