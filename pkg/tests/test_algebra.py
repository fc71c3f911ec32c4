from fractions import Fraction

import pytest

from frobhom.algebra import (
    FinAlgebra,
    Functional,
    build_algebra,
    frobenius_pairing,
    is_tracial,
    jordan_constants,
    multiply,
    pairing_from_phi,
    recover_commutative,
    recover_jordan,
)
from frobhom.errors import Degenerate, NonAssociative, NotTracial
from frobhom.fixtures import (
    cyclic_group,
    degenerate_pairs,
    fixture_groups,
    frobenius_pairs,
    function_algebra,
    truncated_polynomial_algebra,
)
from frobhom.frobenius import PhiEvaluator
from frobhom.groups import group_algebra, regular_character


def _phi23(A, f):
    ev = PhiEvaluator(A, f)
    t2, t3 = ev.table(2), ev.table(3)
    n = A.dim
    phi2 = [[t2[(i, j)] for j in range(n)] for i in range(n)]
    phi3 = [[[t3[(i, j, k)] for k in range(n)] for j in range(n)] for i in range(n)]
    return phi2, phi3


def test_function_algebra_idempotents():
    A = function_algebra(3)
    for i in range(3):
        assert multiply(A, A.e(i), A.e(i)) == A.e(i)
    v = (Fraction(1), Fraction(-2), Fraction(5, 3))
    assert multiply(A, A.unit, v) == v


def test_group_algebra_inverse():
    G = fixture_groups()["S3"]
    A = group_algebra(G)
    for g in range(G.n):
        assert multiply(A, A.e(g), A.e(G.inv(g))) == A.e(0)


def _first_nonassociative_triple(A):
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                a, b, c = A.e(i), A.e(j), A.e(k)
                if A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c)):
                    return [i + 1, j + 1, k + 1]
    return None


def test_perturbed_group_algebra_rejected():
    G = cyclic_group(3)
    constants = [(i, j, G.table[i][j], 1) for i in range(3) for j in range(3)]
    constants.append((1, 1, 1, 1))  # g*g picks up an extra g; e stays a unit
    loose = build_algebra(constants, [1, 0, 0], check=False)
    expected = _first_nonassociative_triple(loose)
    assert expected is not None
    with pytest.raises(NonAssociative) as exc:
        build_algebra(constants, [1, 0, 0])
    assert exc.value.witness == expected


def test_json_round_trip():
    A = truncated_polynomial_algebra(3)
    B = FinAlgebra.from_json(A.to_json())
    assert B._table == A._table and B.unit == A.unit


def test_traciality():
    A = function_algebra(3)
    assert is_tracial(A, Functional((1, 2, 3)))
    G = fixture_groups()["S3"]
    CG = group_algebra(G)
    assert is_tracial(CG, regular_character(G))
    # coordinate of a non-central element
    g = next(x for x in range(G.n) if any(G.table[x][y] != G.table[y][x] for y in range(G.n)))
    coord = Functional(tuple(int(i == g) for i in range(G.n)))
    assert not is_tracial(CG, coord)
    with pytest.raises(NotTracial):
        frobenius_pairing(CG, coord)


def test_degenerate_pairings():
    A = function_algebra(2)
    with pytest.raises(Degenerate):
        frobenius_pairing(A, Functional((0, 0)))
    with pytest.raises(Degenerate):
        frobenius_pairing(A, Functional((1, 0)))
    for name, B, f in degenerate_pairs():
        phi2, phi3 = _phi23(B, f)
        with pytest.raises(Degenerate):
            recover_jordan(B.dim, f, phi2, phi3)


def test_jordan_of_commutative_is_structure():
    A = function_algebra(3)
    J = jordan_constants(A)
    assert J.c == A._table


@pytest.mark.parametrize("name,A,f,comm", frobenius_pairs(), ids=lambda x: x if isinstance(x, str) else "")
def test_recovery_round_trip(name, A, f, comm):
    phi2, phi3 = _phi23(A, f)
    assert recover_jordan(A.dim, f, phi2, phi3).c == jordan_constants(A).c
    if comm:
        assert recover_commutative(frobenius_pairing(A, f)) == A._table
        assert recover_commutative(pairing_from_phi(f, phi2, phi3)) == A._table


def test_truncated_polynomial_recovers_nilpotent():
    A = truncated_polynomial_algebra(2)
    f = Functional((0, 1))
    table = recover_commutative(frobenius_pairing(A, f))
    assert table[1][1] == (0, 0)
    assert frobenius_pairing(A, f).R2 == ((0, 1), (1, 0))


def test_c2_recovers_square_to_identity():
    G = cyclic_group(2)
    A = group_algebra(G)
    f = regular_character(G).scale(Fraction(1, 2))
    phi2, phi3 = _phi23(A, f)
    table = recover_commutative(pairing_from_phi(f, phi2, phi3))
    assert table[1][1] == (1, 0)


def test_jordan_product_is_symmetrized():
    G = fixture_groups()["S3"]
    A = group_algebra(G)
    J = jordan_constants(A)
    for i in range(6):
        for j in range(6):
            ab, ba = A.basis_product(i, j), A.basis_product(j, i)
            assert J.product(A.e(i), A.e(j)) == tuple((x + y) / 2 for x, y in zip(ab, ba))
