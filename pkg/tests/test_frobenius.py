from fractions import Fraction
from itertools import product
from math import factorial

import pytest
import sympy

from frobhom.algebra import Functional
from frobhom.errors import InputError, NotTracial
from frobhom.fixtures import (
    cyclic_group,
    fixture_groups,
    frobenius_pairs,
    function_algebra,
    multiplicativity_instances,
    tracial_pairs,
    truncated_polynomial_algebra,
)
from frobhom.frobenius import (
    PhiEvaluator,
    evaluate_polarized,
    fn_closed_form,
    fn_cycle_form,
    fn_generating_check,
    fn_polynomial,
    fn_series,
    is_n_homomorphism,
    operator_identities,
    phi_cycle_sum,
    phi_diagonal,
    phi_polarized,
    phi_table_from_jordan,
    polarize,
    proof_step4,
    s_var,
    symmetric_power_check,
    unit_slot_identity,
)
from frobhom.groups import group_algebra, regular_character
from frobhom.algebra import recover_jordan
from frobhom.poly import parse


def naive_phi(A, f, args):
    """Independent oracle: the defining recursion on explicit vectors, no caching."""
    if len(args) == 1:
        return f(args[0])
    a0, rest = args[0], args[1:]
    total = f(a0) * naive_phi(A, f, rest)
    for i in range(len(rest)):
        merged = list(rest)
        merged[i] = A.mul(a0, rest[i])
        total -= naive_phi(A, f, merged)
    return total


# F_n -----------------------------------------------------------------------------

def test_f3_verbatim():
    assert str(fn_polynomial(3)) == "s1^3 - 3*s1*s2 + 2*s3"
    assert fn_polynomial(0) == 1
    assert fn_polynomial(1) == parse("s1")
    assert fn_polynomial(2) == parse("s1^2 - s2")


@pytest.mark.parametrize("n", range(1, 6))
def test_fn_at_power_sums_is_n_factorial_e_n(n):
    # sympy oracle: F_n(p_1, ..., p_n) in n variables equals n! x_1 ... x_n
    xs = sympy.symbols(f"x1:{n + 1}")
    subs = {sympy.Symbol(s_var(k)): sum(x ** k for x in xs) for k in range(1, n + 1)}
    F = sympy.sympify(str(fn_polynomial(n)).replace("^", "**"))
    assert sympy.expand(F.subs(subs) - factorial(n) * sympy.prod(xs)) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_fn_routes_agree(n):
    F = fn_polynomial(n)
    assert F == fn_closed_form(n)
    if n >= 1 and n <= 6:
        assert F == fn_cycle_form(n)
    assert fn_series(n)[n] == F


def test_generating_check_and_operators():
    assert fn_generating_check(0)["pass"]
    assert fn_generating_check(6)["pass"]
    rep = operator_identities(8)
    assert rep["pass"], rep


# Phi ---------------------------------------------------------------------------

@pytest.mark.parametrize("name,A,f", tracial_pairs(6), ids=lambda x: x if isinstance(x, str) else "")
def test_phi_table_matches_naive_oracle(name, A, f):
    ev = PhiEvaluator(A, f)
    for n in (1, 2, 3):
        tab = ev.table(n)
        for idx in product(range(A.dim), repeat=n):
            args = [A.e(i) for i in idx]
            expected = naive_phi(A, f, args)
            assert tab[idx] == expected
            assert phi_cycle_sum(ev, args) == expected
            assert phi_polarized(ev, args) == expected


def test_phi_on_nontracial_functional():
    G = fixture_groups()["S3"]
    A = group_algebra(G)
    f = Functional((0, 1, 2, 0, 0, 0))
    ev = PhiEvaluator(A, f)
    assert not ev.tracial
    for idx in product(range(6), repeat=3):
        args = [A.e(i) for i in idx]
        assert ev.phi(args) == naive_phi(A, f, args)
    with pytest.raises(NotTracial):
        phi_cycle_sum(ev, [A.e(1), A.e(2)])


def test_phi_diagonal_small_cases():
    A = truncated_polynomial_algebra(3)
    f = Functional((3, -1, 2))
    ev = PhiEvaluator(A, f)
    a = (Fraction(1), Fraction(2), Fraction(-1, 2))
    s = [f(a), f(A.mul(a, a)), f(A.mul(a, A.mul(a, a)))]
    assert phi_diagonal(ev, a, 1) == s[0]
    assert phi_diagonal(ev, a, 2) == s[0] ** 2 - s[1]
    assert phi_diagonal(ev, a, 3) == s[0] ** 3 - 3 * s[0] * s[1] + 2 * s[2]
    assert phi_diagonal(ev, a, 3) == ev.phi([a, a, a])


def test_polarize_small_forms():
    assert polarize(1) == parse("f[1]")
    assert polarize(2) == parse("f[1,0]*f[0,1] - f[1,1]")
    G = cyclic_group(4)
    A = group_algebra(G)
    ev = PhiEvaluator(A, regular_character(G))
    form = polarize(3)
    for idx in product(range(4), repeat=3):
        args = [A.e(i) for i in idx]
        assert evaluate_polarized(form, ev, args) == phi_cycle_sum(ev, args)


def test_symbolic_polarization_rejects_noncommutative():
    G = fixture_groups()["S3"]
    A = group_algebra(G)
    ev = PhiEvaluator(A, regular_character(G))
    with pytest.raises(InputError):
        evaluate_polarized(polarize(2), ev, [A.e(1), A.e(2)])


def test_unit_slot():
    A = function_algebra(3)
    ev = PhiEvaluator(A, Functional((1, 1, 1)))
    for i in range(3):
        for n in range(1, 5):
            assert unit_slot_identity(ev, A.e(i), n)
    ev2 = PhiEvaluator(function_algebra(2), Functional((1, 1)))
    p = (Fraction(3), Fraction(-1))
    assert ev2.phi([p, ev2.algebra.unit]) == ev2.f(p)


# n-homomorphisms ------------------------------------------------------------------

def test_n_homomorphism_examples():
    A3 = function_algebra(3)
    assert is_n_homomorphism(PhiEvaluator(A3, Functional((1, 0, 0))), 1)[0]
    A2 = function_algebra(2)
    assert is_n_homomorphism(PhiEvaluator(A2, Functional((1, 1))), 2)[0]
    G = cyclic_group(2)
    assert is_n_homomorphism(PhiEvaluator(group_algebra(G), regular_character(G)), 2)[0]
    ok, w = is_n_homomorphism(PhiEvaluator(A2, Functional((3, -1))), 2)
    assert not ok
    assert w["tuple"] == [1, 1, 1] and w["value"] == "6"
    assert symmetric_power_check(PhiEvaluator(A2, Functional((1, 1))), 2)[0]
    assert not symmetric_power_check(PhiEvaluator(A2, Functional((3, -1))), 2)[0]


@pytest.mark.parametrize("name,A,f,n,expected", multiplicativity_instances(),
                         ids=lambda x: x if isinstance(x, str) else "")
def test_criterion_both_directions(name, A, f, n, expected):
    ev = PhiEvaluator(A, f)
    assert is_n_homomorphism(ev, n)[0] == expected
    assert symmetric_power_check(ev, n)[0] == expected


def test_step4_on_a_positive_instance():
    A = function_algebra(2)
    ev = PhiEvaluator(A, Functional((1, 1)))
    for a in product(range(2), repeat=2):
        for b in product(range(2), repeat=2):
            step = proof_step4(ev, 2, a, b)
            assert step["sum_sigma"] == step["n!_phi_ab"] == step["product"]


@pytest.mark.parametrize("name,A,f,comm", [p for p in frobenius_pairs() if p[1].dim <= 4],
                         ids=lambda x: x if isinstance(x, str) else "")
def test_phi4_from_jordan(name, A, f, comm):
    ev = PhiEvaluator(A, f)
    t2, t3 = ev.table(2), ev.table(3)
    n = A.dim
    phi2 = [[t2[(i, j)] for j in range(n)] for i in range(n)]
    phi3 = [[[t3[(i, j, k)] for k in range(n)] for j in range(n)] for i in range(n)]
    J = recover_jordan(n, f, phi2, phi3)
    assert phi_table_from_jordan(f, J, 4) == ev.table(4)
