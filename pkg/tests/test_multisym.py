from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
import sympy

from frobhom.errors import InputError, NotMultiSymmetric, WeightZeroIndex
from frobhom.frobenius import fn_polynomial, s_var
from frobhom.multisym import (
    embedding_dimension,
    eval_star,
    express,
    frobenius_type_polynomial,
    is_multisymmetric,
    multi_indices,
    multisymmetric_dimension,
    newton_polynomial,
    orbit_count,
    symmetrize,
    syzygy_generator_check,
    system_rank,
    z_name,
)
from frobhom.poly import SparsePoly, parse


def test_newton_polynomial_examples():
    assert newton_polynomial((2,), 2, 1) == parse("x1_1^2 + x1_2^2")
    assert newton_polynomial((1, 1), 2, 2) == parse("x1_1*x2_1 + x1_2*x2_2")
    assert newton_polynomial((0, 0), 3, 2) == 3


def test_is_multisymmetric_examples():
    assert is_multisymmetric(newton_polynomial((2, 1), 3, 2), 3, 2)
    assert not is_multisymmetric(parse("x1_1"), 2, 1)
    assert is_multisymmetric(parse("7"), 2, 1)


def test_frobenius_type_small_cases():
    w1, w2, w3 = (1, 0), (0, 1), (1, 1)
    assert frobenius_type_polynomial([w1]) == SparsePoly.var(z_name(w1))
    assert frobenius_type_polynomial([w1, w2]) == parse("z[1,0]*z[0,1] - z[1,1]")
    F = frobenius_type_polynomial([w1, w2, w3])
    assert F.homogeneous_parts()[1] == parse("2*z[2,2]")


@pytest.mark.parametrize("j", range(1, 6))
def test_m1_frobenius_type_is_fn(j):
    F = frobenius_type_polynomial([(1,)] * j)
    assert F.rename({z_name((k,)): s_var(k) for k in range(1, j + 1)}) == fn_polynomial(j)


def test_syzygy_examples():
    assert syzygy_generator_check([(1,), (1,), (1,)], 2, 1)
    assert syzygy_generator_check([(1, 0), (0, 1), (1, 1)], 2, 2)
    # with n points, n indices are not enough to vanish
    assert not eval_star(frobenius_type_polynomial([(1,), (1,)]), 2, 1).is_zero()
    with pytest.raises(WeightZeroIndex):
        syzygy_generator_check([(0, 0), (1, 0), (0, 1)], 2, 2)
    with pytest.raises(InputError):
        syzygy_generator_check([(1,), (1,)], 2, 1)


def test_syzygy_generators_vanish_exhaustively():
    for m, n in ((1, 2), (2, 2), (1, 3)):
        for omegas in product(multi_indices(m, 1, 2), repeat=n + 1):
            assert syzygy_generator_check(list(omegas), n, m)


def test_express_examples():
    q = express(parse("x1_1*x1_2"), 2, 1)
    assert q == parse("1/2*z[1]^2 - 1/2*z[2]")
    q3 = express(parse("x1_1*x1_2*x1_3"), 3, 1)
    assert q3 == parse("1/6*z[1]^3 - 1/2*z[1]*z[2] + 1/3*z[3]")
    p = parse("x1_1*x2_1 + x1_2*x2_2")
    q = express(p, 2, 2)
    assert eval_star(q, 2, 2) == p
    assert q == parse("z[1,1]")


def test_express_errors():
    with pytest.raises(NotMultiSymmetric):
        express(parse("x1_1"), 2, 1)
    with pytest.raises(InputError):
        express(parse("y1 + y2"), 2, 1)


def test_express_with_constant_and_mixed_degrees():
    p = parse("3 + x1_1 + x1_2 + x1_1^2*x1_2^2")
    q = express(p, 2, 1)
    assert eval_star(q, 2, 1) == p


def test_express_matches_sympy_for_m1():
    # m = 1: express e_k through power sums and compare with sympy's symmetrize
    from sympy.polys.polyfuncs import symmetrize as sym_symmetrize

    n = 3
    xs = sympy.symbols("x1_1 x1_2 x1_3")
    target = xs[0] ** 2 * xs[1] + xs[1] ** 2 * xs[0] + xs[0] ** 2 * xs[2] + \
        xs[2] ** 2 * xs[0] + xs[1] ** 2 * xs[2] + xs[2] ** 2 * xs[1]
    q = express(parse(str(target).replace("**", "^")), n, 1)
    sub = {sympy.Symbol(z_name((k,))): sum(x ** k for x in xs) for k in range(1, 4)}
    back = sympy.sympify(str(q).replace("^", "**").replace("z[", "z_").replace("]", ""),
                         locals={f"z_{k}": sympy.Symbol(z_name((k,))) for k in range(1, 4)})
    assert sympy.expand(back.subs(sub) - target) == 0
    # independent check that the target is symmetric at all
    assert sym_symmetrize(target, *xs)[1] == 0


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_surjectivity_ranks(m, n, d):
    r, cols, orbits = system_rank(d, n, m)
    assert r == orbits == multisymmetric_dimension(d, n, m) == orbit_count(d, n, m)
    if m == 1:
        assert r == cols


def test_m2_has_nonunique_expressions():
    assert system_rank(4, 2, 2) == (19, 20, 19)


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (2, 3)])
def test_round_trips_on_orbit_sums(m, n):
    from frobhom.multisym import _from_point_vectors, _orbits

    for d in range(1, 4):
        for orbit in _orbits(d, n, m):
            p = symmetrize(_from_point_vectors(orbit, m), n, m)
            assert eval_star(express(p, n, m), n, m) == p


def test_embedding_dimension_examples():
    assert embedding_dimension(1, 1) == 1
    assert embedding_dimension(2, 2) == 5
    assert embedding_dimension(3, 1) == 3
    for n in range(1, 4):
        for m in range(1, 4):
            assert embedding_dimension(n, m) == len(multi_indices(m, 1, n)) == comb(n + m, n) - 1


def test_linear_part_formula():
    for j in range(1, 6):
        omegas = [(1, 0) if i % 2 == 0 else (0, 1) for i in range(j)]
        total = tuple(sum(w[c] for w in omegas) for c in range(2))
        linear = frobenius_type_polynomial(omegas).homogeneous_parts()[1]
        assert linear == SparsePoly.monomial({z_name(total): 1},
                                             Fraction((-1) ** (j - 1) * factorial(j - 1)))


def test_mixed_point_monomial_round_trip():
    p = symmetrize({"x1_1": 2, "x2_2": 1}, 2, 2)
    assert eval_star(express(p, 2, 2), 2, 2) == p
