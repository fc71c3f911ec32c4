"""The compiled kernels must agree exactly with the pure-Python reference."""
import random
from itertools import permutations

import pytest

from frobhom import _kernels_py as py
from frobhom import kernels
from frobhom.fixtures import fixture_groups
from frobhom.groups import pair_sets

try:
    from frobhom import _ckernels as cy
except ImportError:  # pragma: no cover - extension not built
    cy = None

needs_c = pytest.mark.skipif(cy is None, reason="Cython extension not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if cy is not None:
        assert kernels.BACKEND == "cython" or kernels.os.environ.get("FROBHOM_PURE")


@needs_c
def test_perm_kernels_agree():
    for n in range(1, 7):
        for perm in permutations(range(n)):
            assert cy.perm_cycles(perm) == py.perm_cycles(perm)
            assert list(cy.orbit_labels(perm)) == list(py.orbit_labels(perm))


def _random_table(rng, n):
    return kernels.int_buffer(rng.randrange(n) for _ in range(n * n))


@needs_c
def test_assoc_witness_agrees():
    rng = random.Random(7)
    for G in fixture_groups().values():
        flat = G.flat()
        assert cy.assoc_witness(flat, G.n) is None
        assert py.assoc_witness(flat, G.n) is None
    for _ in range(300):
        n = rng.randint(1, 6)
        t = _random_table(rng, n)
        assert cy.assoc_witness(t, n) == py.assoc_witness(t, n)


@needs_c
def test_partial_conflict_agrees():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 6)
        t = kernels.int_buffer(rng.randrange(-1, n) for _ in range(n * n))
        assert cy.partial_conflict(t, n) == py.partial_conflict(t, n)


def _pair_set_start(G):
    n = G.n
    ps = pair_sets(G)
    table = kernels.int_buffer([-1] * (n * n))
    a = kernels.int_buffer([-1] * (n * n))
    b = kernels.int_buffer([-1] * (n * n))
    for i in range(n):
        for j in range(n):
            s = sorted(ps.sets[i][j])
            if len(s) == 1:
                table[i * n + j] = s[0]
            else:
                a[i * n + j], b[i * n + j] = s
    return table, a, b


@needs_c
@pytest.mark.parametrize("name", ["S3", "D4", "Q8"])
def test_propagate_agrees(name):
    G = fixture_groups()[name]
    n = G.n
    rng = random.Random(name)
    table, a, b = _pair_set_start(G)
    for _ in range(40):
        t1 = kernels.int_buffer(table)
        # orient a few random cells, sometimes inconsistently
        for _ in range(rng.randint(1, 3)):
            cells = [c for c in range(n * n) if t1[c] < 0 and c // n < c % n]
            if not cells:
                break
            c = rng.choice(cells)
            i, j = divmod(c, n)
            v, w = (a[c], b[c]) if rng.random() < 0.5 else (b[c], a[c])
            t1[c], t1[j * n + i] = v, w
        t2 = kernels.int_buffer(t1)
        ok1 = cy.propagate(t1, a, b, n)
        ok2 = py.propagate(t2, a, b, n)
        assert ok1 == ok2
        if ok1:
            assert list(t1) == list(t2)


@needs_c
def test_is_homomorphism_agrees():
    G = fixture_groups()["S3"]
    for perm in permutations(range(1, 6)):
        phi = [0] + list(perm)
        assert cy.is_homomorphism(G.flat(), G.flat(), phi, 6) == \
            py.is_homomorphism(G.flat(), G.flat(), phi, 6)


def test_pure_backend_end_to_end():
    import os
    import subprocess
    import sys

    code = ("from frobhom import kernels; from frobhom.fixtures import fixture_groups; "
            "from frobhom.groups import pair_sets, mansfield_reconstruct; "
            "print(kernels.BACKEND, len(mansfield_reconstruct(pair_sets(fixture_groups()['S3']))))")
    env = dict(os.environ, FROBHOM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    assert out.stdout.split() == ["python", "2"]
