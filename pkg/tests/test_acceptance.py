"""Acceptance criteria, one test each, run at full scale.

Every test prints a line ``criterion NN <title>: PASS|FAIL (elapsed / target)``.
Runtimes are reported against their targets but only correctness decides the
verdict.
"""
import random
import time
from contextlib import contextmanager
from itertools import product
from math import factorial

import pytest

from frobhom import checks
from frobhom import fixtures as fx
from frobhom.errors import MalformedData
from frobhom.frobenius import (
    PhiEvaluator,
    fn_closed_form,
    fn_polynomial,
    fn_series,
    phi_cycle_sum,
    phi_polarized,
)
from frobhom.groups import (
    group_determinant,
    phi_group_determinant,
    recover_group_data,
    verify_factorization,
)
from frobhom.multisym import embedding_dimension
from frobhom.partitions import amalgamated_unions, verify_lemma10
from frobhom.poly import parse

from conftest import ACCEPTANCE_LINES

SEED = checks.DEFAULT_SEED


@contextmanager
def criterion(capsys, number, title, target):
    t = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t
        line = f"criterion {number:02d} {title}: {status} ({elapsed:.1f}s / target {target}s)"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)


def _run(fn):
    ok, witness = fn("full", random.Random(f"{SEED}:{fn.__name__}"))
    assert ok, witness
    return witness


def test_criterion_01_fn_triple_agreement(capsys):
    with criterion(capsys, 1, "F_n recursion = closed form = series", 1):
        series = fn_series(8)
        for n in range(9):
            assert fn_polynomial(n) == fn_closed_form(n) == series[n]
        assert str(fn_polynomial(3)) == "s1^3 - 3*s1*s2 + 2*s3"
        assert fn_polynomial(4) == checks.newton_determinant(4)


def test_criterion_02_operator_identities(capsys):
    with criterion(capsys, 2, "operator identities for n <= 8", 1):
        _run(checks.check_operator_identities)


def test_criterion_03_phi_routes(capsys):
    with criterion(capsys, 3, "Phi routes agree on all basis tuples, n <= 4", 30):
        count = 0
        for name, A, f in fx.tracial_pairs(6):
            ev = PhiEvaluator(A, f)
            # a second evaluator so the recursion shares no cache with the tables
            rec = PhiEvaluator(A, f)
            for n in range(1, 5):
                tab = ev.table(n)
                for idx in product(range(A.dim), repeat=n):
                    args = [A.e(i) for i in idx]
                    v = tab[idx]
                    assert rec.phi(args) == v, (name, idx)
                    assert phi_cycle_sum(ev, args) == v, (name, idx)
                    assert phi_polarized(ev, args) == v, (name, idx)
                    count += 1
        assert count > 0


def test_criterion_04_multiplicativity_criterion(capsys):
    with criterion(capsys, 4, "n-homomorphism iff ring map, both directions", 60):
        witness = _run(checks.check_n_homomorphism_criterion)
        assert witness["positives"] >= 3 and witness["negatives"] >= 3


def test_criterion_05_lemma10_exhaustive(capsys):
    with criterion(capsys, 5, "amalgamated-union identity for nx + ny <= 7", 60):
        for nx in range(1, 7):
            for ny in range(1, 8 - nx):
                assert verify_lemma10(nx, ny), (nx, ny)
        assert len(amalgamated_unions(2, 2)) == 7


def test_criterion_06_chi_bridge(capsys):
    with criterion(capsys, 6, "f(chi(n)) = Phi_n on basis tuples, n <= 4", 30):
        _run(checks.check_chi_bridge)


def test_criterion_07_finite_spaces(capsys):
    with criterion(capsys, 7, "finite symmetric products: decomposition and weights", 60):
        _run(checks.check_finite_spaces)


def test_criterion_08_recovery(capsys):
    with criterion(capsys, 8, "Jordan and structure constants from Phi_1..Phi_3", 30):
        _run(checks.check_recovery)


def test_criterion_09_group_determinants(capsys):
    with criterion(capsys, 9, "group determinant routes and factorization", 300):
        groups = fx.fixture_groups()
        assert str(group_determinant(groups["C2"])) == "x1^2 - x2^2"
        assert group_determinant(groups["C3"]) == parse("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3")
        for name, G in groups.items():
            if G.n > 6:
                continue
            D = group_determinant(G)
            assert phi_group_determinant(G) == D, name
            assert phi_group_determinant(G, raw=True) == D.scale(factorial(G.n)), name
        for name in ("C2", "C3", "S3"):
            assert verify_factorization(groups[name], fx.character_table(name)), name
        _run(checks.check_group_determinants)
        ok, note = checks.note_determinant_normalization("full", None)
        assert ok and "n! det" in note["text"]


def test_criterion_10_group_reconstruction(capsys):
    with criterion(capsys, 10, "groups of order <= 8 rebuilt from Phi_1, Phi_2, Phi_3", 300):
        _run(checks.check_group_reconstruction)
        S3 = fx.fixture_groups()["S3"]
        for label, ks in checks._corruptions(S3):
            with pytest.raises(MalformedData) as exc:
                recover_group_data(*ks)
            assert exc.value.witness is not None, label


def test_criterion_11_multisymmetric(capsys):
    with criterion(capsys, 11, "multi-symmetric ranks, round trips and syzygies", 300):
        _run(checks.check_multisymmetric)
        assert [embedding_dimension(1, 1), embedding_dimension(2, 2),
                embedding_dimension(3, 1)] == [1, 5, 3]


def test_criterion_12_phi4_from_jordan(capsys):
    with criterion(capsys, 12, "Phi_4 rebuilt from recovered constants", 120):
        _run(checks.check_phi4_from_jordan)
        assert any(A.dim == 6 for _, A, _, _ in fx.frobenius_pairs())


def test_recorded_notes(capsys):
    """The report carries the discrepancy notes as notes, not failures."""
    report = checks.verify_all("small", SEED, only=[name for name, _, kind in checks.CHECKS
                                                    if kind == "note"])
    notes = [r for r in report.results if r.kind == "note"]
    assert len(notes) >= 2
    texts = " ".join(r.witness["text"] for r in notes)
    assert "n! det" in texts and "exactly one index is the identity" in texts
