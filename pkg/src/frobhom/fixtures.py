"""Corpus of algebras, functionals, groups and character tables used by the
checks, the tests and ``verify-all``."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import FinAlgebra, Functional, build_algebra
from .groups import (
    CharacterTable,
    FiniteGroup,
    group_algebra,
    group_from_permutations,
    regular_character,
    validate_group,
)
from .scalars import zeta

__all__ = [
    "function_algebra",
    "truncated_polynomial_algebra",
    "cyclic_group",
    "direct_product",
    "symmetric_group_3",
    "dihedral_group_4",
    "quaternion_group",
    "fixture_groups",
    "fixture_algebras",
    "frobenius_pairs",
    "tracial_pairs",
    "multiplicativity_instances",
    "character_table",
]


def function_algebra(m: int) -> FinAlgebra:
    """Functions on an m-point set in the idempotent basis ``delta_1..delta_m``."""
    constants = [(i, i, i, 1) for i in range(m)]
    return build_algebra(constants, [1] * m, basis=[f"d{i + 1}" for i in range(m)],
                         dim=m, name=f"functions on {m} points")


def truncated_polynomial_algebra(k: int) -> FinAlgebra:
    """``C[t]/(t^k)`` in the basis ``1, t, ..., t^(k-1)``."""
    constants = [(i, j, i + j, 1) for i in range(k) for j in range(k) if i + j < k]
    return build_algebra(constants, [1] + [0] * (k - 1),
                         basis=["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, k)],
                         dim=k, name=f"C[t]/(t^{k})")


def cyclic_group(n: int) -> FiniteGroup:
    """Element ``i`` is ``g^i``."""
    return validate_group([[(i + j) % n for j in range(n)] for i in range(n)],
                          labels=["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element ``(g, h)`` has index ``g * |H| + h``."""
    m = H.n
    n = G.n * m
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(n)]
             for a in range(n)]
    labels = [f"({G.labels[a // m]},{H.labels[a % m]})" for a in range(n)]
    return validate_group(table, labels)


def symmetric_group_3() -> FiniteGroup:
    return group_from_permutations([(1, 0, 2), (0, 2, 1)])


def dihedral_group_4() -> FiniteGroup:
    return group_from_permutations([(1, 2, 3, 0), (0, 3, 2, 1)])


def quaternion_group() -> FiniteGroup:
    # elements (sign, unit) with unit in 1, i, j, k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
             ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
             ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
             ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "k"): (1, "i"),
             ("k", "i"): (1, "j"), ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"),
             ("i", "k"): (-1, "j")}
    elems = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]
    index = {x: n for n, x in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = units[(u1, u2)]
            row.append(index[(s1 * s2 * s, u)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return validate_group(table, labels)


@lru_cache(maxsize=None)
def fixture_groups() -> dict:
    """Every fixture group of order <= 8, keyed by name (insertion-ordered)."""
    c2 = cyclic_group(2)
    groups = {"C1": cyclic_group(1)}
    for n in range(2, 9):
        groups[f"C{n}"] = cyclic_group(n)
    groups["C2xC2"] = direct_product(c2, c2)
    groups["S3"] = symmetric_group_3()
    groups["C2xC4"] = direct_product(c2, cyclic_group(4))
    groups["C2xC2xC2"] = direct_product(direct_product(c2, c2), c2)
    groups["D4"] = dihedral_group_4()
    groups["Q8"] = quaternion_group()
    return groups


def fixture_algebras() -> dict:
    """Algebras of the corpus, keyed by name."""
    out = {}
    for m in range(1, 5):
        out[f"Fun{m}"] = function_algebra(m)
    out["C[t]/(t^2)"] = truncated_polynomial_algebra(2)
    out["C[t]/(t^3)"] = truncated_polynomial_algebra(3)
    for name in ("C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "D4", "Q8"):
        out[f"CG[{name}]"] = group_algebra(fixture_groups()[name])
    return out


def tracial_pairs(max_group_order: int = 6) -> list:
    """``(name, algebra, f)`` with f tracial: function algebras with a generic
    weight vector, truncated polynomial algebras, and group algebras with the
    regular character and a class-function perturbation."""
    out = []
    for m in range(1, 5):
        A = function_algebra(m)
        out.append((f"Fun{m}", A, Functional(tuple(Fraction(k + 2, k + 1) for k in range(m)))))
    out.append(("C[t]/(t^2)", truncated_polynomial_algebra(2), Functional((2, 1))))
    out.append(("C[t]/(t^3)", truncated_polynomial_algebra(3), Functional((3, -1, 2))))
    for name, G in fixture_groups().items():
        if G.n > max_group_order or G.n == 1:
            continue
        out.append((f"CG[{name}]", group_algebra(G), _class_function(G)))
    return out


def _class_function(G: FiniteGroup) -> Functional:
    # a generic class function: distinct weights on conjugacy classes
    n = G.n
    seen = {}
    values = [None] * n
    for x in range(n):
        cls = min(G.table[G.table[g][x]][G.inv(g)] for g in range(n))
        seen.setdefault(cls, Fraction(len(seen) + 1, len(seen) + 2) if cls else Fraction(n))
        values[x] = seen[cls]
    return Functional(tuple(values))


def frobenius_pairs() -> list:
    """``(name, algebra, f, commutative)`` with f tracial and f(ab) non-degenerate."""
    out = []
    for m in range(1, 5):
        out.append((f"Fun{m}", function_algebra(m), Functional((1,) * m), True))
    out.append(("Fun3 weighted", function_algebra(3), Functional((1, 2, Fraction(1, 3))), True))
    out.append(("C[t]/(t^2)", truncated_polynomial_algebra(2), Functional((0, 1)), True))
    out.append(("C[t]/(t^3)", truncated_polynomial_algebra(3), Functional((1, 0, 1)), True))
    for name in ("C2", "C3", "C4", "C2xC2", "C5", "C6", "S3"):
        G = fixture_groups()[name]
        f = regular_character(G).scale(Fraction(1, G.n))
        A = group_algebra(G)
        out.append((f"CG[{name}]", A, f, A.is_commutative()))
    return out


def degenerate_pairs() -> list:
    """``(name, algebra, f)`` whose pairing f(ab) is degenerate."""
    return [
        ("Fun2 ev_p", function_algebra(2), Functional((1, 0))),
        ("Fun3 zero", function_algebra(3), Functional((0, 0, 0))),
        ("C[t]/(t^2) f(t)=0", truncated_polynomial_algebra(2), Functional((1, 0))),
        ("CG[C2] zero", group_algebra(cyclic_group(2)), Functional((0, 0))),
    ]


def multiplicativity_instances() -> list:
    """``(name, algebra, f, n, expected)`` with f(1) = n.

    Positives are sums of n point evaluations (and the regular character of
    C_n, n <= 3); negatives keep f(1) = n but use weights that are not
    nonnegative integers, or a nilpotent perturbation.
    """
    A2, A3 = function_algebra(2), function_algebra(3)
    T2 = truncated_polynomial_algebra(2)
    return [
        ("Fun2 ev_p", A2, Functional((1, 0)), 1, True),
        ("Fun2 ev_p+ev_q", A2, Functional((1, 1)), 2, True),
        ("Fun2 2ev_p", A2, Functional((2, 0)), 2, True),
        ("Fun3 ev_p+ev_q+ev_r", A3, Functional((1, 1, 1)), 3, True),
        ("Fun3 2ev_p+ev_r", A3, Functional((2, 0, 1)), 3, True),
        ("CG[C2] regular", group_algebra(cyclic_group(2)), Functional((2, 0)), 2, True),
        ("CG[C3] regular", group_algebra(cyclic_group(3)), Functional((3, 0, 0)), 3, True),
        ("C[t]/(t^2) 2ev_0", T2, Functional((2, 0)), 2, True),
        ("Fun2 (3,-1)", A2, Functional((3, -1)), 2, False),
        ("Fun2 (1/2,1/2)", A2, Functional((Fraction(1, 2), Fraction(1, 2))), 1, False),
        ("Fun3 (1/2,1/2,2)", A3, Functional((Fraction(1, 2), Fraction(1, 2), 2)), 3, False),
        ("Fun3 (2,2,-1)", A3, Functional((2, 2, -1)), 3, False),
        ("C[t]/(t^2) derivation", T2, Functional((2, 1)), 2, False),
        ("C[t]/(t^2) f(t)=1, n=1", T2, Functional((1, 1)), 1, False),
    ]


def character_table(name: str) -> CharacterTable:
    """Character tables (values per element) for C2, C3, C4, C2xC2 and S3."""
    G = fixture_groups()[name]
    if name in ("C2", "C3", "C4"):
        n = G.n
        N = n if n > 2 else None
        irr = []
        for a in range(n):
            if N is None:
                vals = tuple(Fraction((-1) ** (a * g)) for g in range(n))
            else:
                vals = tuple(zeta(n, a * g) for g in range(n))
            irr.append((1, vals))
        return CharacterTable(N, tuple(irr))
    if name == "C2xC2":
        irr = []
        for a in range(2):
            for b in range(2):
                irr.append((1, tuple(Fraction((-1) ** (a * (x // 2) + b * (x % 2)))
                                     for x in range(4))))
        return CharacterTable(None, tuple(irr))
    if name == "S3":
        orders = [G.element_order(x) for x in range(6)]
        trivial = tuple(Fraction(1) for _ in orders)
        sign = tuple(Fraction(-1 if o == 2 else 1) for o in orders)
        two = tuple(Fraction({1: 2, 2: 0, 3: -1}[o]) for o in orders)
        return CharacterTable(None, ((1, trivial), (1, sign), (2, two)))
    raise KeyError(f"no character table fixture for {name}")
