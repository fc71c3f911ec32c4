from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
import sympy

from frobhom.errors import (
    BadCharacterTable,
    GroupAxiomError,
    Inconsistent,
    InputError,
    MalformedData,
    NoIdentity,
    NotLatin,
    OrderTooLarge,
)
from frobhom.fixtures import character_table, cyclic_group, direct_product, fixture_groups
from frobhom.groups import (
    CharacterTable,
    FiniteGroup,
    KCharacterData,
    PairSetTable,
    all_permutation_isomorphic,
    check_orthogonality,
    conjugation_invariant,
    group_determinant,
    isomorphic,
    k_character,
    kchars_from_json,
    kchars_to_json,
    mansfield_reconstruct,
    opposite_tables,
    pair_sets,
    phi_group_determinant,
    recover_group_data,
    regular_character,
    validate_group,
    verify_factorization,
)
from frobhom.poly import parse

GROUPS = fixture_groups()


def sympy_group_determinant(G):
    xs = sympy.symbols(f"x1:{G.n + 1}")
    # rows g, columns h: x_{g h^-1}
    mat = sympy.Matrix(G.n, G.n, lambda g, h: xs[G.table[g][G.inv(h)]])
    return sympy.expand(mat.det(method="berkowitz"))


def test_validate_examples():
    assert validate_group(GROUPS["C2"].table).n == 2
    assert validate_group(GROUPS["S3"].table).n == 6


def test_swapped_entry_is_rejected():
    t = [list(r) for r in GROUPS["S3"].table]
    t[1][2], t[1][3] = t[1][3], t[1][2]
    with pytest.raises(GroupAxiomError):
        validate_group(t)
    t = [list(r) for r in GROUPS["C3"].table]
    t[1][1] = 1
    with pytest.raises(NotLatin):
        validate_group(t)
    with pytest.raises(NoIdentity):
        validate_group([[1, 0], [0, 1]])
    with pytest.raises(InputError):
        validate_group([[0, 1], [1]])


def test_json_round_trip_is_one_based():
    G = GROUPS["S3"]
    data = G.to_json()
    assert data["table"][0] == list(range(1, 7))
    assert FiniteGroup.from_json(data).table == G.table


def test_regular_character():
    assert regular_character(GROUPS["C2"]).values == (2, 0)
    assert regular_character(GROUPS["S3"]).values == (6, 0, 0, 0, 0, 0)
    assert regular_character(GROUPS["C1"]).values == (1,)


def test_c2_kcharacter_value():
    k3 = k_character(GROUPS["C2"], 3)
    assert k3.values[(1, 1, 1)] == 0


def test_kchars_json_round_trip():
    ks = [k_character(GROUPS["S3"], k) for k in (1, 2, 3)]
    back = kchars_from_json(kchars_to_json(*ks))
    assert [b.values for b in back] == [k.values for k in ks]


@pytest.mark.parametrize("name", [n for n, G in GROUPS.items() if G.n <= 6])
def test_group_determinant_matches_sympy(name):
    G = GROUPS[name]
    D = group_determinant(G)
    assert sympy.expand(sympy.sympify(str(D).replace("^", "**")) - sympy_group_determinant(G)) == 0


def test_group_determinant_examples():
    assert str(group_determinant(GROUPS["C2"])) == "x1^2 - x2^2"
    assert group_determinant(GROUPS["C3"]) == parse("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3")
    assert group_determinant(GROUPS["C1"]) == parse("x1")
    with pytest.raises(OrderTooLarge):
        group_determinant(direct_product(GROUPS["C3"], GROUPS["C3"]))


@pytest.mark.parametrize("name", [n for n, G in GROUPS.items() if G.n <= 6])
def test_phi_route_and_raw_normalization(name):
    G = GROUPS[name]
    D = group_determinant(G)
    assert phi_group_determinant(G) == D
    assert phi_group_determinant(G, raw=True) == D.scale(factorial(G.n))


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "C2xC2", "S3"])
def test_factorization(name):
    G = GROUPS[name]
    table = character_table(name)
    assert check_orthogonality(G, table)
    assert verify_factorization(G, table)


def test_c2_factors_explicitly():
    D = group_determinant(GROUPS["C2"])
    assert D == parse("(x1 + x2)*(x1 - x2)")


def test_bad_character_table():
    G = GROUPS["S3"]
    with pytest.raises(BadCharacterTable):
        verify_factorization(G, CharacterTable(None, ((1, (Fraction(1),) * 6),)))
    wrong = character_table("S3")
    swapped = CharacterTable(None, (wrong.irreducibles[0], wrong.irreducibles[0],
                                    wrong.irreducibles[2]))
    assert not verify_factorization(G, swapped)


def test_character_table_json():
    t = character_table("C3")
    assert CharacterTable.from_json(t.to_json()) == t


def test_recover_c4():
    G = GROUPS["C4"]
    data = recover_group_data(*(k_character(G, k) for k in (1, 2, 3)))
    assert data.identity == 0
    assert data.inverses[1] == 3 and data.inverses[3] == 1
    assert all(len(s) == 1 for row in data.pair_sets.sets for s in row)


def test_recover_s3_pair_set_of_transpositions():
    G = GROUPS["S3"]
    data = recover_group_data(*(k_character(G, k) for k in (1, 2, 3)))
    transpositions = [x for x in range(6) if G.element_order(x) == 2]
    three_cycles = {x for x in range(6) if G.element_order(x) == 3}
    for a, b in combinations(transpositions, 2):
        assert data.pair_sets.sets[a][b] == three_cycles


def test_two_identities_rejected():
    G = GROUPS["S3"]
    k1, k2, k3 = (k_character(G, k) for k in (1, 2, 3))
    vals = dict(k1.values)
    vals[(2,)] = Fraction(1)
    with pytest.raises(MalformedData) as exc:
        recover_group_data(KCharacterData(1, True, vals, 6), k2, k3)
    assert exc.value.witness is not None


def test_mansfield_examples():
    V = GROUPS["C2xC2"]
    found = mansfield_reconstruct(pair_sets(V))
    assert len(found) == 1 and found[0].table == V.table
    S3 = GROUPS["S3"]
    found = mansfield_reconstruct(pair_sets(S3))
    assert len(found) == 2
    assert opposite_tables(found[0], found[1])
    assert all(all_permutation_isomorphic(H, S3) for H in found)


def test_mansfield_wrong_pair_is_inconsistent():
    S3 = GROUPS["S3"]
    ps = [list(r) for r in pair_sets(S3).sets]
    i, j = next((i, j) for i in range(6) for j in range(6) if len(ps[i][j]) == 2)
    others = sorted(x for x in range(1, 6) if x not in ps[i][j] and x not in (i, j))
    ps[i][j] = ps[j][i] = frozenset(others[:2])
    with pytest.raises(Inconsistent):
        mansfield_reconstruct(PairSetTable(tuple(map(tuple, ps))))


@pytest.mark.parametrize("name", list(GROUPS))
def test_reconstruction_end_to_end(name):
    G = GROUPS[name]
    data = recover_group_data(*(k_character(G, k) for k in (1, 2, 3)))
    found = mansfield_reconstruct(data.pair_sets)
    assert 1 <= len(found) <= 2
    assert any(isomorphic(H, G) for H in found)
    if len(found) == 2:
        assert opposite_tables(*found)


def test_isomorphic_examples():
    assert not isomorphic(GROUPS["C4"], GROUPS["C2xC2"])
    S3 = GROUPS["S3"]
    assert isomorphic(S3, S3.opposite())
    assert isomorphic(S3, S3)


def test_isomorphism_agrees_with_brute_force():
    by_order = {}
    for name, G in GROUPS.items():
        by_order.setdefault(G.n, []).append(G)
    # relabelled copies should also be recognized
    S3 = GROUPS["S3"]
    perm = [0, 3, 5, 1, 2, 4]
    inv = [perm.index(i) for i in range(6)]
    relabelled = validate_group([[perm[S3.table[inv[a]][inv[b]]] for b in range(6)]
                                 for a in range(6)])
    by_order[6].append(relabelled)
    for groups in by_order.values():
        for G in groups:
            for H in groups:
                assert isomorphic(G, H) == all_permutation_isomorphic(G, H)


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "C2xC4"])
def test_kcharacters_are_class_functions(name):
    G = GROUPS[name]
    for k in (1, 2, 3):
        assert conjugation_invariant(G, k_character(G, k))


def test_cyclic_groups_are_fixture_shaped():
    for n in range(1, 9):
        G = cyclic_group(n)
        assert G.element_order(1 % n) == n
