"""Finite groups: Cayley tables, k-characters, group determinants and
reconstruction of a group from its 1-, 2- and 3-characters.

Elements are indices ``0..n-1`` with ``0`` the identity; the JSON form is
1-based.  Multiplication is ``table[i][j]`` (the index of ``g_i g_j``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from itertools import product as iproduct
from math import factorial

from .algebra import FinAlgebra, Functional, build_algebra, recover_jordan
from .errors import (
    BadCharacterTable,
    Degenerate,
    Inconsistent,
    InputError,
    MalformedData,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatin,
    OrderTooLarge,
)
from .frobenius import PhiEvaluator, fn_polynomial, s_var
from .kernels import assoc_witness, int_buffer, is_homomorphism, propagate
from .poly import SparsePoly, parse_scalar
from .scalars import Cyclotomic, format_scalar

__all__ = [
    "FiniteGroup",
    "KCharacterData",
    "PairSetTable",
    "RecoveredData",
    "CharacterTable",
    "validate_group",
    "group_from_permutations",
    "group_algebra",
    "regular_character",
    "k_character",
    "group_determinant",
    "phi_group_determinant",
    "verify_factorization",
    "pair_sets",
    "recover_group_data",
    "mansfield_reconstruct",
    "isomorphic",
]

ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple
    labels: tuple
    _flat: object = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.table[i].index(0)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def flat(self):
        return self._flat

    def opposite(self) -> "FiniteGroup":
        n = self.n
        return validate_group([[self.table[j][i] for j in range(n)] for i in range(n)],
                              labels=[f"{lab}'" for lab in self.labels], one_based=False)

    def same_table(self, other: "FiniteGroup") -> bool:
        return self.table == other.table

    def to_json(self) -> dict:
        return {"order": self.n, "labels": list(self.labels),
                "table": [[x + 1 for x in row] for row in self.table]}

    @classmethod
    def from_json(cls, data) -> "FiniteGroup":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            table = data["table"]
        except (KeyError, TypeError):
            raise InputError("group JSON needs a 'table' field") from None
        if "order" in data and int(data["order"]) != len(table):
            raise InputError(f"order {data['order']} does not match a {len(table)}-row table")
        return validate_group(table, labels=data.get("labels"), one_based=True)


def validate_group(table, labels=None, one_based: bool = False) -> FiniteGroup:
    """Check every group axiom exhaustively; index 0 (1-based: 1) must be the identity.

    Order of checks: shape, identity row/column, Latin property, inverses,
    associativity.
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InputError("Cayley table must be a non-empty square matrix")
    off = 1 if one_based else 0
    try:
        t = tuple(tuple(int(x) - off for x in row) for row in table)
    except (TypeError, ValueError):
        raise InputError("Cayley table entries must be integers") from None
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise InputError(f"entry ({i + off},{j + off}) = {x + off} out of range",
                                 witness=[i + 1, j + 1])
    for i in range(n):
        if t[0][i] != i or t[i][0] != i:
            raise NoIdentity("first element is not a two-sided identity", witness=[i + 1])
    for i in range(n):
        if len(set(t[i])) != n:
            raise NotLatin(f"row {i + 1} is not a permutation", witness={"row": i + 1})
        col = [t[r][i] for r in range(n)]
        if len(set(col)) != n:
            raise NotLatin(f"column {i + 1} is not a permutation", witness={"column": i + 1})
    for i in range(n):
        j = t[i].index(0)
        if t[j][i] != 0:
            raise NoInverse(f"element {i + 1} has no two-sided inverse", witness=[i + 1])
    flat = int_buffer(x for row in t for x in row)
    w = assoc_witness(flat, n)
    if w is not None:
        raise NotAssociative("(gh)k != g(hk)", witness=[x + 1 for x in w])
    labs = tuple(labels) if labels is not None else tuple(f"g{i + 1}" for i in range(n))
    if len(labs) != n:
        raise InputError(f"{len(labs)} labels for a group of order {n}")
    return FiniteGroup(t, labs, flat)


def group_from_permutations(gens, labels=None) -> FiniteGroup:
    """Closure of permutations (tuples on ``range(d)``); identity first, then BFS order."""
    gens = [tuple(g) for g in gens]
    d = len(gens[0])
    ident = tuple(range(d))
    elems = [ident]
    seen = {ident: 0}
    frontier = 0
    while frontier < len(elems):
        x = elems[frontier]
        frontier += 1
        for g in gens:
            y = tuple(g[x[i]] for i in range(d))  # apply x then g
            if y not in seen:
                seen[y] = len(elems)
                elems.append(y)
    table = [[seen[tuple(b[a[i]] for i in range(d))] for b in elems] for a in elems]
    return validate_group(table, labels)


def group_algebra(G: FiniteGroup) -> FinAlgebra:
    n = G.n
    constants = [(i, j, G.table[i][j], 1) for i in range(n) for j in range(n)]
    unit = [1] + [0] * (n - 1)
    return build_algebra(constants, unit, basis=list(G.labels), dim=n,
                         name="group algebra", check=False)


def regular_character(G: FiniteGroup) -> Functional:
    return Functional((G.n,) + (0,) * (G.n - 1))


@dataclass(frozen=True)
class KCharacterData:
    k: int
    normalized: bool
    values: dict  # {(i_1, ..., i_k) 0-based: value}
    order: int

    def as_nested(self):
        """Nested lists ``T[i][j]...`` of the table."""
        n = self.order

        def build(prefix):
            if len(prefix) == self.k:
                return self.values[prefix]
            return [build(prefix + (i,)) for i in range(n)]

        return build(())

    def to_json(self) -> dict:
        return {"k": self.k, "normalized": self.normalized, "order": self.order,
                "values": _nested_json(self.as_nested())}


def _nested_json(x):
    if isinstance(x, list):
        return [_nested_json(y) for y in x]
    return format_scalar(x)


def _nested_parse(x, depth):
    if depth == 0:
        if isinstance(x, list):
            raise InputError("character table nested too deeply")
        return parse_scalar(x) if isinstance(x, str) else Fraction(x)
    if not isinstance(x, list):
        raise InputError("character table nested too shallowly")
    return [_nested_parse(y, depth - 1) for y in x]


def k_character(G: FiniteGroup, k: int, normalized: bool = True,
                evaluator: PhiEvaluator | None = None) -> KCharacterData:
    """``Phi_k(f)`` on all k-tuples of group elements, ``f = chi/n`` or ``f = chi``."""
    if k < 1:
        raise InputError("k must be >= 1")
    if evaluator is None:
        f = regular_character(G)
        if normalized:
            f = f.scale(Fraction(1, G.n))
        evaluator = PhiEvaluator(group_algebra(G), f)
    return KCharacterData(k, normalized, dict(evaluator.table(k)), G.n)


def kchars_from_json(data):
    """``{"order": n, "normalized": true, "phi1": [...], "phi2": [[...]], "phi3": [[[...]]]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["order"])
        raw = [data["phi1"], data["phi2"], data["phi3"]]
    except (KeyError, TypeError, ValueError):
        raise InputError("k-character JSON needs order, phi1, phi2, phi3") from None
    normalized = bool(data.get("normalized", True))
    out = []
    for k, nested in enumerate(raw, start=1):
        tab = _nested_parse(nested, k)
        values = {}
        for idx in iproduct(range(n), repeat=k):
            x = tab
            try:
                for i in idx:
                    x = x[i]
            except IndexError:
                raise InputError(f"phi{k} table is not {n}^{k}") from None
            values[idx] = x
        out.append(KCharacterData(k, normalized, values, n))
    return out


def kchars_to_json(k1: KCharacterData, k2: KCharacterData, k3: KCharacterData) -> dict:
    return {"order": k1.order, "normalized": k1.normalized,
            "phi1": _nested_json(k1.as_nested()), "phi2": _nested_json(k2.as_nested()),
            "phi3": _nested_json(k3.as_nested())}


# group determinants -----------------------------------------------------------

def _x(i: int) -> str:
    return f"x{i + 1}"


def _x_vars(n: int):
    return tuple(_x(i) for i in range(n))


def group_determinant(G: FiniteGroup) -> SparsePoly:
    """``det M_G`` with ``m_ij = x_k`` for ``g_i g_j^{-1} = g_k``.

    Laplace expansion along rows, memoized over the set of unused columns.
    """
    n = G.n
    if n > 8:
        raise OrderTooLarge(f"group determinant limited to order <= 8, got {n}")
    names = _x_vars(n)
    xs = [SparsePoly.var(nm).with_vars(names) for nm in names]
    inv = [G.inv(j) for j in range(n)]
    M = [[G.table[i][inv[j]] for j in range(n)] for i in range(n)]
    memo = {0: SparsePoly.one().with_vars(names)}

    def minor(mask: int) -> SparsePoly:
        # rows n - popcount(mask) .. n-1 against the columns in mask
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = n - bin(mask).count("1")
        total = SparsePoly.zero().with_vars(names)
        pos = 0
        for j in range(n):
            if mask >> j & 1:
                term = xs[M[row][j]] * minor(mask & ~(1 << j))
                total = total - term if pos % 2 else total + term
                pos += 1
        memo[mask] = total
        return total

    D = minor((1 << n) - 1)
    lead = D.coefficient({names[0]: n})
    if lead == -1:
        D = -D
    return D


def _powers_of_generic(G: FiniteGroup, k_max: int):
    """Coefficient vectors of ``a^k`` for ``a = sum x_i g_i``, k = 1..k_max."""
    n = G.n
    names = _x_vars(n)
    xs = [SparsePoly.var(nm).with_vars(names) for nm in names]
    zero = SparsePoly.zero().with_vars(names)
    out = [list(xs)]
    for _ in range(1, k_max):
        prev = out[-1]
        nxt = [zero] * n
        for i in range(n):
            if prev[i].is_zero():
                continue
            for j in range(n):
                r = G.table[i][j]
                nxt[r] = nxt[r] + prev[i] * xs[j]
        out.append(nxt)
    return out


def _fn_at(F: SparsePoly, s_values) -> SparsePoly:
    return F.subs({s_var(k + 1): s for k, s in enumerate(s_values)})


def phi_group_determinant(G: FiniteGroup, raw: bool = False) -> SparsePoly:
    """``(1/n!) F_n`` at ``s_k = chi(a^k)`` for the regular character ``chi``.

    ``raw=True`` omits the ``1/n!``, giving ``Phi_n(chi)(a, ..., a)`` itself,
    which is ``n!`` times the determinant.
    """
    n = G.n
    if n > 6:
        raise OrderTooLarge(f"Phi-route determinant limited to order <= 6, got {n}")
    powers = _powers_of_generic(G, n)
    s = [p[0].scale(n) for p in powers]
    val = _fn_at(fn_polynomial(n), s)
    return val if raw else val.scale(Fraction(1, factorial(n)))


@dataclass(frozen=True)
class CharacterTable:
    cyclotomic_order: int | None
    irreducibles: tuple  # of (dim, values per element)

    @classmethod
    def from_json(cls, data) -> "CharacterTable":
        if isinstance(data, str):
            data = json.loads(data)
        N = data.get("cyclotomic_order")
        N = int(N) if N not in (None, 1) else None
        irr = []
        try:
            for rec in data["irreducibles"]:
                vals = tuple(parse_scalar(v, N) if isinstance(v, str) else Fraction(v)
                             for v in rec["values"])
                irr.append((int(rec["dim"]), vals))
        except (KeyError, TypeError):
            raise InputError("character table needs irreducibles with dim and values") from None
        return cls(N, tuple(irr))

    def to_json(self) -> dict:
        return {"cyclotomic_order": self.cyclotomic_order or 1,
                "irreducibles": [{"dim": d, "values": [format_scalar(v) for v in vals]}
                                 for d, vals in self.irreducibles]}


def _conj(x):
    return x.conjugate() if isinstance(x, Cyclotomic) else x


def check_orthogonality(G: FiniteGroup, table: CharacterTable) -> bool:
    """Row orthogonality: ``sum_g chi_i(g) conj(chi_j(g)) = n [i = j]``."""
    n = G.n
    for a, (_, va) in enumerate(table.irreducibles):
        for b, (_, vb) in enumerate(table.irreducibles):
            s = sum((va[g] * _conj(vb[g]) for g in range(n)), ZERO)
            if s != (n if a == b else 0):
                return False
    return True


def verify_factorization(G: FiniteGroup, chartable: CharacterTable) -> bool:
    """``prod_i Det_i^{n_i} == D_G`` with ``Det_i = (1/n_i!) F_{n_i}(chi_i(a^k))``."""
    n = G.n
    dims = [d for d, _ in chartable.irreducibles]
    if sum(d * d for d in dims) != n:
        raise BadCharacterTable(f"sum of squared dimensions {sum(d * d for d in dims)} != {n}",
                                witness=dims)
    if any(len(vals) != n for _, vals in chartable.irreducibles):
        raise BadCharacterTable("each character needs one value per element")
    powers = _powers_of_generic(G, max(dims))
    total = SparsePoly.one()
    for d, vals in chartable.irreducibles:
        s = []
        for k in range(d):
            acc = SparsePoly.zero()
            for g in range(n):
                if vals[g] != 0 and not powers[k][g].is_zero():
                    acc = acc + powers[k][g].scale(vals[g])
            s.append(acc)
        factor = _fn_at(fn_polynomial(d), s).scale(Fraction(1, factorial(d)))
        total = total * factor ** d
    return total == group_determinant(G)


# recovery from Phi_1, Phi_2, Phi_3 --------------------------------------------

@dataclass(frozen=True)
class PairSetTable:
    """``sets[i][j] = {g_i g_j, g_j g_i}`` as a frozenset of 0-based indices."""
    sets: tuple

    @property
    def n(self) -> int:
        return len(self.sets)

    def to_json(self):
        return [[sorted(x + 1 for x in s) for s in row] for row in self.sets]

    def __eq__(self, other):
        return isinstance(other, PairSetTable) and self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)


def pair_sets(G: FiniteGroup) -> PairSetTable:
    n = G.n
    return PairSetTable(tuple(tuple(frozenset((G.table[i][j], G.table[j][i]))
                                    for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class RecoveredData:
    identity: int
    inverses: tuple            # inverses[i] = index of g_i^{-1}
    pair_sets: PairSetTable
    jordan: tuple              # c[i][j][k] in the original labelling


def recover_group_data(k1: KCharacterData, k2: KCharacterData,
                       k3: KCharacterData) -> RecoveredData:
    """Identity, inverses and pair sets from normalized Phi_1, Phi_2, Phi_3.

    The Jordan constants come from the full identity relating Phi_1..Phi_3 to
    ``R_ij = f(g_i g_j)``.  Indices in witnesses are 1-based.
    """
    if (k1.k, k2.k, k3.k) != (1, 2, 3):
        raise InputError("need Phi_1, Phi_2, Phi_3 tables in that order")
    if not (k1.normalized and k2.normalized and k3.normalized):
        raise InputError("recovery expects normalized data (f = chi/n)")
    n = k1.order
    f = [k1.values[(i,)] for i in range(n)]
    ones = [i for i in range(n) if f[i] == 1]
    if len(ones) != 1:
        raise MalformedData("Phi_1 must equal 1 at exactly one element",
                            witness={"phi1_ones": [i + 1 for i in ones]})
    e = ones[0]
    bad = [i for i in range(n) if i != e and f[i] != 0]
    if bad:
        raise MalformedData("Phi_1 must vanish away from the identity",
                            witness={"nonzero": [i + 1 for i in bad]})
    phi2 = [[k2.values[(i, j)] for j in range(n)] for i in range(n)]
    inverses = []
    for i in range(n):
        if i == e:
            inverses.append(e)
            continue
        partners = [j for j in range(n) if phi2[i][j] == -1]
        if len(partners) != 1:
            raise MalformedData(f"element {i + 1} has {len(partners)} inverse candidates",
                                witness={"element": i + 1, "candidates": [j + 1 for j in partners]})
        inverses.append(partners[0])
    for i in range(n):
        if inverses[inverses[i]] != i:
            raise MalformedData("inverse pairing is not symmetric", witness=[i + 1])
    phi3 = [[[k3.values[(i, j, k)] for k in range(n)] for j in range(n)] for i in range(n)]
    try:
        jordan = recover_jordan(n, f, phi2, phi3).c
    except Degenerate as exc:
        raise MalformedData("pairing reconstructed from Phi_2 is singular") from exc
    sets = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = jordan[i][j]
            if any(c not in (0, HALF, 1) for c in vec):
                raise MalformedData("Jordan constant outside {0, 1/2, 1}",
                                    witness={"pair": [i + 1, j + 1],
                                             "row": [format_scalar(c) for c in vec]})
            if sum(vec, ZERO) != 1:
                raise MalformedData("Jordan row does not sum to 1",
                                    witness={"pair": [i + 1, j + 1]})
            support = frozenset(k for k, c in enumerate(vec) if c != 0)
            if len(support) == 1 and vec[next(iter(support))] != 1:
                raise MalformedData("malformed Jordan row", witness={"pair": [i + 1, j + 1]})
            row.append(support)
        sets.append(tuple(row))
    return RecoveredData(e, tuple(inverses), PairSetTable(tuple(sets)), jordan)


# Mansfield reconstruction -----------------------------------------------------

def _relabel_identity_first(ps: PairSetTable, e: int):
    n = ps.n
    order = [e] + [i for i in range(n) if i != e]
    pos = {old: new for new, old in enumerate(order)}
    sets = tuple(tuple(frozenset(pos[x] for x in ps.sets[order[i]][order[j]])
                       for j in range(n)) for i in range(n))
    return PairSetTable(sets), order


def _check_pair_sets(ps: PairSetTable):
    n = ps.n
    for i in range(n):
        if len(ps.sets[i]) != n:
            raise InputError("pair-set table must be square")
        for j in range(n):
            s = ps.sets[i][j]
            if not 1 <= len(s) <= 2 or any(not 0 <= x < n for x in s):
                raise Inconsistent("pair set must hold one or two elements",
                                   witness=[i + 1, j + 1])
            if s != ps.sets[j][i]:
                raise Inconsistent("pair-set table is not symmetric", witness=[i + 1, j + 1])
        if len(ps.sets[i][i]) != 1:
            raise Inconsistent("diagonal pair sets must be singletons", witness=[i + 1, i + 1])


def _identity_of(ps: PairSetTable):
    n = ps.n
    for e in range(n):
        if all(ps.sets[e][j] == frozenset((j,)) for j in range(n)):
            return e
    return None


def mansfield_reconstruct(ps: PairSetTable, labels=None) -> list:
    """All group tables compatible with the pair sets, deduplicated.

    Each 2-element set ``{g_i g_j, g_j g_i}`` with ``i < j`` is an orientation
    choice; choosing ``g_i g_j`` fixes ``g_j g_i`` to the other element.  Choices
    are made most-constrained first and associativity is propagated after
    each one.  The identity (the element whose pair sets are all singletons
    ``{g_j}``) is moved to index 0, and the returned tables keep that
    labelling (element order otherwise unchanged).
    """
    _check_pair_sets(ps)
    n = ps.n
    e = _identity_of(ps)
    if e is None:
        raise Inconsistent("no element acts as an identity in the pair sets")
    work, order = _relabel_identity_first(ps, e)
    size = n * n
    table = int_buffer([-1] * size)
    opt_a = int_buffer([-1] * size)
    opt_b = int_buffer([-1] * size)
    for i in range(n):
        for j in range(n):
            s = sorted(work.sets[i][j])
            c = i * n + j
            if len(s) == 1:
                table[c] = s[0]
            else:
                opt_a[c], opt_b[c] = s
    results: dict = {}
    stats = {"nodes": 0}

    def pick(t):
        best, best_score = None, -1
        for i in range(n):
            for j in range(i + 1, n):
                if t[i * n + j] >= 0:
                    continue
                score = sum(1 for k in range(n) if t[i * n + k] >= 0) + \
                    sum(1 for k in range(n) if t[k * n + j] >= 0)
                if score > best_score:
                    best, best_score = (i, j), score
        return best

    def search(t):
        stats["nodes"] += 1
        if not propagate(t, opt_a, opt_b, n):
            return
        cell = pick(t)
        if cell is None:
            rows = [list(t[r * n:(r + 1) * n]) for r in range(n)]
            try:
                validate_group(rows)
            except (InputError, NoIdentity, NotLatin, NoInverse, NotAssociative):
                return
            results.setdefault(tuple(map(tuple, rows)), rows)
            return
        i, j = cell
        c = i * n + j
        for v, w in ((opt_a[c], opt_b[c]), (opt_b[c], opt_a[c])):
            child = int_buffer(t)
            child[c] = v
            child[j * n + i] = w
            search(child)

    search(table)
    if not results:
        raise Inconsistent("no associative completion of the pair sets exists",
                           witness={"nodes": stats["nodes"]})
    # results use the search labelling, in which the identity is index 0
    labs = [labels[k] for k in order] if labels else None
    out = [validate_group(results[key], labs) for key in sorted(results)]
    return out


# isomorphism ------------------------------------------------------------------

def _generators(G: FiniteGroup):
    """Greedy generating set: repeatedly add an element of maximal order outside the span."""
    n = G.n
    span = {0}
    gens = []
    by_order = sorted(range(1, n), key=lambda g: (-G.element_order(g), g))
    while len(span) < n:
        g = next(x for x in by_order if x not in span)
        gens.append(g)
        span = _closure(G, gens)
    return gens


def _closure(G: FiniteGroup, gens):
    span = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.table[x][g]
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def _extend(G: FiniteGroup, H: FiniteGroup, gens, images):
    """Unique candidate map determined by generator images, or None on conflict."""
    phi = {0: 0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g, h in zip(gens, images):
            y = G.table[x][g]
            v = H.table[phi[x]][h]
            if y in phi:
                if phi[y] != v:
                    return None
            else:
                phi[y] = v
                frontier.append(y)
    if len(set(phi.values())) != G.n:
        return None
    return [phi[i] for i in range(G.n)]


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.n != H.n:
        return False
    if G.n > 12:
        raise OrderTooLarge("isomorphism search limited to order <= 12")
    og = [G.element_order(i) for i in range(G.n)]
    oh = [H.element_order(i) for i in range(H.n)]
    if sorted(og) != sorted(oh):
        return False
    gens = _generators(G)
    candidates = [[h for h in range(H.n) if oh[h] == og[g]] for g in gens]

    def go(k, chosen):
        if k == len(gens):
            phi = _extend(G, H, gens, chosen)
            return phi is not None and is_homomorphism(G.flat(), H.flat(), phi, G.n)
        for h in candidates[k]:
            if h in chosen:
                continue
            if go(k + 1, chosen + [h]):
                return True
        return False

    return go(0, [])


def conjugation_invariant(G: FiniteGroup, kc: KCharacterData) -> bool:
    """``Phi_k(g x_1 g^-1, ...) == Phi_k(x_1, ...)`` for every g and tuple."""
    n = G.n
    for g in range(n):
        gi = G.inv(g)
        conj = [G.table[G.table[g][x]][gi] for x in range(n)]
        for idx, v in kc.values.items():
            if kc.values[tuple(conj[i] for i in idx)] != v:
                return False
    return True


def opposite_tables(A: FiniteGroup, B: FiniteGroup) -> bool:
    n = A.n
    return all(A.table[i][j] == B.table[j][i] for i in range(n) for j in range(n))


def all_permutation_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Brute-force oracle for small orders: try every bijection fixing the identity."""
    n = G.n
    if n != H.n:
        return False
    for perm in permutations(range(1, n)):
        phi = [0] + list(perm)
        if is_homomorphism(G.flat(), H.flat(), phi, n):
            return True
    return False
