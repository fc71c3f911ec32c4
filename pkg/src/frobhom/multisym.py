"""Multi-symmetric polynomials in n points of m-space.

Coordinates are the variables ``x<j>_<k>`` (coordinate j of point k, both
1-based).  Generators of the polynomial ring ``L`` are ``z[i1,...,im]``, one
per multi-index omega, graded by ``|omega| = i1 + ... + im``.  The map
``eval_star`` sends ``z[omega]`` to the Newton polynomial
``p_omega = sum_k x1_k^i1 ... xm_k^im``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import comb

from .errors import InputError, NoSolution, NotMultiSymmetric, WeightZeroIndex
from .linalg import SingularMatrix, rref, solve
from .poly import SparsePoly

__all__ = [
    "x_name",
    "z_name",
    "parse_z",
    "newton_polynomial",
    "is_multisymmetric",
    "eval_star",
    "frobenius_type_polynomial",
    "syzygy_generator_check",
    "express",
    "express_system",
    "orbit_count",
    "multisymmetric_dimension",
    "embedding_dimension",
    "multi_indices",
    "symmetrize",
]

_X = re.compile(r"^x(\d+)_(\d+)$")
_Z = re.compile(r"^z\[(\d+(?:,\d+)*)\]$")


def x_name(j: int, k: int) -> str:
    return f"x{j}_{k}"


def z_name(omega) -> str:
    return "z[" + ",".join(str(i) for i in omega) + "]"


def parse_z(name: str) -> tuple:
    m = _Z.match(name)
    if not m:
        raise InputError(f"{name!r} is not a z[...] variable")
    return tuple(int(x) for x in m.group(1).split(","))


def _parse_x(name: str):
    m = _X.match(name)
    if not m:
        raise InputError(f"{name!r} is not an x<j>_<k> variable")
    return int(m.group(1)), int(m.group(2))


def newton_polynomial(omega, n: int, m: int) -> SparsePoly:
    omega = tuple(omega)
    if len(omega) != m:
        raise InputError(f"multi-index {omega} does not have length {m}")
    total = SparsePoly.zero()
    for k in range(1, n + 1):
        total = total + SparsePoly.monomial({x_name(j + 1, k): e for j, e in enumerate(omega) if e})
    return total


def _point_map(perm, n: int, m: int) -> dict:
    # perm[k-1] is the new label of point k
    return {x_name(j, k): x_name(j, perm[k - 1]) for j in range(1, m + 1) for k in range(1, n + 1)}


def _shape(p: SparsePoly, n: int | None, m: int | None):
    js, ks = [0], [0]
    for v in p.used_vars():
        j, k = _parse_x(v)
        js.append(j)
        ks.append(k)
    return (max(ks) if n is None else n), (max(js) if m is None else m)


def is_multisymmetric(p: SparsePoly, n: int | None = None, m: int | None = None) -> bool:
    """Fixed by the transposition of points 1, 2 and by the n-cycle of points."""
    n, m = _shape(p, n, m)
    if n <= 1:
        return True
    swap = [2, 1] + list(range(3, n + 1))
    cycle = list(range(2, n + 1)) + [1]
    return all(p.rename(_point_map(g, n, m)) == p for g in (swap, cycle))


def symmetrize(powers: dict, n: int, m: int) -> SparsePoly:
    """Orbit sum of a monomial under permutations of the points (each orbit element once)."""
    exps = _point_vectors(powers, n, m)
    seen = set()
    total = SparsePoly.zero()
    for perm in permutations(range(n)):
        key = tuple(exps[perm[k]] for k in range(n))
        if key in seen:
            continue
        seen.add(key)
        total = total + SparsePoly.monomial(_from_point_vectors(key, m))
    return total


def _point_vectors(powers: dict, n: int, m: int) -> tuple:
    vecs = [[0] * m for _ in range(n)]
    for name, e in powers.items():
        j, k = _parse_x(name)
        if j > m or k > n:
            raise InputError(f"variable {name} outside m={m}, n={n}")
        vecs[k - 1][j - 1] = e
    return tuple(tuple(v) for v in vecs)


def _from_point_vectors(vecs, m: int) -> dict:
    return {x_name(j + 1, k + 1): e for k, v in enumerate(vecs) for j, e in enumerate(v) if e}


def eval_star(q: SparsePoly, n: int, m: int) -> SparsePoly:
    """Substitute ``z[omega] -> p_omega``."""
    mapping = {}
    for v in q.used_vars():
        omega = parse_z(v)
        if len(omega) != m:
            raise InputError(f"{v} does not have {m} indices")
        mapping[v] = newton_polynomial(omega, n, m)
    return q.subs(mapping)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _frob(omegas: tuple) -> SparsePoly:
    first, rest = omegas[0], omegas[1:]
    if not rest:
        return SparsePoly.var(z_name(first))
    total = SparsePoly.var(z_name(first)) * _frob(rest)
    for i in range(len(rest)):
        merged = rest[:i] + (_add(first, rest[i]),) + rest[i + 1:]
        total = total - _frob(merged)
    return total


def frobenius_type_polynomial(omegas) -> SparsePoly:
    """``F_{w1..w(j+1)} = z_{w1} F_{w2..} - sum_i F_{w2, .., w1 + w(i), ..}``."""
    omegas = tuple(tuple(w) for w in omegas)
    if not omegas:
        raise InputError("need at least one multi-index")
    if len({len(w) for w in omegas}) != 1:
        raise InputError("multi-indices must share a length")
    return _frob(omegas)


def syzygy_generator_check(omegas, n: int, m: int) -> bool:
    omegas = [tuple(w) for w in omegas]
    if len(omegas) != n + 1:
        raise InputError(f"need n+1 = {n + 1} multi-indices, got {len(omegas)}")
    for w in omegas:
        if len(w) != m:
            raise InputError(f"multi-index {w} does not have length {m}")
        if sum(w) == 0:
            raise WeightZeroIndex(f"multi-index {w} has weight zero", witness=list(w))
    return eval_star(frobenius_type_polynomial(omegas), n, m).is_zero()


def multi_indices(m: int, lo: int, hi: int) -> list:
    """Multi-indices of length m with ``lo <= |omega| <= hi``, by weight then reverse lex."""
    out = []
    for w in range(lo, hi + 1):
        level = [om for om in product(range(w + 1), repeat=m) if sum(om) == w]
        out.extend(sorted(level, reverse=True))
    return out


def embedding_dimension(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise InputError("n and m must be >= 1")
    return comb(n + m, n) - 1


def _z_monomials(d: int, n: int, m: int) -> list:
    """Multisets of generators z_omega (1 <= |omega| <= n) of total weight d.

    Sorted by number of factors, then lexicographically; each is a tuple of
    multi-indices.
    """
    gens = multi_indices(m, 1, n)
    out = []

    def go(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(gens)):
            w = sum(gens[i])
            if w <= remaining:
                go(i, remaining - w, acc + [gens[i]])

    go(0, d, [])
    return sorted(out, key=lambda mono: (len(mono), mono))


def _z_monomial_poly(mono) -> SparsePoly:
    powers: dict = {}
    for om in mono:
        powers[z_name(om)] = powers.get(z_name(om), 0) + 1
    return SparsePoly.monomial(powers)


def _orbits(d: int, n: int, m: int) -> list:
    """Orbit representatives of degree-d x-monomials: sorted tuples of n point vectors."""
    vecs = [v for v in product(range(d + 1), repeat=m) if sum(v) <= d]
    out = []
    for combo in combinations_with_replacement(sorted(vecs, reverse=True), n):
        if sum(sum(v) for v in combo) == d:
            out.append(tuple(combo))
    return sorted(out, reverse=True)


def orbit_count(d: int, n: int, m: int) -> int:
    """Dimension of degree-d multi-symmetric polynomials (number of orbit sums)."""
    return len(_orbits(d, n, m))


def multisymmetric_dimension(d: int, n: int, m: int) -> int:
    """Same dimension computed by symmetrizing every degree-d monomial and
    taking the rank of the resulting orbit sums."""
    vecs = list(product(range(d + 1), repeat=m))
    sums = set()
    for combo in product(vecs, repeat=n):
        if sum(sum(v) for v in combo) != d:
            continue
        key = tuple(sorted(combo, reverse=True))
        sums.add(key)
    polys = [symmetrize(_from_point_vectors(k, m), n, m) for k in sorted(sums)]
    return _rank_of_polys(polys)


def _rank_of_polys(polys) -> int:
    keys: dict = {}
    rows = []
    for p in polys:
        row = {}
        for powers, c in p.items():
            key = tuple(sorted(powers.items()))
            keys.setdefault(key, len(keys))
            row[keys[key]] = c
        rows.append(row)
    if not rows:
        return 0
    mat = [[r.get(i, Fraction(0)) for i in range(len(keys))] for r in rows]
    return len(rref(mat)[1])


def _orbit_coordinates(p: SparsePoly, n: int, m: int, index: dict) -> dict:
    """Coefficients of p on orbit sums, read at the sorted representative."""
    out = {}
    for powers, c in p.items():
        vecs = _point_vectors(powers, n, m)
        if list(vecs) == sorted(vecs, reverse=True):
            out[index[vecs]] = c
    return out


def express_system(d: int, n: int, m: int):
    """The degree-d linear system: returns (matrix, z-monomials, orbit representatives).

    Column c holds the orbit-sum coordinates of ``eval_star`` of the c-th
    z-monomial; rows are indexed by orbit representatives.
    """
    monos = _z_monomials(d, n, m)
    orbits = _orbits(d, n, m)
    index = {o: i for i, o in enumerate(orbits)}
    cols = [_orbit_coordinates(eval_star(_z_monomial_poly(mono), n, m), n, m, index)
            for mono in monos]
    mat = [[col.get(r, Fraction(0)) for col in cols] for r in range(len(orbits))]
    return mat, monos, orbits


def system_rank(d: int, n: int, m: int) -> tuple:
    """(rank, number of z-monomials, number of orbits) in degree d."""
    mat, monos, orbits = express_system(d, n, m)
    r = len(rref(mat)[1]) if mat and monos else 0
    return r, len(monos), len(orbits)


def express(p: SparsePoly, n: int, m: int) -> SparsePoly:
    """A polynomial q in the z[omega] with ``|omega| <= n`` and ``eval_star(q) == p``.

    Each homogeneous part is solved separately.  When the system is
    underdetermined the basic solution is returned: pivots are taken in the
    column order of the z-monomials (fewest factors first, then lex) and the
    free columns are set to zero.
    """
    if not is_multisymmetric(p, n, m):
        raise NotMultiSymmetric("polynomial is not invariant under permuting the points")
    _shape(p, n, m)  # validates variable names
    result = SparsePoly.const(p.constant_term())
    for d, part in sorted(p.homogeneous_parts().items()):
        if d == 0:
            continue
        mat, monos, orbits = express_system(d, n, m)
        index = {o: i for i, o in enumerate(orbits)}
        coords = _orbit_coordinates(part, n, m, index)
        rhs = [coords.get(r, Fraction(0)) for r in range(len(orbits))]
        try:
            x = solve(mat, rhs, unique=False)
        except SingularMatrix:
            raise NoSolution(f"degree {d} part is not in the image", witness={"degree": d}) from None
        for c, mono in zip(x, monos):
            if c != 0:
                result = result + _z_monomial_poly(mono).scale(c)
    if eval_star(result, n, m) != p:
        raise NoSolution("solution failed verification")
    return result
