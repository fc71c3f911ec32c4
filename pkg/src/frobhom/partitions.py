"""Set partitions of ``{1..n}`` and formal integer combinations of them.

``chi(n)`` is the sum over partitions ``pi`` of ``sign(pi) * count(pi) * pi``,
where ``count(pi)`` is the number of permutations whose orbits are the blocks
of ``pi`` and ``sign(pi)`` their common sign.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

from .errors import InputError, NotSurjective
from .kernels import orbit_labels

__all__ = [
    "SetPartition",
    "SetPartitionVector",
    "all_partitions",
    "bell",
    "chi",
    "chi_closed_form",
    "partition_product",
    "pullback",
    "amalgamated_unions",
    "verify_lemma10",
    "functional_of_partition",
    "functional_of_vector",
]


class SetPartition(tuple):
    """Canonical partition: tuple of sorted blocks (tuples), ordered by minimum."""

    __slots__ = ()

    def __new__(cls, blocks, n: int | None = None):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))
        self = super().__new__(cls, canon)
        ground = [x for b in canon for x in b]
        size = len(ground)
        if sorted(ground) != list(range(1, size + 1)) or (n is not None and n != size):
            raise InputError(f"blocks {blocks} do not partition {{1..{n if n is not None else size}}}")
        return self

    @property
    def n(self) -> int:
        return sum(len(b) for b in self)

    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        return cls([(i,) for i in range(1, n + 1)])

    @classmethod
    def full(cls, n: int) -> "SetPartition":
        return cls([tuple(range(1, n + 1))])

    def __repr__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self) + "}"


class SetPartitionVector(dict):
    """``{SetPartition: int}`` with zero coefficients dropped."""

    def __init__(self, items=(), n: int | None = None):
        super().__init__()
        self.n = n
        for p, c in dict(items).items():
            self.add(p, c)

    def add(self, p: SetPartition, c: int):
        if self.n is None:
            self.n = p.n
        elif p.n != self.n:
            raise InputError(f"partition of {p.n} points added to a vector on {self.n}")
        v = self.get(p, 0) + c
        if v:
            self[p] = v
        else:
            self.pop(p, None)

    def __add__(self, other: "SetPartitionVector") -> "SetPartitionVector":
        out = SetPartitionVector(self, self.n if self.n is not None else other.n)
        for p, c in other.items():
            out.add(p, c)
        return out

    def scale(self, k: int) -> "SetPartitionVector":
        return SetPartitionVector({p: k * c for p, c in self.items()}, self.n)

    def sorted_items(self):
        return sorted(self.items(), key=lambda pc: (len(pc[0]) * -1, pc[0]))


def _set_partitions(elems):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for sub in _set_partitions(rest):
        yield [(first,)] + sub
        for i in range(len(sub)):
            yield sub[:i] + [(first,) + sub[i]] + sub[i + 1:]


def all_partitions(n: int) -> list:
    """All partitions of ``{1..n}``, sorted (finest first, then lexicographically)."""
    if not 1 <= n <= 8:
        raise InputError("all_partitions supports 1 <= n <= 8")
    parts = [SetPartition(p) for p in _set_partitions(list(range(1, n + 1)))]
    return sorted(parts, key=lambda p: (-len(p), p))


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


@lru_cache(maxsize=None)
def _chi_cached(n: int) -> tuple:
    counts: dict = {}
    signs: dict = {}
    for perm in permutations(range(n)):
        labels = orbit_labels(perm)
        blocks: dict = {}
        for i, lab in enumerate(labels):
            blocks.setdefault(lab, []).append(i + 1)
        pi = SetPartition(blocks.values())
        sign = (-1) ** (n - len(blocks))
        if signs.setdefault(pi, sign) != sign:
            raise AssertionError(f"permutations generating {pi!r} disagree in sign")
        counts[pi] = counts.get(pi, 0) + 1
    return tuple((pi, signs[pi] * counts[pi]) for pi in counts)


def chi(n: int) -> SetPartitionVector:
    """``chi(n)`` by enumerating S_n and grouping permutations by orbit partition."""
    if not 1 <= n <= 8:
        raise InputError("chi supports 1 <= n <= 8")
    return SetPartitionVector(dict(_chi_cached(n)), n)


def chi_closed_form(n: int) -> SetPartitionVector:
    """Cross-check: coefficient ``prod_blocks (-1)^(b-1) (b-1)!``."""
    out = SetPartitionVector(n=n)
    for pi in all_partitions(n):
        c = 1
        for b in pi:
            c *= (-1) ** (len(b) - 1) * factorial(len(b) - 1)
        out.add(pi, c)
    return out


def partition_product(v1: SetPartitionVector, v2: SetPartitionVector) -> SetPartitionVector:
    """Bilinear extension of concatenation; blocks of the second vector are shifted."""
    shift = v1.n
    out = SetPartitionVector(n=v1.n + v2.n)
    for p1, c1 in v1.items():
        for p2, c2 in v2.items():
            blocks = list(p1) + [tuple(x + shift for x in b) for b in p2]
            out.add(SetPartition(blocks), c1 * c2)
    return out


def pullback(g, v: SetPartitionVector) -> SetPartitionVector:
    """Preimage partitions along ``g`` (1-based list: ``g[x-1]`` is the image of x)."""
    ny = v.n
    if set(g) != set(range(1, ny + 1)):
        raise NotSurjective(f"map {list(g)} is not onto {{1..{ny}}}", witness=list(g))
    out = SetPartitionVector(n=len(g))
    for p, c in v.items():
        where = {}
        for bi, b in enumerate(p):
            for y in b:
                where[y] = bi
        blocks: dict = {}
        for x, y in enumerate(g, start=1):
            blocks.setdefault(where[y], []).append(x)
        out.add(SetPartition(blocks.values()), c)
    return out


def amalgamated_unions(nx: int, ny: int) -> list:
    """One quotient map ``q: X+Y -> Z`` per amalgamated union of X and Y.

    Unions correspond to partial injections X -> Y.  X maps to 1..nx; an
    identified y maps to its partner, an unmatched y gets a fresh label.
    The disjoint union (empty matching) comes first.
    """
    if nx < 1 or ny < 1 or nx + ny > 8:
        raise InputError("amalgamated_unions needs nx, ny >= 1 and nx + ny <= 8")
    out = []
    for k in range(0, min(nx, ny) + 1):
        for xs in combinations(range(1, nx + 1), k):
            for ys in permutations(range(1, ny + 1), k):
                partner = dict(zip(ys, xs))
                q = list(range(1, nx + 1))
                nxt = nx
                for y in range(1, ny + 1):
                    if y in partner:
                        q.append(partner[y])
                    else:
                        nxt += 1
                        q.append(nxt)
                out.append(tuple(q))
    return out


def verify_lemma10(nx: int, ny: int) -> bool:
    """``sum_q q^* chi(Z) == chi(X) chi(Y)`` in the partition group of X+Y."""
    if nx + ny > 7 or nx < 1 or ny < 1:
        raise InputError("verify_lemma10 needs nx, ny >= 1 and nx + ny <= 7")
    lhs = SetPartitionVector(n=nx + ny)
    for q in amalgamated_unions(nx, ny):
        lhs = lhs + pullback(q, chi(max(q)))
    rhs = partition_product(chi(nx), chi(ny))
    return dict(lhs) == dict(rhs)


def _word(alg, elems, order):
    v = tuple(elems[order[0] - 1])
    for i in order[1:]:
        v = alg.mul(v, elems[i - 1])
    return v


def _block_value(ev, block, elems, block_order):
    if block_order == "ascending" or len(block) <= 2:
        return ev.f(_word(ev.algebra, elems, block))
    # average over the (b-1)! cyclic orders starting at the block minimum
    first, rest = block[0], block[1:]
    total = Fraction(0)
    count = 0
    for tail in permutations(rest):
        total += ev.f(_word(ev.algebra, elems, (first,) + tail))
        count += 1
    return total / count


def functional_of_partition(ev, pi: SetPartition, elems, block_order: str = "ascending"):
    """Product over blocks of ``f`` applied to the product of the block's elements.

    ``block_order="ascending"`` multiplies in increasing index order, which is
    the only meaningful choice for commutative algebras.  ``"cycles"``
    averages over the cyclic orders of each block; for a tracial f on a
    noncommutative algebra this is what makes ``f(chi(n))`` equal ``Phi_n``.
    """
    if block_order not in ("ascending", "cycles"):
        raise InputError(f"unknown block order {block_order!r}")
    if len(elems) != pi.n:
        raise InputError(f"need {pi.n} elements, got {len(elems)}")
    total = Fraction(1)
    for b in pi:
        total *= _block_value(ev, b, elems, block_order)
        if total == 0:
            break
    return total


def functional_of_vector(ev, vec: SetPartitionVector, elems, block_order: str = "ascending"):
    total = Fraction(0)
    for pi, c in vec.items():
        total += c * functional_of_partition(ev, pi, elems, block_order)
    return total
