"""The Phi_n calculus on a finite-dimensional algebra with a linear functional.

``Phi_1(f) = f`` and

    Phi_{k+1}(a_1, ..., a_{k+1}) = f(a_1) Phi_k(a_2, ..., a_{k+1})
                                   - sum_j Phi_k(a_2, ..., a_1 a_j, ..., a_{k+1})

where ``a_1 a_j`` replaces ``a_j`` in its own slot.  The recursion is the ground
truth and assumes neither commutativity nor the trace property; the cycle-sum,
determinant and polarization routes are cross-checks valid for tracial ``f``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from itertools import product as iproduct
from math import factorial

from .algebra import FinAlgebra, Functional, is_tracial
from .errors import InputError, NotTracial
from .kernels import perm_cycles
from .linalg import det, nullspace
from .poly import SparsePoly

__all__ = [
    "PhiEvaluator",
    "CycleType",
    "cycle_type",
    "phi_recursive",
    "phi_cycle_sum",
    "phi_diagonal",
    "phi_polarized",
    "fn_polynomial",
    "fn_closed_form",
    "fn_cycle_form",
    "fn_series",
    "fn_generating_check",
    "polarize",
    "evaluate_polarized",
    "d_operator",
    "operator_identities",
    "is_n_homomorphism",
    "symmetric_power_check",
    "proof_step4",
    "unit_slot_identity",
    "phi_table_from_jordan",
    "s_var",
]

ZERO = Fraction(0)


def s_var(k: int) -> str:
    return f"s{k}"


class PhiEvaluator:
    """Evaluates ``Phi_k(f)`` for an algebra and functional.

    Basis-tuple tables are built lazily by dynamic programming over ``k`` and
    cached; arbitrary element tuples go through :meth:`phi`.
    """

    def __init__(self, algebra: FinAlgebra, f: Functional):
        if len(f) != algebra.dim:
            raise InputError(f"functional has length {len(f)}, algebra has dim {algebra.dim}")
        self.algebra = algebra
        self.f = f
        self._tables: dict[int, dict] = {}
        self._memo: dict = {}
        self._diag: dict = {}
        self._tracial = None

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def tracial(self) -> bool:
        if self._tracial is None:
            self._tracial = is_tracial(self.algebra, self.f)
        return self._tracial

    def f_of(self, v) -> Fraction:
        return self.f(v)

    def unit_value(self):
        return self.f(self.algebra.unit)

    # direct recursion on element vectors ---------------------------------
    def phi(self, args) -> Fraction:
        args = tuple(tuple(a) for a in args)
        if not args:
            raise InputError("Phi_k needs k >= 1 arguments")
        return self._phi(args)

    def _phi(self, args: tuple):
        hit = self._memo.get(args)
        if hit is not None:
            return hit
        val = self._phi_uncached(args)
        self._memo[args] = val
        return val

    def _phi_uncached(self, args: tuple):
        a1 = args[0]
        if len(args) == 1:
            return self.f(a1)
        rest = args[1:]
        total = self.f(a1) * self._phi(rest) if any(a1) else ZERO
        mul = self.algebra.mul
        for j in range(len(rest)):
            prod = mul(a1, rest[j])
            if any(prod):
                total -= self._phi(rest[:j] + (prod,) + rest[j + 1:])
        return total

    # basis tables ---------------------------------------------------------
    def table(self, k: int) -> dict:
        """``{(i_1, ..., i_k): Phi_k(e_{i_1}, ..., e_{i_k})}`` over all basis tuples."""
        if k < 1:
            raise InputError("k must be >= 1")
        if k in self._tables:
            return self._tables[k]
        n = self.dim
        if k == 1:
            tab = {(i,): self.f.values[i] for i in range(n)}
        else:
            prev = self.table(k - 1)
            bp = self.algebra.basis_product
            fv = self.f.values
            tab = {}
            for idx in iproduct(range(n), repeat=k):
                i1, rest = idx[0], idx[1:]
                total = fv[i1] * prev[rest] if fv[i1] != 0 else ZERO
                for j, ij in enumerate(rest):
                    for r, c in enumerate(bp(i1, ij)):
                        if c != 0:
                            total -= c * prev[rest[:j] + (r,) + rest[j + 1:]]
                tab[idx] = total
        self._tables[k] = tab
        return tab

    def contract(self, k: int, vectors) -> Fraction:
        """Multilinear extension of the basis table to arbitrary element vectors."""
        tab = self.table(k)
        supports = [[(i, c) for i, c in enumerate(v) if c != 0] for v in vectors]
        total = ZERO
        for combo in iproduct(*supports):
            coeff = Fraction(1)
            for _, c in combo:
                coeff *= c
            total += coeff * tab[tuple(i for i, _ in combo)]
        return total


def phi_recursive(ev: PhiEvaluator, args) -> Fraction:
    return ev.phi(args)


@dataclass(frozen=True)
class CycleType:
    lengths: tuple  # sorted descending
    sign: int

    @property
    def multiplicities(self) -> dict:
        m: dict = {}
        for L in self.lengths:
            m[L] = m.get(L, 0) + 1
        return m


def cycle_type(perm) -> CycleType:
    cycles = perm_cycles(perm)
    n = len(perm)
    return CycleType(tuple(sorted((len(c) for c in cycles), reverse=True)),
                     (-1) ** (n - len(cycles)))


def _cycle_product(alg: FinAlgebra, args, cycle):
    v = args[cycle[0]]
    for i in cycle[1:]:
        v = alg.mul(v, args[i])
    return v


def phi_cycle_sum(ev: PhiEvaluator, args) -> Fraction:
    """Sum over S_n of sign times the product over cycles of ``f(a_{i1} ... a_{im})``."""
    if not ev.tracial:
        raise NotTracial("cycle-sum formula needs a tracial functional")
    args = [tuple(a) for a in args]
    n = len(args)
    alg = ev.algebra
    cache: dict = {}
    total = ZERO
    for perm in permutations(range(n)):
        cycles = perm_cycles(perm)
        term = Fraction((-1) ** (n - len(cycles)))
        for cyc in cycles:
            key = tuple(cyc)
            if key not in cache:
                cache[key] = ev.f(_cycle_product(alg, args, cyc))
            term *= cache[key]
            if term == 0:
                break
        total += term
    return total


def _moments(ev: PhiEvaluator, a, n: int):
    out = []
    p = tuple(a)
    for k in range(1, n + 1):
        out.append(ev.f(p))
        if k < n:
            p = ev.algebra.mul(p, a)
    return out


def _newton_matrix(s, n: int):
    # rows: s_i .. s_1 on and below the diagonal, 1..n-1 on the superdiagonal
    return [[s[i - j] if j <= i else (Fraction(i + 1) if j == i + 1 else ZERO)
             for j in range(n)] for i in range(n)]


def phi_diagonal(ev: PhiEvaluator, a, n: int) -> Fraction:
    """``Phi_n(a, ..., a)`` as the determinant in the moments ``f(a^k)``."""
    if n < 1:
        raise InputError("n must be >= 1")
    key = (tuple(a), n)
    hit = ev._diag.get(key)
    if hit is None:
        hit = ev._diag[key] = det(_newton_matrix(_moments(ev, a, n), n))
    return hit


def phi_polarized(ev: PhiEvaluator, args) -> Fraction:
    """Polarization of the diagonal: alternating subset sum divided by n!."""
    n = len(args)
    dim = ev.dim
    total = ZERO
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in combinations(range(n), size):
            v = [ZERO] * dim
            for i in subset:
                for r, c in enumerate(args[i]):
                    v[r] += c
            total += sign * phi_diagonal(ev, v, n)
    return total / factorial(n)


# F_n polynomials -------------------------------------------------------------

@lru_cache(maxsize=None)
def fn_polynomial(n: int) -> SparsePoly:
    """F_n by the recursion F_n = (n-1)! sum_k (-1)^(k+1) s_k F_{n-k} / (n-k)!."""
    if n < 0:
        raise InputError("n must be >= 0")
    if n == 0:
        return SparsePoly.one()
    total = SparsePoly.zero()
    for k in range(1, n + 1):
        term = SparsePoly.var(s_var(k)) * fn_polynomial(n - k)
        total = total + term.scale(Fraction((-1) ** (k + 1), factorial(n - k)))
    return total.scale(factorial(n - 1))


def _integer_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - k, k):
            yield (k,) + rest


def fn_closed_form(n: int) -> SparsePoly:
    """n! times the sum over integer partitions of prod ((-1)^(k+1) s_k / k)^{m_k} / m_k!."""
    total = SparsePoly.zero()
    for parts in _integer_partitions(n):
        mult: dict = {}
        for k in parts:
            mult[k] = mult.get(k, 0) + 1
        coeff = Fraction(factorial(n))
        powers = {}
        for k, m in mult.items():
            coeff *= Fraction((-1) ** ((k + 1) * m), k ** m * factorial(m))
            powers[s_var(k)] = m
        total = total + SparsePoly.monomial(powers, coeff)
    return total


def fn_cycle_form(n: int) -> SparsePoly:
    """Sum over S_n of prod ((-1)^(k+1) s_k)^{m_k(sigma)}, by enumeration."""
    counts: dict = {}
    for perm in permutations(range(n)):
        key = tuple(sorted(len(c) for c in perm_cycles(perm)))
        counts[key] = counts.get(key, 0) + 1
    total = SparsePoly.zero() if n else SparsePoly.one()
    for lengths, cnt in counts.items():
        if not lengths:
            continue
        powers: dict = {}
        sign = 1
        for L in lengths:
            powers[s_var(L)] = powers.get(s_var(L), 0) + 1
            sign *= (-1) ** (L + 1)
        total = total + SparsePoly.monomial(powers, Fraction(sign * cnt))
    return total


def fn_series(n_max: int) -> list:
    """Coefficients n! [t^n] exp(sum_k (-1)^(k+1) s_k t^k / k) for n = 0..n_max."""
    g = [SparsePoly.zero()] + [SparsePoly.var(s_var(k)).scale(Fraction((-1) ** (k + 1), k))
                               for k in range(1, n_max + 1)]

    def mul(a, b):
        out = [SparsePoly.zero() for _ in range(n_max + 1)]
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j in range(n_max + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + x * b[j]
        return out

    result = [SparsePoly.one()] + [SparsePoly.zero() for _ in range(n_max)]
    power = list(result)
    for j in range(1, n_max + 1):
        power = mul(power, g)
        for i in range(n_max + 1):
            if not power[i].is_zero():
                result[i] = result[i] + power[i].scale(Fraction(1, factorial(j)))
    return [result[n].scale(factorial(n)) for n in range(n_max + 1)]


def fn_generating_check(n_max: int) -> dict:
    series = fn_series(n_max)
    bad = [n for n in range(n_max + 1) if series[n] != fn_polynomial(n)]
    return {"check": "fn_generating", "n": n_max, "pass": not bad,
            "witness": [{"n": n, "series": str(series[n]), "recursion": str(fn_polynomial(n))}
                        for n in bad]}


# polarization ---------------------------------------------------------------

def _fsym(alpha) -> str:
    return "f[" + ",".join(map(str, alpha)) + "]"


def _compositions(k: int, support):
    """Exponent vectors of total k supported on ``support`` (positions)."""
    support = list(support)
    if not support:
        if k == 0:
            yield {}
        return
    first, rest = support[0], support[1:]
    for e in range(k, -1, -1):
        for tail in _compositions(k - e, rest):
            d = dict(tail)
            if e:
                d[first] = e
            yield d


def _multinomial(k: int, parts) -> int:
    out = factorial(k)
    for p in parts:
        out //= factorial(p)
    return out


@lru_cache(maxsize=None)
def polarize(n: int) -> SparsePoly:
    """Symmetric multilinear form with diagonal F_n, for commuting arguments.

    The result is a polynomial in symbols ``f[i_1,...,i_n]`` standing for
    ``f(a_1^{i_1} ... a_n^{i_n})``; e.g. ``polarize(2)`` is
    ``f[0,1]*f[1,0] - f[1,1]``.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    fn = fn_polynomial(n)
    total = SparsePoly.zero()
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in combinations(range(n), size):
            subs = {}
            for k in range(1, n + 1):
                moment = SparsePoly.zero()
                for comp in _compositions(k, subset):
                    alpha = tuple(comp.get(i, 0) for i in range(n))
                    moment = moment + SparsePoly.monomial(
                        {_fsym(alpha): 1}, _multinomial(k, comp.values()))
                subs[s_var(k)] = moment
            total = total + fn.subs(subs).scale(sign)
    return total.scale(Fraction(1, factorial(n)))


def evaluate_polarized(form: SparsePoly, ev: PhiEvaluator, args) -> Fraction:
    """Evaluate a :func:`polarize` form; symbols read ``f(a_1^{i_1} ... a_n^{i_n})``.

    The symbols only make sense when the arguments commute, so noncommutative
    algebras are rejected; use :func:`phi_polarized` there.
    """
    alg = ev.algebra
    if not alg.is_commutative():
        raise InputError("symbolic polarization needs a commutative algebra")
    values = {}
    for name in form.used_vars():
        alpha = [int(x) for x in name[2:-1].split(",")]
        v = alg.unit
        for i, e in enumerate(alpha):
            for _ in range(e):
                v = alg.mul(v, args[i])
        values[name] = ev.f(v)
    return form.evaluate(values)


# differential operators -------------------------------------------------------

def _s_index(name: str) -> int:
    return int(name[1:])


def d_operator(p: SparsePoly) -> SparsePoly:
    """``d = sum_{r>=2} r s_{r-1} d/ds_r``."""
    out = SparsePoly.zero()
    for name in p.used_vars():
        r = _s_index(name)
        if r >= 2:
            out = out + (SparsePoly.var(s_var(r - 1)) * p.partial(name)).scale(r)
    return out


def _weight_monomials(w: int):
    # monomials in s_1.. of weighted degree w (deg s_k = k) <-> partitions of w
    for parts in _integer_partitions(w):
        powers: dict = {}
        for k in parts:
            powers[s_var(k)] = powers.get(s_var(k), 0) + 1
        yield powers


def _joint_kernel_dim(w: int) -> int:
    """dim of Ker d/ds_1 cap Ker d on the weight-w subspace."""
    basis = [SparsePoly.monomial(m) for m in _weight_monomials(w)]
    images = [(b.partial(s_var(1)), d_operator(b)) for b in basis]
    rows_keys: list = []
    cols = []
    for a, b in images:
        col = {}
        for tag, poly in (("a", a), ("b", b)):
            for powers, c in poly.items():
                key = (tag, tuple(sorted(powers.items())))
                col[key] = c
                if key not in rows_keys:
                    rows_keys.append(key)
        cols.append(col)
    if not rows_keys:
        return len(basis)
    mat = [[col.get(key, ZERO) for col in cols] for key in rows_keys]
    return len(nullspace(mat))


def operator_identities(n_max: int) -> dict:
    """Checks, for 1 <= n <= n_max:
    dF_n/ds_1 = n F_{n-1};  d F_n = -n(n-1) F_{n-1};
    [d/ds_k, d] F_n = (k+1) dF_n/ds_{k+1} for 1 <= k <= n;
    F_n(0) = 0, F_0 = 1; and the joint kernel of d/ds_1 and d is trivial in
    positive weight up to n_max."""
    failures = []
    if fn_polynomial(0) != 1:
        failures.append({"identity": "F_0 = 1"})
    for n in range(1, n_max + 1):
        F, Fm = fn_polynomial(n), fn_polynomial(n - 1)
        if F.constant_term() != 0:
            failures.append({"identity": "F_n(0) = 0", "n": n})
        if F.partial(s_var(1)) != Fm.scale(n):
            failures.append({"identity": "dF/ds1", "n": n})
        if d_operator(F) != Fm.scale(-n * (n - 1)):
            failures.append({"identity": "dF", "n": n})
        for k in range(1, n + 1):
            lhs = d_operator(F).partial(s_var(k)) - d_operator(F.partial(s_var(k)))
            rhs = F.partial(s_var(k + 1)).scale(k + 1)
            if lhs != rhs:
                failures.append({"identity": "commutator", "n": n, "k": k})
        if _joint_kernel_dim(n) != 0:
            failures.append({"identity": "joint kernel", "weight": n})
    return {"check": "operator_identities", "n": n_max, "pass": not failures,
            "witness": failures}


# n-homomorphisms ------------------------------------------------------------

def is_n_homomorphism(ev: PhiEvaluator, n: int):
    """``(ok, witness)``: f(1) = n and Phi_{n+1} vanishes on all basis tuples."""
    if n < 1:
        raise InputError("n must be >= 1")
    u = ev.unit_value()
    if u != n:
        return False, {"condition": "f(1) != n", "value": str(u)}
    for idx, val in ev.table(n + 1).items():
        if val != 0:
            return False, {"condition": f"Phi_{n + 1} != 0",
                           "tuple": [i + 1 for i in idx], "value": str(val)}
    return True, None


def _multisets(dim: int, n: int):
    from itertools import combinations_with_replacement

    return list(combinations_with_replacement(range(dim), n))


def _sym_terms(idx):
    return list(permutations(idx))


def _g_of_sym(ev: PhiEvaluator, n: int, idx) -> Fraction:
    # (1/n!) Phi_n of the summed symmetrisation of e_{i_1} x ... x e_{i_n}
    tab = ev.table(n)
    return sum((tab[p] for p in _sym_terms(idx)), ZERO) / factorial(n)


def _g_of_sym_product(ev: PhiEvaluator, n: int, a, b) -> Fraction:
    alg = ev.algebra
    total = ZERO
    for pa in _sym_terms(a):
        for pb in _sym_terms(b):
            vecs = [alg.basis_product(x, y) for x, y in zip(pa, pb)]
            total += ev.contract(n, vecs)
    return total / factorial(n)


def symmetric_power_check(ev: PhiEvaluator, n: int):
    """``(ok, witness)``: is ``(1/n!) Phi_n`` a unital ring map on S^n A?

    Checked on products of symmetrised basis tensors
    ``sum_sigma e_{i_sigma(1)} x ... x e_{i_sigma(n)}`` and on ``1 x ... x 1``.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    alg = ev.algebra
    unit_val = ev.contract(n, [alg.unit] * n) / factorial(n)
    if unit_val != 1:
        return False, {"condition": "g(1) != 1", "value": str(unit_val)}
    ms = _multisets(ev.dim, n)
    g = {m: _g_of_sym(ev, n, m) for m in ms}
    for i, a in enumerate(ms):
        for b in ms[i:]:
            lhs = _g_of_sym_product(ev, n, a, b)
            if lhs != g[a] * g[b]:
                return False, {"condition": "g(ab) != g(a)g(b)",
                               "a": [x + 1 for x in a], "b": [x + 1 for x in b],
                               "lhs": str(lhs), "rhs": str(g[a] * g[b])}
    return True, None


def proof_step4(ev: PhiEvaluator, n: int, a, b) -> dict:
    """Both sides of the step-4 identity for basis index tuples ``a`` and ``b``.

    With averaged symmetrisations ``bold a = (1/n!) sum_sigma a_sigma``:
    ``sum_sigma Phi_n(a_1 b_sigma(1), ...) = n! Phi_n(bold a bold b)``; for an
    n-homomorphism both equal ``Phi_n(a) Phi_n(b)``.
    """
    alg = ev.algebra
    lhs = ZERO
    for sigma in permutations(range(n)):
        lhs += ev.contract(n, [alg.basis_product(a[k], b[sigma[k]]) for k in range(n)])
    nf = factorial(n)
    sym = _g_of_sym_product(ev, n, a, b) * nf / (nf * nf)  # Phi_n(bold a bold b)
    tab = ev.table(n)
    return {"sum_sigma": lhs, "n!_phi_ab": nf * sym,
            "product": tab[tuple(a)] * tab[tuple(b)]}


def unit_slot_identity(ev: PhiEvaluator, p, n: int) -> bool:
    """Phi_n(p, 1, ..., 1) == f(p) (f(1) - 1) ... (f(1) - (n - 1))."""
    if n < 1:
        raise InputError("n must be >= 1")
    lhs = ev.phi([p] + [ev.algebra.unit] * (n - 1))
    u = ev.unit_value()
    rhs = ev.f(p)
    for k in range(1, n):
        rhs *= u - k
    return lhs == rhs


# Phi_k from the symmetrised product alone ------------------------------------

def _set_partitions_of(idx):
    if not idx:
        yield []
        return
    first, rest = idx[0], idx[1:]
    for sub in _set_partitions_of(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def phi_table_from_jordan(f_values, jordan, k: int) -> dict:
    """``Phi_k`` on basis tuples computed from ``f`` and ``a o b`` only.

    Groups the cycle sum by orbit partition.  For tracial f, a block B
    contributes ``(-1)^(|B|-1) / |B|`` times the sum over all orderings of B
    of ``f`` applied to the left-nested o-product; summing over orderings
    turns nested o-products into the sum of plain words, and each cycle is
    the class of |B| rotations.
    """
    f = tuple(f_values.values) if isinstance(f_values, Functional) else tuple(f_values)
    dim = len(f)
    c = jordan.c if hasattr(jordan, "c") else jordan

    def circ(u, v):
        out = [ZERO] * dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for r, x in enumerate(c[i][j]):
                    if x != 0:
                        out[r] += a * b * x
        return tuple(out)

    basis = [tuple(Fraction(int(r == i)) for r in range(dim)) for i in range(dim)]
    block_cache: dict = {}

    def block_value(members):
        key = tuple(sorted(members))
        if key not in block_cache:
            total = ZERO
            for order in permutations(key):
                v = basis[order[0]]
                for i in order[1:]:
                    v = circ(v, basis[i])
                total += sum((a * b for a, b in zip(f, v)), ZERO)
            m = len(key)
            block_cache[key] = Fraction((-1) ** (m - 1), m) * total
        return block_cache[key]

    partitions = list(_set_partitions_of(list(range(k))))
    table = {}
    for idx in iproduct(range(dim), repeat=k):
        total = ZERO
        for pi in partitions:
            term = Fraction(1)
            for block in pi:
                term *= block_value([idx[p] for p in block])
                if term == 0:
                    break
            total += term
        table[idx] = total
    return table
