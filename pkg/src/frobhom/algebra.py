"""Finite-dimensional unital associative algebras given by structure constants.

Elements are coordinate tuples in the basis ``e_0 .. e_{dim-1}``.  The product
is ``e_i e_j = sum_k c[i][j][k] e_k``, stored sparsely as ``mult[i][j] = {k: c}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .errors import BadUnit, Degenerate, InputError, NonAssociative, NotTracial
from .linalg import SingularMatrix, det, inverse
from .scalars import as_scalar, format_scalar

__all__ = [
    "FinAlgebra",
    "Functional",
    "JordanConstants",
    "PairingData",
    "build_algebra",
    "multiply",
    "is_tracial",
    "frobenius_pairing",
    "jordan_constants",
    "recover_jordan",
    "recover_commutative",
    "pairing_from_phi",
    "structure_tensor",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_scale(c, u):
    return tuple(c * a for a in u)


@dataclass(frozen=True, eq=False)
class FinAlgebra:
    dim: int
    basis: tuple
    mult: tuple  # mult[i][j] is a dict {k: coefficient}
    unit: tuple
    name: str = ""
    _table: tuple = field(default=None, repr=False)  # dense e_i e_j vectors

    def e(self, i: int) -> tuple:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def zero(self) -> tuple:
        return (ZERO,) * self.dim

    def basis_product(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def mul(self, u, v) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.mult[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return tuple(out)

    def is_commutative(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def constants(self):
        """Dense tensor ``c[i][j][k]``."""
        return [[[self.mult[i][j].get(k, ZERO) for k in range(self.dim)]
                 for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in sorted(self.mult[i][j].items()):
                    entries.append([i + 1, j + 1, k + 1, format_scalar(c)])
        return {
            "dim": self.dim,
            "basis": list(self.basis),
            "unit": [format_scalar(c) for c in self.unit],
            "constants": entries,
        }

    @classmethod
    def from_json(cls, data, cyclotomic: int | None = None) -> "FinAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        dim = int(data["dim"])
        entries = [(int(i) - 1, int(j) - 1, int(k) - 1, _parse(c, cyclotomic))
                   for i, j, k, c in data["constants"]]
        unit = [_parse(c, cyclotomic) for c in data["unit"]]
        return build_algebra(entries, unit, basis=data.get("basis"), dim=dim)


def _parse(c, cyclotomic):
    if isinstance(c, str):
        from .poly import parse_scalar

        return parse_scalar(c, cyclotomic)
    return as_scalar(c)


def build_algebra(constants, unit, basis=None, dim: int | None = None, name: str = "",
                  check: bool = True) -> FinAlgebra:
    """Validated algebra from a dense tensor ``c[i][j][k]`` or sparse ``(i, j, k, c)``.

    Raises :class:`NonAssociative` with the witness triple, or :class:`BadUnit`.
    """
    dim = len(unit) if dim is None else dim
    if len(unit) != dim:
        raise InputError(f"unit has length {len(unit)}, expected {dim}")
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    sparse = not constants or isinstance(constants[0][0], int)
    if sparse:
        for i, j, k, c in constants:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError(f"structure constant index ({i}, {j}, {k}) out of range")
            c = as_scalar(c)
            if c != 0:
                mult[i][j][k] = mult[i][j].get(k, ZERO) + c
    else:
        if len(constants) != dim or any(len(row) != dim or any(len(v) != dim for v in row)
                                        for row in constants):
            raise InputError("structure tensor must be dim x dim x dim")
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    c = as_scalar(constants[i][j][k])
                    if c != 0:
                        mult[i][j][k] = c
    mult_t = tuple(tuple(row) for row in mult)
    table = tuple(tuple(tuple(mult[i][j].get(k, ZERO) for k in range(dim))
                        for j in range(dim)) for i in range(dim))
    basis = tuple(basis) if basis else tuple(f"e{i + 1}" for i in range(dim))
    alg = FinAlgebra(dim, basis, mult_t, tuple(as_scalar(c) for c in unit), name, table)
    if check:
        _check_unit(alg)
        _check_assoc(alg)
    return alg


def _check_unit(alg: FinAlgebra):
    for i in range(alg.dim):
        e = alg.e(i)
        if alg.mul(alg.unit, e) != e or alg.mul(e, alg.unit) != e:
            raise BadUnit(f"unit fails on basis element {alg.basis[i]}", witness=[i + 1])


def _check_assoc(alg: FinAlgebra):
    t = alg._table
    for i, j in iproduct(range(alg.dim), repeat=2):
        left = t[i][j]
        for k in range(alg.dim):
            # (e_i e_j) e_k versus e_i (e_j e_k)
            lhs = [ZERO] * alg.dim
            for r, c in enumerate(left):
                if c != 0:
                    for s, d in alg.mult[r][k].items():
                        lhs[s] += c * d
            rhs = [ZERO] * alg.dim
            for r, c in enumerate(t[j][k]):
                if c != 0:
                    for s, d in alg.mult[i][r].items():
                        rhs[s] += c * d
            if lhs != rhs:
                raise NonAssociative(
                    f"(e{i + 1} e{j + 1}) e{k + 1} != e{i + 1} (e{j + 1} e{k + 1})",
                    witness=[i + 1, j + 1, k + 1],
                )


def multiply(alg: FinAlgebra, u, v) -> tuple:
    return alg.mul(u, v)


@dataclass(frozen=True)
class Functional:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_scalar(v) for v in self.values))

    def __call__(self, v):
        return sum((a * b for a, b in zip(self.values, v) if a != 0 and b != 0), ZERO)

    def __len__(self):
        return len(self.values)

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(_vec_add(self.values, other.values))

    def scale(self, c) -> "Functional":
        return Functional(_vec_scale(c, self.values))

    def to_json(self) -> dict:
        return {"values": [format_scalar(v) for v in self.values]}

    @classmethod
    def from_json(cls, data, cyclotomic: int | None = None) -> "Functional":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(_parse(v, cyclotomic) for v in data["values"]))


def is_tracial(alg: FinAlgebra, f: Functional) -> bool:
    if len(f) != alg.dim:
        raise InputError(f"functional has length {len(f)}, algebra has dim {alg.dim}")
    return all(f(alg.basis_product(i, j)) == f(alg.basis_product(j, i))
               for i in range(alg.dim) for j in range(i + 1, alg.dim))


@dataclass(frozen=True)
class PairingData:
    R1: tuple       # R_i = f(e_i)
    R2: tuple       # R_ij = f(e_i e_j)
    R3: tuple       # R_ijk = f(e_i e_j e_k)
    R2inv: tuple    # R^{ij}


@dataclass(frozen=True)
class JordanConstants:
    """Tensor ``c[i][j][k]`` of the symmetrised product ``a o b = (ab + ba)/2``."""
    c: tuple

    @property
    def dim(self) -> int:
        return len(self.c)

    def product(self, u, v) -> tuple:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = a * b
                for k, c in enumerate(self.c[i][j]):
                    if c != 0:
                        out[k] += ab * c
        return tuple(out)


def _tupled(t):
    return tuple(tuple(tuple(row) for row in plane) for plane in t)


def frobenius_pairing(alg: FinAlgebra, f: Functional) -> PairingData:
    """All pairing tensors and the inverse Gram matrix of ``(a, b) -> f(ab)``."""
    if not is_tracial(alg, f):
        raise NotTracial("functional is not tracial")
    n = alg.dim
    R1 = tuple(f.values)
    R2 = tuple(tuple(f(alg.basis_product(i, j)) for j in range(n)) for i in range(n))
    R3 = tuple(tuple(tuple(f(alg.mul(alg.basis_product(i, j), alg.e(k))) for k in range(n))
                     for j in range(n)) for i in range(n))
    try:
        inv = inverse([list(r) for r in R2])
    except SingularMatrix:
        raise Degenerate("pairing f(ab) is degenerate", witness={"det": "0"}) from None
    return PairingData(R1, R2, R3, tuple(tuple(r) for r in inv))


def jordan_constants(alg: FinAlgebra) -> JordanConstants:
    half = Fraction(1, 2)
    n = alg.dim
    t = alg._table
    return JordanConstants(tuple(
        tuple(tuple(half * (t[i][j][k] + t[j][i][k]) for k in range(n)) for j in range(n))
        for i in range(n)
    ))


def _gram_from_phi(f_values, phi2):
    n = len(f_values)
    return [[f_values[i] * f_values[j] - phi2[i][j] for j in range(n)] for i in range(n)]


def recover_jordan(dim: int, f_values, phi2, phi3) -> JordanConstants:
    """Jordan structure constants from the first three Phi tables.

    ``phi2[i][j]`` and ``phi3[i][j][k]`` are values on basis tuples.  For each
    pair ``(i, j)`` the vector ``x_r = c[(ij)][r]`` solves
    ``2 * sum_r x_r R[r][k] = f_i R_jk + f_j R_ik + f_k R_ij - f_i f_j f_k + Phi3(i,j,k)``.
    """
    f = tuple(f_values.values) if isinstance(f_values, Functional) else tuple(f_values)
    if len(f) != dim:
        raise InputError(f"functional has length {len(f)}, expected {dim}")
    R = _gram_from_phi(f, phi2)
    try:
        Rinv = inverse(R)
    except SingularMatrix:
        raise Degenerate("R_ij = f(e_i)f(e_j) - Phi2(e_i, e_j) is singular") from None
    half = Fraction(1, 2)
    out = []
    for i in range(dim):
        plane = []
        for j in range(dim):
            rhs = [half * (f[i] * R[j][k] + f[j] * R[i][k] + f[k] * R[i][j]
                           - f[i] * f[j] * f[k] + phi3[i][j][k]) for k in range(dim)]
            # x R = rhs  <=>  x = rhs R^{-1}
            x = tuple(sum((rhs[k] * Rinv[k][r] for k in range(dim)), ZERO) for r in range(dim))
            plane.append(x)
        out.append(tuple(plane))
    return JordanConstants(tuple(out))


def pairing_from_phi(f_values, phi2, phi3) -> PairingData:
    """Pairing tensors of a commutative Frobenius pair rebuilt from Phi data."""
    f = tuple(f_values.values) if isinstance(f_values, Functional) else tuple(f_values)
    n = len(f)
    R2 = _gram_from_phi(f, phi2)
    half = Fraction(1, 2)
    R3 = tuple(tuple(tuple(
        half * (phi3[i][j][k] + f[i] * R2[j][k] + f[j] * R2[i][k] + f[k] * R2[i][j]
                - f[i] * f[j] * f[k])
        for k in range(n)) for j in range(n)) for i in range(n))
    try:
        inv = inverse(R2)
    except SingularMatrix:
        raise Degenerate("R_ij reconstructed from Phi2 is singular") from None
    return PairingData(f, tuple(tuple(r) for r in R2), R3, tuple(tuple(r) for r in inv))


def recover_commutative(pairing: PairingData):
    """Structure constants ``a[i][j][k] = sum_m R_ijm R^{mk}``."""
    n = len(pairing.R1)
    if pairing.R2inv is None:
        raise Degenerate("pairing has no inverse")
    R3, Rinv = pairing.R3, pairing.R2inv
    return tuple(tuple(tuple(sum((R3[i][j][m] * Rinv[m][k] for m in range(n)), ZERO)
                             for k in range(n)) for j in range(n)) for i in range(n))


def structure_tensor(alg: FinAlgebra):
    return alg._table


def gram_determinant(alg: FinAlgebra, f: Functional):
    return det([[f(alg.basis_product(i, j)) for j in range(alg.dim)] for i in range(alg.dim)])
