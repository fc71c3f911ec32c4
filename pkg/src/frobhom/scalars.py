"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(zeta_N).

Rationals are plain ``Fraction`` / ``int`` values.  :class:`Cyclotomic` holds an
element of a cyclotomic field as a coefficient vector in the power basis
1, w, ..., w^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
Arithmetic results that happen to be rational collapse back to ``Fraction`` so
equality and hashing agree across the tower.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "cyclotomic_poly",
    "cyclotomic_reduce",
    "zeta",
    "as_scalar",
    "is_scalar",
    "format_scalar",
]


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den must be monic
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for shift in range(len(num) - 1 - dq, -1, -1):
        c = num[shift + dq]
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    rem = num[:dq] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


def _reduce(coeffs, n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            base = top - deg
            for i, p in enumerate(phi):
                c[base + i] -= lead * p
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class Cyclotomic:
    """Element of Q(zeta_N); ``coeffs[i]`` multiplies ``w**i``.

    Instances are only created for irrational values; use :func:`cyclotomic_reduce`
    (or arithmetic) to get the canonical representative.
    """

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: tuple[Fraction, ...]):
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    @staticmethod
    def _make(n: int, coeffs) -> "Fraction | Cyclotomic":
        red = _reduce(coeffs, n)
        if all(c == 0 for c in red[1:]):
            return red[0] if red else Fraction(0)
        return Cyclotomic(n, red)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError(f"mixing Q(zeta_{self.n}) and Q(zeta_{other.n})")
            return other.coeffs
        if isinstance(other, (int, Rational)):
            return (Fraction(other),) + (Fraction(0),) * (len(self.coeffs) - 1)
        return None

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return Cyclotomic._make(self.n, [a + b for a, b in zip(self.coeffs, oc)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return Cyclotomic._make(self.n, [a - b for a, b in zip(self.coeffs, oc)])

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return Cyclotomic._make(self.n, [b - a for a, b in zip(self.coeffs, oc)])

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return Fraction(0)
            return Cyclotomic(self.n, tuple(a * other for a in self.coeffs))
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(oc):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic._make(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Fraction | Cyclotomic":
        # solve self * x = 1 with the multiplication matrix of self
        from .linalg import solve

        deg = len(self.coeffs)
        cols = []
        for j in range(deg):
            basis = [Fraction(0)] * deg
            basis[j] = Fraction(1)
            col = _reduce(
                _conv(self.coeffs, basis), self.n
            )
            cols.append(col)
        mat = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        rhs = [Fraction(1)] + [Fraction(0)] * (deg - 1)
        x = solve(mat, rhs)
        return Cyclotomic._make(self.n, x)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_N)")
            return Cyclotomic(self.n, tuple(a / other for a in self.coeffs))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Fraction | Cyclotomic = Fraction(1)
        base: Fraction | Cyclotomic = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return False  # canonical instances are never rational
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs))
        return self._hash

    def __bool__(self):
        return True

    def conjugate(self) -> "Fraction | Cyclotomic":
        """Complex conjugate, w -> w^(N-1)."""
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * (self.n - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[(i * (self.n - 1))] += c
        return Cyclotomic._make(self.n, out)

    def __repr__(self):
        return f"Cyclotomic({self.n}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _conv(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def cyclotomic_reduce(coeffs, n: int) -> "Fraction | Cyclotomic":
    """Canonical representative of ``sum(coeffs[i] * w**i)`` in Q(zeta_n)."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    return Cyclotomic._make(n, list(coeffs))


def zeta(n: int, power: int = 1) -> "Fraction | Cyclotomic":
    """``zeta_n ** power``."""
    power %= n
    return cyclotomic_reduce([0] * power + [1], n)


def is_scalar(x) -> bool:
    return isinstance(x, (int, Rational, Cyclotomic)) and not isinstance(x, bool)


def as_scalar(x) -> "Fraction | Cyclotomic":
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, str):
        from .poly import parse_scalar

        return parse_scalar(x)
    return Fraction(x)


def _format_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_scalar(x) -> str:
    """Scalar in the text grammar: ``3``, ``-2/3``, ``(1 + 2*w^2)``."""
    if isinstance(x, Cyclotomic):
        parts = []
        for i, c in enumerate(x.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = _format_fraction(mag)
            else:
                wpart = "w" if i == 1 else f"w^{i}"
                body = wpart if mag == 1 else f"{_format_fraction(mag)}*{wpart}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return f"({text})"
    return _format_fraction(Fraction(x))
