"""Sparse multivariate polynomials with named variables over exact scalars.

Text grammar (round-trips through :func:`parse`)::

    s1^3 - 3*s1*s2 + 2*s3
    1/2*z[1]^2 - 1/2*z[2]
    (1 + 2*w)*x1 - x2          # w is zeta_N when parsed with cyclotomic=N

Variables are ordered by name with digit runs compared numerically, so ``x2``
sorts before ``x10``.  Terms print in graded-lexicographic order.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce

from .scalars import Cyclotomic, format_scalar, is_scalar, zeta

__all__ = [
    "SparsePoly", "parse", "parse_scalar", "var_key", "PolySyntaxError",
    "poly_mul", "poly_partial", "product",
]

NEG_INF = float("-inf")

_DIGITS = re.compile(r"(\d+)")


def var_key(name: str):
    """Sort key: lexicographic by name, digit runs compared as integers."""
    return tuple(int(t) if t.isdigit() else t for t in _DIGITS.split(name))


class SparsePoly:
    """Immutable polynomial: ``vars`` is a sorted tuple of names, ``terms`` maps
    exponent tuples (aligned with ``vars``) to nonzero coefficients."""

    __slots__ = ("vars", "terms", "_key", "_hash")

    def __init__(self, variables=(), terms=None):
        variables = tuple(variables)
        order = sorted(range(len(variables)), key=lambda i: var_key(variables[i]))
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.vars = tuple(variables[i] for i in order)
        out = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(variables):
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            if c != 0:
                e = tuple(exp[i] for i in order)
                out[e] = out.get(e, 0) + c
                if out[e] == 0:
                    del out[e]
        self.terms = out
        self._key = None
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "SparsePoly":
        # trusted constructor: variables sorted, no zero coefficients
        p = object.__new__(cls)
        p.vars = variables
        p.terms = terms
        p._key = None
        p._hash = None
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "SparsePoly":
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def const(cls, c, variables=()) -> "SparsePoly":
        variables = tuple(sorted(variables, key=var_key))
        if c == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, powers: dict, coeff=1) -> "SparsePoly":
        names = tuple(sorted(powers, key=var_key))
        return cls._raw(names, {tuple(powers[n] for n in names): coeff} if coeff != 0 else {})

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls._raw((), {})

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls.const(Fraction(1))

    # alignment ------------------------------------------------------------
    def with_vars(self, variables) -> "SparsePoly":
        """Re-express over a superset of variables (must already be sorted)."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        idx = [pos[v] for v in self.vars]
        width = len(variables)
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * width
            for i, k in zip(idx, exp):
                e[i] = k
            terms[tuple(e)] = c
        return SparsePoly._raw(variables, terms)

    def _align(self, other: "SparsePoly"):
        if self.vars == other.vars:
            return self, other
        names = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
        return self.with_vars(names), other.with_vars(names)

    @staticmethod
    def _lift(x) -> "SparsePoly":
        if isinstance(x, SparsePoly):
            return x
        if is_scalar(x):
            return SparsePoly.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            if not is_scalar(other):
                return NotImplemented
            if other == 0:
                return self
            other = SparsePoly.const(other, self.vars)
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return SparsePoly._raw(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            if not is_scalar(other):
                return NotImplemented
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePoly":
        if c == 0:
            return SparsePoly._raw(self.vars, {})
        terms = {}
        for e, x in self.terms.items():
            y = x * c
            if y != 0:
                terms[e] = y
        return SparsePoly._raw(self.vars, terms)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if not is_scalar(other):
                return NotImplemented
            return self.scale(other)
        a, b = self._align(other)
        terms: dict = {}
        get = terms.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(map(int.__add__, e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return SparsePoly._raw(a.vars, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SparsePoly):
            if other.total_degree() != 0:
                raise ZeroDivisionError("polynomial division only by constants")
            other = other.constant_term()
        if not is_scalar(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(Fraction(1) / other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = SparsePoly.const(Fraction(1), self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # queries --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def used_vars(self) -> tuple:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def total_degree(self):
        """Ordinary total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    degree = total_degree

    def weighted_degree(self, weight):
        """Max over terms of ``sum(weight(var) * exp)``; ``-inf`` for zero."""
        if not self.terms:
            return NEG_INF
        w = [weight(v) for v in self.vars]
        return max(sum(a * b for a, b in zip(w, e)) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, powers: dict):
        """Coefficient of the monomial given as ``{name: exponent}``."""
        if any(v not in self.vars for v, k in powers.items() if k):
            return Fraction(0)
        e = tuple(powers.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def items(self):
        """Yield ``({name: exp}, coeff)`` pairs in graded-lex order."""
        for e in self._sorted_exps():
            yield {v: k for v, k in zip(self.vars, e) if k}, self.terms[e]

    def _sorted_exps(self):
        return sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e)))

    def is_homogeneous(self, weight=None) -> bool:
        w = [1 if weight is None else weight(v) for v in self.vars]
        degs = {sum(a * b for a, b in zip(w, e)) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self, weight=None) -> dict:
        w = [1 if weight is None else weight(v) for v in self.vars]
        parts: dict = {}
        for e, c in self.terms.items():
            d = sum(a * b for a, b in zip(w, e))
            parts.setdefault(d, {})[e] = c
        return {d: SparsePoly._raw(self.vars, t) for d, t in sorted(parts.items())}

    def leading_term(self):
        if not self.terms:
            return None
        e = self._sorted_exps()[0]
        return {v: k for v, k in zip(self.vars, e) if k}, self.terms[e]

    # calculus and substitution --------------------------------------------
    def partial(self, name: str) -> "SparsePoly":
        if name not in self.vars:
            return SparsePoly._raw(self.vars, {})
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                terms[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return SparsePoly._raw(self.vars, terms)

    def subs(self, mapping: dict) -> "SparsePoly":
        """Ring-homomorphic substitution of variables by polynomials/scalars."""
        keep = tuple(v for v in self.vars if v not in mapping)
        images = [SparsePoly._lift(mapping[v]) if v in mapping else SparsePoly.var(v)
                  for v in self.vars]
        powers: list[dict] = [{} for _ in self.vars]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        out = SparsePoly.const(Fraction(0), keep)
        acc: dict = {}
        for e, c in self.terms.items():
            term = SparsePoly.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc_key = term.vars
            if acc_key in acc:
                acc[acc_key] = acc[acc_key] + term
            else:
                acc[acc_key] = term
        for p in acc.values():
            out = out + p
        return out

    def evaluate(self, values: dict):
        """Evaluate at scalar values for every variable that occurs."""
        total = Fraction(0)
        idx = list(range(len(self.vars)))
        for e, c in self.terms.items():
            t = c
            for i in idx:
                if e[i]:
                    t = t * values[self.vars[i]] ** e[i]
            total = total + t
        return total

    def rename(self, mapping: dict) -> "SparsePoly":
        names = tuple(mapping.get(v, v) for v in self.vars)
        return SparsePoly(names, self.terms)

    # comparison and printing ----------------------------------------------
    def _canon(self) -> dict:
        if self._key is None:
            used = [i for i, v in enumerate(self.vars)
                    if any(e[i] for e in self.terms)]
            key = {}
            for e, c in self.terms.items():
                key[tuple((self.vars[i], e[i]) for i in used if e[i])] = c
            self._key = key
        return self._key

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self._canon() == other._canon()
        if is_scalar(other):
            if other == 0:
                return not self.terms
            return self._canon() == {(): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._canon().items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in self._sorted_exps():
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if isinstance(c, Cyclotomic):
                sign, body = "+", format_scalar(c)
                text = f"{body}*{mono}" if mono else body
            else:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if not mono:
                    text = format_scalar(mag)
                elif mag == 1:
                    text = mono
                else:
                    text = f"{format_scalar(mag)}*{mono}"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"SparsePoly({str(self)!r})"


# parsing ------------------------------------------------------------------

class PolySyntaxError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[[0-9,\s]*\])?)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        if m.group("num") is not None:
            out.append(("num", int(m.group("num"))))
        elif m.group("name") is not None:
            out.append(("name", re.sub(r"\s+", "", m.group("name"))))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, cyclotomic: int | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = cyclotomic

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise PolySyntaxError(f"expected {op!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> SparsePoly:
        if not self.toks:
            raise PolySyntaxError("empty polynomial")
        p = self.expr()
        if self.i != len(self.toks):
            raise PolySyntaxError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.unary()
            p = p * q if op == "*" else p / q
        return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer")
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return SparsePoly.const(Fraction(val))
        if kind == "name":
            if val == "w" and self.n is not None:
                return SparsePoly.const(zeta(self.n))
            return SparsePoly.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.take(")")
            return p
        raise PolySyntaxError(f"unexpected token {val!r}")


def parse(text: str, cyclotomic: int | None = None) -> SparsePoly:
    """Parse the text grammar; ``w`` means zeta_N when ``cyclotomic=N``."""
    return _Parser(text, cyclotomic).parse()


def parse_scalar(text: str, cyclotomic: int | None = None):
    p = parse(str(text), cyclotomic)
    if p.used_vars():
        raise PolySyntaxError(f"expected a scalar, got {text!r}")
    return p.constant_term()


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def poly_partial(p: SparsePoly, name: str) -> SparsePoly:
    return p.partial(name)


def product(items, start=None):
    return reduce(lambda a, b: a * b, items, start if start is not None else SparsePoly.one())

