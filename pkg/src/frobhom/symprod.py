"""Point multisets on a finite space and the functionals they define.

A functional on the algebra of functions on ``m`` points is a Frobenius
n-homomorphism exactly when it is ``phi -> phi(x_1) + ... + phi(x_n)`` for a
multiset of n points; :func:`decompose` reads the multiset back.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .algebra import FinAlgebra, Functional, build_algebra
from .errors import InputError, NotAnNHomomorphism, UnknownPoint
from .frobenius import PhiEvaluator, is_n_homomorphism
from .scalars import format_scalar

__all__ = [
    "FiniteSpace",
    "PointMultiset",
    "evaluation_functional",
    "decompose",
    "all_multisets",
]


@dataclass(frozen=True)
class FiniteSpace:
    m: int
    labels: tuple = ()

    def __post_init__(self):
        if self.m < 1:
            raise InputError("a finite space needs at least one point")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"p{i + 1}" for i in range(self.m)))
        elif len(self.labels) != self.m:
            raise InputError(f"{len(self.labels)} labels for {self.m} points")

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownPoint(f"point {label!r} is not in the space", witness=label) from None

    def algebra(self) -> FinAlgebra:
        constants = [(i, i, i, 1) for i in range(self.m)]
        return build_algebra(constants, [1] * self.m, basis=list(self.labels), dim=self.m,
                             check=False)


class PointMultiset(Counter):
    """Multiset of point labels (a point of the n-th symmetric product)."""

    @property
    def n(self) -> int:
        return sum(self.values())

    def to_json(self) -> dict:
        return {"multiset": {k: v for k, v in sorted(self.items()) if v}}

    def __eq__(self, other):
        return dict((k, v) for k, v in self.items() if v) == \
            dict((k, v) for k, v in other.items() if v)

    def __hash__(self):
        return hash(frozenset((k, v) for k, v in self.items() if v))


def evaluation_functional(pts, space: FiniteSpace) -> Functional:
    """``f(delta_x)`` = multiplicity of x in the multiset."""
    pts = pts if isinstance(pts, Counter) else Counter(pts)
    values = [0] * space.m
    for label, mult in pts.items():
        if mult < 0:
            raise InputError(f"negative multiplicity for {label!r}")
        values[space.index(label)] += mult
    return Functional(tuple(values))


def decompose(f: Functional, space: FiniteSpace, n: int) -> PointMultiset:
    """The multiset whose evaluation functional is f, if f is an n-homomorphism.

    Checks the weights ``f(delta_x)`` first (nonnegative integers summing to
    n), then that ``Phi_{n+1}(f)`` vanishes.  A weight failure reports the
    failing condition and, under ``"phi"``, a nonzero ``Phi_{n+1}`` value.
    """
    if len(f) != space.m:
        raise InputError(f"functional has {len(f)} values, space has {space.m} points")
    if n < 1:
        raise InputError("n must be >= 1")
    ev = PhiEvaluator(space.algebra(), f)
    for i, w in enumerate(f.values):
        if not isinstance(w, Fraction) or w.denominator != 1 or w < 0:
            raise NotAnNHomomorphism(
                f"weight at {space.labels[i]} is not a nonnegative integer",
                witness={"condition": "bad weight", "point": space.labels[i],
                         "value": format_scalar(w), "phi": _phi_witness(ev, n)})
    total = sum(f.values, Fraction(0))
    if total != n:
        raise NotAnNHomomorphism(
            f"weights sum to {format_scalar(total)}, not {n}",
            witness={"condition": "bad sum", "sum": format_scalar(total), "n": n,
                     "phi": _phi_witness(ev, n)})
    ok, witness = is_n_homomorphism(ev, n)
    if not ok:
        raise NotAnNHomomorphism(f"f is not a Frobenius {n}-homomorphism", witness=witness)
    return PointMultiset({space.labels[i]: int(w) for i, w in enumerate(f.values) if w})


def _phi_witness(ev: PhiEvaluator, n: int):
    """The vanishing test is still run after a weight failure so that the
    error also shows a nonzero value of ``Phi_{n+1}`` (None if there is none)."""
    return is_n_homomorphism(ev, n)[1]


def all_multisets(space: FiniteSpace, n: int) -> list:
    return [PointMultiset(c) for c in combinations_with_replacement(space.labels, n)]


def decompose_json(data) -> dict:
    """CLI form: ``{"m": 3, "n": 2, "values": ["1", "1", "0"]}``."""
    from .poly import parse_scalar

    if isinstance(data, str):
        data = json.loads(data)
    try:
        space = FiniteSpace(int(data["m"]), tuple(data.get("labels", ())))
        n = int(data["n"])
        values = tuple(parse_scalar(v) if isinstance(v, str) else Fraction(v)
                       for v in data["values"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad decompose input: {exc}") from None
    return decompose(Functional(values), space, n).to_json()
