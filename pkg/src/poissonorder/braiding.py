"""Braiding matrices of diagonal type and their Dynkin diagrams.

``BraidingMatrix`` has root-of-unity entries, ``ParamBraidingMatrix`` has unit
monomial entries ``p * nu**t``.  Both expose ``theta``, ``entry(i, j)`` and
``unit``, which is all the groupoid code needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Sequence, Tuple

from .cyclotomic import ONE, Monomial, RootOfUnity, parse_root
from .errors import DimensionError, ParseError

Vector = Tuple[int, ...]


def unit_vector(theta: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(theta))


class _SquareMatrix:
    entries: tuple

    @property
    def theta(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def _check_shape(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise DimensionError("braiding matrix must be square and non-empty")

    def bilinear(self, alpha: Sequence[int], beta: Sequence[int]):
        """``q(alpha, beta) = prod q_ij^(alpha_i beta_j)``."""
        n = self.theta
        if len(alpha) != n or len(beta) != n:
            raise DimensionError(f"vectors must have length {n}")
        acc = self.unit
        for i, a in enumerate(alpha):
            if not a:
                continue
            for j, b in enumerate(beta):
                if b:
                    acc = acc * self.entries[i][j] ** (a * b)
        return acc

    def tilde(self, i: int, j: int):
        return self.entries[i][j] * self.entries[j][i]

    def diagram_key(self) -> tuple:
        """Hashable Dynkin diagram: vertex labels and all ``q_ij q_ji`` (i<j)."""
        n = self.theta
        verts = tuple(self.entries[i][i] for i in range(n))
        edges = tuple(self.tilde(i, j) for i in range(n) for j in range(i + 1, n))
        return verts, edges

    def is_symmetric(self) -> bool:
        n = self.theta
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def is_connected(self) -> bool:
        n = self.theta
        seen, stack = {0}, [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and not self.tilde(i, j).is_one():
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


@dataclass(frozen=True)
class BraidingMatrix(_SquareMatrix):
    entries: Tuple[Tuple[RootOfUnity, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        self._check_shape()

    unit = ONE

    @cached_property
    def _integer_form(self):
        """Common denominator and integer numerators of the exponents."""
        den = lcm(*(x.exponent.denominator for row in self.entries for x in row))
        nums = tuple(tuple(x.exponent.numerator * (den // x.exponent.denominator) for x in row)
                     for row in self.entries)
        return den, nums

    def bilinear(self, alpha: Sequence[int], beta: Sequence[int]) -> RootOfUnity:
        n = self.theta
        if len(alpha) != n or len(beta) != n:
            raise DimensionError(f"vectors must have length {n}")
        den, nums = self._integer_form
        s = 0
        for i, a in enumerate(alpha):
            if a:
                row = nums[i]
                s += a * sum(row[j] * b for j, b in enumerate(beta) if b)
        return RootOfUnity(Fraction(s % den, den))

    def to_strings(self):
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_strings(cls, rows) -> "BraidingMatrix":
        try:
            return cls(tuple(tuple(parse_root(x) for x in row) for row in rows))
        except TypeError as exc:
            raise ParseError("entries must be a list of rows") from exc


@dataclass(frozen=True)
class ParamBraidingMatrix(_SquareMatrix):
    entries: Tuple[Tuple[Monomial, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        self._check_shape()

    unit = Monomial(ONE, 0)

    @property
    def T(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(m.exp for m in row) for row in self.entries)

    @property
    def coefficients(self) -> Tuple[Tuple[RootOfUnity, ...], ...]:
        return tuple(tuple(m.coeff for m in row) for row in self.entries)

    def to_json(self):
        return [[{"coeff": str(m.coeff), "exp": m.exp} for m in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows) -> "ParamBraidingMatrix":
        try:
            return cls(tuple(tuple(Monomial(parse_root(e["coeff"]), int(e["exp"])) for e in row)
                             for row in rows))
        except (TypeError, KeyError, ValueError) as exc:
            raise ParseError(f"bad parametric entry: {exc}") from exc

    @classmethod
    def from_exponents(cls, coeffs, T) -> "ParamBraidingMatrix":
        return cls(tuple(tuple(Monomial(c, t) for c, t in zip(cr, tr)) for cr, tr in zip(coeffs, T)))


def bilinear(q, alpha: Sequence[int], beta: Sequence[int]):
    return q.bilinear(alpha, beta)


def evaluate(bq: ParamBraidingMatrix, xi: RootOfUnity) -> BraidingMatrix:
    """Entry ``(i, j)`` becomes ``p_ij * xi**t_ij``."""
    if xi.order() < 2:
        raise DimensionError("specialization point must have order at least 2")
    return BraidingMatrix(tuple(tuple(m.evaluate(xi) for m in row) for row in bq.entries))


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: Tuple[object, ...]
    edges: Dict[Tuple[int, int], object]
    symmetric: bool
    connected: bool

    def to_json(self):
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[i, j, str(x)] for (i, j), x in sorted(self.edges.items())],
            "symmetric": self.symmetric,
            "connected": self.connected,
        }


def dynkin_diagram(q) -> DynkinDiagram:
    n = q.theta
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            t = q.tilde(i, j)
            if not t.is_one():
                edges[(i, j)] = t
    return DynkinDiagram(tuple(q.entry(i, i) for i in range(n)), edges,
                         q.is_symmetric(), q.is_connected())


def direct_sum(a: BraidingMatrix, b: BraidingMatrix) -> BraidingMatrix:
    n, m = a.theta, b.theta
    rows = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(a.entry(i, j))
            elif i >= n and j >= n:
                row.append(b.entry(i - n, j - n))
            else:
                row.append(ONE)
        rows.append(tuple(row))
    return BraidingMatrix(tuple(rows))
