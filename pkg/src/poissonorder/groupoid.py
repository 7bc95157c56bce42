"""Generalized Cartan matrices, reflections, the Weyl groupoid and its roots.

Objects are deduplicated either by Dynkin diagram (the default, used by the
analysis pipeline) or by exact matrix equality.  Roots, Cartan matrices and
the reflection maps depend only on the diagram, so the diagram quotient
computes the same root systems with far fewer objects when the matrices are
not symmetric.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .braiding import Vector, unit_vector
from .cyclotomic import q_number_is_zero
from .errors import LikelyInfinite, NotArithmetic

DEFAULT_CAP_OBJECTS = 4096
DEFAULT_CAP_ROOTS = 16384

CartanMatrix = Tuple[Tuple[int, ...], ...]


def default_caps() -> Tuple[int, int]:
    """Caps from ``NP_CAPS`` ("objects,roots") or the built-in defaults."""
    env = os.environ.get("NP_CAPS")
    if env:
        try:
            a, b = (int(x) for x in env.split(","))
            return a, b
        except ValueError:
            pass
    return DEFAULT_CAP_OBJECTS, DEFAULT_CAP_ROOTS


def cartan_entry(q, i: int, j: int) -> int:
    if i == j:
        return 2
    qii = q.entry(i, i)
    qt = q.tilde(i, j)
    bound = max(qii.scan_hint(), qt.scan_hint()) * 8 + 8
    power = q.unit
    for n in range(bound + 1):
        if q_number_is_zero(n + 1, qii) or (power * qt).is_one():
            return -n
        power = power * qii
    raise NotArithmetic(f"no finite Cartan entry c[{i}][{j}] (scan bound {bound})")


def generalized_cartan_matrix(q) -> CartanMatrix:
    n = q.theta
    return tuple(tuple(cartan_entry(q, i, j) for j in range(n)) for i in range(n))


def reflect_vector(c: CartanMatrix, i: int, v: Sequence[int]) -> Vector:
    """``s_i(v)`` where ``s_i(alpha_j) = alpha_j - c_ij alpha_i``."""
    shift = sum(c[i][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i] -= shift
    return tuple(out)


def reflection_matrix(c: CartanMatrix, i: int) -> Tuple[Tuple[int, ...], ...]:
    """Matrix whose column j is ``s_i(alpha_j)``."""
    n = len(c)
    cols = [reflect_vector(c, i, unit_vector(n, j)) for j in range(n)]
    return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))


def rho(q, i: int, c: Optional[CartanMatrix] = None):
    """The reflected matrix ``rho_i(q)_{jk} = q(s_i alpha_j, s_i alpha_k)``."""
    if c is None:
        c = generalized_cartan_matrix(q)
    n = q.theta
    e = q.entries
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            row.append(e[j][k] * e[i][k] ** (-c[i][j]) * e[j][i] ** (-c[i][k])
                       * e[i][i] ** (c[i][j] * c[i][k]))
        rows.append(tuple(row))
    return type(q)(tuple(rows))


def reflect(q, i: int):
    c = generalized_cartan_matrix(q)
    return reflection_matrix(c, i), rho(q, i, c)


@dataclass
class Groupoid:
    objects: list
    cartan: List[CartanMatrix]
    rho: List[List[int]]
    parent: List[Optional[Tuple[int, int]]]
    quotient: str

    def __len__(self):
        return len(self.objects)

    def edges(self) -> List[Tuple[int, int, int]]:
        out = []
        for p, row in enumerate(self.rho):
            for i, p2 in enumerate(row):
                if p <= p2:
                    out.append((p, p2, i))
        return out

    def path_from_root(self, p: int) -> List[int]:
        """Reflection word ``[i1, ..., ik]`` with ``rho_ik ... rho_i1(q) = object p``."""
        word = []
        while self.parent[p] is not None:
            prev, i = self.parent[p]
            word.append(i)
            p = prev
        return word[::-1]

    def to_dot(self) -> str:
        lines = ["graph groupoid {"]
        for p, q in enumerate(self.objects):
            label = " ".join(str(q.entry(i, i)) for i in range(q.theta))
            lines.append(f'  n{p} [label="{p}: {label}"];')
        for p, p2, i in self.edges():
            lines.append(f'  n{p} -- n{p2} [label="{i + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _key(q, quotient: str):
    return q.diagram_key() if quotient == "diagram" else q.entries


def enumerate_groupoid(q, cap_objects: Optional[int] = None, quotient: str = "diagram") -> Groupoid:
    if cap_objects is None:
        cap_objects = default_caps()[0]
    if quotient not in ("diagram", "matrix"):
        raise ValueError(quotient)
    n = q.theta
    objects = [q]
    index = {_key(q, quotient): 0}
    cartan = [generalized_cartan_matrix(q)]
    table: List[List[Optional[int]]] = [[None] * n]
    parent: List[Optional[Tuple[int, int]]] = [None]
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for i in range(n):
            if table[p][i] is not None:
                continue
            r = rho(objects[p], i, cartan[p])
            key = _key(r, quotient)
            p2 = index.get(key)
            if p2 is None:
                if len(objects) >= cap_objects:
                    raise LikelyInfinite(f"Weyl groupoid exceeds {cap_objects} objects")
                p2 = len(objects)
                index[key] = p2
                objects.append(r)
                cartan.append(generalized_cartan_matrix(r))
                table.append([None] * n)
                parent.append((p, i))
                queue.append(p2)
            table[p][i] = p2
            if table[p2][i] is None:
                table[p2][i] = p
            elif table[p2][i] != p:
                raise NotArithmetic(f"rho_{i + 1} is not an involution on this class")
    return Groupoid(objects, cartan, [list(r) for r in table], parent, quotient)


@dataclass
class RootSystemFibration:
    """Positive roots of every object, with one witness derivation per root.

    ``provenance[p][beta] = (word, j)`` means
    ``beta = s_{w1} s_{w2} ... s_{wk}(alpha_j)`` where each reflection is taken
    at the object reached so far and ``alpha_j`` is simple at the end.
    """

    groupoid: Groupoid
    roots: List[Dict[Vector, Tuple[Tuple[int, ...], int]]]

    def object_after(self, p: int, word: Sequence[int]) -> int:
        for i in word:
            p = self.groupoid.rho[p][i]
        return p


def root_fibration(gp: Groupoid, cap_roots: Optional[int] = None) -> RootSystemFibration:
    if cap_roots is None:
        cap_roots = default_caps()[1]
    n = gp.objects[0].theta
    simple = [unit_vector(n, j) for j in range(n)]
    S: List[Dict[Vector, Tuple[Tuple[int, ...], int]]] = []
    queue = deque()
    for p in range(len(gp)):
        S.append({simple[j]: ((), j) for j in range(n)})
        queue.extend((p, simple[j]) for j in range(n))
    while queue:
        p, beta = queue.popleft()
        word, j = S[p][beta]
        for i in range(n):
            if beta == simple[i]:
                continue
            p2 = gp.rho[p][i]
            gamma = reflect_vector(gp.cartan[p2], i, beta)
            if min(gamma) < 0 or gamma in S[p2]:
                continue
            S[p2][gamma] = ((i,) + word, j)
            if len(S[p2]) > cap_roots:
                raise LikelyInfinite(f"root set exceeds {cap_roots} roots")
            queue.append((p2, gamma))
    return RootSystemFibration(gp, S)


def height_order(v: Vector):
    return (sum(v), tuple(-x for x in v))


@dataclass
class RootDatum:
    q: object
    roots: Tuple[Vector, ...]
    orders: Dict[Vector, int]
    provenance: Dict[Vector, Tuple[Tuple[int, ...], int]]
    cartan_flags: Dict[Vector, bool] = field(default_factory=dict)

    @property
    def ell(self) -> int:
        return len(self.roots)


def root_datum(fib: RootSystemFibration, p: int = 0) -> RootDatum:
    q = fib.groupoid.objects[p]
    roots = tuple(sorted(fib.roots[p], key=height_order))
    orders = {}
    for b in roots:
        o = q.bilinear(b, b).order()
        orders[b] = o
    return RootDatum(q, roots, orders, dict(fib.roots[p]))


def positive_roots(q, cap_objects: Optional[int] = None, cap_roots: Optional[int] = None) -> RootDatum:
    gp = enumerate_groupoid(q, cap_objects)
    return root_datum(root_fibration(gp, cap_roots))
