"""Catalog of one-parameter braiding matrices, one per Weyl-equivalence class.

Each family fixes the Dynkin diagram of ``q(nu)``: vertex labels ``p_i nu^(t_ii)``
and edge labels ``q_ij q_ji = p~_ij nu^(b_ij)``.  The remaining freedom is the
split of every edge exponent into ``t_ij + t_ji = b_ij``.  ``FamilyInstance.lift``
turns a choice of upper exponents ``t_ij`` (i < j) into a ``ParamBraidingMatrix``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .braiding import ParamBraidingMatrix, evaluate
from .cyclotomic import MINUS_ONE, ONE, Monomial, RootOfUnity, make_root
from .errors import UnsupportedParameters
from .groupoid import positive_roots

Label = Tuple[RootOfUnity, int]


@dataclass
class FamilyInstance:
    name: str
    params: Dict[str, int]
    vertices: List[Label]
    edges: Dict[Tuple[int, int], Label]
    N: int
    expected_types: Tuple[str, ...]
    symmetrizer: Optional[Tuple[int, ...]] = None
    fermionic: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def theta(self) -> int:
        return len(self.vertices)

    @property
    def xi(self) -> RootOfUnity:
        return make_root(1, self.N)

    def free_pairs(self) -> List[Tuple[int, int]]:
        n = self.theta
        return [(i, j) for i in range(n) for j in range(i + 1, n)]

    def edge(self, i: int, j: int) -> Label:
        return self.edges.get((min(i, j), max(i, j)), (ONE, 0))

    def lift(self, upper: Optional[Dict[Tuple[int, int], int]] = None,
             split: Optional[Dict[Tuple[int, int], RootOfUnity]] = None) -> ParamBraidingMatrix:
        """Matrix with ``t_ij = upper[i, j]`` and ``t_ji = b_ij - t_ij`` for i < j.

        ``split[i, j]`` is the coefficient put on the upper entry; the lower
        entry gets the complementary coefficient.
        """
        upper = upper or {}
        split = split or {}
        n = self.theta
        rows = [[None] * n for _ in range(n)]
        for i, (p, t) in enumerate(self.vertices):
            rows[i][i] = Monomial(p, t)
        for i in range(n):
            for j in range(i + 1, n):
                pt, b = self.edge(i, j)
                t = upper.get((i, j), 0)
                c = split.get((i, j), ONE)
                rows[i][j] = Monomial(c, t)
                rows[j][i] = Monomial(pt * c.inverse(), b - t)
        return ParamBraidingMatrix(tuple(tuple(r) for r in rows))

    def evaluated(self, upper=None, split=None):
        return evaluate(self.lift(upper, split), self.xi)

    def descriptor(self) -> Dict[str, object]:
        d = {"family": self.name, "N": self.N}
        d.update(self.params)
        return d


def _chain(n: int, vert: Sequence[Label], edges: Sequence[Label]) -> Dict[Tuple[int, int], Label]:
    return {(i, i + 1): edges[i] for i in range(n - 1)}


def _nu(t: int, c: RootOfUnity = ONE) -> Label:
    return (c, t)


CARTAN_LETTERS = "ABCDEFG"


def standard_cartan_matrix(letter: str, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix ``a_ij = <alpha_j, alpha_i^vee>`` in the ordering used by the tables.

    B: last vertex short.  C: last vertex long.  D: vertices n-1 and n hang off n-2.
    E: chain 1..n-1 with vertex n attached to vertex n-3.  F4: vertices 1, 2 short.
    G2: vertex 1 short.
    """
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B" and n >= 2:
            link(n - 2, n - 1, -1, -2)
        if letter == "C" and n >= 2:
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 4, n - 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)
    else:
        raise ValueError(letter)
    return tuple(tuple(r) for r in a)


def _symmetrizer(letter: str, n: int) -> Tuple[int, ...]:
    if letter == "B":
        return (2,) * (n - 1) + (1,)
    if letter == "C":
        return (1,) * (n - 1) + (2,)
    if letter == "F":
        return (1, 1, 2, 2)
    if letter == "G":
        return (1, 3)
    return (1,) * n


CARTAN_RANGES = {"A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None),
                 "E": (6, 8), "F": (4, 4), "G": (2, 2)}
CARTAN_MIN_N = {"A": 2, "B": 3, "C": 3, "D": 2, "E": 2, "F": 3, "G": 4}


def cartan_family(letter: str, theta: int, N: int) -> FamilyInstance:
    if letter not in CARTAN_RANGES:
        raise UnsupportedParameters(f"unknown Cartan type {letter}")
    lo, hi = CARTAN_RANGES[letter]
    if theta < lo or (hi is not None and theta > hi):
        raise UnsupportedParameters(f"rank {theta} outside the range of type {letter}")
    if N < CARTAN_MIN_N[letter]:
        raise UnsupportedParameters(f"type {letter} needs N >= {CARTAN_MIN_N[letter]}")
    a = standard_cartan_matrix(letter, theta)
    d = _symmetrizer(letter, theta)
    verts = [_nu(d[i]) for i in range(theta)]
    edges = {(i, j): _nu(d[i] * a[i][j]) for i in range(theta) for j in range(i + 1, theta)
             if a[i][j]}
    expected = f"{letter}{theta}"
    if N % 2 == 0 and letter in "BC":
        expected = f"{'C' if letter == 'B' else 'B'}{theta}"
    return FamilyInstance("cartan", {"type": letter, "theta": theta}, verts, edges, N,
                          (expected,), symmetrizer=d)


def super_a(theta: int, k: int, N: int) -> FamilyInstance:
    if theta < 2 or not 1 <= k <= (theta + 1) // 2:
        raise UnsupportedParameters("super A needs theta >= 2 and 1 <= k <= (theta+1)//2")
    if N <= 2:
        raise UnsupportedParameters("super A needs N > 2")
    k0 = k - 1
    verts = [_nu(-1) if i < k0 else (_nu(0, MINUS_ONE) if i == k0 else _nu(1)) for i in range(theta)]
    edges = {(i, i + 1): _nu(1 if i < k0 else -1) for i in range(theta - 1)}
    return FamilyInstance("superA", {"theta": theta, "k": k}, verts, edges, N,
                          (f"A{k - 1}xA{theta - k}",), fermionic=k0)


def super_b(theta: int, k: int, N: int) -> FamilyInstance:
    if theta < 2 or not 1 <= k <= theta - 1:
        raise UnsupportedParameters("super B needs 1 <= k <= theta-1")
    if N < 3 or N == 4:
        raise UnsupportedParameters("super B needs N not in {1, 2, 4}")
    k0 = k - 1
    verts = []
    for i in range(theta):
        if i < k0:
            verts.append(_nu(-2))
        elif i == k0:
            verts.append(_nu(0, MINUS_ONE))
        elif i < theta - 1:
            verts.append(_nu(2))
        else:
            verts.append(_nu(1))
    edges = {(i, i + 1): _nu(2 if i < k0 else -2) for i in range(theta - 1)}
    return FamilyInstance("superB", {"theta": theta, "k": k}, verts, edges, N,
                          (f"C{k}xB{theta - k}", f"C{k}xC{theta - k}"), fermionic=k0)


def super_d(theta: int, k: int, N: int) -> FamilyInstance:
    if theta < 3 or not 2 <= k <= theta - 1:
        raise UnsupportedParameters("super D needs 2 <= k <= theta-1")
    if N <= 2:
        raise UnsupportedParameters("super D needs N > 2")
    k0 = k - 1
    verts = []
    for i in range(theta):
        if i < k0:
            verts.append(_nu(-1))
        elif i == k0:
            verts.append(_nu(0, MINUS_ONE))
        elif i < theta - 1:
            verts.append(_nu(1))
        else:
            verts.append(_nu(2))
    edges = {}
    for i in range(theta - 1):
        if i < k0:
            edges[(i, i + 1)] = _nu(1)
        elif i < theta - 2:
            edges[(i, i + 1)] = _nu(-1)
        else:
            edges[(i, i + 1)] = _nu(-2)
    return FamilyInstance("superD", {"theta": theta, "k": k}, verts, edges, N,
                          (f"D{k}xC{theta - k}", f"D{k}xB{theta - k}"), fermionic=k0)


def super_d21(d1: int, d3: int, N: int) -> FamilyInstance:
    if d1 < 1 or d3 < 1:
        raise UnsupportedParameters("d1, d3 must be positive")
    if N < 2 or d1 % N == 0 or d3 % N == 0 or (d1 + d3) % N == 0:
        raise UnsupportedParameters("D(2,1;alpha) needs r, s, rs != 1")
    if gcd(gcd(d1, d3), N) != 1:
        raise UnsupportedParameters("xi must generate the group spanned by r and s")
    verts = [_nu(d1), _nu(0, MINUS_ONE), _nu(d3)]
    edges = {(0, 1): _nu(-d1), (1, 2): _nu(-d3)}
    return FamilyInstance("D21", {"d1": d1, "d3": d3}, verts, edges, N, ("A1xA1xA1",), fermionic=1)


def super_f4(N: int) -> FamilyInstance:
    if N <= 2:
        raise UnsupportedParameters("F(4) needs N > 2")
    verts = [_nu(2), _nu(2), _nu(1), _nu(0, MINUS_ONE)]
    edges = {(0, 1): _nu(-2), (1, 2): _nu(-2), (2, 3): _nu(-1)}
    return FamilyInstance("F4super", {}, verts, edges, N, ("A1xB3",), fermionic=3)


def super_g3(N: int) -> FamilyInstance:
    if N <= 3:
        raise UnsupportedParameters("G(3) needs N > 3")
    verts = [_nu(0, MINUS_ONE), _nu(1), _nu(3)]
    edges = {(0, 1): _nu(-1), (1, 2): _nu(-3)}
    return FamilyInstance("G3super", {}, verts, edges, N, ("A1xG2",), fermionic=0)


def wk4(N: int) -> FamilyInstance:
    if N <= 2:
        raise UnsupportedParameters("wk(4) needs N > 2")
    verts = [_nu(1), _nu(1), _nu(0, MINUS_ONE), _nu(-1, MINUS_ONE)]
    edges = {(0, 1): _nu(-1), (1, 2): _nu(-1), (2, 3): _nu(1, MINUS_ONE)}
    return FamilyInstance("wk4", {}, verts, edges, N, ("A2xA2",), fermionic=2)


def br2(N: int, zeta: int = 1) -> FamilyInstance:
    if N == 3 or N < 2:
        raise UnsupportedParameters("br(2) needs N != 3")
    if zeta not in (1, 2):
        raise UnsupportedParameters("zeta must be a primitive cube root of unity (1 or 2)")
    verts = [(make_root(zeta, 3), 0), _nu(1)]
    edges = {(0, 1): _nu(-1)}
    return FamilyInstance("br2", {"zeta": zeta}, verts, edges, N, ("A1xA1",))


def family(name: str, **params) -> FamilyInstance:
    """Build a catalog entry by name.

    Names: ``cartan`` (type, theta, N), ``superA``/``superB``/``superD``
    (theta, k, N), ``D21`` (d1, d3, N), ``F4super``, ``G3super``, ``wk4``,
    ``br2`` (N, optional zeta).
    """
    try:
        N = int(params.pop("N"))
        if name == "cartan":
            return cartan_family(str(params["type"]), int(params["theta"]), N)
        if name == "superA":
            return super_a(int(params["theta"]), int(params["k"]), N)
        if name == "superB":
            return super_b(int(params["theta"]), int(params["k"]), N)
        if name == "superD":
            return super_d(int(params["theta"]), int(params["k"]), N)
        if name == "D21":
            return super_d21(int(params["d1"]), int(params["d3"]), N)
        if name == "F4super":
            return super_f4(N)
        if name == "G3super":
            return super_g3(N)
        if name == "wk4":
            return wk4(N)
        if name == "br2":
            return br2(N, int(params.get("zeta", 1)))
    except KeyError as exc:
        raise UnsupportedParameters(f"missing parameter {exc} for family {name}") from exc
    raise UnsupportedParameters(f"unknown family {name!r}")


def table_rows(max_rank: int = 5) -> List[Tuple[str, Dict[str, int]]]:
    """One representative parameter set per table row shape, ranks up to ``max_rank``."""
    rows: List[Tuple[str, Dict[str, int]]] = []
    for letter in "ABCDEFG":
        lo, hi = CARTAN_RANGES[letter]
        top = max_rank if hi is None else min(hi, max_rank)
        for theta in range(lo, top + 1):
            rows.append(("cartan", {"type": letter, "theta": theta}))
    for theta in range(2, max_rank + 1):
        for k in range(1, (theta + 1) // 2 + 1):
            rows.append(("superA", {"theta": theta, "k": k}))
        for k in range(1, theta):
            rows.append(("superB", {"theta": theta, "k": k}))
        for k in range(2, theta):
            rows.append(("superD", {"theta": theta, "k": k}))
    rows.append(("D21", {"d1": 1, "d3": 2}))
    rows.append(("F4super", {}))
    rows.append(("G3super", {}))
    rows.append(("wk4", {}))
    rows.append(("br2", {}))
    return rows


def admissible(name: str, params: Dict[str, int], N: int) -> bool:
    """Constructible, and the evaluated root set equals the generic one.

    The second test rejects orders where the specialization leaves the
    Weyl-equivalence class (e.g. F4super at N=3 loses a root).
    """
    try:
        fam = family(name, N=N, **params)
    except UnsupportedParameters:
        return False
    generic = positive_roots(fam.lift())
    special = positive_roots(fam.evaluated())
    return set(generic.roots) == set(special.roots)
