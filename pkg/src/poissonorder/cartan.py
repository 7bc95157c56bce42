"""Cartan roots, the rescaled root system and the semisimple type of g_q."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .braiding import Vector, unit_vector
from .cyclotomic import MINUS_ONE
from .errors import InternalInvariantViolation, NotARootSystem, NotFiniteType
from .groupoid import (CartanMatrix, RootSystemFibration, height_order, reflect_vector,
                       root_datum)


def is_cartan_vertex(q, c: CartanMatrix, i: int) -> bool:
    qii = q.entry(i, i)
    return all(q.tilde(i, j) == qii ** c[i][j] for j in range(q.theta) if j != i)


def fibration_flags(fib: RootSystemFibration) -> List[Dict[Vector, bool]]:
    """Cartan flags of every root at every object, revalidated along all reflections."""
    gp = fib.groupoid
    n = gp.objects[0].theta
    vertex = [[is_cartan_vertex(gp.objects[p], gp.cartan[p], i) for i in range(n)]
              for p in range(len(gp))]
    flags: List[Dict[Vector, bool]] = []
    for p, roots in enumerate(fib.roots):
        f = {}
        for beta, (word, j) in roots.items():
            f[beta] = vertex[fib.object_after(p, word)][j]
        flags.append(f)
    for p in range(len(gp)):
        qp = gp.objects[p]
        for i in range(n):
            p2 = gp.rho[p][i]
            q2 = gp.objects[p2]
            ai = unit_vector(n, i)
            if len(fib.roots[p2]) != len(fib.roots[p]):
                raise InternalInvariantViolation("root sets of adjacent objects differ in size")
            for beta in fib.roots[p2]:
                if beta == ai:
                    continue
                gamma = reflect_vector(gp.cartan[p], i, beta)
                if gamma not in fib.roots[p]:
                    raise InternalInvariantViolation(f"s_{i + 1} does not map roots onto roots")
                if flags[p][gamma] != flags[p2][beta]:
                    raise InternalInvariantViolation(f"inconsistent Cartan flag for {gamma}")
                if qp.bilinear(gamma, gamma).order() != q2.bilinear(beta, beta).order():
                    raise InternalInvariantViolation(f"order of {gamma} not preserved by s_{i + 1}")
    return flags


@dataclass
class CartanRootData:
    O_plus: Tuple[Vector, ...]
    orders: Dict[Vector, int]
    underline_O_plus: Tuple[Vector, ...]
    Pi: Tuple[Vector, ...]
    Pi_roots: Tuple[Vector, ...]
    Ntt: int
    eta: Optional[Vector] = None
    eta_k: Optional[int] = None
    eta_order: Optional[int] = None
    Pi_tilde_roots: Tuple[Vector, ...] = ()
    Pi_tilde_scales: Tuple[int, ...] = ()

    @property
    def Pi_tilde(self) -> Tuple[Vector, ...]:
        return tuple(tuple(s * x for x in b) for b, s in zip(self.Pi_tilde_roots, self.Pi_tilde_scales))

    @property
    def Q_lattice(self) -> Tuple[Vector, ...]:
        return self.Pi

    def scale(self, beta: Vector) -> int:
        return self.orders[beta]


def indecomposables(vectors: Sequence[Vector]) -> List[Vector]:
    s = set(vectors)
    out = []
    for v in vectors:
        if not any(tuple(a - b for a, b in zip(v, u)) in s for u in vectors if u != v):
            out.append(v)
    return out


def super_a_match(q) -> Optional[Tuple[int, bool]]:
    """If the diagram of ``q`` has the super A table shape, return ``(k, reversed)``.

    Shape: ``xi^-1`` vertices before k joined by ``xi``, ``-1`` at k, ``xi``
    vertices after k joined by ``xi^-1``, with ``ord xi > 2``.
    """
    n = q.theta
    if n < 2:
        return None
    for rev in (False, True):
        idx = list(range(n))[::-1] if rev else list(range(n))
        verts = [q.entry(i, i) for i in idx]
        minus = [t for t, v in enumerate(verts) if v == MINUS_ONE]
        for k0 in minus:
            if not 1 <= k0 + 1 <= (n + 1) // 2:
                continue
            xi = verts[k0 + 1] if k0 + 1 < n else verts[k0 - 1].inverse()
            if xi.order() <= 2:
                continue
            ok = True
            for t in range(n):
                want = xi.inverse() if t < k0 else (MINUS_ONE if t == k0 else xi)
                if verts[t] != want:
                    ok = False
            for s in range(n):
                for t in range(s + 1, n):
                    e = q.tilde(idx[s], idx[t])
                    if t == s + 1:
                        want = xi if s < k0 else xi.inverse()
                        ok = ok and e == want
                    else:
                        ok = ok and e.is_one()
            if ok:
                return k0 + 1, rev
    return None


def eta_vector(theta: int, k: int) -> Vector:
    return tuple(1 if i < k else i - k + 2 for i in range(theta))


def locate_eta(fib: RootSystemFibration) -> Optional[Tuple[Vector, int]]:
    """Find a super A shaped object in the class and carry eta back to object 0."""
    gp = fib.groupoid
    n = gp.objects[0].theta
    for p, obj in enumerate(gp.objects):
        m = super_a_match(obj)
        if m is None:
            continue
        k, rev = m
        eta = eta_vector(n, k)
        if rev:
            eta = eta[::-1]
        word = gp.path_from_root(p)
        objs = [0]
        for i in word:
            objs.append(gp.rho[objs[-1]][i])
        v = eta
        for step in range(len(word) - 1, -1, -1):
            v = reflect_vector(gp.cartan[objs[step]], word[step], v)
        return v, k
    return None


def cartan_roots(fib: RootSystemFibration, p: int = 0,
                 flags: Optional[List[Dict[Vector, bool]]] = None) -> CartanRootData:
    if flags is None:
        flags = fibration_flags(fib)
    rd = root_datum(fib, p)
    q = rd.q
    O_plus = tuple(b for b in rd.roots if flags[p][b])
    orders = dict(rd.orders)
    underline = tuple(tuple(orders[b] * x for x in b) for b in O_plus)
    back = dict(zip(underline, O_plus))
    Pi = tuple(sorted(indecomposables(list(underline)), key=lambda v: height_order(back[v])))
    Pi_roots = tuple(back[v] for v in Pi)
    Ntt = 1
    for b in rd.roots:
        Ntt = lcm(Ntt, orders[b])
    data = CartanRootData(O_plus, orders, underline, Pi, Pi_roots, Ntt)
    tilde_roots = list(Pi_roots)
    tilde_scales = [orders[b] for b in Pi_roots]
    located = locate_eta(fib) if p == 0 else None
    if located is not None:
        eta, k = located
        data.eta = eta
        data.eta_k = k
        data.eta_order = q.bilinear(eta, eta).order()
        tilde_roots.append(eta)
        tilde_scales.append(Ntt)
    data.Pi_tilde_roots = tuple(tilde_roots)
    data.Pi_tilde_scales = tuple(tilde_scales)
    return data


@dataclass
class CentralityVerdict:
    passed: bool
    violations: List[Tuple[int, Vector]] = field(default_factory=list)


def check_centrality(q, crd: CartanRootData) -> CentralityVerdict:
    """``q(alpha_i, beta)^(N_beta) = 1`` for every i and every rescaled beta in Pi."""
    n = q.theta
    bad = []
    for b in crd.Pi_roots:
        for i in range(n):
            if not (q.bilinear(unit_vector(n, i), b) ** crd.orders[b]).is_one():
                bad.append((i, b))
    return CentralityVerdict(not bad, bad)


def check_centrality_full(q, crd: CartanRootData) -> CentralityVerdict:
    """The same condition over every positive Cartan root."""
    n = q.theta
    bad = []
    for b in crd.O_plus:
        for i in range(n):
            if not (q.bilinear(unit_vector(n, i), b) ** crd.orders[b]).is_one():
                bad.append((i, b))
    return CentralityVerdict(not bad, bad)


# rescaled root system -------------------------------------------------------

def _full_set(crd: CartanRootData) -> set:
    s = set(crd.underline_O_plus)
    s |= {tuple(-x for x in v) for v in crd.underline_O_plus}
    return s


def pairing(roots: set, beta: Vector, gamma: Vector) -> int:
    """``<gamma, beta^vee>`` from the beta-string through gamma inside ``roots``."""
    zero = tuple(0 for _ in beta)
    ok = roots | {zero}
    r = 0
    while tuple(g - (r + 1) * b for g, b in zip(gamma, beta)) in ok:
        r += 1
    p = 0
    while tuple(g + (p + 1) * b for g, b in zip(gamma, beta)) in ok:
        p += 1
    return r - p


def cartan_matrix_of_g(crd: CartanRootData) -> CartanMatrix:
    """Cartan matrix on Pi, entries ``c[b][g] = <g, b^vee>`` by root strings."""
    if not crd.Pi:
        raise NotARootSystem("no Cartan roots")
    roots = _full_set(crd)
    n = len(crd.Pi)
    c = tuple(tuple(pairing(roots, crd.Pi[a], crd.Pi[b]) for b in range(n)) for a in range(n))
    for a in range(n):
        if c[a][a] != 2:
            raise NotARootSystem("diagonal entry differs from 2")
        for b in range(n):
            if a != b and (c[a][b] > 0 or (c[a][b] == 0) != (c[b][a] == 0)):
                raise NotARootSystem("root strings do not give a Cartan matrix")
    return c


def reflection_closure_holds(crd: CartanRootData) -> bool:
    """Every reflection ``s_b`` (b in Pi) permutes the rescaled root set."""
    roots = _full_set(crd)
    for b in crd.Pi:
        for g in roots:
            if g == b or g == tuple(-x for x in b):
                continue
            k = pairing(roots, b, g)
            if tuple(x - k * y for x, y in zip(g, b)) not in roots:
                return False
    return True


def simple_coordinates(crd: CartanRootData, v: Vector) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates of ``v`` in the basis Pi (None if not in their span)."""
    from .lattice import solve_rational

    cols = [list(p) for p in crd.Pi]
    return solve_rational(cols, list(v))


def basis_property_holds(crd: CartanRootData) -> bool:
    for v in crd.underline_O_plus:
        x = simple_coordinates(crd, v)
        if x is None or any(c < 0 or c.denominator != 1 for c in x):
            return False
    return True


# type recognition -----------------------------------------------------------

@dataclass
class SemisimpleType:
    components: List[Tuple[str, int]]
    cartan_matrix: CartanMatrix
    blocks: List[List[int]]
    weyl_order: int

    @property
    def name(self) -> str:
        return type_string(self.components)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def positive_root_count(self) -> int:
        return sum(positive_root_count(l, r) for l, r in self.components)


def weyl_group_order(letter: str, n: int) -> int:
    if letter == "A":
        return factorial(n + 1)
    if letter in "BC":
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(letter, n)]


def positive_root_count(letter: str, n: int) -> int:
    if letter == "A":
        return n * (n + 1) // 2
    if letter in "BC":
        return n * n
    if letter == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(letter, n)]


def canonical_component(letter: str, n: int) -> List[Tuple[str, int]]:
    if n <= 0:
        return []
    if letter in "BC" and n == 1:
        return [("A", 1)]
    if letter == "C" and n == 2:
        return [("B", 2)]
    if letter == "D":
        if n == 1:
            return []
        if n == 2:
            return [("A", 1), ("A", 1)]
        if n == 3:
            return [("A", 3)]
    return [(letter, n)]


def type_string(components: Sequence[Tuple[str, int]]) -> str:
    comps = []
    for l, n in components:
        comps.extend(canonical_component(l, n))
    if not comps:
        return "0"
    return "x".join(f"{l}{n}" for l, n in sorted(comps))


def normalize_type(text: str) -> str:
    comps = []
    for part in text.split("x"):
        part = part.strip()
        if part and part != "0":
            comps.append((part[0], int(part[1:])))
    return type_string(comps)


def _blocks(a: CartanMatrix) -> List[List[int]]:
    n = len(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and a[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _walk(adj: Dict[int, List[int]], start: int, avoid: int) -> List[int]:
    path, prev, cur = [start], avoid, start
    while True:
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _classify_block(a: CartanMatrix, block: List[int]) -> Tuple[str, int, List[int]]:
    """Letter, rank and a vertex ordering matching ``standard_cartan_matrix``."""
    n = len(block)
    if n == 1:
        return "A", 1, list(block)
    adj = {i: [j for j in block if j != i and a[i][j] != 0] for i in block}
    mult = {(i, j): a[i][j] * a[j][i] for i in block for j in adj[i]}
    if any(m not in (1, 2, 3) for m in mult.values()):
        raise NotFiniteType("edge multiplicity outside {1, 2, 3}")
    edges = sum(len(v) for v in adj.values()) // 2
    if edges != n - 1:
        raise NotFiniteType("diagram contains a cycle")
    degs = {i: len(adj[i]) for i in block}
    if max(degs.values()) > 3:
        raise NotFiniteType("vertex of degree > 3")
    if 3 in mult.values():
        if n != 2:
            raise NotFiniteType("triple edge in rank > 2")
        i, j = block
        short = i if a[i][j] == -3 else j
        return "G", 2, [short, j if short == i else i]
    branch = [i for i in block if degs[i] == 3]
    doubles = [(i, j) for (i, j), m in mult.items() if m == 2 and i < j]
    if not branch:
        ends = [i for i in block if degs[i] == 1]
        if not doubles:
            return "A", n, _walk(adj, ends[0], -1)
        if len(doubles) > 1:
            raise NotFiniteType("two double edges")
        i, j = doubles[0]
        if n == 4 and degs[i] == 2 and degs[j] == 2:
            # F4: order so that vertices 1, 2 are short.
            short = i if a[i][j] == -2 else j
            long_ = j if short == i else i
            start = [e for e in ends if e in _walk(adj, short, long_)][0]
            order = _walk(adj, start, -1)
            return "F", 4, order
        if degs[i] != 1 and degs[j] != 1 and n > 2:
            raise NotFiniteType("double edge in the interior")
        end, inner = (i, j) if degs[i] == 1 else (j, i)
        if n == 2:
            short = i if a[i][j] == -2 else j
            other = j if short == i else i
            return "B", 2, [other, short]
        start = [e for e in ends if e != end][0]
        order = _walk(adj, start, -1)
        letter = "B" if a[end][inner] == -2 else "C"
        return letter, n, order
    if doubles or len(branch) > 1:
        raise NotFiniteType("branched non-simply-laced diagram")
    b = branch[0]
    arms = sorted((_walk(adj, j, b) for j in adj[b]), key=len)
    lens = tuple(len(x) for x in arms)
    if lens[0] == 1 and lens[1] == 1:
        chain = arms[2][::-1] + [b]
        return "D", n, chain + [arms[0][0], arms[1][0]]
    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        chain = arms[2][::-1] + [b] + arms[1]
        return "E", n, chain + [arms[0][0]]
    raise NotFiniteType(f"branched diagram with arms {lens}")


def recognize_type(cm: CartanMatrix) -> SemisimpleType:
    from .families import standard_cartan_matrix

    comps, blocks = [], []
    for block in _blocks(cm):
        letter, n, order = _classify_block(cm, block)
        std = standard_cartan_matrix(letter, n)
        if any(cm[order[x]][order[y]] != std[x][y] for x in range(n) for y in range(n)):
            raise NotFiniteType(f"block {block} does not match the {letter}{n} template")
        comps.append((letter, n))
        blocks.append(order)
    w = 1
    for l, n in comps:
        w *= weyl_group_order(l, n)
    return SemisimpleType(comps, cm, blocks, w)


def root_lengths(st: SemisimpleType) -> Dict[int, int]:
    """Squared length per index of Pi, short roots normalized to 2."""
    out = {}
    for (letter, n), order in zip(st.components, st.blocks):
        from .families import _symmetrizer

        if letter in "BCFG":
            d = _symmetrizer(letter, n)
        else:
            d = (1,) * n
        for x, idx in enumerate(order):
            out[idx] = 2 * d[x]
    return out
