"""Integer lattices: Hermite and Smith normal forms and finite quotients.

Matrices are lists of rows of Python ints (arbitrary precision).  Lattices are
given by generator lists and are always the row span of the generator matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .errors import NonDegeneracyViolated

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def transpose(a: Sequence[Sequence]) -> list:
    return [list(r) for r in zip(*a)] if a else []


def det(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return d


def inverse(a: Sequence[Sequence]) -> List[List[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise NonDegeneracyViolated("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def rank(a: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def nullspace(a: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis of ``{x : a x = 0}`` over the rationals."""
    m = [[Fraction(x) for x in row] for row in a]
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def solve_rational(cols: Sequence[Sequence], b: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Solve ``sum_j x_j cols[j] = b``; None if inconsistent.  Columns must be independent."""
    n = len(cols)
    if n == 0:
        return () if all(x == 0 for x in b) else None
    dim = len(b)
    aug = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(b[i])] for i in range(dim)]
    r = 0
    piv_cols = []
    for c in range(n):
        piv = next((i for i in range(r, dim) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][n] != 0 for i in range(r, dim)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][n]
    return tuple(x)


# Smith normal form ---------------------------------------------------------

def _egcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, x, y)`` with ``a x + b y = g = gcd(a, b) > 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0

def smith_normal_form(M: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``D = U M V`` diagonal, ``d_1 | d_2 | ...``, U, V unimodular."""
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def combine_rows(i, j, a, b, c, d):
        # rows (i, j) <- (a*ri + b*rj, c*ri + d*rj), with ad - bc = 1
        for X in (A, U):
            ri, rj = X[i], X[j]
            X[i] = [a * x + b * y for x, y in zip(ri, rj)]
            X[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def combine_cols(i, j, a, b, c, d):
        for X in (A, V):
            for row in X:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + d * y

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            # exact division when possible, otherwise a Bezout step that shrinks the pivot
            for i in range(t + 1, m):
                if A[i][t]:
                    p, e = A[t][t], A[i][t]
                    if e % p == 0:
                        combine_rows(t, i, 1, 0, -(e // p), 1)
                    else:
                        g, x, y = _egcd(p, e)
                        combine_rows(t, i, x, y, -e // g, p // g)
            for j in range(t + 1, n):
                if A[t][j]:
                    p, e = A[t][t], A[t][j]
                    if e % p == 0:
                        combine_cols(t, j, 1, 0, -(e // p), 1)
                    else:
                        g, x, y = _egcd(p, e)
                        combine_cols(t, j, x, y, -e // g, p // g)
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            combine_rows(t, bad, 1, 1, 0, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def invariant_factors(M: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    if not M or not M[0]:
        return []
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


# Hermite normal form and lattice comparison --------------------------------

def hermite_normal_form(gens: Sequence[Sequence[int]]) -> Matrix:
    """Row-style HNF basis of the lattice spanned by ``gens`` (zero rows dropped)."""
    A = [list(map(int, r)) for r in gens if any(r)]
    if not A:
        return []
    n = len(A[0])
    r = 0
    for c in range(n):
        while True:
            rows = [i for i in range(r, len(A)) if A[i][c]]
            if not rows:
                break
            p = min(rows, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            more = False
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    f = A[i][c] // A[r][c]
                    A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                    more = more or A[i][c] != 0
            if not more:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                f = A[i][c] // A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
            r += 1
    return [row for row in A[:r]]


def lattice_equal(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return hermite_normal_form(a) == hermite_normal_form(b)


def lattice_contains(gens: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return lattice_equal(list(gens), list(gens) + [list(v)])


def quotient_invariants(big: Sequence[Sequence[int]], small: Sequence[Sequence[int]]) -> List[int]:
    """Invariants of ``big / small`` (small inside big); 0 marks a free summand."""
    H = hermite_normal_form(big)
    coords = []
    for v in small:
        x = solve_rational([list(h) for h in H], list(v))
        if x is None or any(c.denominator != 1 for c in x):
            raise ValueError("small lattice is not contained in big lattice")
        coords.append([int(c) for c in x])
    r = len(H)
    if not coords:
        return [0] * r
    f = invariant_factors(coords)
    out = [d for d in f if d != 1]
    out += [0] * (r - len(f))
    return out


@dataclass
class LatticeComparison:
    equal: bool
    extra_generators: List[Tuple[int, ...]] = field(default_factory=list)
    quotient: List[int] = field(default_factory=list)


def _pairs(vectors, scale_of) -> List[Tuple[int, ...]]:
    out = []
    for b in vectors:
        s = scale_of(b)
        v = tuple(s * x for x in b)
        z = tuple(0 for _ in b)
        out.append(v + z)
        out.append(z + v)
    return out


def zq_lattice_comparison(crd, rd) -> LatticeComparison:
    """Compare the lattice of central Cartan generators with the one over all roots."""
    small = _pairs(crd.O_plus, lambda b: crd.orders[b])
    big = small + _pairs(rd.roots, lambda b: crd.Ntt)
    if lattice_equal(small, big):
        return LatticeComparison(True, [], [])
    quotient = quotient_invariants(big, small)
    if crd.eta is not None:
        cand = _pairs([crd.eta], lambda b: crd.Ntt)
        if lattice_equal(small + cand, big):
            return LatticeComparison(False, cand, quotient)
    extra: List[Tuple[int, ...]] = []
    for g in _pairs(rd.roots, lambda b: crd.Ntt):
        if not lattice_contains(small + extra, g):
            extra.append(g)
            if lattice_equal(small + extra, big):
                break
    return LatticeComparison(False, extra, quotient)


def ctilde_invariants(M: Sequence[Sequence], coweights: Sequence[Sequence]) -> List[int]:
    """Invariant factors of ``(M P + P) / P`` with ``P`` spanned by the columns of ``coweights``."""
    r = len(M)
    if det(M) == 0:
        raise NonDegeneracyViolated("M is singular")
    B = [[Fraction(x) for x in row] for row in coweights]
    K = matmul(inverse(B), matmul([[Fraction(x) for x in row] for row in M], B))
    D = 1
    for row in K:
        for x in row:
            D = lcm(D, Fraction(x).denominator)
    G = [[int(K[i][j] * D) for j in range(r)] + [D * int(i == k) for k in range(r)] for i in range(r)]
    d = invariant_factors(G)
    return sorted(D // x for x in d if D // x != 1)
