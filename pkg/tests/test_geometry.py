from fractions import Fraction
from math import lcm

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import analysis_of
from poissonorder.braiding import ParamBraidingMatrix
from poissonorder.cartan import weyl_group_order
from poissonorder.cyclotomic import ONE, Monomial, make_root
from poissonorder.families import _symmetrizer, standard_cartan_matrix
from poissonorder.geometry import coweight_basis, ctilde_matrix
from poissonorder.lattice import ctilde_invariants, det, identity, matmul, transpose
from poissonorder.pipeline import analyze


@pytest.mark.parametrize("letter,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_coweights_are_dual_to_simple_roots(letter, n):
    cm = standard_cartan_matrix(letter, n)
    B = coweight_basis(cm)
    for i in range(n):
        for j in range(n):
            assert sum(cm[b][i] * B[b][j] for b in range(n)) == int(i == j)


def test_coweights_with_central_direction():
    B = coweight_basis(((2,),), extra=1)
    assert B == [[Fraction(1, 2), 0], [0, 1]]


def test_ctilde_matrix_definition():
    P = [[Fraction(2), Fraction(1)], [Fraction(0), Fraction(2)]]
    M = ctilde_matrix(P)
    assert matmul(transpose(P), M) == P
    assert M == [[1, Fraction(1, 2)], [Fraction(-1, 2), Fraction(3, 4)]]


def brute_quotient(K):
    # oracle: enumerate the subgroup of (Q/Z)^r generated by the columns of K
    r = len(K)
    gens = [tuple(Fraction(K[i][j]) % 1 for i in range(r)) for j in range(r)]
    seen = {tuple(Fraction(0) for _ in range(r))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % 1 for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    exponent = 1
    for v in seen:
        for x in v:
            exponent = lcm(exponent, x.denominator)
    return len(seen), exponent


small = st.integers(-4, 4)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2))
def test_ctilde_invariants_against_enumeration(P):
    P = [[Fraction(x) for x in row] for row in P]
    assume(det(P) != 0)
    M = ctilde_matrix(P)
    inv = ctilde_invariants(M, identity(2))
    order, exponent = brute_quotient(M)
    prod = 1
    for d in inv:
        prod *= d
    assert prod == order
    assert (inv[-1] if inv else 1) == exponent
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_symmetric_phi_gives_trivial_ctilde(P):
    S = [[Fraction(P[i][j] + P[j][i]) for j in range(3)] for i in range(3)]
    assume(det(S) != 0)
    assert ctilde_matrix(S) == identity(3)
    assert ctilde_invariants(ctilde_matrix(S), coweight_basis(standard_cartan_matrix("A", 3))) == []


def symmetric_cartan_lift(letter, n):
    # t_ij = d_i a_ij, all coefficients 1
    A = standard_cartan_matrix(letter, n)
    d = _symmetrizer(letter, n)
    T = [[d[i] * A[i][j] for j in range(n)] for i in range(n)]
    return ParamBraidingMatrix.from_exponents([[ONE] * n for _ in range(n)], T)


@pytest.mark.parametrize("letter,n,N", [("A", 2, 5), ("A", 3, 7), ("B", 2, 5), ("G", 2, 7),
                                        ("D", 4, 5), ("C", 3, 7)])
def test_symmetric_cartan_lift_has_trivial_ctilde(letter, n, N):
    a = analyze(bq=symmetric_cartan_lift(letter, n), xi=make_root(1, N))
    P = a.poisson.pm.coefficients()
    assert P == [list(r) for r in zip(*P)]
    assert a.geometry.ctilde == []


@pytest.mark.parametrize("N", [3, 5, 7, 9])
def test_symmetric_super_a_lift_has_trivial_ctilde(N):
    m = make_root(1, 2)
    off = Monomial(m, (N + 1) // 2)
    bq = ParamBraidingMatrix(((Monomial(m, 0), off), (off, Monomial(m, 0))))
    a = analyze(bq=bq, xi=make_root(1, N))
    assert a.crd.eta is not None
    assert a.geometry.ctilde == []


CASES = [("cartan", {"type": "A", "theta": 2}, 5), ("cartan", {"type": "B", "theta": 3}, 7),
         ("superA", {"theta": 3, "k": 1}, 5), ("superB", {"theta": 2, "k": 1}, 5),
         ("superD", {"theta": 3, "k": 2}, 5), ("D21", {"d1": 1, "d3": 2}, 5),
         ("G3super", {}, 7), ("wk4", {}, 5), ("br2", {}, 5)]


@pytest.mark.parametrize("name,params,N", CASES)
def test_dimensions(name, params, N):
    a = analysis_of(name, N, **params)
    g = a.geometry
    crd = a.crd
    assert g.dim_M_geq == len(crd.O_plus) + len(crd.Pi_tilde)
    assert g.dim_M == 2 * g.dim_M_geq
    assert g.dim_M_plus == len(crd.O_plus)
    assert g.dim_M_geq == g.dim_btilde_plus
    assert g.weyl_order == a.semisimple.weyl_order


def test_wk4_counting():
    g = analysis_of("wk4", 5).geometry
    assert g.hz_isoclass_upper_bound == 36
    assert g.weyl_order == weyl_group_order("A", 2) ** 2
