from collections import deque

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from poissonorder.braiding import BraidingMatrix
from poissonorder.cartan import (CartanRootData, cartan_matrix_of_g, cartan_roots, check_centrality,
                                 check_centrality_full, normalize_type, recognize_type,
                                 weyl_group_order)
from poissonorder.cyclotomic import make_root
from poissonorder.errors import NotARootSystem, NotFiniteType
from poissonorder.families import admissible, family, standard_cartan_matrix
from poissonorder.groupoid import (enumerate_groupoid, reflection_matrix, rho, root_fibration)

TYPES = [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 6)] + \
        [("C", n) for n in range(3, 6)] + [("D", n) for n in range(4, 7)] + \
        [("E", 6), ("F", 4), ("G", 2)]


def crd_of(q):
    return cartan_roots(root_fibration(enumerate_groupoid(q)))


def weyl_order_bfs(cm):
    # oracle: close the simple reflections under multiplication
    n = len(cm)
    gens = [reflection_matrix(cm, i) for i in range(n)]
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))

    seen = {ident}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for s in gens:
            x = mul(s, w)
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return len(seen)


@pytest.mark.parametrize("letter,n", [t for t in TYPES if t != ("E", 6)])
def test_weyl_order_formula_matches_group_closure(letter, n):
    assert weyl_group_order(letter, n) == weyl_order_bfs(standard_cartan_matrix(letter, n))


@pytest.mark.parametrize("letter,n", TYPES)
def test_recognize_standard(letter, n):
    st_ = recognize_type(standard_cartan_matrix(letter, n))
    assert st_.name == normalize_type(f"{letter}{n}")
    assert st_.weyl_order == weyl_group_order(letter, n)


@given(st.sampled_from(TYPES), st.randoms(use_true_random=False))
def test_recognition_is_permutation_invariant(t, rnd):
    cm = standard_cartan_matrix(*t)
    perm = list(range(len(cm)))
    rnd.shuffle(perm)
    pm = tuple(tuple(cm[perm[i]][perm[j]] for j in range(len(cm))) for i in range(len(cm)))
    assert recognize_type(pm).name == recognize_type(cm).name


def test_block_sum():
    a2 = standard_cartan_matrix("A", 2)
    cm = tuple(tuple(a2[i % 2][j % 2] if i // 2 == j // 2 else 0 for j in range(4)) for i in range(4))
    st_ = recognize_type(cm)
    assert st_.name == "A2xA2" and st_.weyl_order == 36


def test_affine_block_rejected():
    with pytest.raises(NotFiniteType):
        recognize_type(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)))


@pytest.mark.parametrize("text,norm", [("A0xA1", "A1"), ("C1xB1", "A1xA1"), ("D2xC1", "A1xA1xA1"),
                                       ("C2", "B2"), ("D3", "A3"), ("B3xA1", "A1xB3")])
def test_normalize_type(text, norm):
    assert normalize_type(text) == norm


def test_super_a_example():
    crd = crd_of(super_a10(5, 1 + 5))
    assert crd.O_plus == ((1, 1),)
    assert cartan_matrix_of_g(crd) == ((2,),)
    # the catalog object is Weyl equivalent to the example diagram
    gp = enumerate_groupoid(family("superA", theta=2, k=1, N=5).evaluated())
    keys = {o.diagram_key() for o in gp.objects}
    assert any(super_a10(5, 1).diagram_key()[0] == k[0] for k in keys)


def test_wk4_underline_roots():
    N, M = 5, 10
    crd = crd_of(family("wk4", N=5).evaluated())
    g = (1, 2, 3, 1)
    expected = {(N, 0, 0, 0), (0, N, 0, 0), (N, N, 0, 0), (0, 0, 0, M),
                tuple(M * x for x in g), (M, 2 * M, 3 * M, 2 * M)}
    assert set(crd.underline_O_plus) == expected
    assert recognize_type(cartan_matrix_of_g(crd)).name == "A2xA2"


def test_br2_cartan_roots():
    crd = crd_of(family("br2", N=5).evaluated())
    assert set(crd.Pi) == {(0, 5), (30, 15)}
    assert cartan_matrix_of_g(crd) == ((2, 0), (0, 2))


def test_cartan_type_has_all_roots_cartan():
    q = family("cartan", type="B", theta=3, N=7).evaluated()
    crd = crd_of(q)
    assert len(crd.O_plus) == 9


def test_no_cartan_roots():
    q = BraidingMatrix.from_strings([["1/2", "1/3"], ["0/1", "1/2"]])
    crd = CartanRootData((), {}, (), (), (), 1)
    assert check_centrality(q, crd).passed
    with pytest.raises(NotARootSystem):
        cartan_matrix_of_g(crd)


def super_a10(N, a):
    # -1 --xi-- -1 with q12 = exp(2 pi i a / 2N)
    q12 = make_root(a, 2 * N)
    q21 = make_root(1, N) * q12.inverse()
    m = make_root(1, 2)
    return BraidingMatrix(((m, q12), (q21, m)))


@pytest.mark.parametrize("N", [3, 5, 7, 9])
def test_centrality_pattern_odd(N):
    crd = crd_of(super_a10(N, 0))
    for a in range(2 * N):
        q = super_a10(N, a)
        # pass iff q12 = -xi^k for some k, i.e. a odd
        assert check_centrality(q, crd).passed == (a % 2 == 1)
        if q.is_symmetric():
            assert check_centrality(q, crd).passed == (q.entry(0, 1) == make_root(1, 2) * make_root((N + 1) // 2, N))


@pytest.mark.parametrize("N", [4, 6, 8])
def test_centrality_pattern_even(N):
    crd = crd_of(super_a10(N, 0))
    for a in range(2 * N):
        q = super_a10(N, a)
        assert check_centrality(q, crd).passed == (a % 2 == 0)
        if check_centrality(q, crd).passed:
            assert not q.is_symmetric()


SMALL = [("superA", {"theta": 2, "k": 1}), ("superA", {"theta": 3, "k": 2}),
         ("superB", {"theta": 2, "k": 1}), ("cartan", {"type": "B", "theta": 2}),
         ("cartan", {"type": "G", "theta": 2}), ("br2", {}), ("D21", {"d1": 1, "d3": 2})]


@given(st.sampled_from(SMALL), st.sampled_from([3, 4, 5, 7, 8]), st.data())
def test_centrality_on_pi_equals_full(row, N, data):
    name, params = row
    assume(admissible(name, params, N))
    fam = family(name, N=N, **params)
    pairs = fam.free_pairs()
    upper = {p: data.draw(st.integers(-3, 3)) for p in pairs}
    q = fam.evaluated(upper)
    # also move to a random Weyl-equivalent object
    for i in data.draw(st.lists(st.integers(0, q.theta - 1), max_size=3)):
        q = rho(q, i)
    crd = crd_of(q)
    assert check_centrality(q, crd).passed == check_centrality_full(q, crd).passed
