import pytest
from hypothesis import given
from hypothesis import strategies as st

from poissonorder.braiding import (BraidingMatrix, ParamBraidingMatrix, _SquareMatrix, direct_sum,
                                   dynkin_diagram, evaluate)
from poissonorder.cyclotomic import Monomial, make_root, primitive_root
from poissonorder.errors import DimensionError, ParseError


@st.composite
def braidings(draw, n=None):
    n = n or draw(st.integers(1, 4))
    m = draw(st.integers(2, 24))
    return BraidingMatrix(tuple(tuple(make_root(draw(st.integers(0, m - 1)), m) for _ in range(n))
                                for _ in range(n)))


@st.composite
def braiding_and_vectors(draw):
    q = draw(braidings())
    vec = st.lists(st.integers(-4, 4), min_size=q.theta, max_size=q.theta).map(tuple)
    return q, draw(vec), draw(vec), draw(vec)


@given(braiding_and_vectors())
def test_bicharacter(data):
    q, a, b, c = data
    s = tuple(x + y for x, y in zip(a, b))
    assert q.bilinear(s, c) == q.bilinear(a, c) * q.bilinear(b, c)
    assert q.bilinear(c, s) == q.bilinear(c, a) * q.bilinear(c, b)


@given(braiding_and_vectors())
def test_integer_route_matches_product_route(data):
    q, a, b, _ = data
    assert q.bilinear(a, b) == _SquareMatrix.bilinear(q, a, b)


@given(braidings(), st.data())
def test_unit_vectors_read_entries(q, data):
    i = data.draw(st.integers(0, q.theta - 1))
    j = data.draw(st.integers(0, q.theta - 1))
    ei = tuple(int(k == i) for k in range(q.theta))
    ej = tuple(int(k == j) for k in range(q.theta))
    assert q.bilinear(ei, ej) == q.entry(i, j)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n),
    st.lists(st.integers(0, 5), min_size=n * n, max_size=n * n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n))), st.integers(2, 20))
def test_evaluation_commutes_with_bilinear(data, N):
    n, T, P, a, b = data
    bq = ParamBraidingMatrix(tuple(tuple(Monomial(make_root(P[i * n + j], 6), T[i * n + j])
                                         for j in range(n)) for i in range(n)))
    xi = primitive_root(N)
    assert evaluate(bq, xi).bilinear(a, b) == bq.bilinear(a, b).evaluate(xi)


def test_param_json_round_trip():
    bq = ParamBraidingMatrix.from_exponents(
        [[make_root(0, 1), make_root(1, 3)], [make_root(2, 3), make_root(1, 2)]], [[1, -1], [0, 2]])
    assert ParamBraidingMatrix.from_json(bq.to_json()) == bq
    assert bq.T == ((1, -1), (0, 2))


def test_diagram_and_symmetry():
    q = BraidingMatrix.from_strings([["1/5", "2/5"], ["2/5", "1/5"]])
    d = dynkin_diagram(q)
    assert d.symmetric and d.connected
    assert d.edges == {(0, 1): make_root(4, 5)}
    s = direct_sum(q, BraidingMatrix.from_strings([["1/2"]]))
    assert s.theta == 3 and not s.is_connected()


def test_strings_round_trip():
    rows = [["1/5", "4/5"], ["0/1", "1/2"]]
    assert BraidingMatrix.from_strings(rows).to_strings() == rows


@pytest.mark.parametrize("rows", [[["1/2", "1/3"]], [], [["1/2"], ["1/3"]]])
def test_shape_errors(rows):
    with pytest.raises(DimensionError):
        BraidingMatrix.from_strings(rows)


def test_bad_entries():
    with pytest.raises(ParseError):
        BraidingMatrix.from_strings([["a/b"]])
    with pytest.raises(ParseError):
        ParamBraidingMatrix.from_json([[{"coeff": "1/2"}]])


def test_vector_length_checked():
    q = BraidingMatrix.from_strings([["1/2"]])
    with pytest.raises(DimensionError):
        q.bilinear((1, 0), (1,))


def test_evaluate_at_one_rejected():
    bq = ParamBraidingMatrix.from_exponents([[make_root(0, 1)]], [[1]])
    with pytest.raises(DimensionError):
        evaluate(bq, make_root(0, 1))
