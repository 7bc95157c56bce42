import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import analysis_of
from poissonorder.braiding import ParamBraidingMatrix
from poissonorder.cyclotomic import ONE, Monomial, make_root
from poissonorder.errors import ConditionViolated, NonDegeneracyViolated
from poissonorder.families import admissible, family, standard_cartan_matrix
from poissonorder.pipeline import AnalysisConfig, analyze
from poissonorder.poisson import PhiValue, Sym, cartan_recovery, phi_value

CARTAN = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]
CARTAN_N = [3, 4, 5, 7, 8]


def cartan_cases():
    return [(t, n, N) for t, n in CARTAN for N in CARTAN_N
            if admissible("cartan", {"type": t, "theta": n}, N)]


def numeric_phi(Q, xi, eps=1e-7):
    # oracle: (1 - Q(nu)) / (nu - xi) at nu close to xi on the unit circle
    z = cmath.exp(2j * cmath.pi * float(xi.exponent))
    nu = z * cmath.exp(1j * eps)
    p = cmath.exp(2j * cmath.pi * float(Q.coeff.exponent))
    return (1 - p * nu ** Q.exp) / (nu - z), z


@given(st.integers(2, 12), st.integers(-20, 20), st.data())
def test_phi_value_matches_difference_quotient(N, m, data):
    xi = make_root(1, N)
    # pick the coefficient so that Q(xi) = 1
    Q = Monomial((xi ** m).inverse(), m)
    bq = ParamBraidingMatrix(((Q,),))
    v = phi_value(bq, xi, (1,), (1,), 1, 1)
    approx, z = numeric_phi(Q, xi)
    assert abs(approx - float(v.coeff) / z) < 1e-4 * (1 + abs(m))


def test_phi_value_needs_a_zero():
    xi = make_root(1, 5)
    bq = ParamBraidingMatrix(((Monomial(ONE, 1),),))
    with pytest.raises(ConditionViolated):
        phi_value(bq, xi, (1,), (1,), 1, 1)
    assert phi_value(bq, xi, (1,), (1,), 5, 1) == PhiValue(Fraction(-5))


def test_phi_value_arithmetic():
    a, b = PhiValue(Fraction(3)), PhiValue(Fraction(-1, 2))
    assert (a + b).coeff == Fraction(5, 2)
    assert (a - b).coeff == Fraction(7, 2)
    assert (-a).coeff == -3
    assert a / b == -6
    assert PhiValue(Fraction(0)).is_zero()


syms = st.lists(st.tuples(st.integers(-3, 3), st.sampled_from(["u", "v"]), st.integers(-2, 2),
                          st.fractions(min_value=-5, max_value=5, max_denominator=4)),
                max_size=3).map(lambda ts: sum((Sym({(a, ((n, e),) if e else ()): r}) for a, n, e, r in ts),
                                               Sym()))


@given(syms, syms, syms)
def test_sym_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == Sym()
    assert x * Sym.const(1) == x


@given(st.integers(-3, 3), st.integers(-2, 2), st.fractions(min_value=1, max_value=9))
def test_sym_single_term_inverse(a, e, r):
    x = Sym({(a, (("u", e),) if e else ()): r})
    assert x * x.inverse() == Sym.const(1)


@pytest.mark.parametrize("letter,n,N", cartan_cases())
def test_cartan_phi_identities(letter, n, N):
    a = analysis_of("cartan", N, type=letter, theta=n)
    pm = a.poisson.pm
    T = pm.T
    Ns = pm.scales
    d = family("cartan", type=letter, theta=n, N=N).symmetrizer
    A = standard_cartan_matrix(letter, n)
    # T is a lift of the symmetrized Cartan matrix
    for i in range(n):
        assert T[i][i] == d[i]
        for j in range(n):
            if i != j:
                assert T[i][j] + T[j][i] == d[i] * A[i][j]
    # phi_ij = -xi^-1 t_ij N_i N_j, on the diagonal too
    for i in range(n):
        for j in range(n):
            assert pm[i, j].coeff == -T[i][j] * Ns[i] * Ns[j]
    assert pm.TT == T


@pytest.mark.parametrize("letter,n,N", cartan_cases())
def test_cartan_recovery(letter, n, N):
    a = analysis_of("cartan", N, type=letter, theta=n)
    assert cartan_recovery(a.poisson.pm, n) == tuple(tuple(r) for r in a.cartan_matrix)


SAMPLES = [("superA", {"theta": 2, "k": 1}, 5), ("superA", {"theta": 3, "k": 1}, 7),
           ("superB", {"theta": 2, "k": 1}, 5), ("superB", {"theta": 3, "k": 2}, 8),
           ("superD", {"theta": 3, "k": 2}, 5), ("D21", {"d1": 1, "d3": 2}, 7),
           ("G3super", {}, 7), ("wk4", {}, 5), ("br2", {}, 5)]


@pytest.mark.parametrize("name,params,N", SAMPLES)
def test_family_poisson_data(name, params, N):
    a = analysis_of(name, N, **params)
    p = a.poisson
    crd = a.crd
    assert p.pm.nondegenerate
    assert p.recovery == tuple(tuple(r) for r in a.cartan_matrix)
    assert all(p.equivariance)
    assert p.bialgebra.dimension == 2 * len(crd.O_plus) + 2 * len(crd.Pi_tilde)
    assert not p.jacobi.failures and not p.cocycle.failures
    assert p.embedding.htilde_dimension == len(crd.Pi_tilde)


def test_singular_phi_matrix_rejected():
    # A2 at N=3 with T = [[1, 1], [1, 1]]: right evaluation, singular phi
    xi = make_root(1, 3)
    bq = ParamBraidingMatrix.from_exponents([[ONE, ONE], [ONE, ONE]], [[1, 1], [1, 1]])
    with pytest.raises(NonDegeneracyViolated):
        analyze(bq=bq, xi=xi)


def test_centrality_failure_rejected():
    # super A(1|0) at N=5 with q12 = xi: centrality fails
    xi = make_root(1, 5)
    m = make_root(1, 2)
    bq = ParamBraidingMatrix(((Monomial(m, 0), Monomial(ONE, 1)), (Monomial(ONE, 0), Monomial(m, 0))))
    with pytest.raises(ConditionViolated):
        analyze(bq=bq, xi=xi)


def test_plain_matrix_has_no_poisson_data():
    q = family("cartan", type="A", theta=2, N=5).evaluated()
    a = analyze(q, cfg=AnalysisConfig())
    assert a.poisson is None and a.poisson_note
