"""Specialization exponents, the phi matrix and the tangent Lie bialgebra.

A phi value is always a rational multiple of ``xi**-1``: if
``Q(nu) = p * nu**m`` and ``Q(xi) = 1`` then ``-Q'(xi) = -m * xi**-1``.
``PhiValue`` stores that rational.

Bracket coefficients also involve ``u_beta = (q_bb - 1)**N_b``, which is not
a root of unity.  ``Sym`` keeps products of rationals, powers of ``xi`` and
powers of these atoms as a dictionary of terms; relation checks only ever need
to cancel such terms exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple

from .braiding import ParamBraidingMatrix, Vector, unit_vector
from .cyclotomic import ONE, Monomial, RootOfUnity, q_factorial_is_zero
from .errors import (ConditionViolated, EmbeddingMismatch, ManinCheckFailed,
                     NonDegeneracyViolated, RecoveryMismatch, SearchFailed)
from .groupoid import generalized_cartan_matrix, reflect_vector, rho
from .lattice import det, nullspace, rank


# phi values -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PhiValue:
    """The number ``coeff * xi**-1``."""

    coeff: Fraction

    def __add__(self, other: "PhiValue") -> "PhiValue":
        return PhiValue(self.coeff + other.coeff)

    def __sub__(self, other: "PhiValue") -> "PhiValue":
        return PhiValue(self.coeff - other.coeff)

    def __neg__(self) -> "PhiValue":
        return PhiValue(-self.coeff)

    def __truediv__(self, other: "PhiValue") -> Fraction:
        return self.coeff / other.coeff

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        return f"{self.coeff}*xi^-1"


def phi_value(bq: ParamBraidingMatrix, xi: RootOfUnity, beta: Sequence[int],
              gamma: Sequence[int], n_beta: int, n_gamma: int) -> PhiValue:
    Q = bq.bilinear(beta, gamma) ** (n_beta * n_gamma)
    if not Q.evaluate(xi).is_one():
        raise ConditionViolated(f"q({tuple(beta)}, {tuple(gamma)})^{n_beta * n_gamma} != 1 at xi")
    return PhiValue(Fraction(-Q.exp))


def bilinear_int(T: Sequence[Sequence[int]], beta: Sequence[int], gamma: Sequence[int]) -> int:
    n = len(T)
    return sum(beta[i] * T[i][j] * gamma[j] for i in range(n) for j in range(n))


@dataclass
class PhiMatrix:
    roots: Tuple[Vector, ...]
    scales: Tuple[int, ...]
    entries: Tuple[Tuple[PhiValue, ...], ...]
    T: Tuple[Tuple[int, ...], ...]
    TT: Tuple[Tuple[int, ...], ...]
    determinant: Fraction
    upper: Dict[Tuple[int, int], int] = field(default_factory=dict)
    tried: int = 0

    @property
    def nondegenerate(self) -> bool:
        return self.determinant != 0

    def __getitem__(self, ij: Tuple[int, int]) -> PhiValue:
        return self.entries[ij[0]][ij[1]]

    def coefficients(self) -> List[List[Fraction]]:
        return [[v.coeff for v in row] for row in self.entries]


def phi_matrix(bq: ParamBraidingMatrix, xi: RootOfUnity, roots: Sequence[Vector],
               scales: Sequence[int]) -> PhiMatrix:
    r = len(roots)
    entries = tuple(tuple(phi_value(bq, xi, roots[a], roots[b], scales[a], scales[b])
                          for b in range(r)) for a in range(r))
    T = bq.T
    TT = tuple(tuple(bilinear_int(T, roots[a], roots[b]) for b in range(r)) for a in range(r))
    d = det([[v.coeff for v in row] for row in entries]) if r else Fraction(1)
    return PhiMatrix(tuple(roots), tuple(scales), entries, T, TT, d)


# search for T ---------------------------------------------------------------

def _shell_values(s: int) -> List[int]:
    out = [0]
    for v in range(1, s + 1):
        out += [v, -v]
    return out


def _splits(fam) -> List[Dict[Tuple[int, int], RootOfUnity]]:
    """Coefficient placements: all on the lower entry, then all on the upper one."""
    options = [{}]
    upper = {(i, j): fam.edge(i, j)[0] for i, j in fam.free_pairs() if not fam.edge(i, j)[0].is_one()}
    if upper:
        options.append(upper)
    return options


def build_T(fam, crd, budget: int = 3, all_pairs: Optional[bool] = None) -> Tuple[ParamBraidingMatrix, PhiMatrix]:
    """First nondegenerate exponent choice satisfying centrality, by increasing magnitude.

    Free variables are ``t_ij`` for i < j; ``t_ji = b_ij - t_ij``.  Candidates
    are visited in shells ``max |t_ij| = 0, 1, ..., budget``.  Edge pairs are
    searched first; pairs without an edge are opened only if that fails.
    """
    n = fam.theta
    xi = fam.xi
    tried = 0
    phases = [False, True] if all_pairs is None else [all_pairs]
    for split in _splits(fam):
        for use_all in phases:
            pairs = [(i, j) for i, j in fam.free_pairs() if use_all or fam.edge(i, j)[1] or
                     not fam.edge(i, j)[0].is_one()]
            if not pairs and use_all:
                continue
            hit = _search(fam, crd, split, pairs, budget, xi)
            tried += hit[1]
            if hit[0] is not None:
                bq, pm = hit[0]
                pm.tried = tried
                return bq, pm
    raise SearchFailed(f"no admissible nondegenerate T within budget {budget} ({tried} candidates)")


def _search(fam, crd, split, pairs, budget, xi):
    n = fam.theta
    index = {p: k for k, p in enumerate(pairs)}
    base = fam.lift({}, split)
    coeff = [[base.entry(i, j).coeff for j in range(n)] for i in range(n)]
    diag = [base.entry(i, i).exp for i in range(n)]
    b = {(i, j): fam.edge(i, j)[1] for i, j in fam.free_pairs()}

    # one constraint per (row i, beta in Pi); checked once its last variable is set
    constraints: Dict[int, List[Tuple[int, Vector, int]]] = {}
    for beta in crd.Pi_roots:
        nb = crd.orders[beta]
        for i in range(n):
            used = [index[(min(i, j), max(i, j))] for j in range(n)
                    if j != i and beta[j] and (min(i, j), max(i, j)) in index]
            last = max(used) if used else -1
            constraints.setdefault(last, []).append((i, beta, nb))

    def t_entry(vals, i, j):
        if i == j:
            return diag[i]
        a, c = min(i, j), max(i, j)
        up = vals[index[(a, c)]] if (a, c) in index and index[(a, c)] < len(vals) else 0
        return up if i < j else b[(a, c)] - up

    def row_ok(vals, i, beta, nb):
        acc = ONE
        for j in range(n):
            if beta[j]:
                acc = acc * (coeff[i][j] * xi ** t_entry(vals, i, j)) ** (beta[j] * nb)
        return acc.is_one()

    for i, beta, nb in constraints.get(-1, []):
        if not row_ok([], i, beta, nb):
            return None, 0

    tried = 0
    for s in range(budget + 1):
        values = _shell_values(s)
        stack: List[int] = []

        def rec(vals):
            nonlocal tried
            k = len(vals)
            if k == len(pairs):
                if s and max(abs(v) for v in vals) != s:
                    return None
                if not pairs and s:
                    return None
                tried += 1
                upper = {p: vals[index[p]] for p in pairs}
                bq = fam.lift(upper, split)
                try:
                    pm = phi_matrix(bq, xi, crd.Pi_tilde_roots, crd.Pi_tilde_scales)
                except ConditionViolated:
                    return None
                if not pm.nondegenerate:
                    return None
                pm.upper = upper
                return bq, pm
            for v in values:
                vals.append(v)
                ok = all(row_ok(vals, i, beta, nb) for i, beta, nb in constraints.get(k, []))
                if ok:
                    found = rec(vals)
                    if found is not None:
                        return found
                vals.pop()
            return None

        found = rec(stack)
        if found is not None:
            return found, tried
    return None, tried


# recovery and scalars -------------------------------------------------------

def cartan_recovery(pm: PhiMatrix, count: Optional[int] = None) -> Tuple[Tuple[int, ...], ...]:
    """``c_bg = (phi_bg + phi_gb) / phi_bb`` on the first ``count`` roots (the set Pi)."""
    r = len(pm.roots) if count is None else count
    out = []
    for a in range(r):
        row = []
        for g in range(r):
            if pm[a, a].is_zero():
                raise RecoveryMismatch(f"phi vanishes on the diagonal at {pm.roots[a]}")
            x = (pm[a, g] + pm[g, a]) / pm[a, a]
            if x.denominator != 1:
                raise RecoveryMismatch(f"non-integral recovered entry {x} at ({a}, {g})")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class SScalar:
    """``s_beta = phi_bb / (1 - q_bb)**N_b``, kept as its exact parts."""

    phi: PhiValue
    q_bb: RootOfUnity
    N: int

    def __str__(self) -> str:
        return f"({self.phi}) / (1 - {self.q_bb})^{self.N}"


def scalars(pm: PhiMatrix, crd, q, lengths: Dict[int, int]) -> Dict[str, list]:
    """``kappa_mu = 2 phi_mumu / (mu, mu)`` and the symbolic ``s_beta`` for beta in Pi.

    ``lengths[a]`` is ``(mu, mu)`` for the a-th element of Pi (short roots 2);
    the extra super A direction gets length 2.
    """
    kappa = []
    for a in range(len(pm.roots)):
        ln = lengths.get(a, 2)
        kappa.append(PhiValue(2 * pm[a, a].coeff / ln))
    s = [SScalar(pm[a, a], q.bilinear(b, b), crd.orders[b]) for a, b in enumerate(crd.Pi_roots)]
    return {"kappa": kappa, "s": s}


# lambda factors and integral-form denominators -------------------------------

def _monomial_roots(m: Monomial) -> List[RootOfUnity]:
    """Roots of unity ``z`` with ``m(z) = 1`` for ``m = p nu**t``, t != 0."""
    t = abs(m.exp)
    target = m.coeff.inverse() if m.exp > 0 else m.coeff
    # z**t = target
    base = target.exponent / t
    return sorted(RootOfUnity(base + Fraction(k, t)) for k in range(t))


def lambda_and_denominators(bq: ParamBraidingMatrix, xi: RootOfUnity) -> Dict[str, object]:
    n = bq.theta
    c = generalized_cartan_matrix(bq)
    lam = {}
    denominators: List[Monomial] = []
    valid = True
    for i in range(n):
        qii = bq.entry(i, i)
        for j in range(n):
            if i == j:
                continue
            qt = bq.tilde(i, j)
            m = -c[i][j]
            factors = [qii ** s * qt for s in range(m)]
            for f in factors:
                if f not in denominators and not f.is_one():
                    denominators.append(f)
            fact_zero = q_factorial_is_zero(m, qii.evaluate(xi))
            prod_zero = any(f.evaluate(xi).is_one() for f in factors)
            lam[(i, j)] = not (fact_zero or prod_zero)
            valid = valid and not prod_zero
    roots = set()
    for f in denominators:
        if f.exp == 0:
            continue
        roots.update(_monomial_roots(f))
    return {
        "cartan": c,
        "lambda_nonzero": lam,
        "denominators": denominators,
        "denominator_roots": sorted(roots),
        "specialization_valid": valid and xi not in roots,
    }


# the scalar ring used by the bracket tables ----------------------------------

class Sym:
    """Finite sums of ``r * xi**a * prod u**e`` with rational r."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: Dict[Tuple[int, Tuple[Tuple[str, int], ...]], Fraction] = {
            k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, r) -> "Sym":
        return cls({(0, ()): Fraction(r)})

    @classmethod
    def phi(cls, v: PhiValue) -> "Sym":
        return cls({(-1, ()): v.coeff})

    @classmethod
    def atom(cls, name: str, e: int = 1) -> "Sym":
        return cls({(0, ((name, e),)): Fraction(1)})

    def __add__(self, other: "Sym") -> "Sym":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Sym(out)

    def __neg__(self) -> "Sym":
        return Sym({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Sym") -> "Sym":
        return self + (-other)

    def __mul__(self, other) -> "Sym":
        if not isinstance(other, Sym):
            other = Sym.const(other)
        out: Dict = {}
        for (a1, m1), v1 in self.terms.items():
            for (a2, m2), v2 in other.terms.items():
                if not m2 or not m1:
                    mono = m1 or m2
                else:
                    exps = dict(m1)
                    for name, e in m2:
                        exps[name] = exps.get(name, 0) + e
                    mono = tuple(sorted((k, e) for k, e in exps.items() if e))
                key = (a1 + a2, mono)
                out[key] = out.get(key, 0) + v1 * v2
        return Sym(out)

    __rmul__ = __mul__

    def inverse(self) -> "Sym":
        if len(self.terms) != 1:
            raise ZeroDivisionError("only single terms are invertible")
        (a, m), v = next(iter(self.terms.items()))
        return Sym({(-a, tuple((k, -e) for k, e in m)): 1 / v})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Sym) and (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, m), v in sorted(self.terms.items()):
            s = str(v)
            if a:
                s += f"*xi^{a}"
            for k, e in m:
                s += f"*{k}" + (f"^{e}" if e != 1 else "")
            parts.append(s)
        return " + ".join(parts)


Label = Tuple[str, int]
Element = Dict[Label, Sym]


def _clean(x: Element) -> Element:
    return {k: v for k, v in x.items() if not v.is_zero()}


def el_add(a: Element, b: Element) -> Element:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return _clean(out)


def el_scale(c: Sym, a: Element) -> Element:
    return _clean({k: c * v for k, v in a.items()})


def el_sub(a: Element, b: Element) -> Element:
    return el_add(a, el_scale(Sym.const(-1), b))


# tangent Lie bialgebra --------------------------------------------------------

@dataclass
class LieBialgebraPresentation:
    """Basis ``de_b, df_b`` (b in O_plus) and ``dK_m, dL_m`` (m in Pi tilde)."""

    O_plus: Tuple[Vector, ...]
    underline: Tuple[Vector, ...]
    Pi_index: Tuple[int, ...]
    tilde_roots: Tuple[Vector, ...]
    tilde_scales: Tuple[int, ...]
    phi_cartan: Dict[Tuple[int, int], PhiValue]
    pm: PhiMatrix
    u_names: Tuple[str, ...]
    parity: Tuple[int, ...]
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def labels(self) -> List[Label]:
        out = [("e", b) for b in range(len(self.O_plus))]
        out += [("f", b) for b in range(len(self.O_plus))]
        out += [("K", m) for m in range(len(self.tilde_roots))]
        out += [("L", m) for m in range(len(self.tilde_roots))]
        return out

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def degree(self, label: Label) -> Vector:
        kind, i = label
        if kind == "e":
            return self.underline[i]
        if kind == "f":
            return tuple(-x for x in self.underline[i])
        return tuple(0 for _ in self.underline[0]) if self.underline else ()

    def _simple(self, b: int) -> Optional[int]:
        """Pi tilde index of the root ``O_plus[b]`` if it lies in Pi."""
        try:
            return self.Pi_index.index(b)
        except ValueError:
            return None

    def u(self, m: int) -> Sym:
        return Sym.atom(self.u_names[m])

    def bracket_basis(self, a: Label, b: Label) -> Optional[Element]:
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = self._bracket_basis(a, b)
        return self._cache[key]

    def _bracket_basis(self, a: Label, b: Label) -> Optional[Element]:
        ka, ia = a
        kb, ib = b
        if ka in "KL" and kb in "KL":
            return {}
        if kb in "KL":
            r = self.bracket_basis(b, a)
            return None if r is None else el_scale(Sym.const(-1), r)
        if ka in "KL":
            mu, beta = ia, ib
            if ka == "K":
                v = self.phi_cartan[("mu", mu, beta)]
            else:
                v = self.phi_cartan[("beta", mu, beta)]
            sign = -1 if kb == "e" else 1
            return {b: Sym.phi(v) * sign}
        # two root vectors
        if ka == "f" and kb == "e":
            r = self.bracket_basis(b, a)
            return None if r is None else el_scale(Sym.const(-1), r)
        deg = tuple(x + y for x, y in zip(self.degree(a), self.degree(b)))
        if ka == "e" and kb == "f":
            sa, sb = self._simple(ia), self._simple(ib)
            if sa is not None and sb is not None:
                if sa != sb:
                    return {}
                p = self.pm[sa, sa]
                c = Sym.phi(p) * self.u(sa).inverse() * -1
                return {("K", sa): c, ("L", sa): c}
        if a == b:
            return {}
        neg = tuple(-x for x in deg)
        if all(x == 0 for x in deg) or deg in self.underline or neg in self.underline:
            return None
        return {}

    def bracket(self, x: Element, y: Element) -> Optional[Element]:
        out: Element = {}
        for a, ca in x.items():
            for b, cb in y.items():
                r = self.bracket_basis(a, b)
                if r is None:
                    return None
                out = el_add(out, el_scale(ca * cb, r))
        return out

    # cobracket --------------------------------------------------------------

    def cobracket_basis(self, a: Label) -> Optional["Wedge"]:
        kind, i = a
        if kind in "KL":
            return {}
        m = self._simple(i)
        if m is None:
            return None
        partner = ("L", m) if kind == "f" else ("K", m)
        return wedge({partner: Sym.const(1)}, {a: Sym.const(1)})

    def cobracket(self, x: Element) -> Optional["Wedge"]:
        out: Wedge = {}
        for a, ca in x.items():
            d = self.cobracket_basis(a)
            if d is None:
                return None
            out = w_add(out, {k: ca * v for k, v in d.items()})
        return out

    def ad_wedge(self, x: Element, w: "Wedge") -> Optional["Wedge"]:
        out: Wedge = {}
        for (u, v), c in w.items():
            bu = self.bracket(x, {u: Sym.const(1)})
            bv = self.bracket(x, {v: Sym.const(1)})
            if bu is None or bv is None:
                return None
            out = w_add(out, {k: c * s for k, s in wedge(bu, {v: Sym.const(1)}).items()})
            out = w_add(out, {k: c * s for k, s in wedge({u: Sym.const(1)}, bv).items()})
        return out

    def table(self) -> Dict[str, list]:
        """Bracket and cobracket tables for JSON output (undetermined entries marked)."""
        rows = []
        labels = self.labels
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                r = self.bracket_basis(a, b)
                if r == {}:
                    continue
                rows.append([_lab(a), _lab(b), "undetermined" if r is None else
                             {_lab(k): repr(v) for k, v in sorted(r.items())}])
        co = []
        for a in labels:
            d = self.cobracket_basis(a)
            if d is None or not d:
                continue
            co.append([_lab(a), {f"{_lab(u)}^{_lab(v)}": repr(c) for (u, v), c in sorted(d.items())}])
        return {"brackets": rows, "cobrackets": co}


def _lab(a: Label) -> str:
    return f"d{a[0]}{a[1]}"


Wedge = Dict[Tuple[Label, Label], Sym]


def wedge(x: Element, y: Element) -> Wedge:
    out: Wedge = {}
    for a, ca in x.items():
        for b, cb in y.items():
            if a == b:
                continue
            key, sign = ((a, b), 1) if a < b else ((b, a), -1)
            out[key] = out.get(key, Sym()) + ca * cb * sign
    return {k: v for k, v in out.items() if not v.is_zero()}


def w_add(a: Wedge, b: Wedge) -> Wedge:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def mstar_structure(pm: PhiMatrix, crd, bq: ParamBraidingMatrix, xi: RootOfUnity,
                    q) -> LieBialgebraPresentation:
    if not pm.nondegenerate:
        raise ConditionViolated("phi matrix is degenerate")
    O_plus = crd.O_plus
    pos = {b: k for k, b in enumerate(O_plus)}
    Pi_index = tuple(pos[b] for b in crd.Pi_roots)
    table: Dict[Tuple[str, int, int], PhiValue] = {}
    for m, (mu, nm) in enumerate(zip(crd.Pi_tilde_roots, crd.Pi_tilde_scales)):
        for k, beta in enumerate(O_plus):
            nb = crd.orders[beta]
            table[("mu", m, k)] = phi_value(bq, xi, mu, beta, nm, nb)
            table[("beta", m, k)] = phi_value(bq, xi, beta, mu, nb, nm)
    names = []
    for m, b in enumerate(crd.Pi_roots):
        names.append(f"u[{q.bilinear(b, b)},{crd.orders[b]}]")
    return LieBialgebraPresentation(O_plus, crd.underline_O_plus, Pi_index, crd.Pi_tilde_roots,
                                    crd.Pi_tilde_scales, table, pm, tuple(names),
                                    tuple(crd.orders[b] for b in crd.Pi_roots))


# Chevalley embedding -----------------------------------------------------------

@dataclass
class Generators:
    x: List[Element]
    y: List[Element]
    h: List[Element]
    K: List[Element]
    L: List[Element]

    def all(self) -> List[Tuple[str, Element]]:
        out = []
        for name, group in (("x", self.x), ("y", self.y), ("h", self.h), ("K", self.K), ("L", self.L)):
            out += [(f"{name}{i}", e) for i, e in enumerate(group)]
        return out


def generators(lb: LieBialgebraPresentation) -> Generators:
    pm = lb.pm
    x, y = [], []
    for m, b in enumerate(lb.Pi_index):
        p = Sym.phi(pm[m, m])
        x.append({("f", b): Sym.const(1)})
        y.append({("e", b): lb.u(m) * (p * p).inverse()})
    h, K, L = [], [], []
    for m in range(len(lb.tilde_roots)):
        p = Sym.phi(pm[m, m])
        if p.is_zero():
            h.append({})
        else:
            h.append({("K", m): p.inverse(), ("L", m): p.inverse()})
        K.append({("K", m): Sym.const(1)})
        L.append({("L", m): Sym.const(1)})
    return Generators(x, y, h, K, L)


@dataclass
class EmbeddingReport:
    relations_checked: int
    failures: List[str]
    htilde_basis: List[List[Fraction]]
    htilde_dimension: int
    zero_intersection: bool
    eta_central: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return not self.failures and self.zero_intersection and \
            self.htilde_dimension == len(self.htilde_basis)


def _eq(a: Optional[Element], b: Element) -> bool:
    return a is not None and not el_sub(a, b)


def chevalley_embedding(lb: LieBialgebraPresentation, cm: Sequence[Sequence[int]],
                        strict: bool = True) -> EmbeddingReport:
    """sl2 and cross relations on Pi, then the complement of the image Cartan span.

    ``cm[b][g]`` is the Cartan matrix of g_q on Pi, ``<g, b^vee>``.
    """
    g = generators(lb)
    fails: List[str] = []
    count = 0
    r = len(lb.Pi_index)
    two = Sym.const(2)
    for b in range(r):
        count += 3
        if not _eq(lb.bracket(g.h[b], g.x[b]), el_scale(two, g.x[b])):
            fails.append(f"[h{b}, x{b}] != 2 x{b}")
        if not _eq(lb.bracket(g.h[b], g.y[b]), el_scale(-two, g.y[b])):
            fails.append(f"[h{b}, y{b}] != -2 y{b}")
        if not _eq(lb.bracket(g.x[b], g.y[b]), g.h[b]):
            fails.append(f"[x{b}, y{b}] != h{b}")
        for c in range(r):
            if c == b:
                continue
            count += 3
            w = Sym.const(cm[b][c])
            if not _eq(lb.bracket(g.h[b], g.y[c]), el_scale(-w, g.y[c])):
                fails.append(f"[h{b}, y{c}] != -c y{c}")
            if not _eq(lb.bracket(g.h[b], g.x[c]), el_scale(w, g.x[c])):
                fails.append(f"[h{b}, x{c}] != c x{c}")
            if not _eq(lb.bracket(g.x[b], g.y[c]), {}):
                fails.append(f"[x{b}, y{c}] != 0")
    eta_central = None
    if len(lb.tilde_roots) > r:
        eta_central = all(_eq(lb.bracket(g.h[r], g.x[c]), {}) for c in range(r))
    pm = lb.pm
    n = len(lb.tilde_roots)
    P = pm.coefficients()
    system = [[P[m][gm] for m in range(n)] + [P[gm][m] for m in range(n)] for gm in range(n)]
    basis = nullspace(system)
    image = [[Fraction(int(i == m)) for i in range(n)] * 2 for m in range(n)]
    zero_int = rank(basis + image) == len(basis) + len(image)
    rep = EmbeddingReport(count, fails, basis, n, zero_int, eta_central)
    if strict and not rep.ok:
        raise EmbeddingMismatch("; ".join(fails) or "complement of the Cartan image is wrong")
    return rep


# Jacobi and cocycle ------------------------------------------------------------

@dataclass
class IdentityReport:
    checked: int
    skipped: int
    failures: List[str]


def jacobi_check(lb: LieBialgebraPresentation) -> IdentityReport:
    gens = generators(lb).all()
    checked = skipped = 0
    fails = []
    pair = {(na, nb): lb.bracket(a, b) for na, a in gens for nb, b in gens}
    for (na, a), (nb, b), (nc, c) in combinations_with_replacement(gens, 3):
        terms = []
        for u, v, w in ((a, nb, nc), (b, nc, na), (c, na, nb)):
            inner = pair[v, w]
            outer = None if inner is None else lb.bracket(u, inner)
            terms.append(outer)
        if any(t is None for t in terms):
            skipped += 1
            continue
        checked += 1
        if el_add(el_add(terms[0], terms[1]), terms[2]):
            fails.append(f"Jacobi fails on ({na}, {nb}, {nc})")
    return IdentityReport(checked, skipped, fails)


def cocycle_check(lb: LieBialgebraPresentation) -> IdentityReport:
    gens = generators(lb).all()
    checked = skipped = 0
    fails = []
    for i, (na, a) in enumerate(gens):
        for nb, b in gens[i + 1:]:
            ab = lb.bracket(a, b)
            lhs = None if ab is None else lb.cobracket(ab)
            da, db = lb.cobracket(a), lb.cobracket(b)
            if lhs is None or da is None or db is None:
                skipped += 1
                continue
            t1, t2 = lb.ad_wedge(a, db), lb.ad_wedge(b, da)
            if t1 is None or t2 is None:
                skipped += 1
                continue
            checked += 1
            rhs = w_add(t1, {k: -v for k, v in t2.items()})
            if w_add(lhs, {k: -v for k, v in rhs.items()}):
                fails.append(f"cocycle fails on ({na}, {nb})")
    return IdentityReport(checked, skipped, fails)


# Cartan part of the Manin triple --------------------------------------------

@dataclass
class ManinReport:
    gram: List[List[Fraction]]
    gram_nondegenerate: bool
    borel_geq_isotropic: bool
    borel_leq_isotropic: bool
    htilde_orthogonal: bool
    projections_bijective: bool
    borel_geq_coordinates: List[List[Fraction]]
    borel_leq_coordinates: List[List[Fraction]]

    @property
    def ok(self) -> bool:
        return (self.gram_nondegenerate and self.borel_geq_isotropic and self.borel_leq_isotropic
                and self.htilde_orthogonal and self.projections_bijective)


def _form(G, v, w) -> Fraction:
    return sum(v[i] * G[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))


def borel_and_form(lb: LieBialgebraPresentation, emb: EmbeddingReport,
                   strict: bool = True) -> ManinReport:
    """Gram matrix on (dK, dL), isotropy of both Borel Cartan parts, and their g~ + h~ coordinates.

    Values are coefficients of ``xi**-1``; the common factor does not affect
    any of the checks.
    """
    P = lb.pm.coefficients()
    n = len(P)
    G = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for m in range(n):
        for g in range(n):
            G[m][n + g] = P[m][g]
            G[n + g][m] = P[m][g]
    nondeg = det(G) != 0
    K = [[Fraction(int(i == m)) for i in range(2 * n)] for m in range(n)]
    L = [[Fraction(int(i == n + m)) for i in range(2 * n)] for m in range(n)]
    iso_geq = all(_form(G, a, b) == 0 for a in K for b in K)
    iso_leq = all(_form(G, a, b) == 0 for a in L for b in L)
    image = [[Fraction(int(i == m)) for i in range(n)] * 2 for m in range(n)]
    orth = all(_form(G, a, b) == 0 for a in emb.htilde_basis for b in image)
    # coordinates in the basis (image Cartan span, h~ complement)
    from .lattice import solve_rational
    cols = image + emb.htilde_basis
    geq = [list(solve_rational(cols, v) or ()) for v in K]
    leq = [list(solve_rational(cols, v) or ()) for v in L]
    bij = all(len(c) == 2 * n for c in geq + leq) and \
        rank([c[:n] for c in geq]) == n and rank([c[:n] for c in leq]) == n
    rep = ManinReport(G, nondeg, iso_geq, iso_leq, orth, bij, geq, leq)
    if strict and not rep.ok:
        raise ManinCheckFailed("Cartan part of the Manin triple fails")
    return rep


# equivariance ------------------------------------------------------------------

def phi_equivariance_check(bq: ParamBraidingMatrix, xi: RootOfUnity, i: int,
                           roots: Sequence[Vector], scales: Sequence[int]) -> bool:
    """Phi of ``rho_i(bq)`` on ``s_i(roots)`` against phi of ``bq`` on ``roots``."""
    c = generalized_cartan_matrix(bq)
    r = rho(bq, i, c)
    moved = [reflect_vector(c, i, b) for b in roots]
    for a in range(len(roots)):
        for g in range(len(roots)):
            try:
                left = phi_value(bq, xi, roots[a], roots[g], scales[a], scales[g])
            except ConditionViolated:
                left = None
            try:
                right = phi_value(r, xi, moved[a], moved[g], scales[a], scales[g])
            except ConditionViolated:
                right = None
            if left != right:
                return False
    return True


# super A checks and parity comparison --------------------------------------------

def eta_checks(bq: ParamBraidingMatrix, xi: RootOfUnity, crd) -> Optional[Dict[str, object]]:
    """Antisymmetry of the eta row and column against each simple root, and phi_eta_eta."""
    if crd.eta is None:
        return None
    n = bq.theta
    eta, Ne = crd.eta, crd.Pi_tilde_scales[-1]
    residues = []
    for i in range(n):
        a = unit_vector(n, i)
        Ni = bq.entry(i, i).evaluate(xi).order()
        try:
            s = phi_value(bq, xi, a, eta, Ni, Ne) + phi_value(bq, xi, eta, a, Ne, Ni)
            residues.append(s.coeff)
        except ConditionViolated:
            residues.append(None)
    pee = phi_value(bq, xi, eta, eta, Ne, Ne)
    theta, k = n, crd.eta_k
    expected = Ne * Ne * (theta - k + (theta - k + 1) ** 2)
    return {
        "residues": residues,
        "antisymmetric": all(r == 0 for r in residues),
        "phi_eta_eta": pee,
        "magnitude": abs(pee.coeff),
        "expected_magnitude": expected,
        "magnitude_matches": abs(pee.coeff) == expected,
        "N_eta": Ne,
    }


def parity_comparison(bq: ParamBraidingMatrix, xi: RootOfUnity, pm: PhiMatrix,
                      count: int) -> List[Dict[str, object]]:
    """Diagonal phi from the derivative next to the variant with the sign of q_bb(nu)."""
    out = []
    for a in range(count):
        b = pm.roots[a]
        m = bq.bilinear(b, b)
        N = pm.scales[a]
        sign = 1 if m.coeff.is_one() else (-1 if m.coeff.order() == 2 else None)
        alt = None if sign is None else Fraction(-sign * m.exp * N * N)
        out.append({"root": list(b), "derivative": pm[a, a].coeff, "with_parity": alt,
                    "agree": alt == pm[a, a].coeff})
    return out
