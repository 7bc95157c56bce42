"""Counting data attached to the Poisson groups: Weyl orders, cells, dimensions, C~."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence

from .lattice import ctilde_invariants, inverse, matmul, transpose


@dataclass
class GeometryReport:
    weyl_order: int
    double_bruhat_cell_count: int
    richardson_cell_count: int
    dim_M: int
    dim_M_geq: int
    dim_M_plus: int
    hz_isoclass_upper_bound: int
    ctilde: List[int] = field(default_factory=list)
    dim_btilde_plus: int = 0

    def to_json(self):
        return {
            "weyl_order": self.weyl_order,
            "double_bruhat_cell_count": self.double_bruhat_cell_count,
            "richardson_cell_count": self.richardson_cell_count,
            "dim_M": self.dim_M,
            "dim_M_geq": self.dim_M_geq,
            "dim_M_plus": self.dim_M_plus,
            "dim_btilde_plus": self.dim_btilde_plus,
            "hz_isoclass_upper_bound": self.hz_isoclass_upper_bound,
            "ctilde": list(self.ctilde),
            "leaves": "conjugacy classes x T~/C~",
        }


def coweight_basis(cm: Sequence[Sequence[int]], extra: int = 0) -> List[List[Fraction]]:
    """Fundamental coweights in coroot coordinates, one per column, plus unit columns for central directions.

    ``cm[b][g] = <alpha_g, alpha_b^vee>``, so coweight j has coroot coordinates
    given by row j of ``cm^-1``.
    """
    r = len(cm)
    n = r + extra
    B = [[Fraction(0)] * n for _ in range(n)]
    if r:
        inv = inverse(cm)
        for j in range(r):
            for i in range(r):
                B[i][j] = inv[j][i]
    for e in range(r, n):
        B[e][e] = Fraction(1)
    return B


def ctilde_matrix(P: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """``P~^-1 P~^T`` as an endomorphism in the basis Pi tilde (column convention).

    The endomorphism ``mu -> sum_g phi_mu,g g`` has matrix ``P^T`` and its
    transpose map has matrix ``P``.
    """
    return matmul(inverse(transpose(P)), [list(r) for r in P])


def geometry_report(st, crd, P: Sequence[Sequence[Fraction]] = None) -> GeometryReport:
    extra = len(crd.Pi_tilde_roots) - len(crd.Pi_roots)
    w = st.weyl_order
    dim_geq = len(crd.O_plus) + len(crd.Pi_tilde_roots)
    ct: List[int] = []
    if P is not None:
        ct = ctilde_invariants(ctilde_matrix(P), coweight_basis(st.cartan_matrix, extra))
    return GeometryReport(
        weyl_order=w,
        double_bruhat_cell_count=w,
        richardson_cell_count=w,
        dim_M=2 * dim_geq,
        dim_M_geq=dim_geq,
        dim_M_plus=len(crd.O_plus),
        hz_isoclass_upper_bound=w,
        ctilde=ct,
        dim_btilde_plus=st.positive_root_count() + st.rank + extra,
    )
