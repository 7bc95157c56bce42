"""End-to-end analysis: braiding -> groupoid -> cartan -> poisson -> lattice -> geometry."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import poisson as P
from .braiding import BraidingMatrix, ParamBraidingMatrix, evaluate
from .cartan import (CartanRootData, SemisimpleType, basis_property_holds, cartan_matrix_of_g,
                     cartan_roots, check_centrality, check_centrality_full, fibration_flags,
                     recognize_type, reflection_closure_holds, root_lengths)
from .cyclotomic import RootOfUnity
from .errors import ConditionViolated, InternalInvariantViolation, NonDegeneracyViolated
from .families import FamilyInstance
from .geometry import GeometryReport, geometry_report
from .groupoid import (Groupoid, RootDatum, RootSystemFibration, default_caps, enumerate_groupoid,
                       root_datum, root_fibration)
from .lattice import LatticeComparison, zq_lattice_comparison


@dataclass
class AnalysisConfig:
    cap_objects: Optional[int] = None
    cap_roots: Optional[int] = None
    t_budget: int = 3
    quotient: str = "diagram"
    strict: bool = True

    def caps(self):
        a, b = default_caps()
        return (self.cap_objects or a, self.cap_roots or b)


@dataclass
class PoissonData:
    bq: ParamBraidingMatrix
    xi: RootOfUnity
    pm: P.PhiMatrix
    recovery: tuple
    scalars: Dict[str, list]
    lambdas: Dict[str, object]
    bialgebra: P.LieBialgebraPresentation
    embedding: P.EmbeddingReport
    jacobi: P.IdentityReport
    cocycle: P.IdentityReport
    manin: P.ManinReport
    equivariance: List[bool]
    eta: Optional[Dict[str, object]]
    parity: List[Dict[str, object]]


@dataclass
class Analysis:
    source: Dict[str, object]
    q: BraidingMatrix
    groupoid: Groupoid
    fibration: RootSystemFibration
    roots: RootDatum
    crd: CartanRootData
    cartan_matrix: tuple
    semisimple: SemisimpleType
    closure: bool
    basis_property: bool
    centrality: object
    centrality_full: object
    poisson: Optional[PoissonData] = None
    poisson_note: str = ""
    lattices: Optional[LatticeComparison] = None
    geometry: Optional[GeometryReport] = None
    timing: Dict[str, float] = field(default_factory=dict)
    family: Optional[FamilyInstance] = None


def _roots(q, cfg: AnalysisConfig):
    cap_o, cap_r = cfg.caps()
    gp = enumerate_groupoid(q, cap_o, cfg.quotient)
    fib = root_fibration(gp, cap_r)
    flags = fibration_flags(fib)
    crd = cartan_roots(fib, 0, flags)
    return gp, fib, crd


def _poisson(bq: ParamBraidingMatrix, xi: RootOfUnity, pm: P.PhiMatrix, crd: CartanRootData,
             cm, st: SemisimpleType, q: BraidingMatrix, strict: bool) -> PoissonData:
    r = len(crd.Pi_roots)
    rec = P.cartan_recovery(pm, r)
    if strict and rec != tuple(tuple(x) for x in cm):
        from .errors import RecoveryMismatch
        raise RecoveryMismatch("phi recovery differs from the root-string Cartan matrix")
    sc = P.scalars(pm, crd, q, root_lengths(st))
    lam = P.lambda_and_denominators(bq, xi)
    lb = P.mstar_structure(pm, crd, bq, xi, q)
    emb = P.chevalley_embedding(lb, cm, strict=strict)
    jac = P.jacobi_check(lb)
    co = P.cocycle_check(lb)
    if strict and (jac.failures or co.failures):
        raise InternalInvariantViolation("; ".join((jac.failures + co.failures)[:3]))
    man = P.borel_and_form(lb, emb, strict=strict)
    eqv = [P.phi_equivariance_check(bq, xi, i, crd.Pi_tilde_roots, crd.Pi_tilde_scales)
           for i in range(bq.theta)]
    eta = P.eta_checks(bq, xi, crd)
    par = P.parity_comparison(bq, xi, pm, r)
    return PoissonData(bq, xi, pm, rec, sc, lam, lb, emb, jac, co, man, eqv, eta, par)


def analyze(q: Optional[BraidingMatrix] = None, *, family: Optional[FamilyInstance] = None,
            bq: Optional[ParamBraidingMatrix] = None, xi: Optional[RootOfUnity] = None,
            cfg: Optional[AnalysisConfig] = None, source: Optional[Dict[str, object]] = None) -> Analysis:
    """Run the full pipeline on one input.

    Give exactly one of: ``family`` (T is searched), ``bq`` with ``xi`` (T is
    fixed), or a plain evaluated ``q`` (no Poisson data: there is no lift).
    """
    cfg = cfg or AnalysisConfig()
    timing: Dict[str, float] = {}
    t0 = time.perf_counter()
    if family is not None:
        q0 = family.evaluated()
        xi = family.xi
    elif bq is not None:
        if xi is None:
            raise ValueError("xi is required with a parametric matrix")
        q0 = evaluate(bq, xi)
    elif q is not None:
        q0 = q
    else:
        raise ValueError("nothing to analyze")
    gp, fib, crd = _roots(q0, cfg)
    timing["roots"] = time.perf_counter() - t0

    cm = cartan_matrix_of_g(crd)
    st = recognize_type(cm)
    closure = reflection_closure_holds(crd)
    basis = basis_property_holds(crd)
    if cfg.strict and not (closure and basis):
        raise InternalInvariantViolation("rescaled Cartan roots do not form a root system with basis Pi")

    pdata = None
    note = ""
    t1 = time.perf_counter()
    if family is not None:
        bq, pm = P.build_T(family, crd, cfg.t_budget)
        q_final = family.evaluated(pm.upper)
        if q_final.entries != q0.entries:
            gp, fib, crd2 = _roots(q_final, cfg)
            if crd2.O_plus != crd.O_plus or crd2.Pi != crd.Pi:
                raise InternalInvariantViolation("Cartan roots changed with the exponent split")
            crd = crd2
        q0 = q_final
    elif bq is not None:
        pm = P.phi_matrix(bq, xi, crd.Pi_tilde_roots, crd.Pi_tilde_scales)
        if not pm.nondegenerate:
            raise NonDegeneracyViolated("phi matrix of the given exponents is singular")
    else:
        pm = None
        note = "no parametric lift given; phi data needs a family or a parametric matrix"
    cent = check_centrality(q0, crd)
    cent_full = check_centrality_full(q0, crd)
    if pm is not None:
        if not cent.passed:
            raise ConditionViolated(f"centrality fails at {cent.violations[:3]}")
        pdata = _poisson(bq, xi, pm, crd, cm, st, q0, cfg.strict)
    timing["poisson"] = time.perf_counter() - t1

    rd = root_datum(fib, 0)
    t2 = time.perf_counter()
    lat = zq_lattice_comparison(crd, rd)
    geo = geometry_report(st, crd, pm.coefficients() if pm is not None else None)
    timing["lattice_geometry"] = time.perf_counter() - t2
    return Analysis(source or {}, q0, gp, fib, rd, crd, cm, st, closure, basis, cent, cent_full,
                    pdata, note, lat, geo, timing, family)
