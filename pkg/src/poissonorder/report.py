"""Canonical JSON, text and DOT renderings of an analysis."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict

from .braiding import dynkin_diagram
from .pipeline import Analysis

SCHEMA = "report/v1"
ENGINE_VERSION = "0.1.0"


def _norm(x: Any) -> Any:
    """Scalars to canonical strings/ints, containers recursively."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return round(x, 6)
    if isinstance(x, str):
        return x
    if isinstance(x, dict):
        return {str(k): _norm(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_norm(v) for v in x]
    return str(x)


def _vec(v):
    return list(v)


def to_report(a: Analysis, include_timing: bool = False) -> Dict[str, Any]:
    gp = a.groupoid
    crd = a.crd
    out: Dict[str, Any] = {
        "schema": SCHEMA,
        "engine_version": ENGINE_VERSION,
        "input": dict(a.source),
        "braiding": {"entries": a.q.to_strings(), "diagram": dynkin_diagram(a.q).to_json()},
        "groupoid": {"objects": len(gp), "quotient": gp.quotient,
                     "edges": len(gp.edges())},
        "roots": {
            "positive": [_vec(b) for b in a.roots.roots],
            "count": a.roots.ell,
            "orders": [a.roots.orders[b] for b in a.roots.roots],
        },
        "cartan": {
            "O_plus": [_vec(b) for b in crd.O_plus],
            "underline_O_plus": [_vec(b) for b in crd.underline_O_plus],
            "Pi": [_vec(b) for b in crd.Pi],
            "Pi_roots": [_vec(b) for b in crd.Pi_roots],
            "Pi_tilde": [_vec(b) for b in crd.Pi_tilde],
            "Ntt": crd.Ntt,
            "eta": None if crd.eta is None else _vec(crd.eta),
            "eta_order": crd.eta_order,
            "cartan_matrix": [list(r) for r in a.cartan_matrix],
            "type": a.semisimple.name,
            "weyl_order": a.semisimple.weyl_order,
            "reflection_closure": a.closure,
            "basis_property": a.basis_property,
        },
        "centrality": {
            "passed": a.centrality.passed,
            "passed_all_cartan_roots": a.centrality_full.passed,
            "violations": [[i + 1, _vec(b)] for i, b in a.centrality.violations],
        },
    }
    p = a.poisson
    if p is None:
        out["T"] = None
        out["phi"] = None
        out["poisson_note"] = a.poisson_note
    else:
        pm = p.pm
        out["T"] = [list(r) for r in pm.T]
        out["TT"] = [list(r) for r in pm.TT]
        out["phi"] = {"unit": "xi^-1", "roots": [_vec(b) for b in pm.roots],
                      "scales": list(pm.scales), "matrix": pm.coefficients(),
                      "determinant": pm.determinant, "T_candidates_tried": pm.tried}
        out["nondegenerate"] = pm.nondegenerate
        out["recovery_matrix"] = [list(r) for r in p.recovery]
        out["kappa"] = [k.coeff for k in p.scalars["kappa"]]
        out["s_beta"] = [str(s) for s in p.scalars["s"]]
        out["lambda"] = {
            "nonzero": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(p.lambdas["lambda_nonzero"].items())},
            "denominators": [f"{m} - 1" for m in p.lambdas["denominators"]],
            "denominator_roots": [str(z) for z in p.lambdas["denominator_roots"]],
            "specialization_valid": p.lambdas["specialization_valid"],
        }
        out["bialgebra"] = {
            "dimension": p.bialgebra.dimension,
            "tables": p.bialgebra.table(),
            "jacobi": {"checked": p.jacobi.checked, "skipped": p.jacobi.skipped,
                       "failures": p.jacobi.failures},
            "cocycle": {"checked": p.cocycle.checked, "skipped": p.cocycle.skipped,
                        "failures": p.cocycle.failures},
            "embedding": {"relations_checked": p.embedding.relations_checked,
                          "failures": p.embedding.failures,
                          "htilde_dimension": len(p.embedding.htilde_basis),
                          "zero_intersection": p.embedding.zero_intersection,
                          "eta_central": p.embedding.eta_central},
        }
        out["manin_checks"] = {
            "gram_nondegenerate": p.manin.gram_nondegenerate,
            "borel_geq_cartan_isotropic": p.manin.borel_geq_isotropic,
            "borel_leq_cartan_isotropic": p.manin.borel_leq_isotropic,
            "htilde_orthogonal_to_image": p.manin.htilde_orthogonal,
            "borel_projections_bijective": p.manin.projections_bijective,
            "nilradicals": "isotropic by grading",
        }
        out["equivariance"] = p.equivariance
        out["eta_checks"] = p.eta
        out["parity_comparison"] = p.parity
    lat = a.lattices
    out["lattices"] = {
        "lambda_equal": lat.equal,
        "extra_generators": [list(g) for g in lat.extra_generators],
        "quotient_invariants": list(lat.quotient),
        "ctilde": list(a.geometry.ctilde) if a.geometry else [],
    }
    out["geometry"] = a.geometry.to_json() if a.geometry else None
    if include_timing:
        out["timing"] = dict(a.timing)
    return _norm(out)


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_text(report: Dict[str, Any]) -> str:
    c = report["cartan"]
    lines = [
        f"type          {c['type']}",
        f"weyl order    {c['weyl_order']}",
        f"objects       {report['groupoid']['objects']}",
        f"|Delta_+|     {report['roots']['count']}",
        f"O_+           {c['O_plus']}",
        f"Pi            {c['Pi']}",
        f"Pi tilde      {c['Pi_tilde']}",
        f"Ntt           {c['Ntt']}",
        f"centrality    {'pass' if report['centrality']['passed'] else 'fail'}",
    ]
    if report.get("T") is not None:
        lines += [
            f"T             {report['T']}",
            f"phi (xi^-1)   {report['phi']['matrix']}",
            f"nondegenerate {report['nondegenerate']}",
            f"recovery      {report['recovery_matrix']}",
            f"kappa         {report['kappa']}",
            f"dim m*        {report['bialgebra']['dimension']}",
            f"jacobi        {report['bialgebra']['jacobi']['checked']} checked, "
            f"{len(report['bialgebra']['jacobi']['failures'])} failures",
            f"cocycle       {report['bialgebra']['cocycle']['checked']} checked, "
            f"{len(report['bialgebra']['cocycle']['failures'])} failures",
        ]
    lat = report["lattices"]
    g = report["geometry"]
    lines += [
        f"Lambda = Lambda'  {lat['lambda_equal']}",
        f"C~ invariants     {lat['ctilde']}",
        f"dim M, M>=, M+    {g['dim_M']}, {g['dim_M_geq']}, {g['dim_M_plus']}",
        f"hz bound          {g['hz_isoclass_upper_bound']}",
    ]
    return "\n".join(lines) + "\n"


def to_dot(a: Analysis) -> str:
    return a.groupoid.to_dot()
