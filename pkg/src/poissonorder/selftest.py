"""Quick invariant checks over a few catalog entries (``poissonorder selftest``)."""
from __future__ import annotations

from typing import Callable, List, Tuple

from .cartan import normalize_type
from .errors import EngineError
from .families import family
from .lattice import invariant_factors, matmul, smith_normal_form
from .pipeline import AnalysisConfig, analyze

SAMPLES = [
    ("cartan", {"type": "A", "theta": 2}, 5),
    ("cartan", {"type": "B", "theta": 2}, 5),
    ("cartan", {"type": "G", "theta": 2}, 7),
    ("superA", {"theta": 2, "k": 1}, 5),
    ("superB", {"theta": 2, "k": 1}, 5),
    ("wk4", {}, 5),
]


def _sample_checks(name, params, N) -> List[Tuple[str, bool]]:
    fam = family(name, N=N, **params)
    a = analyze(family=fam, cfg=AnalysisConfig(strict=False))
    p = a.poisson
    tag = f"{name}{params} N={N}"
    expected = {normalize_type(t) for t in fam.expected_types}
    return [
        (f"{tag} type", normalize_type(a.semisimple.name) in expected),
        (f"{tag} recovery", p.recovery == tuple(tuple(r) for r in a.cartan_matrix)),
        (f"{tag} equivariance", all(p.equivariance)),
        (f"{tag} jacobi", not p.jacobi.failures),
        (f"{tag} cocycle", not p.cocycle.failures),
        (f"{tag} dim m*", p.bialgebra.dimension == 2 * len(a.crd.O_plus) + 2 * len(a.crd.Pi_tilde)),
    ]


def _snf_check() -> List[Tuple[str, bool]]:
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    U, D, V = smith_normal_form(M)
    return [("snf round trip", matmul(matmul(U, M), V) == D),
            ("snf invariants", invariant_factors(M) == [2, 6, 12])]


def run_selftest(verbose: bool = False, printer: Callable[[str], None] = print) -> bool:
    results: List[Tuple[str, bool]] = _snf_check()
    for name, params, N in SAMPLES:
        try:
            results += _sample_checks(name, params, N)
        except EngineError as exc:
            results.append((f"{name}{params} N={N} ({type(exc).__name__})", False))
    if verbose:
        for label, ok in results:
            printer(f"{'PASS' if ok else 'FAIL'}  {label}")
    return all(ok for _, ok in results)
