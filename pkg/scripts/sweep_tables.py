"""Analyze every catalog row at ranks <= 5 for N in {3,4,5,7,8,12}; print one line each."""
import argparse
import json
import time

from poissonorder.cartan import normalize_type
from poissonorder.errors import EngineError
from poissonorder.families import admissible, family, table_rows
from poissonorder.pipeline import AnalysisConfig, analyze

NS = (3, 4, 5, 7, 8, 12)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=5)
    ap.add_argument("--N", default=",".join(map(str, NS)))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name, params in table_rows(args.max_rank):
        for N in map(int, args.N.split(",")):
            if not admissible(name, params, N):
                continue
            t = time.perf_counter()
            fam = family(name, N=N, **params)
            row = {"family": name, "params": params, "N": N}
            try:
                a = analyze(family=fam, cfg=AnalysisConfig(strict=False))
                p = a.poisson
                row.update(
                    type=a.semisimple.name,
                    type_ok=normalize_type(a.semisimple.name) in {normalize_type(x) for x in fam.expected_types},
                    expected=list(fam.expected_types),
                    recovery=p.recovery == tuple(tuple(r) for r in a.cartan_matrix),
                    equivariance=all(p.equivariance),
                    jacobi=not p.jacobi.failures, cocycle=not p.cocycle.failures,
                    embedding=p.embedding.ok, manin=p.manin.ok,
                    lattice_equal=a.lattices.equal,
                )
            except EngineError as exc:
                row.update(error=f"{type(exc).__name__}: {exc}")
            row["seconds"] = round(time.perf_counter() - t, 2)
            rows.append(row)
            if not args.json:
                print(json.dumps(row, sort_keys=True), flush=True)
    if args.json:
        print(json.dumps(rows, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
