"""Regenerate tests/golden: one report per catalog row (ranks <= 5) at the first admissible N in (5, 7)."""
import json
from pathlib import Path

from poissonorder.families import admissible, family, table_rows
from poissonorder.pipeline import AnalysisConfig, analyze
from poissonorder.report import dumps, to_report

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def golden_name(name, params, N):
    tag = "_".join(f"{k}{params[k]}" for k in sorted(params))
    return f"{name}_{tag}_N{N}.json" if tag else f"{name}_N{N}.json"


def golden_cases(max_rank=5):
    for name, params in table_rows(max_rank):
        N = next(n for n in (5, 7) if admissible(name, params, n))
        yield name, params, N


def render(name, params, N):
    fam = family(name, N=N, **params)
    a = analyze(family=fam, cfg=AnalysisConfig(strict=False), source={"family": fam.descriptor()})
    return dumps(to_report(a))


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    index = []
    for name, params, N in golden_cases():
        fn = golden_name(name, params, N)
        (GOLDEN / fn).write_text(render(name, params, N))
        index.append({"family": name, "params": params, "N": N, "file": fn})
    (GOLDEN / "index.json").write_text(json.dumps(index, sort_keys=True, indent=2) + "\n")
    print(f"wrote {len(index)} reports to {GOLDEN}")


if __name__ == "__main__":
    main()
