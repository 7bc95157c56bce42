"""Command line: ``analyze``, ``sweep`` and ``selftest``.

Exit codes: 0 success, 1 bad input, 2 not arithmetic or likely infinite,
3 a required condition fails, 4 an internal invariant is violated.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from .braiding import BraidingMatrix, ParamBraidingMatrix
from .cyclotomic import parse_root
from .errors import EngineError, ParseError
from .families import family as make_family
from .pipeline import AnalysisConfig, analyze
from .report import dumps, to_dot, to_report, to_text

INPUT_SCHEMA = "braiding/v1"


def load_input(data: Dict) -> Dict:
    """Parse a ``braiding/v1`` document into keyword arguments for ``analyze``."""
    if not isinstance(data, dict):
        raise ParseError("input must be a JSON object")
    schema = data.get("schema", INPUT_SCHEMA)
    if schema != INPUT_SCHEMA:
        raise ParseError(f"unknown schema {schema!r} at $.schema")
    if "family" in data:
        desc = dict(data["family"])
        name = desc.pop("family", None) or desc.pop("name", None)
        if name is None:
            raise ParseError("family descriptor needs a 'family' name at $.family")
        fam = make_family(name, **desc)
        return {"family": fam, "source": {"family": fam.descriptor()}}
    if "param" in data:
        if "xi" not in data:
            raise ParseError("parametric input needs 'xi' at $.xi")
        bq = ParamBraidingMatrix.from_json(data["param"])
        return {"bq": bq, "xi": parse_root(str(data["xi"])),
                "source": {"param": bq.to_json(), "xi": str(data["xi"])}}
    if "entries" in data:
        rows = data["entries"]
        for r, row in enumerate(rows if isinstance(rows, list) else []):
            for c, x in enumerate(row if isinstance(row, list) else []):
                try:
                    parse_root(str(x))
                except ParseError as exc:
                    raise ParseError(f"{exc} at $.entries[{r}][{c}]") from exc
        q = BraidingMatrix.from_strings(rows)
        return {"q": q, "source": {"entries": q.to_strings()}}
    raise ParseError("input needs one of 'entries', 'param', 'family'")


def _family_arg(text: str) -> Dict:
    """``name:key=value,key=value`` into a descriptor."""
    name, _, rest = text.partition(":")
    desc: Dict[str, object] = {"family": name}
    for part in filter(None, rest.split(",")):
        k, _, v = part.partition("=")
        desc[k] = v if k == "type" else int(v)
    return desc


def _config(args) -> AnalysisConfig:
    return AnalysisConfig(args.cap_objects, args.cap_roots, args.t_budget,
                          strict=not args.no_strict)


def _emit(analysis, fmt: str, timing: bool) -> str:
    if fmt == "dot":
        return to_dot(analysis)
    rep = to_report(analysis, timing)
    return to_text(rep) if fmt == "text" else dumps(rep)


def cmd_analyze(args) -> int:
    if args.family:
        data = {"schema": INPUT_SCHEMA, "family": _family_arg(args.family)}
    else:
        try:
            text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
            data = json.loads(text)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read input: {exc}") from exc
    kw = load_input(data)
    a = analyze(cfg=_config(args), **kw)
    out = _emit(a, args.format, args.timing)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        ext = {"json": "json", "text": "txt", "dot": "dot"}[args.format]
        (Path(args.out) / f"report.{ext}").write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def sweep(name: str, params: Dict[str, List[int]], Ns: List[int], cfg: AnalysisConfig,
          out: Optional[Path] = None) -> List[Dict[str, object]]:
    """One analysis per parameter tuple; failures are recorded, not raised."""
    keys = sorted(params)
    tuples = [{}]
    for k in keys:
        tuples = [dict(t, **{k: v}) for t in tuples for v in params[k]]
    rows = []
    for t in sorted(tuples, key=lambda d: [d[k] for k in keys]):
        for N in sorted(Ns):
            row: Dict[str, object] = {"family": name, "params": t, "N": N}
            try:
                fam = make_family(name, N=N, **t)
                a = analyze(family=fam, cfg=cfg, source={"family": dict(fam.descriptor())})
                rep = to_report(a)
                row.update(status="ok", type=a.semisimple.name, weyl_order=a.semisimple.weyl_order,
                           nondegenerate=rep.get("nondegenerate"), centrality=a.centrality.passed)
                if out is not None:
                    tag = "_".join(f"{k}{t[k]}" for k in keys)
                    (out / f"{name}_{tag}_N{N}.json".replace("__", "_")).write_text(dumps(rep))
            except EngineError as exc:
                row.update(status=type(exc).__name__, exit_code=exc.exit_code, message=str(exc))
            rows.append(row)
    return rows


def cmd_sweep(args) -> int:
    params: Dict[str, List[int]] = {}
    for item in args.param or []:
        k, _, v = item.partition("=")
        params[k] = [x if k == "type" else int(x) for x in v.split(",") if x]
    Ns = [int(x) for x in args.N.split(",") if x]
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    rows = sweep(args.family, params, Ns, _config(args), out)
    text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if out:
        (out / "summary.json").write_text(text)
    sys.stdout.write(text)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = run_selftest(verbose=True)
    return 0 if ok else 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="poissonorder",
                                description="Poisson order data of large quantum groups of diagonal type.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-objects", type=int, default=None,
                        help="maximum Weyl groupoid objects (default 4096 or NP_CAPS)")
    common.add_argument("--cap-roots", type=int, default=None,
                        help="maximum positive roots per object (default 16384 or NP_CAPS)")
    common.add_argument("--t-budget", type=int, default=3,
                        help="largest |t_ij| tried by the exponent search (default 3)")
    common.add_argument("--format", choices=["json", "text", "dot"], default="json")
    common.add_argument("--out", default=None, help="write output files into this directory")
    common.add_argument("--seed", type=int, default=0, help="reserved; has no effect on results")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings (not byte-stable)")
    common.add_argument("--no-strict", action="store_true",
                        help="report failed bialgebra checks instead of exiting with code 4")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="analyze one braiding matrix or family")
    a.add_argument("input", nargs="?", default="-", help="braiding/v1 JSON file, or - for stdin")
    a.add_argument("--family", default=None, help="e.g. wk4:N=5 or cartan:type=A,theta=2,N=5")
    a.set_defaults(func=cmd_analyze)
    s = sub.add_parser("sweep", parents=[common], help="analyze a family over parameter ranges")
    s.add_argument("--family", required=True)
    s.add_argument("--param", action="append", help="key=v1,v2,... (repeatable)")
    s.add_argument("--N", required=True, help="comma separated orders")
    s.set_defaults(func=cmd_sweep)
    t = sub.add_parser("selftest", help="run the built-in invariant checks")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
