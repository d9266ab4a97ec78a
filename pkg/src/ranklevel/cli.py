"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Weights are comma-separated Dynkin labels (``2,1``); a bare integer stands
for a level-1 weight when the rank is not 2.  Diagrams are comma-separated
rows (``6,4,3``).  Set ``RANKLEVEL_CACHE_SIZE`` to resize the LR memo.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .blocks import CurveSpec, block_dim
from .duality import branching_summands
from .fusion import get_context, verlinde_smatrix_dim
from .reptheory import weyl_dim
from .suites import DEFAULT_SEED, SUITES, SuiteOptions
from .weights import Weight, enumerate_weights, level1_weight, weight_to_json
from .young import (
    YoungDiagram,
    diagram_dagger,
    diagram_to_json,
    enumerate_aff,
    pi,
    size,
    transpose,
)

SCHEMA = "ranklevel.cli/1"


class UsageError(Exception):
    pass


def _parse_ints(token: str, what: str, argpos: int) -> list[int]:
    out, col = [], 1
    for piece in token.split(","):
        try:
            out.append(int(piece))
        except ValueError:
            raise UsageError(
                f"{what} #{argpos} {token!r}: expected an integer at character {col}, got {piece!r}"
            ) from None
        col += len(piece) + 1
    return out


def parse_weight(token: str, rank: int, argpos: int = 1) -> Weight:
    values = _parse_ints(token, "weight", argpos)
    try:
        if len(values) == 1 and rank != 2:
            return level1_weight(values[0], rank)
        return Weight(rank, tuple(values))
    except ValueError as exc:
        raise UsageError(f"weight #{argpos} {token!r}: {exc}") from None


def parse_diagram(token: str, r: int, l: int, argpos: int = 1) -> YoungDiagram:
    rows = _parse_ints(token, "diagram", argpos)
    try:
        return YoungDiagram(r, l, tuple(rows))
    except ValueError as exc:
        raise UsageError(f"diagram #{argpos} {token!r}: {exc}") from None


def _wjson(w: Weight) -> dict[str, Any]:
    return {**weight_to_json(w), "name": str(w)}


# --- commands ---------------------------------------------------------------


def cmd_weights(args) -> tuple[dict[str, Any], str, int]:
    ws = enumerate_weights(args.rank, args.level)
    result = {"rank": args.rank, "level": args.level, "count": len(ws),
              "weights": [_wjson(w) for w in ws]}
    text = "\n".join(f"{','.join(map(str, w.labels)) or '-'}\t{w}" for w in ws)
    return result, text, 0


def _diagram_row(name: str, D: YoungDiagram) -> dict[str, Any]:
    return {"name": name, **diagram_to_json(D), "pi": _wjson(pi(D)), "size": size(D),
            "aff": D.is_aff, "fin": D.is_fin}


def cmd_young(args) -> tuple[dict[str, Any], str, int]:
    r, l = args.rank, args.level
    if args.diagram is None:
        aff = enumerate_aff(r, l, args.size_class)
        rows = [_diagram_row(str(D), D) for D in aff]
        text = "\n".join(
            f"{D}\tpi={pi(D)}\t|Y|={size(D)}\t{'fin' if D.is_fin else 'aff'}" for D in aff
        )
        return {"type": [r, l], "size_class": args.size_class, "count": len(aff),
                "diagrams": rows}, text, 0
    Y = parse_diagram(args.diagram, r, l)
    if not Y.is_aff:
        raise UsageError(f"diagram {Y} is not in the aff set of type ({r}, {l})")
    Yd = diagram_dagger(Y)
    table = {"Y": Y, "Y^t": transpose(Y), "Y^dag": Yd, "(Y^dag)^t": transpose(Yd)}
    wanted = {
        "all": list(table), "transpose": ["Y", "Y^t"], "dagger": ["Y", "Y^dag"],
        "pi": ["Y"], "size": ["Y"],
    }[args.show]
    rows = [_diagram_row(k, table[k]) for k in wanted]
    lines = [
        f"{row['name']:<10} = {table[row['name']]!s:<12} type {tuple(row['type'])}  "
        f"pi = {row['pi']['name']:<10} |.| = {row['size']:<3} "
        f"{'fin' if row['fin'] else 'aff, not fin'}"
        for row in rows
    ]
    return {"table": rows}, "\n".join(lines), 0


def cmd_fusion(args) -> tuple[dict[str, Any], str, int]:
    ctx = get_context(args.rank, args.level)
    if len(args.weights) not in (2, 3):
        raise UsageError("fusion takes two weights (product) or three (coefficient)")
    ws = [parse_weight(t, args.rank, i) for i, t in enumerate(args.weights, start=1)]
    try:
        ctx.check(*ws)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(ws) == 3:
        n = ctx.coefficient(*ws)
        return {"lambda": _wjson(ws[0]), "mu": _wjson(ws[1]), "nu": _wjson(ws[2]),
                "coefficient": n}, str(n), 0
    prod = ctx.product(*ws)
    result = {"lambda": _wjson(ws[0]), "mu": _wjson(ws[1]),
              "product": [{"weight": _wjson(w), "multiplicity": m} for w, m in prod.items()]}
    text = "\n".join(f"{m}\t{w}" for w, m in prod.items())
    return result, text, 0


def cmd_dim(args) -> tuple[dict[str, Any], str, int]:
    ctx = get_context(args.rank, args.level)
    labels = tuple(parse_weight(t, args.rank, i) for i, t in enumerate(args.labels, start=1))
    try:
        d = block_dim(ctx, CurveSpec(args.genus, labels))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result: dict[str, Any] = {"rank": args.rank, "level": args.level, "genus": args.genus,
                              "labels": [_wjson(w) for w in labels], "dim": str(d)}
    text = str(d)
    if args.oracle:
        approx = verlinde_smatrix_dim(ctx, args.genus, labels)
        result["oracle"] = approx
        text += f"\noracle {approx!r}"
    return result, text, 0


def cmd_branch(args) -> tuple[dict[str, Any], str, int]:
    r, l = args.rank, args.level
    classes = [args.size] if args.size is not None else range(r * l)
    out, lines = [], []
    for lam in classes:
        try:
            summands = branching_summands(lam, r, l)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for s in summands:
            out.append({"lambda0": lam, "diagram": list(s.diagram.rows), "mu": _wjson(s.mu),
                        "mu_t": _wjson(s.mu_t), "gap": s.gap,
                        "dim": str(weyl_dim(s.mu) * weyl_dim(s.mu_t))})
            lines.append(f"{lam}\t{s.diagram}\tmu={s.mu}\tmu_t={s.mu_t}\tgap={s.gap}")
    return {"type": [r, l], "summands": out}, "\n".join(lines), 0


def cmd_verify(args) -> tuple[dict[str, Any], str, int]:
    opts = SuiteOptions(max_rl=args.max_rl, genus=args.genus, seed=args.seed,
                        count=args.count, max_points=args.max_points,
                        rank=args.rank, level=args.level)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    summary, failures, lines = [], [], []
    for name in names:
        cases = list(SUITES[name](opts))
        bad = [c for c in cases if not c.holds]
        summary.append({"suite": name, "cases": len(cases), "failed": len(bad)})
        failures.extend({"suite": name, "case": c.name, "report": c.report} for c in bad)
        lines.append(f"{'PASS' if not bad else 'FAIL'}  {name:<14} {len(cases)} cases"
                     + (f", {len(bad)} failed" if bad else ""))
    result = {"seed": args.seed, "suites": summary, "failures": failures}
    code = 1 if failures else 0
    return result, "\n".join(lines), code


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--rank", "-r", type=int, required=True)
    shape.add_argument("--level", "-l", type=int, required=True)

    parser = argparse.ArgumentParser(
        prog="ranklevel",
        description="Fusion rings, conformal-block dimensions and rank-level duality checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("weights", parents=[common, shape], help="list P_l(sl(r))")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("young", parents=[common, shape], help="diagram tables")
    p.add_argument("--diagram", help="rows, e.g. 6,4,3")
    p.add_argument("--show", choices=["all", "transpose", "dagger", "pi", "size"], default="all")
    p.add_argument("--size-class", type=int)
    p.set_defaults(func=cmd_young)

    p = sub.add_parser("fusion", parents=[common, shape], help="fusion product or coefficient")
    p.add_argument("weights", nargs="+")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("dim", parents=[common, shape], help="conformal-block dimension")
    p.add_argument("--genus", "-g", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="also print the S-matrix estimate")
    p.add_argument("labels", nargs="*")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("branch", parents=[common, shape], help="branching summands")
    p.add_argument("--size", type=int, help="level-1 label of sl(rl); all if omitted")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--rank", "-r", type=int)
    p.add_argument("--level", "-l", type=int)
    p.add_argument("--max-rl", type=int, default=8)
    p.add_argument("--genus", "-g", type=int, default=2)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-points", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def _check_shape(args) -> None:
    rank, level = getattr(args, "rank", None), getattr(args, "level", None)
    if rank is not None and rank < 1:
        raise UsageError(f"--rank must be >= 1, got {rank}")
    if level is not None and level < (0 if args.verb == "weights" else 1):
        raise UsageError(f"--level out of range: {level}")
    if getattr(args, "genus", 0) < 0:
        raise UsageError("--genus must be non-negative")
    if args.verb == "verify" and (rank is None) != (level is None):
        raise UsageError("verify takes --rank and --level together")
    if args.verb == "verify" and not 0 <= args.seed < 2 ** 64:
        raise UsageError("--seed must be a 64-bit unsigned integer")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_shape(args)
        result, text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        parser.exit(2, f"{parser.prog} {args.verb}: error: {exc}\n")
    if args.format == "json" or code == 1:
        payload = {"schema": SCHEMA, "command": args.verb, **result}
        rendered = json.dumps(payload, sort_keys=True, indent=2)
        if code == 1 and args.format == "text":
            rendered = text + "\n" + rendered
    else:
        rendered = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered + "\n")
    else:
        sys.stdout.write(rendered + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
