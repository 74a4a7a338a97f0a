"""Command-line interface: ``tcorona <command> ...``.

Graphs are written in the edge-list format, everything else as JSON. File
outputs go to ``--out`` when given, otherwise to ``$TCORONA_OUT_DIR`` when
set; single-artifact commands fall back to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import theorems
from .corona import KINDS, corona, expected_order
from .cospectral import CertificationError, build_cospectral_corona, load_seed, seed_pairs
from .graphs import GraphError, adjacency_matrix, format_edge_list, laplacian_matrix, resolve
from .spectra import eigenvalues_symmetric

OUT_DIR_ENV = "TCORONA_OUT_DIR"

GRIDS = {
    "default": (theorems.G1_GRID, theorems.G2_GRID),
    "corollary": (theorems.A_COROLLARY_G1, theorems.A_COROLLARY_G2),
    "quick": (("C3", "K4"), ("K1", "K2")),
}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _out_path(arg: str | None, default_name: str | None) -> Path | None:
    if arg:
        return Path(arg)
    env = os.environ.get(OUT_DIR_ENV)
    if env and default_name:
        return Path(env) / default_name
    return None


def _emit(text: str, arg: str | None, default_name: str | None) -> None:
    path = _out_path(arg, default_name)
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _out_dir(arg: str | None) -> Path:
    path = Path(arg) if arg else Path(os.environ.get(OUT_DIR_ENV, "."))
    path.mkdir(parents=True, exist_ok=True)
    return path


def _slug(spec: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in Path(spec).stem if ch)


def cmd_generate(args) -> int:
    g = resolve(args.spec)
    _emit(format_edge_list(g), args.out, f"{_slug(args.spec)}.edges")
    return 0


def cmd_corona(args) -> int:
    g1, g2 = resolve(args.g1), resolve(args.g2)
    result = corona(args.kind, g1, g2)
    expected = expected_order(args.kind, g1.n, g1.m, g2.n)
    if result.graph.n != expected:
        raise AssertionError(f"corona order {result.graph.n} != {expected}")
    out = _out_dir(args.out)
    stem = f"{args.kind}_{_slug(args.g1)}_{_slug(args.g2)}"
    (out / f"{stem}.edges").write_text(format_edge_list(result.graph), encoding="utf-8")
    (out / f"{stem}.layout.json").write_text(_dumps(result.layout()), encoding="utf-8")
    print(f"{args.kind}: {result.graph.n} vertices, {result.graph.m} edges -> {out / stem}.*")
    return 0


def cmd_spectrum(args) -> int:
    g = resolve(args.g1)
    if args.matrix == "A":
        spec = eigenvalues_symmetric(adjacency_matrix(g))
    else:
        spec = eigenvalues_symmetric(laplacian_matrix(g), descending=False)
    values = [0.0 if abs(v) < 1e-12 else round(v, 12) for v in spec.to_list()]
    _emit(_dumps({"graph": args.g1, "matrix": args.matrix, "spectrum": values}), args.out, None)
    return 0


def cmd_verify(args) -> int:
    checks = tuple(args.theorems.split(",")) if args.theorems else theorems.ALL_CHECKS
    g1_keys, g2_keys = GRIDS[args.grid]
    if args.g1:
        g1_keys = tuple(args.g1)
    if args.g2:
        g2_keys = tuple(args.g2)
    formula_tol = args.tol if args.tol is not None else theorems.FORMULA_TOL
    reports = theorems.run_verification(checks, g1_keys, g2_keys, args.points, args.seed,
                                        formula_tol=formula_tol)
    verdicts: dict[str, int] = {}
    for r in reports:
        verdicts[r.verdict] = verdicts.get(r.verdict, 0) + 1
    failed = [r for r in reports if r.fatal]
    doc = {
        "seed": args.seed,
        "points": args.points,
        "checks": list(checks),
        "grid": {"g1": list(g1_keys), "g2": list(g2_keys)},
        "summary": verdicts,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(_dumps(doc), args.out, "verify.json")
    print(f"{len(reports)} reports: " + ", ".join(f"{k}={v}" for k, v in sorted(verdicts.items())),
          file=sys.stderr)
    return 1 if failed else 0


def cmd_cospectral_demo(args) -> int:
    if args.seed_left or args.seed_right:
        if not (args.seed_left and args.seed_right):
            raise GraphError("--seed-left and --seed-right must be given together")
        seed = load_seed(args.seed_left, args.seed_right)
    else:
        seed = seed_pairs()[0]
    other = resolve(args.g2)
    pair = build_cospectral_corona(seed, other, args.side, args.matrix, args.kind, args.tol)
    out = _out_dir(args.out)
    (out / "left.edges").write_text(format_edge_list(pair.left), encoding="utf-8")
    (out / "right.edges").write_text(format_edge_list(pair.right), encoding="utf-8")
    cert = pair.certificate()
    cert["seed"] = seed.name
    cert["side"] = args.side
    cert["kind"] = args.kind
    (out / "certificate.json").write_text(_dumps(cert), encoding="utf-8")
    print(f"certified {args.matrix}-cospectral pair on {pair.left.n} vertices "
          f"(deviation {pair.max_spectral_deviation:.3g}) -> {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tcorona", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a named graph as an edge list")
    p.add_argument("spec", help="generator key, e.g. cycle:5, kpq:2,3, petersen, shrikhande, rook4")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("corona", help="build a T-vertex (tvn) or T-edge (ten) neighbourhood corona")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("spectrum", help="eigenvalues of A or L of a graph")
    p.add_argument("--g1", required=True, help="graph key or edge-list file")
    p.add_argument("--matrix", choices=("A", "L"), default="A")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check the closed forms against brute force")
    p.add_argument("--theorems", help=f"comma-separated subset of {','.join(theorems.ALL_CHECKS)}")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.add_argument("--g1", action="append", help="override the G1 list (repeatable)")
    p.add_argument("--g2", action="append", help="override the G2 list (repeatable)")
    p.add_argument("--seed", type=int, default=theorems.DEFAULT_SEED)
    p.add_argument("--points", type=int, default=theorems.DEFAULT_POINTS)
    p.add_argument("--tol", type=float, help="tolerance for the closed forms")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cospectral-demo", help="build and certify a non-regular cospectral pair")
    p.add_argument("--matrix", choices=("A", "L"), default="A")
    p.add_argument("--g2", default="K2", help="fixed regular operand")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--kind", choices=KINDS, default="ten", help="tvn is experimental")
    p.add_argument("--seed-left")
    p.add_argument("--seed-right")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_cospectral_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except (GraphError, theorems.HypothesisError, KeyError, ValueError, CertificationError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"tcorona {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
