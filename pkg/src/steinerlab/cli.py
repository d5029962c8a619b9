"""Command-line front end.

Subcommands: solve, enumerate, wall, perturb, codirection, serve. All output
is deterministic given flags and seeds; floats print with fixed 9 decimals so
identical invocations are byte-identical.

Exit codes: 0 ok, 2 validation error, 3 enumeration limit, 4 no wall,
5 codirection counterexample found.
"""

import argparse
import csv
import json
import sys

from .ambiguity import codirection_harness, find_wall, perturbation_experiment
from .errors import DegenerateInput, DegeneratePath, LimitExceeded, NoWall, SteinerError
from .realization import Configuration, make_configuration
from .solver import solve
from .svg import render_trees
from .topology import canonical_code, enumerate_full_types, enumerate_types, type_cap

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_LIMIT = 3
EXIT_NO_WALL = 4
EXIT_COUNTEREXAMPLE = 5


def fmt(x: float) -> str:
    return f"{x:.9f}"


def load_config(path: str) -> Configuration:
    """Read a {"points": [[x, y], ...]} document and validate it."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise DegenerateInput(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise DegenerateInput(f"{path} is not valid JSON: {e}")
    pts = doc.get("points")
    if not isinstance(pts, list) or len(pts) < 2:
        raise DegenerateInput(f"{path}: 'points' must list at least 2 pairs")
    for i, p in enumerate(pts):
        if not (isinstance(p, (list, tuple)) and len(p) == 2):
            raise DegenerateInput(f"{path}: point {i} is not an [x, y] pair")
    return make_configuration([complex(float(p[0]), float(p[1])) for p in pts])


def cmd_solve(args) -> int:
    cfg = load_config(args.file)
    res = solve(cfg, tie_tolerance=args.tol, cap=type_cap())
    if args.json:
        print(json.dumps(res.to_json(), sort_keys=True))
    else:
        print(f"n: {len(cfg)}")
        print(f"candidates: {len(res.candidates)}")
        print(f"length: {fmt(res.min_length)}")
        print(f"ambiguous: {'true' if res.ambiguous else 'false'}")
        shown = res.candidates if args.all_candidates else res.minimal
        for c in shown:
            print(f"  {canonical_code(c.type).decode()}  length {fmt(c.length)}")
        gap = res.runner_up_gap()
        if gap is not None:
            print(f"runner_up_gap: {fmt(gap)}")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_trees([c.tree for c in res.minimal]))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    types = (
        enumerate_full_types(args.n, cap=type_cap())
        if args.full_only
        else enumerate_types(args.n, cap=type_cap())
    )
    if args.json:
        print(json.dumps([t.to_json() for t in types], sort_keys=True))
    else:
        print(f"{len(types)} type{'s' if len(types) != 1 else ''}")
        for t in types:
            print(f"  {canonical_code(t).decode()}")
    return EXIT_OK


def cmd_wall(args) -> int:
    a = load_config(args.fileA)
    b = load_config(args.fileB)
    hit = find_wall(a, b, wall_tolerance=args.tol)
    if args.json:
        print(json.dumps(hit.to_json(), sort_keys=True))
    else:
        print(f"t_star: {fmt(hit.t_star)}")
        print(f"gap: {hit.gap:.3e}")
        print(f"lengths: {fmt(hit.lengths[0])} {fmt(hit.lengths[1])}")
    return EXIT_OK


def cmd_perturb(args) -> int:
    cfg = load_config(args.file)
    rep = perturbation_experiment(cfg, args.sigma, args.trials, args.seed)
    still = sum(1 for r in rep.rows if r[2])
    print(f"still_ambiguous: {still}/{args.trials}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["trial", "seed_offset", "ambiguous", "min_length", "runner_up_gap"])
            for trial, off, amb, ln, gap in rep.rows:
                w.writerow(
                    [trial, off, int(amb), fmt(ln), "" if gap is None else fmt(gap)]
                )
    return EXIT_OK


def cmd_codirection(args) -> int:
    checked, ces = codirection_harness(args.n, args.trials, args.seed)
    print(f"pairs_checked: {checked}")
    print(f"counterexamples: {len(ces)}")
    if ces:
        dump = [
            {
                "config": [[p.real, p.imag] for p in cfg],
                "types": [t1.to_json(), t2.to_json()],
            }
            for cfg, t1, t2 in ces
        ]
        path = args.dump or "codirection_counterexample.json"
        with open(path, "w") as fh:
            json.dump(dump, fh, indent=2)
        print(f"dumped: {path}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(cors_origins_regex=None) if args.no_cors else create_app()
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="steinerlab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a configuration file")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--all-candidates", action="store_true")
    s.add_argument("--svg", metavar="OUT.svg")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("enumerate", help="enumerate combinatorial types")
    e.add_argument("n", type=int)
    e.add_argument("--full-only", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("wall", help="bisect the equal-length wall between two configs")
    w.add_argument("fileA")
    w.add_argument("fileB")
    w.add_argument("--tol", type=float, default=1e-10)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_wall)

    p = sub.add_parser("perturb", help="perturbation experiment on an ambiguous config")
    p.add_argument("file")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="OUT.csv")
    p.set_defaults(func=cmd_perturb)

    c = sub.add_parser("codirection", help="randomized codirection falsification harness")
    c.add_argument("--n", type=int, default=4)
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--dump", metavar="OUT.json")
    c.set_defaults(func=cmd_codirection)

    v = sub.add_parser("serve", help="run the HTTP API")
    v.add_argument("--port", type=int, default=7463)
    v.add_argument("--host", default="127.0.0.1")
    v.add_argument("--no-cors", action="store_true", help="disable the localhost CORS policy")
    v.set_defaults(func=cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except NoWall as e:
        print(f"no wall: {e}", file=sys.stderr)
        return EXIT_NO_WALL
    except (DegenerateInput, DegeneratePath) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except SteinerError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
