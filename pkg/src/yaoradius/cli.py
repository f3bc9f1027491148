"""``yaoradius`` command line: generate, build, analyze, verify and plot.

Exit codes: 0 success, 1 usage/I-O error or failed claim, 2 no connecting
radius up to the cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as verify_mod
from .counterexamples import FAMILIES, ConstructionError, ConstructionParams, generate
from .formats import FormatError, read_edges, read_pointset, write_graph, write_pointset
from .graphs import YaoParams, disk_graph, yao_directed, yao_undirected
from .radius import DEFAULT_CAP, MODELS, InstanceConfig, bound_study, connectivity_radius, random_connected_instance
from .svg import render

EXIT_OK, EXIT_ERROR, EXIT_UNBOUNDED = 0, 1, 2


class CliError(Exception):
    pass


def _seed_note(seed):
    print(f"master seed: {seed}", file=sys.stderr)


def cmd_gen(args) -> int:
    _seed_note(args.seed)
    if args.family == "random":
        if args.n is None:
            raise CliError("--family random needs --n")
        cfg = InstanceConfig(n=args.n, seed=args.seed, model=args.model, normalize=args.normalize)
        s = random_connected_instance(cfg)
        meta = {"family": "random", "n": cfg.n, "seed": cfg.seed, "model": cfg.model, "scale": cfg.scale,
                "normalize": cfg.normalize}
    else:
        if args.d is None:
            raise CliError(f"--family {args.family} needs --d")
        params = ConstructionParams(args.family, args.d, args.eps, args.alpha, args.r).resolved()
        s = generate(params)
        meta = params.as_metadata()
        meta["r"] = (len(s) - (4 if args.family == "y3-lb" else 2)) // 2
    write_pointset(args.out, s, meta)
    print(f"wrote {len(s)} points to {args.out}")
    return EXIT_OK


def cmd_yao(args) -> int:
    s, _ = read_pointset(args.inp)
    g = disk_graph(s, args.d)
    params = YaoParams(args.k)
    y = yao_directed(g, params) if args.directed else yao_undirected(g, params)
    write_graph(args.out, y, {"k": args.k, "d": args.d, "source": str(args.inp)})
    kind = "arcs" if args.directed else "edges"
    print(f"wrote {len(y.edges)} {kind} to {args.out}")
    return EXIT_OK


def cmd_radius(args) -> int:
    if not args.cap > 0:
        raise CliError(f"--cap must be positive, got {args.cap}")
    s, _ = read_pointset(args.inp)
    res = connectivity_radius(s, args.k, args.cap)
    print(json.dumps({"k": args.k, "n": len(s), **res.to_record()}, separators=(",", ":")))
    if res.bounded:
        print(f"Y_{args.k} connects at radius {res.radius!r} "
              f"({res.candidates_examined} candidates examined)")
        return EXIT_OK
    print(f"Y_{args.k} stays disconnected for every radius up to {args.cap}")
    return EXIT_UNBOUNDED


def cmd_verify(args) -> int:
    _seed_note(args.seed)
    claims = verify_mod.run(args.theorem, trials=args.trials, n=args.n, seed=args.seed, samples=args.samples)
    failed = 0
    dump_dir = Path(args.dump_dir)
    for c in claims:
        print(c.line())
        if not c.passed:
            failed += 1
            if c.instance is not None:
                dump_dir.mkdir(parents=True, exist_ok=True)
                path = dump_dir / f"counterexample-{args.theorem}-{failed}.json"
                write_pointset(path, c.instance, {"claim": c.name, **c.metadata})
                print(f"      instance dumped to {path}")
    print(f"{len(claims) - failed}/{len(claims)} claims passed")
    return EXIT_OK if failed == 0 else EXIT_ERROR


def cmd_study(args) -> int:
    _seed_note(args.seed)
    study = bound_study(args.k, args.trials, args.n, args.seed, args.cap, args.model,
                        workers=args.workers, normalize=args.normalize)
    print(json.dumps(study.summary(), indent=1))
    return EXIT_OK


def cmd_plot(args) -> int:
    s, _ = read_pointset(args.inp)
    layers, titles = [], []
    for path in args.edges or ():
        try:
            doc = read_edges(path, s)
        except FormatError as exc:
            raise CliError(f"inconsistent edge file {path}: {exc}") from exc
        layers.append([(u, v) for u, v, _ in doc["edges"]])
        titles.append(Path(path).stem)
    Path(args.out).write_text(render(s, layers, labels=args.labels, titles=titles))
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="yaoradius", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a lower-bound or random point set")
    g.add_argument("--family", required=True, choices=FAMILIES + ("random",))
    g.add_argument("--d", type=float)
    g.add_argument("--eps", type=float)
    g.add_argument("--alpha", type=float, default=1e-4)
    g.add_argument("--r", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--model", choices=MODELS, default="incremental-disk")
    g.add_argument("--normalize", action="store_true", help="scale so the MST bottleneck is 1")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    y = sub.add_parser("yao", help="Yao graph of the disk graph of a point set")
    y.add_argument("--k", type=int, required=True)
    y.add_argument("--d", type=float, required=True)
    y.add_argument("--in", dest="inp", required=True)
    y.add_argument("--out", required=True)
    y.add_argument("--directed", action="store_true")
    y.set_defaults(func=cmd_yao)

    r = sub.add_parser("radius", help="smallest radius at which the Yao graph connects")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--in", dest="inp", required=True)
    r.add_argument("--cap", type=float, default=DEFAULT_CAP)
    r.set_defaults(func=cmd_radius)

    v = sub.add_parser("verify", help="check the connectivity bounds and distance inequalities")
    v.add_argument("--theorem", required=True, choices=verify_mod.THEOREMS + ("all",))
    v.add_argument("--trials", type=int, default=500)
    v.add_argument("--n", type=int, default=40)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--dump-dir", default=".")
    v.set_defaults(func=cmd_verify)

    st = sub.add_parser("study", help="connectivity radii over random connected instances")
    st.add_argument("--k", type=int, required=True)
    st.add_argument("--trials", type=int, default=200)
    st.add_argument("--n", type=int, default=30)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--cap", type=float, default=DEFAULT_CAP)
    st.add_argument("--model", choices=MODELS)
    st.add_argument("--workers", type=int, default=1)
    st.add_argument("--normalize", action="store_true", help="scale each instance so its MST bottleneck is 1")
    st.set_defaults(func=cmd_study)

    p = sub.add_parser("plot", help="draw a point set and edge layers as SVG")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--edges", nargs="*")
    p.add_argument("--out", required=True)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ConstructionError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
