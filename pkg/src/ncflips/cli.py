"""Command-line interface: ``python -m ncflips <command> ...``.

Exit codes: 0 success, 1 a negative answer (failed verification, unreachable
tree, bench bound violated), 2 unreadable input, 3 trees on different
instances, 4 certification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, families, oracle
from .bench import DEFAULT_SIZES, run_bench
from .core import InstanceMismatch, Tree, TreeError, check_same_instance, delta
from .flipmodel import FlipModel, FlipSequence, verify_sequence
from .render import RenderSpec, render_frame, render_sequence
from .transform import CertificationError, TransformError, transform, transform_border_projection

EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_CERT = 4


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_tree(path: str) -> Tree:
    try:
        return Tree.from_json(_read_json(path))
    except (ValueError, TypeError, TreeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: {exc}") from exc


def _read_sequence(path: str) -> FlipSequence:
    """A sequence JSON, or the wrapper written by ``transform``."""
    data = _read_json(path)
    if isinstance(data, dict) and "sequence" in data:
        data = data["sequence"]
    try:
        return FlipSequence.from_json(data)
    except (ValueError, TypeError, KeyError, TreeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        print(text)
    else:
        Path(out).write_text(text + "\n")


def cmd_gen(args) -> int:
    if args.family == "hernando":
        t1, t2 = families.hernando_example()
    else:
        t1, t2 = families.FAMILIES[args.family](args.k)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "t1.json").write_text(t1.dumps() + "\n")
        (out / "t2.json").write_text(t2.dumps() + "\n")
    else:
        print(t1.dumps())
        print(t2.dumps())
    return 0


def cmd_transform(args) -> int:
    t1, t2 = _read_tree(args.tree1), _read_tree(args.tree2)
    check_same_instance(t1, t2)
    if args.model == "ncflip":
        seq = transform_border_projection(t1, t2)
        d = delta(t1, t2)
        cert = {"delta": d, "length": len(seq), "bound_check": len(seq) <= 2 * d}
    else:
        result = transform(t1, t2)
        seq, cert = result.sequence, result.certificate()
    _emit(json.dumps({"sequence": seq.to_json(), "certificate": cert}), args.out)
    if args.out not in (None, "-"):
        print(json.dumps(cert))
    return 0


def cmd_verify(args) -> int:
    seq = _read_sequence(args.sequence)
    target = _read_tree(args.target) if args.target else None
    if target is not None:
        check_same_instance(seq.start, target)
    check = verify_sequence(seq, target)
    print(json.dumps({
        "ok": check.ok,
        "length": len(seq),
        "failed_index": check.failed_index,
        "reason": check.reason or None,
    }))
    return 0 if check else EXIT_NEGATIVE


def cmd_distance(args) -> int:
    t1, t2 = _read_tree(args.tree1), _read_tree(args.tree2)
    d = oracle.flip_distance(t1, t2, FlipModel(args.model), args.cap, args.jobs)
    print("unreachable" if d is None else d)
    return 0 if d is not None else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(oracle.tree_count(args.n))
        return 0
    for t in oracle.enumerate_trees(args.n, args.cap, args.jobs):
        print(t.dumps())
    return 0


def cmd_render(args) -> int:
    spec = RenderSpec(width=args.size, height=args.size)
    if args.second is not None:
        t1, t2 = _read_tree(args.input), _read_tree(args.second)
        frames = [render_frame(t1, t2, None, spec)]
    else:
        frames = render_sequence(_read_sequence(args.input), spec)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i, svg in enumerate(frames):
        (out / f"frame_{i:03d}.svg").write_text(svg)
    print(len(frames))
    return 0


def cmd_bench(args) -> int:
    report = run_bench(args.sizes, args.pairs, args.seed, args.jobs)
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.all_within_c else EXIT_NEGATIVE


def cmd_analyze(args) -> int:
    t1, t2 = _read_tree(args.tree1), _read_tree(args.tree2)
    check_same_instance(t1, t2)
    out: dict = {"delta": delta(t1, t2), "nice": analysis.is_nice_pair(t1, t2), "sides": []}
    for owner, (tree, other) in enumerate(((t1, t2), (t2, t1))):
        for chord in tree.chords:
            for side in analysis.sides(tree.n, chord):
                report = analysis.classify_side(tree, side, other)
                out["sides"].append({"tree": owner + 1, "side": side.to_json(), **report.to_json()})
    if out["nice"]:
        owner, side = analysis.find_tau_extremal(t1, t2)
        out["tau_extremal"] = {"tree": owner + 1, "side": side.to_json()}
    print(json.dumps(out, indent=2))
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncflips", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    models = [m.value for m in FlipModel]

    g = sub.add_parser("gen", help="emit a family pair as two tree JSON lines")
    g.add_argument("--family", choices=[*families.FAMILIES, "hernando"], required=True)
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--out-dir", help="write t1.json and t2.json here instead of stdout")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="certified sequence between two trees")
    t.add_argument("tree1")
    t.add_argument("tree2")
    t.add_argument("-o", "--out")
    t.add_argument("--model", choices=["flip", "ncflip"], default="flip")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="replay a sequence JSON")
    v.add_argument("sequence")
    v.add_argument("--target", help="tree JSON the sequence must end at")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("distance", help="exact distance by breadth-first search")
    d.add_argument("tree1")
    d.add_argument("tree2")
    d.add_argument("--model", choices=models, default="flip")
    d.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    d.add_argument("--jobs", type=int, default=1)
    d.set_defaults(func=cmd_distance)

    e = sub.add_parser("enumerate", help="list every tree on n points")
    e.add_argument("n", type=int)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("render", help="SVG frames of a sequence or a tree pair")
    r.add_argument("input", help="sequence JSON, or the first tree JSON")
    r.add_argument("second", nargs="?", help="second tree JSON")
    r.add_argument("-o", "--out", required=True, help="output directory")
    r.add_argument("--size", type=int, default=400)
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", help="time transform on seeded random pairs")
    b.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_SIZES))
    b.add_argument("--pairs", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    a = sub.add_parser("analyze", help="side classification report for a pair")
    a.add_argument("tree1")
    a.add_argument("tree2")
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstanceMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CertificationError, TransformError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (oracle.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
