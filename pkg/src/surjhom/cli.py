"""Command line front end.

Exit codes: 0 YES / valid, 1 NO / invalid / bench disagreement,
2 UNKNOWN (search budget exhausted), 3 any error in the input or arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bench
from .errors import GraphParseError, MalformedLineError, SurjhomError, VertexRangeError
from .graph import format_graph, parse_graph
from .hardness import (
    construct_witness,
    gen_hampath,
    generate,
    manifest_json,
    normalize_tag,
    three_partition_brute,
    validate_multiset,
)
from .oracle import SearchBudget, check_mapping
from .solve import ALGORITHMS, DEFAULT_COVER_BUDGET, solve

BUDGET_ENV = "SURJHOM_BUDGET_MS"
EXIT_ERROR = 3


def parse_mapping(text: str, n_guest: int) -> list[int]:
    """Read ``u x`` lines (one per guest vertex, any order)."""
    f: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace("->", " ").split()
        if len(parts) != 2:
            raise MalformedLineError(f"expected 'u x', got {line!r}", lineno)
        try:
            u, x = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"not integers: {line!r}", lineno) from None
        if not 0 <= u < n_guest:
            raise VertexRangeError(f"guest vertex {u} out of range", lineno)
        if u in f:
            raise MalformedLineError(f"guest vertex {u} assigned twice", lineno)
        f[u] = x
    missing = [u for u in range(n_guest) if u not in f]
    if missing:
        raise MalformedLineError(f"no image for guest vertex {missing[0]}")
    return [f[u] for u in range(n_guest)]


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def _budget(ms: float | None) -> SearchBudget | None:
    if ms is None:
        env = os.environ.get(BUDGET_ENV)
        ms = float(env) if env else None
    return None if ms is None else SearchBudget(max_seconds=ms / 1000.0)


def cmd_solve(args) -> int:
    g, h = _read_graph(args.guest), _read_graph(args.host)
    r = solve(g, h, args.algo, args.k, _budget(args.budget_ms))
    print(r.verdict.value)
    if args.emit_witness and r.mapping is not None:
        for u, x in enumerate(r.mapping):
            print(f"{u} -> {x}")
    detail = f"algorithm={r.algorithm}"
    if r.reason:
        detail += f" reason={r.reason}"
    print(detail, file=sys.stderr)
    return r.verdict.exit_code


def cmd_generate(args) -> int:
    tag = normalize_tag(args.construction)
    prefix = Path(args.out)
    expected = part = witness = None
    if tag == "hampath":
        out = gen_hampath(_read_graph(args.source))
    else:
        inst = validate_multiset(int(t) for t in args.source.replace(",", " ").split())
        out = generate(tag, inst)
        if inst.m <= 4:
            part = three_partition_brute(inst)
            expected = "YES" if part else "NO"
            if part:
                witness = construct_witness(out, part)
    gfile = prefix.with_name(prefix.name + ".guest.txt")
    hfile = prefix.with_name(prefix.name + ".host.txt")
    mfile = prefix.with_name(prefix.name + ".manifest.json")
    gfile.write_text(format_graph(out.guest, f"guest, construction {tag}"))
    hfile.write_text(format_graph(out.host, f"host, construction {tag}"))
    mfile.write_text(manifest_json(out.manifest(gfile.name, hfile.name, expected, part, witness)))
    print(f"wrote {gfile}, {hfile}, {mfile}")
    return 0


def cmd_verify(args) -> int:
    g, h = _read_graph(args.guest), _read_graph(args.host)
    f = parse_mapping(Path(args.mapping).read_text(), g.n)
    problem = check_mapping(g, h, f)
    if problem is None:
        print("VALID")
        return 0
    print(f"INVALID: {problem}")
    return 1


def cmd_bench(args) -> int:
    reports = bench.run_bench(args.seed, args.scale, args.suite, budget_seconds=args.budget_ms / 1000.0)
    for rep in reports:
        print(rep.line())
        for msg in rep.failures[:10]:
            print(f"  {msg}")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surjhom", description="Surjective graph homomorphism toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide whether GUEST maps surjectively onto HOST")
    s.add_argument("guest")
    s.add_argument("host")
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("-k", type=int, default=DEFAULT_COVER_BUDGET, help="vertex cover budget")
    s.add_argument("--budget-ms", type=float, default=None,
                   help=f"oracle wall-clock budget (default: ${BUDGET_ENV} or unlimited)")
    s.add_argument("--emit-witness", action="store_true")
    s.set_defaults(func=cmd_solve)

    gcmd = sub.add_parser("generate", help="write a hard instance pair and manifest")
    gcmd.add_argument("construction", help="linear-forest, union-cliques, cograph, tree-pw2, "
                                            "split, proper-interval, hampath (or ii..vii, i)")
    gcmd.add_argument("source", help="comma-separated multiset, or a host graph file for hampath")
    gcmd.add_argument("--out", default="instance", help="output file prefix")
    gcmd.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a mapping file")
    v.add_argument("guest")
    v.add_argument("host")
    v.add_argument("mapping")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run the cross-validation suites")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--scale", type=float, default=1.0, help="multiplier for random instance counts")
    b.add_argument("--budget-ms", type=float, default=60_000.0, help="oracle budget per hard instance")
    b.add_argument("--suite", action="append", choices=list(bench.SUITES), help="run only these suites")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else 0
    try:
        return args.func(args)
    except (GraphParseError, SurjhomError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
