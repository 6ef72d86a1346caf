"""Command line interface.

Exit codes: 0 success / property holds, 1 discrepancy / property fails,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from pathlib import Path
from typing import Sequence

from . import catalog
from .catalog import FIXTURE_NAMES, FIXTURE_NOTES, family, fixture, transcribed
from .embedding import EmbeddingMode, find_embeddings, iter_embeddings
from .enumerate import enumerate_posets, synthesize_posets_with_ci_graph
from .graph import ci_graph, find_induced, is_cograph, target_graph
from .io import export_dot, parse_poset_file, serialize_poset, serialize_posets
from .poset import Poset, PosetError, canonical_key
from .verify import THEOREMS, characterization_report, cover_listing, exhaustive_verify

DETECT_GRAPHS = ("claw", "house", "domino", "p4", "c4", "cograph")
SYNTH_GRAPHS = ("claw", "house", "domino", "p4", "c4", "k3")


class UsageError(Exception):
    pass


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _load(path: str) -> Poset:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        P = parse_poset_file(p.read_bytes())
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if P.name is None:
        P = P.with_name(p.stem)
    return P


def _resolve_pattern(spec: str) -> Poset:
    if Path(spec).is_file():
        return _load(spec)
    if spec in FIXTURE_NAMES:
        return fixture(spec)
    for t in catalog.FAMILY_TARGETS:
        for P in family(t, catalog.SHIPPED_FAMILY_SIZE):
            if P.name == spec:
                return P
    for P in transcribed("claw"):
        if P.name == spec:
            return P
    raise UsageError(f"pattern {spec!r} is neither a file, a fixture nor a family member")


def _yn(flag: bool) -> str:
    return "TRUE" if flag else "FALSE"


def _set(labels) -> str:
    return "{" + ", ".join(sorted(labels, key=lambda s: (len(s), s))) + "}"


# subcommands -------------------------------------------------------------


def cmd_show(args) -> int:
    P = _load(args.file)
    if args.dot:
        sys.stdout.write(export_dot(P, "hasse"))
        return 0
    print(f"poset {P.name}")
    print(f"elements ({P.n}): {' '.join(P.labels)}")
    print("covers: " + ", ".join(f"{a}<{b}" for a, b in P.cover_pairs()))
    print(f"height: {max(P.heights(), default=0)} cover steps")
    if P.n <= 10:
        print(f"canonical key: {canonical_key(P).hex()}")
    return 0


def cmd_ci(args) -> int:
    P = _load(args.file)
    if args.dot:
        sys.stdout.write(export_dot(P, "ci"))
        return 0
    G = ci_graph(P)
    if args.records:
        _emit({"kind": "ci", "poset": P.name, "vertices": list(G.labels),
               "edges": [list(e) for e in G.edges()]})
        return 0
    print(f"C-I graph of {P.name}: {G.n} vertices, {G.edge_count} edges")
    print("edges: " + ", ".join(f"{a}-{b}" for a, b in G.edges()))
    return 0


def cmd_embed(args) -> int:
    Q = _resolve_pattern(args.pattern)
    P = _load(args.file)
    mode = EmbeddingMode.parse(args.mode)
    embs = find_embeddings(Q, P, mode) if args.all else list(_first(iter_embeddings(Q, P, mode)))
    if args.records:
        for e in embs:
            _emit({"kind": "embedding", "pattern": Q.name, "host": P.name,
                   "mode": mode.value, "map": e.as_dict()})
    else:
        verdict = "found" if embs else "none"
        print(f"{Q.name} into {P.name} as {mode.value} subposet: {verdict}")
        for e in embs:
            print(f"  {e}")
    return 0 if embs else 1


def _first(it):
    for x in it:
        yield x
        return


def cmd_detect(args) -> int:
    P = _load(args.file)
    G = ci_graph(P)
    if args.graph == "cograph":
        ok, occ = is_cograph(G)
        if args.records:
            _emit({"kind": "detect", "poset": P.name, "graph": "cograph", "holds": ok,
                   "witness": None if occ is None else sorted(occ.vertex_set)})
        else:
            print(f"C-I graph of {P.name} is {'a cograph' if ok else 'not a cograph'}")
            if occ:
                print(f"  induced P4 on {_set(occ.vertex_set)}")
        return 0 if ok else 1
    occs = find_induced(target_graph(args.graph), G)
    if args.records:
        for o in occs:
            _emit({"kind": "detect", "poset": P.name, "graph": args.graph,
                   "vertices": sorted(o.vertex_set), "map": o.as_dict()})
    else:
        print(f"induced {args.graph} in C-I graph of {P.name}: {len(occs)} vertex set(s)")
        for o in occs:
            print(f"  {_set(o.vertex_set)}  {o}")
    return 0 if occs else 1


def _witness(w) -> str:
    if w is None:
        return "none"
    Q, emb = w
    return f"{Q.name} {emb}"


def cmd_check(args) -> int:
    P = _load(args.file)
    r = characterization_report(P, args.theorem, args.family_size)
    note = FIXTURE_NOTES.get(P.name or "")
    if args.records:
        _emit({
            "kind": "check", "poset": P.name, "poset_id": r.poset_id, "theorem": r.theorem,
            "graph_side": r.graph_side,
            "graph_witness": None if r.graph_witness is None else sorted(r.graph_witness.vertex_set),
            "isometric_side": r.poset_side_isometric,
            "isometric_witness": _witness(r.isometric_witness) if r.isometric_witness else None,
            "cover_preserving_side": r.poset_side_cover_preserving,
            "cover_preserving_witness":
                _witness(r.cover_preserving_witness) if r.cover_preserving_witness else None,
            "discrepancy_original": r.discrepancy_original,
            "discrepancy_corrected": r.discrepancy_corrected,
            "family_size": r.family_size, "family_complete": r.family_complete,
            "note": note,
        })
    else:
        target = THEOREMS[args.theorem]
        print(f"poset {P.name} ({P.n} elements), theorem {args.theorem} (forbidden {target})")
        print(f"{'graph side':<14}{'isometric side':<18}cover-preserving side")
        print(f"{_yn(r.graph_side):<14}{_yn(r.poset_side_isometric):<18}"
              f"{_yn(r.poset_side_cover_preserving)}")
        gw = "none" if r.graph_witness is None else f"{_set(r.graph_witness.vertex_set)} {r.graph_witness}"
        print(f"graph witness: {gw}")
        print(f"isometric witness: {_witness(r.isometric_witness)}")
        print(f"cover-preserving witness: {_witness(r.cover_preserving_witness)}")
        print(f"discrepancy (original, isometric): {'YES' if r.discrepancy_original else 'no'}")
        print(f"discrepancy (corrected, cover-preserving): {'YES' if r.discrepancy_corrected else 'no'}")
        if not r.family_complete:
            print(f"note: obstruction family searched up to {r.family_size} elements only")
        if note:
            print(f"note: {note}")
    return 1 if r.discrepancy_corrected else 0


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("CIPOSET_JOBS", "1"))
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    t0 = time.perf_counter()
    s = exhaustive_verify(args.theorem, args.max_n, jobs=jobs)
    elapsed = time.perf_counter() - t0
    if args.records:
        _emit({"kind": "verify", "theorem": s.theorem, "max_n": s.n_max, "total": s.total,
               "per_size": {str(k): v for k, v in s.per_size.items()},
               "graph_true": s.graph_true, "family_size": s.family_size,
               "discrepancy_corrected": len(s.corrected),
               "corrected_witnesses": [{"key": k, "poset": c} for k, c in s.corrected],
               "discrepancy_original": s.original,
               "original_example": None if s.original_example is None else
               {"key": s.original_example[0], "poset": s.original_example[1]}})
    else:
        print(f"theorem {s.theorem}, posets with 1..{s.n_max} elements")
        print("scanned: " + str(s.total) + " ("
              + ", ".join(f"n={k}: {v}" for k, v in s.per_size.items()) + ")")
        print(f"graph side true: {s.graph_true}")
        print(f"discrepancy (corrected, cover-preserving): {len(s.corrected)}")
        for key, cov in s.corrected:
            print(f"  witness {key}: {cov}")
        print(f"discrepancy (original, isometric): {s.original}")
        if s.original_example:
            print(f"  example {s.original_example[0]}: {s.original_example[1]}")
        print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return 0 if s.ok else 1


def _stream(posets, header: str, records: bool, kind: str) -> None:
    if records:
        for P in posets:
            _emit({"kind": kind, "name": P.name, "elements": list(P.labels),
                   "covers": [list(c) for c in P.cover_pairs()], "key": canonical_key(P).hex()})
        return
    print(header)
    print()
    sys.stdout.write(serialize_posets(posets))


def cmd_synthesize(args) -> int:
    G = target_graph(args.graph)
    found = [
        P.with_name(f"{args.graph}_ci_{i + 1}")
        for i, P in enumerate(synthesize_posets_with_ci_graph(G))
    ]
    _stream(found, f"# {len(found)} poset(s) on {G.n} elements with C-I graph isomorphic to "
            f"{args.graph}", args.records, "synthesized")
    return 0


def cmd_family(args) -> int:
    fam = family(args.graph, args.max_size)
    _stream(list(fam), f"# {len(fam)} minimal obstruction poset(s) for {args.graph}, "
            f"complete up to {fam.max_size} elements", args.records, "family")
    return 0


def cmd_enumerate(args) -> int:
    posets = [P.with_name(f"n{args.n}_{i + 1}") for i, P in enumerate(enumerate_posets(args.n))]
    _stream(posets, f"# {len(posets)} posets on {args.n} elements up to isomorphism",
            args.records, "poset")
    return 0


def cmd_fixtures(args) -> int:
    if args.emit:
        if args.emit not in FIXTURE_NAMES:
            raise UsageError(f"unknown fixture {args.emit!r}")
        sys.stdout.write(serialize_poset(fixture(args.emit)))
        return 0
    for name in FIXTURE_NAMES:
        rec = catalog.fixture_record(name)
        print(f"{name:<12}{rec.poset.n:>3} elements  {rec.source:<33}{cover_listing(rec.poset)}")
    return 0


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ciposet", description="Cover-incomparability graphs of finite posets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, file: bool = True, records: bool = True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", metavar="FILE")
        if records:
            p.add_argument("--records", action="store_true",
                           help="emit JSON lines instead of a report")
        p.set_defaults(func=func)
        return p

    p = add("show", cmd_show, "print a poset's covers and canonical key", records=False)
    p.add_argument("--dot", action="store_true", help="Hasse diagram as DOT")
    p = add("ci", cmd_ci, "print the cover-incomparability graph")
    p.add_argument("--dot", action="store_true", help="C-I graph as DOT")
    p = add("embed", cmd_embed, "embed a pattern poset")
    p.add_argument("--pattern", required=True, metavar="NAME|FILE")
    p.add_argument("--mode", required=True, choices=[m.value for m in EmbeddingMode])
    p.add_argument("--all", action="store_true", help="list every embedding")
    p = add("detect", cmd_detect, "find induced target graphs in the C-I graph")
    p.add_argument("--graph", required=True, choices=DETECT_GRAPHS)
    p = add("check", cmd_check, "three-sided characterisation verdict")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    p.add_argument("--family-size", type=int, default=catalog.DEFAULT_FAMILY_SIZE,
                   help="largest obstruction poset considered (default %(default)s)")
    p = add("verify", cmd_verify, "check a theorem on every poset up to a size", file=False)
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default $CIPOSET_JOBS or 1)")
    p = add("synthesize", cmd_synthesize, "posets whose C-I graph is a given graph", file=False)
    p.add_argument("--graph", required=True, choices=SYNTH_GRAPHS)
    p = add("family", cmd_family, "minimal obstruction posets for a graph", file=False)
    p.add_argument("--graph", required=True, choices=catalog.FAMILY_TARGETS)
    p.add_argument("--max-size", type=int, default=catalog.DEFAULT_FAMILY_SIZE)
    p = add("enumerate", cmd_enumerate, "all posets on N elements", file=False)
    p.add_argument("--n", type=int, required=True)
    p = add("fixtures", cmd_fixtures, "list or emit built-in fixtures", file=False, records=False)
    p.add_argument("--emit", metavar="NAME")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, PosetError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
