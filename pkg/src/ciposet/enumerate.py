"""Posets up to isomorphism, and posets with a prescribed C-I graph."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .graph import CIGraph, ci_graph, graphs_isomorphic
from .poset import Poset, PosetError, bits, canonical_form, canonical_key

__all__ = ["MAX_ENUM_N", "MAX_SYNTH_N", "enumerate_posets", "synthesize_posets_with_ci_graph"]

MAX_ENUM_N = 8
MAX_SYNTH_N = 7


def _down_closed_sets(P: Poset):
    n = P.n
    for mask in range(1 << n):
        if all(P.down[v] & ~mask == 0 for v in bits(mask)):
            yield mask


def _children(P: Poset) -> dict[bytes, Poset]:
    """Every extension of ``P`` by one new maximal element, keyed canonically."""
    n = P.n
    labels = tuple(f"p{i}" for i in range(n + 1))
    out: dict[bytes, Poset] = {}
    for below in _down_closed_sets(P):
        up = tuple(row | ((below >> v & 1) << n) for v, row in enumerate(P.up)) + (0,)
        child = Poset(labels, up)
        key = canonical_key(child, MAX_ENUM_N)
        if key not in out:
            out[key] = child
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[bytes, Poset], ...]:
    if n == 0:
        return ((canonical_key(Poset((), ())), Poset((), ())),)
    parents = [P for _, P in _level(n - 1)]
    jobs = _default_jobs() if n >= 8 else 1
    merged: dict[bytes, Poset] = {}
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            shards = pool.map(_children, parents, chunksize=32)
            for shard in shards:
                for key, child in shard.items():
                    merged.setdefault(key, child)
    else:
        for P in parents:
            for key, child in _children(P).items():
                merged.setdefault(key, child)
    return tuple((key, canonical_form(merged[key])) for key in sorted(merged))


def _default_jobs() -> int:
    env = os.environ.get("CIPOSET_JOBS")
    return int(env) if env else 1


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on ``n`` elements up to isomorphism, sorted by canonical key.

    Each is returned in canonical form, labelled ``a, b, c, ...``.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise PosetError(f"n must be in 1..{MAX_ENUM_N}, got {n}")
    return [P for _, P in _level(n)]


def enumerate_with_keys(n: int) -> list[tuple[bytes, Poset]]:
    if not 1 <= n <= MAX_ENUM_N:
        raise PosetError(f"n must be in 1..{MAX_ENUM_N}, got {n}")
    return list(_level(n))


def synthesize_posets_with_ci_graph(G: CIGraph) -> list[Poset]:
    """Every poset on ``|V(G)|`` elements whose C-I graph is isomorphic to ``G``."""
    if not 1 <= G.n <= MAX_SYNTH_N:
        raise PosetError(f"graph must have 1..{MAX_SYNTH_N} vertices, got {G.n}")
    return [P for P in enumerate_posets(G.n) if graphs_isomorphic(ci_graph(P), G)]
