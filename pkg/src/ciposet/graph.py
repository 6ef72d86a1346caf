"""Cover-incomparability graphs and small induced-subgraph machinery."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .poset import Poset, SizeBoundError, UnknownLabelError, bits

__all__ = [
    "CIGraph",
    "Occurrence",
    "ci_graph",
    "graph_from_edges",
    "induced_subgraph",
    "find_induced",
    "first_induced",
    "is_cograph",
    "graphs_isomorphic",
    "TARGET_GRAPHS",
    "target_graph",
]

DEFAULT_ISO_BOUND = 10


@dataclass(frozen=True, eq=False)
class CIGraph:
    """Simple undirected graph; ``adj[u]`` is the neighbour bitmask of ``u``."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CIGraph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"CIGraph([{' '.join(self.labels)}] {{{', '.join(a + b for a, b in self.edges())}}})"

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown vertex {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def edge_index_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edges(self) -> list[tuple[str, str]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.edge_index_pairs()]

    @property
    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class Occurrence:
    """Induced copy of ``target`` in ``host``: ``mapping[i]`` hosts target vertex ``i``."""

    target: CIGraph
    host: CIGraph
    mapping: tuple[int, ...]

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.host.labels[v] for v in self.mapping)

    def as_dict(self) -> dict[str, str]:
        return {self.target.labels[i]: self.host.labels[v] for i, v in enumerate(self.mapping)}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}->{v}" for k, v in self.as_dict().items()) + "}"


def ci_graph(P: Poset) -> CIGraph:
    """Edges are cover pairs and incomparable pairs; ``u <<< v`` pairs are non-edges."""
    full = (1 << P.n) - 1
    adj = tuple(
        (full & ~(P.comparable[u] | 1 << u)) | P.cover_up[u] | P.cover_down[u]
        for u in range(P.n)
    )
    return CIGraph(P.labels, adj)


def graph_from_edges(labels: Sequence[str], edges: Sequence[tuple[str, str]]) -> CIGraph:
    idx = {lbl: i for i, lbl in enumerate(labels)}
    adj = [0] * len(labels)
    for a, b in edges:
        if a not in idx or b not in idx:
            raise UnknownLabelError(f"unknown vertex in edge {a}{b}")
        if a == b:
            raise ValueError("loops are not allowed")
        adj[idx[a]] |= 1 << idx[b]
        adj[idx[b]] |= 1 << idx[a]
    return CIGraph(tuple(labels), tuple(adj))


def _restrict(G: CIGraph, idx: Sequence[int]) -> CIGraph:
    pos = {v: i for i, v in enumerate(idx)}
    adj = []
    for v in idx:
        row = 0
        for w in bits(G.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return CIGraph(tuple(G.labels[v] for v in idx), tuple(adj))


def induced_subgraph(G: CIGraph, vertices) -> CIGraph:
    """Subgraph induced on ``vertices`` (labels), in ``G``'s vertex order."""
    idx = sorted({G.index(v) for v in vertices})
    return _restrict(G, idx)


def _search(target: CIGraph, host: CIGraph) -> Iterator[tuple[int, ...]]:
    # target vertices ordered so each one (after the first) touches an earlier one
    k = target.n
    order: list[int] = []
    placed = 0
    remaining = list(range(k))
    while remaining:
        pick = max(
            remaining,
            key=lambda t: (bin(target.adj[t] & placed).count("1"), target.degree(t), -t),
        )
        order.append(pick)
        remaining.remove(pick)
        placed |= 1 << pick
    tdeg = [target.degree(t) for t in range(k)]
    hdeg = [host.degree(h) for h in range(host.n)]
    mapping = [-1] * k

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(mapping)
            return
        t = order[i]
        for h in range(host.n):
            if used >> h & 1 or hdeg[h] < tdeg[t]:
                continue
            ok = True
            for j in range(i):
                s = order[j]
                if target.has_edge(t, s) != host.has_edge(h, mapping[s]):
                    ok = False
                    break
            if ok:
                mapping[t] = h
                yield from extend(i + 1, used | 1 << h)
        mapping[t] = -1

    yield from extend(0, 0)


def find_induced(target: CIGraph, G: CIGraph) -> list[Occurrence]:
    """All induced copies of ``target`` in ``G``, one per host vertex set.

    The representative kept for a vertex set is its lexicographically smallest
    mapping; the list is sorted by the sorted host indices of each set.
    """
    if target.n > G.n:
        return []
    best: dict[int, tuple[int, ...]] = {}
    for m in _search(target, G):
        key = sum(1 << v for v in m)
        if key not in best or m < best[key]:
            best[key] = m
    ordered = sorted(best.items(), key=lambda kv: sorted(bits(kv[0])))
    return [Occurrence(target, G, m) for _, m in ordered]


def first_induced(target: CIGraph, G: CIGraph) -> Occurrence | None:
    occ = find_induced(target, G)
    return occ[0] if occ else None


def has_induced(target: CIGraph, G: CIGraph) -> bool:
    if target.n > G.n:
        return False
    return next(_search(target, G), None) is not None


def is_cograph(G: CIGraph) -> tuple[bool, Occurrence | None]:
    """``(True, None)`` if ``G`` has no induced P4, else ``(False, witness)``."""
    occ = first_induced(TARGET_GRAPHS["p4"], G)
    return occ is None, occ


def graphs_isomorphic(G: CIGraph, H: CIGraph, bound: int = DEFAULT_ISO_BOUND) -> bool:
    if max(G.n, H.n) > bound:
        raise SizeBoundError(f"graph size exceeds isomorphism bound {bound}")
    if G.n != H.n or G.edge_count != H.edge_count:
        return False
    if sorted(map(G.degree, range(G.n))) != sorted(map(H.degree, range(H.n))):
        return False
    return has_induced(G, H)


def _named(spec: str, edges: str) -> CIGraph:
    labels = tuple(spec)
    return graph_from_edges(labels, [(e[0], e[1]) for e in edges.split()])


TARGET_GRAPHS: dict[str, CIGraph] = {
    # claw: centre x, leaves a b c
    "claw": _named("xabc", "xa xb xc"),
    "p4": _named("abcd", "ab bc cd"),
    "c4": _named("abcd", "ab bc cd da"),
    "k3": _named("abc", "ab bc ca"),
    # 4-cycle a-b-c-d-a plus apex e on the edge ab
    "house": _named("abcde", "ab bc cd da ea eb"),
    # 2x3 grid a-b-c over d-e-f
    "domino": _named("abcdef", "ab bc de ef ad be cf"),
}


def target_graph(name: str) -> CIGraph:
    try:
        return TARGET_GRAPHS[name]
    except KeyError:
        raise ValueError(f"unknown target graph {name!r}; choose from {sorted(TARGET_GRAPHS)}") from None
