"""Brute-force reference implementations used only by the tests.

Everything here works from plain boolean matrices and itertools so that it
shares no search code with the package.
"""

from __future__ import annotations

import itertools
from collections import deque

import networkx as nx


def lt_matrix(P) -> list[list[bool]]:
    return [[P.lt(u, v) for v in range(P.n)] for u in range(P.n)]


def is_order(lt) -> bool:
    n = len(lt)
    for u in range(n):
        if lt[u][u]:
            return False
        for v in range(n):
            if lt[u][v] and lt[v][u]:
                return False
            for w in range(n):
                if lt[u][v] and lt[v][w] and not lt[u][w]:
                    return False
    return True


def covers(lt) -> set[tuple[int, int]]:
    n = len(lt)
    return {
        (u, v)
        for u in range(n) for v in range(n)
        if lt[u][v] and not any(lt[u][z] and lt[z][v] for z in range(n))
    }


def ci_edges(lt) -> set[frozenset[int]]:
    n = len(lt)
    cv = covers(lt)
    out = set()
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) in cv or (v, u) in cv or not (lt[u][v] or lt[v][u]):
            out.add(frozenset((u, v)))
    return out


def isomorphic_orders(a, b) -> bool:
    n = len(a)
    if n != len(b):
        return False
    return any(
        all(a[u][v] == b[p[u]][p[v]] for u in range(n) for v in range(n))
        for p in itertools.permutations(range(n))
    )


def all_labeled_orders(n: int) -> list[list[list[bool]]]:
    """Every strict order on ``range(n)`` by scanning all off-diagonal matrices."""
    cells = [(u, v) for u in range(n) for v in range(n) if u != v]
    out = []
    for bitsv in itertools.product((False, True), repeat=len(cells)):
        lt = [[False] * n for _ in range(n)]
        for (u, v), b in zip(cells, bitsv):
            lt[u][v] = b
        if is_order(lt):
            out.append(lt)
    return out


def unlabeled_orders(n: int) -> list[list[list[bool]]]:
    reps: list = []
    for lt in all_labeled_orders(n):
        if not any(isomorphic_orders(lt, r) for r in reps):
            reps.append(lt)
    return reps


def adjacency(G) -> list[list[bool]]:
    return [[G.has_edge(u, v) for v in range(G.n)] for u in range(G.n)]


def induced_vertex_sets(target_adj, host_adj) -> set[frozenset[int]]:
    """Vertex sets of ``host`` inducing a copy of ``target`` (all injections)."""
    k, n = len(target_adj), len(host_adj)
    found = set()
    for img in itertools.permutations(range(n), k):
        if all(
            target_adj[i][j] == host_adj[img[i]][img[j]]
            for i in range(k) for j in range(k) if i != j
        ):
            found.add(frozenset(img))
    return found


def graphs_iso(a, b) -> bool:
    n = len(a)
    return n == len(b) and bool(induced_vertex_sets(a, b))


def shortest_chain(lt, a: int, b: int, allowed=None) -> int | None:
    cv = covers(lt)
    n = len(lt)
    allowed = set(range(n)) if allowed is None else set(allowed)
    dist = {a: 0}
    q = deque([a])
    while q:
        x = q.popleft()
        for y in range(n):
            if (x, y) in cv and y in allowed and y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist.get(b) if lt[a][b] else None


def embeddings(q_lt, p_lt, mode: str) -> list[tuple[int, ...]]:
    """All injections satisfying the definition of ``mode`` directly."""
    m, n = len(q_lt), len(p_lt)
    qc, pc = covers(q_lt), covers(p_lt)
    out = []
    for img in itertools.permutations(range(n), m):
        if any(q_lt[u][v] != p_lt[img[u]][img[v]] for u in range(m) for v in range(m)):
            continue
        if mode != "subposet":
            if any(((u, v) in qc) != ((img[u], img[v]) in pc) for u in range(m) for v in range(m)):
                continue
        if mode == "isometric":
            ok = all(
                shortest_chain(p_lt, img[u], img[v], img) == shortest_chain(p_lt, img[u], img[v])
                for u in range(m) for v in range(m) if q_lt[u][v]
            )
            if not ok:
                continue
        out.append(img)
    return sorted(out)


def to_networkx_ci(P) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(P.n))
    G.add_edges_from(tuple(e) for e in ci_edges(lt_matrix(P)))
    return G
