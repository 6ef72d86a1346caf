"""Subposet, isometric-subposet and cover-preserving-subposet embeddings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .poset import Poset, _distance

__all__ = [
    "EmbeddingMode",
    "Embedding",
    "find_embeddings",
    "iter_embeddings",
    "contains_pattern",
    "is_cover_preserving_subset",
    "is_isometric_subset",
]


class EmbeddingMode(enum.Enum):
    SUBPOSET = "subposet"
    COVER_PRESERVING = "cover-preserving"
    ISOMETRIC = "isometric"

    @classmethod
    def parse(cls, value: str | EmbeddingMode) -> EmbeddingMode:
        if isinstance(value, cls):
            return value
        aliases = {"cover": "cover-preserving", "cover_preserving": "cover-preserving"}
        return cls(aliases.get(value, value))


@dataclass(frozen=True)
class Embedding:
    pattern: Poset
    host: Poset
    mode: EmbeddingMode
    mapping: tuple[int, ...]  # pattern index -> host index

    @property
    def image(self) -> frozenset[str]:
        return frozenset(self.host.labels[v] for v in self.mapping)

    def as_dict(self) -> dict[str, str]:
        return {self.pattern.labels[i]: self.host.labels[v] for i, v in enumerate(self.mapping)}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}->{v}" for k, v in self.as_dict().items()) + "}"


# relation codes: 0 equal, 1 cover up, 2 cover down, 3 long up, 4 long down, 5 incomparable
def _code(P: Poset, u: int, v: int) -> int:
    if u == v:
        return 0
    if P.up[u] >> v & 1:
        return 1 if P.cover_up[u] >> v & 1 else 3
    if P.up[v] >> u & 1:
        return 2 if P.cover_up[v] >> u & 1 else 4
    return 5


_COARSE = (0, 1, 2, 1, 2, 5)


def _table(P: Poset, coarse: bool) -> list[list[int]]:
    rows = [[_code(P, u, v) for v in range(P.n)] for u in range(P.n)]
    if coarse:
        rows = [[_COARSE[c] for c in row] for row in rows]
    return rows


def is_isometric_subset(P: Poset, image: Sequence[int]) -> bool:
    """Every comparable pair in ``image`` is joined by a shortest cover chain of
    ``P`` lying wholly inside ``image``."""
    mask = 0
    for v in image:
        mask |= 1 << v
    for a in image:
        for b in image:
            if P.lt(a, b) and _distance(P, a, b, within=mask) != _distance(P, a, b):
                return False
    return True


def is_cover_preserving_subset(P: Poset, image: Sequence[int]) -> bool:
    Q = P.subposet(list(image))
    return all(
        Q.is_cover(i, j) == P.is_cover(a, b)
        for i, a in enumerate(image)
        for j, b in enumerate(image)
    )


def iter_embeddings(Q: Poset, P: Poset, mode: EmbeddingMode | str) -> Iterator[Embedding]:
    """Embeddings of ``Q`` into ``P`` in search order (not sorted)."""
    mode = EmbeddingMode.parse(mode)
    m, n = Q.n, P.n
    if m > n:
        return
    coarse = mode is EmbeddingMode.SUBPOSET
    qt, pt = _table(Q, coarse), _table(P, coarse)
    # most-constrained pattern elements first
    order = sorted(range(m), key=lambda q: (-bin(Q.comparable[q]).count("1"), q))
    qup = [bin(r).count("1") for r in Q.up]
    qdn = [bin(r).count("1") for r in Q.down]
    pup = [bin(r).count("1") for r in P.up]
    pdn = [bin(r).count("1") for r in P.down]
    candidates = [
        [p for p in range(n) if pup[p] >= qup[q] and pdn[p] >= qdn[q]] for q in range(m)
    ]
    mapping = [-1] * m

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(mapping)
            return
        q = order[i]
        row = qt[q]
        for p in candidates[q]:
            if used >> p & 1:
                continue
            prow = pt[p]
            if all(row[order[j]] == prow[mapping[order[j]]] for j in range(i)):
                mapping[q] = p
                yield from extend(i + 1, used | 1 << p)
        mapping[q] = -1

    for mp in extend(0, 0):
        if mode is EmbeddingMode.ISOMETRIC and not is_isometric_subset(P, mp):
            continue
        yield Embedding(Q, P, mode, mp)


def find_embeddings(Q: Poset, P: Poset, mode: EmbeddingMode | str) -> list[Embedding]:
    """All injective maps of ``Q`` into ``P`` meeting ``mode``, sorted by image tuple."""
    return sorted(iter_embeddings(Q, P, mode), key=lambda e: e.mapping)


def contains_pattern(
    P: Poset, family: Sequence[Poset], mode: EmbeddingMode | str
) -> tuple[Poset, Embedding] | None:
    """First family member (in family order) embedding into ``P``, with the
    first embedding met in the deterministic search; ``None`` if none embeds."""
    if not family:
        raise ValueError("pattern family is empty")
    for Q in family:
        emb = next(iter_embeddings(Q, P, mode), None)
        if emb is not None:
            return Q, emb
    return None


def has_pattern(P: Poset, family: Sequence[Poset], mode: EmbeddingMode | str) -> bool:
    return any(next(iter_embeddings(Q, P, mode), None) is not None for Q in family)
