"""Finite posets stored as bitset relations.

Elements are dense indices ``0..n-1``; labels only matter at the boundary.
``Poset.up[u]`` is the bitmask of every ``v`` with ``u < v``.
"""

from __future__ import annotations

import enum
import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Poset",
    "Relation",
    "PosetError",
    "CycleError",
    "UnknownLabelError",
    "DuplicateLabelError",
    "SizeBoundError",
    "NonCoverRelationWarning",
    "build_poset",
    "cover_relation",
    "relation_of",
    "dual",
    "chain_distance",
    "canonical_key",
    "chain",
    "antichain",
    "bits",
]

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
DEFAULT_KEY_BOUND = 10


class PosetError(ValueError):
    """Base class for invalid poset input."""


class CycleError(PosetError):
    pass


class UnknownLabelError(PosetError, KeyError):
    def __str__(self) -> str:
        return ValueError.__str__(self)


class DuplicateLabelError(PosetError):
    pass


class SizeBoundError(PosetError):
    pass


class NonCoverRelationWarning(UserWarning):
    """An input generator pair is implied by the others (not a cover)."""


class Relation(enum.Enum):
    EQUAL = "equal"
    COVERS = "covers"  # u is covered by v: u < v, nothing between
    COVERED_BY = "covered-by"
    LONG_BELOW = "long-below"
    LONG_ABOVE = "long-above"
    INCOMPARABLE = "incomparable"


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Poset:
    labels: tuple[str, ...]
    up: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.up):
            raise PosetError("labels and relation rows differ in length")

    # identity -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        covers = ", ".join(f"{a}<{b}" for a, b in self.cover_pairs())
        head = f"{self.name}: " if self.name else ""
        return f"Poset({head}[{' '.join(self.labels)}] {{{covers}}})"

    # derived relations --------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for u, row in enumerate(self.up):
            for v in bits(row):
                down[v] |= 1 << u
        return tuple(down)

    @cached_property
    def cover_up(self) -> tuple[int, ...]:
        out = []
        for row in self.up:
            above_others = 0
            for z in bits(row):
                above_others |= self.up[z]
            out.append(row & ~above_others)
        return tuple(out)

    @cached_property
    def cover_down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for u, row in enumerate(self.cover_up):
            for v in bits(row):
                down[v] |= 1 << u
        return tuple(down)

    @cached_property
    def comparable(self) -> tuple[int, ...]:
        return tuple(u | d for u, d in zip(self.up, self.down))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    def lt(self, u: int, v: int) -> bool:
        return bool(self.up[u] >> v & 1)

    def is_cover(self, u: int, v: int) -> bool:
        return bool(self.cover_up[u] >> v & 1)

    def relation(self, u: int, v: int) -> Relation:
        if u == v:
            return Relation.EQUAL
        if self.up[u] >> v & 1:
            return Relation.COVERS if self.cover_up[u] >> v & 1 else Relation.LONG_BELOW
        if self.up[v] >> u & 1:
            return Relation.COVERED_BY if self.cover_up[v] >> u & 1 else Relation.LONG_ABOVE
        return Relation.INCOMPARABLE

    def cover_pairs(self) -> list[tuple[str, str]]:
        return [
            (self.labels[u], self.labels[v])
            for u, row in enumerate(self.cover_up)
            for v in bits(row)
        ]

    def subposet(self, indices: Sequence[int], name: str | None = None) -> Poset:
        """Induced order on ``indices``, kept in the given order."""
        pos = {v: i for i, v in enumerate(indices)}
        up = []
        for v in indices:
            row = 0
            for w in bits(self.up[v]):
                if w in pos:
                    row |= 1 << pos[w]
            up.append(row)
        return Poset(tuple(self.labels[v] for v in indices), tuple(up), name)

    def relabel(self, labels: Sequence[str], name: str | None = None) -> Poset:
        labels = tuple(labels)
        _check_labels(labels)
        if len(labels) != self.n:
            raise PosetError("relabeling must keep the element count")
        return Poset(labels, self.up, name if name is not None else self.name)

    def permuted(self, order: Sequence[int]) -> Poset:
        """Poset whose element ``i`` is this poset's element ``order[i]``."""
        return self.subposet(order, self.name)

    def heights(self) -> tuple[int, ...]:
        """Length (in cover steps) of the longest chain ending at each element."""
        h = [0] * self.n
        for v in _linear_extension(self):
            for w in bits(self.cover_up[v]):
                h[w] = max(h[w], h[v] + 1)
        return tuple(h)

    def with_name(self, name: str | None) -> Poset:
        return Poset(self.labels, self.up, name)


def _linear_extension(P: Poset) -> list[int]:
    return sorted(range(P.n), key=lambda v: (bin(P.down[v]).count("1"), v))


def _check_labels(labels: Sequence[str]) -> None:
    seen: set[str] = set()
    for lbl in labels:
        if not isinstance(lbl, str) or not LABEL_RE.match(lbl):
            raise PosetError(f"invalid label {lbl!r}")
        if lbl in seen:
            raise DuplicateLabelError(f"duplicate label {lbl!r}")
        seen.add(lbl)


def build_poset(
    labels: Sequence[str],
    relations: Iterable[tuple[str, str]] = (),
    *,
    name: str | None = None,
    strict: bool = False,
) -> Poset:
    """Build a poset from order generators ``(u, v)`` meaning ``u < v``.

    The transitive closure of ``relations`` is taken. Generators that are not
    covers of the result trigger a :class:`NonCoverRelationWarning`, or a
    :class:`PosetError` when ``strict`` is set.
    """
    labels = tuple(labels)
    _check_labels(labels)
    index = {lbl: i for i, lbl in enumerate(labels)}
    n = len(labels)
    pairs = []
    for u, v in relations:
        for x in (u, v):
            if x not in index:
                raise UnknownLabelError(f"unknown label {x!r}")
        pairs.append((index[u], index[v]))

    succ = [0] * n
    for u, v in pairs:
        succ[u] |= 1 << v
    # closure by repeated propagation; n is small
    up = list(succ)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            row = up[u]
            for z in bits(row):
                row |= up[z]
            if row != up[u]:
                up[u] = row
                changed = True
    for u in range(n):
        if up[u] >> u & 1:
            raise CycleError(f"relations contain a cycle through {labels[u]!r}")

    P = Poset(labels, tuple(up), name)
    redundant = [(labels[u], labels[v]) for u, v in pairs if not P.is_cover(u, v)]
    if redundant:
        msg = "non-cover generator pairs: " + ", ".join(f"{a}<{b}" for a, b in redundant)
        if strict:
            raise PosetError(msg)
        warnings.warn(msg, NonCoverRelationWarning, stacklevel=2)
    return P


def chain(n: int, prefix: str = "v", name: str | None = None) -> Poset:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return build_poset(labels, zip(labels, labels[1:]), name=name)


def antichain(n: int, prefix: str = "a", name: str | None = None) -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(1, n + 1)], name=name)


def cover_relation(P: Poset) -> frozenset[tuple[str, str]]:
    return frozenset(P.cover_pairs())


def relation_of(P: Poset, u: str, v: str) -> Relation:
    return P.relation(P.index(u), P.index(v))


def dual(P: Poset) -> Poset:
    name = None if P.name is None else P.name + "*"
    return Poset(P.labels, P.down, name)


def chain_distance(P: Poset, u: str, v: str) -> int | None:
    """Fewest cover steps from ``u`` up to ``v``; ``None`` unless ``u < v``."""
    return _distance(P, P.index(u), P.index(v))


def _distance(P: Poset, a: int, b: int, within: int | None = None) -> int | None:
    if not P.lt(a, b):
        return None
    allowed = P.down[b] | (1 << b) if within is None else within
    seen = 1 << a
    frontier = deque([(a, 0)])
    while frontier:
        x, d = frontier.popleft()
        for y in bits(P.cover_up[x] & allowed & ~seen):
            if y == b:
                return d + 1
            seen |= 1 << y
            frontier.append((y, d + 1))
    return None


# canonical form --------------------------------------------------------


def _rank(values: list) -> list[int]:
    table = {v: i for i, v in enumerate(sorted(set(values)))}
    return [table[v] for v in values]


def _refine(P: Poset, colors: list[int]) -> list[int]:
    n = P.n
    ncls = len(set(colors))
    while True:
        sig = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in bits(P.cover_up[v]))),
                tuple(sorted(colors[w] for w in bits(P.cover_down[v]))),
                tuple(sorted(colors[w] for w in bits(P.up[v]))),
                tuple(sorted(colors[w] for w in bits(P.down[v]))),
            )
            for v in range(n)
        ]
        colors = _rank(sig)
        k = len(set(colors))
        if k == ncls:
            return colors
        ncls = k


def _encode(P: Poset, order: Sequence[int]) -> int:
    n = P.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i, v in enumerate(order):
        row = 0
        for w in bits(P.up[v]):
            row |= 1 << (n - 1 - pos[w])
        code = (code << n) | row
    return code


def canonical_order(P: Poset) -> list[int]:
    """A relabeling order giving the minimum relation encoding found by
    individualisation/refinement; twins are individualised once."""
    n = P.n
    if n == 0:
        return []
    h = P.heights()
    init = [
        (h[v], bin(P.up[v]).count("1"), bin(P.down[v]).count("1"),
         bin(P.cover_up[v]).count("1"), bin(P.cover_down[v]).count("1"))
        for v in range(n)
    ]
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(P, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            code = _encode(P, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        tried: list[int] = []
        for v in target:
            if any(P.up[v] == P.up[t] and P.down[v] == P.down[t] for t in tried):
                continue
            tried.append(v)
            search([2 * c + (0 if w == v or c != colors[v] else 1) for w, c in enumerate(colors)])

    search(_rank(init))
    return best[1]


def canonical_key(P: Poset, bound: int = DEFAULT_KEY_BOUND) -> bytes:
    """Relabeling-invariant byte string; equal iff the posets are isomorphic."""
    if P.n > bound:
        raise SizeBoundError(f"poset has {P.n} elements, bound is {bound}")
    n = P.n
    code = _encode(P, canonical_order(P)) if n else 0
    return bytes([n]) + code.to_bytes((n * n + 7) // 8, "big")


def canonical_form(P: Poset, letters: str = "abcdefghijklmnopqrstuvwxyz") -> Poset:
    """Isomorphic copy in canonical element order with labels a, b, c, ..."""
    order = canonical_order(P)
    Q = P.permuted(order)
    labels = [letters[i] if i < len(letters) else f"e{i}" for i in range(P.n)]
    return Poset(tuple(labels), Q.up, P.name)
