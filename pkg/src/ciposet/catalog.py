"""Built-in fixture posets, target graphs and obstruction families.

An obstruction family for a target graph ``T`` is the set of posets ``Q``
whose C-I graph contains ``T`` as an induced subgraph and which are minimal
for that property under cover-preserving containment. A poset has an induced
``T`` in its C-I graph exactly when it contains a family member as a
cover-preserving subposet. Families are generated exhaustively up to a size
bound; ``PatternFamily.max_size`` records how far the list is known complete.

Generation over all posets with up to 8 elements takes about a minute, so the
result ships frozen in ``data/families.txt``; ``generate_family`` recomputes it
and the test suite checks the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .embedding import EmbeddingMode, iter_embeddings
from .enumerate import MAX_ENUM_N, enumerate_posets
from .graph import CIGraph, ci_graph, has_induced, target_graph
from .poset import Poset, PosetError, build_poset, canonical_key, dual

__all__ = [
    "FIXTURE_NAMES",
    "FIXTURE_NOTES",
    "FAMILY_TARGETS",
    "DEFAULT_FAMILY_SIZE",
    "Fixture",
    "PatternFamily",
    "CrosscheckReport",
    "fixture",
    "fixture_record",
    "family",
    "generate_family",
    "transcribed",
    "crosscheck_transcription",
]

DEFAULT_FAMILY_SIZE = 7
SHIPPED_FAMILY_SIZE = 8
FAMILY_TARGETS = ("claw", "house", "domino", "p4", "c4", "k3")


def _chain_pairs(labels: Sequence[str]) -> list[tuple[str, str]]:
    return list(zip(labels, labels[1:]))


def _vs(a: int, b: int) -> list[str]:
    return [f"v{i}" for i in range(a, b + 1)]


@dataclass(frozen=True)
class Fixture:
    name: str
    poset: Poset
    source: str


def _fixtures() -> dict[str, Fixture]:
    fx = {}

    def add(name: str, labels, covers, source: str) -> None:
        fx[name] = Fixture(name, build_poset(labels, covers, name=name, strict=True), source)

    add("FIG1_P", _vs(1, 4) + ["v"],
        _chain_pairs(_vs(1, 4)) + [("v1", "v"), ("v", "v4")], "4-chain plus a shortcut v1<v<v4")
    add("FIG1_CHAIN", _vs(1, 4), _chain_pairs(_vs(1, 4)), "the 4-chain inside FIG1_P")
    add("CE_CLAW", _vs(1, 5) + ["x", "v"],
        _chain_pairs(_vs(1, 5)) + [("v1", "x"), ("x", "v4")], "claw counterexample")
    add("CE_HOUSE", _vs(1, 7) + ["x"],
        _chain_pairs(_vs(1, 4)) + _chain_pairs(["v1", "v5", "v6", "v7"])
        + [("v1", "x"), ("x", "v7")], "house counterexample")
    # shipped as drawn; its C-I graph has no induced domino (FIXTURE_NOTES)
    add("CE_DOMINO", _vs(1, 10) + ["x"],
        _chain_pairs(_vs(1, 5)) + _chain_pairs(_vs(6, 10))
        + [("v6", "x"), ("x", "v10")], "domino counterexample")
    add("CE_COGRAPH", _vs(1, 4) + ["x"],
        _chain_pairs(_vs(1, 4)) + [("v1", "x"), ("x", "v4")], "cograph counterexample")
    return fx


_FIXTURES = _fixtures()
FIXTURE_NAMES = tuple(_FIXTURES)

FIXTURE_NOTES = {
    "CE_DOMINO": (
        "the chains v1..v5 and v6..v10 are mutually incomparable, so the six "
        "vertices v1,v8,v5,v6,v3,v10 induce K3,3 rather than a domino, and the "
        "C-I graph has no induced domino at all; the verdict above is the "
        "detector's (see FIXTURE_NOTES in ciposet.catalog)"
    ),
}


def fixture(name: str) -> Poset:
    try:
        return _FIXTURES[name].poset
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None


def fixture_record(name: str) -> Fixture:
    fixture(name)
    return _FIXTURES[name]


@dataclass(frozen=True)
class PatternFamily:
    target: str
    members: tuple[Poset, ...]
    max_size: int
    provenance: str = "generated"
    keys: tuple[bytes, ...] = field(default=(), repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Poset:
        return self.members[i]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(P.name or "" for P in self.members)

    @property
    def graph(self) -> CIGraph:
        return target_graph(self.target)

    def member(self, name: str) -> Poset:
        for P in self.members:
            if P.name == name:
                return P
        raise KeyError(f"{name!r} is not a member of the {self.target} family")


@lru_cache(maxsize=None)
def generate_family(target: str, max_size: int) -> PatternFamily:
    """Compute the minimal obstruction family from scratch, smallest sizes first."""
    T = target_graph(target)
    members: list[Poset] = []
    keys: list[bytes] = []
    for n in range(max(T.n, 1), max_size + 1):
        found = []
        for P in enumerate_posets(n):
            if not has_induced(T, ci_graph(P)):
                continue
            if any(
                next(iter_embeddings(Q, P, EmbeddingMode.COVER_PRESERVING), None) is not None
                for Q in members
            ):
                continue
            found.append(P)
        for P in found:
            members.append(P.with_name(f"{target}_{len(members) + 1}"))
            keys.append(canonical_key(P))
    return PatternFamily(target, tuple(members), max_size, "generated", tuple(keys))


@lru_cache(maxsize=None)
def _shipped() -> dict[str, list[Poset]]:
    from .io import parse_poset_stream

    text = resources.files(__package__).joinpath("data/families.txt").read_text("utf-8")
    out: dict[str, list[Poset]] = {t: [] for t in FAMILY_TARGETS}
    for P in parse_poset_stream(text):
        out[P.name.rsplit("_", 1)[0]].append(P)
    return out


def family_data_text() -> str:
    """Regenerate the shipped family file contents."""
    from .io import serialize_posets

    head = (
        "# Minimal obstruction families, generated exhaustively over all posets\n"
        f"# with at most {SHIPPED_FAMILY_SIZE} elements. Regenerate with\n"
        "# `python -m ciposet.catalog > src/ciposet/data/families.txt`.\n\n"
    )
    members = [P for t in FAMILY_TARGETS for P in generate_family(t, SHIPPED_FAMILY_SIZE)]
    return head + serialize_posets(members)


@lru_cache(maxsize=None)
def family(target: str, max_size: int = DEFAULT_FAMILY_SIZE) -> PatternFamily:
    """Minimal obstruction posets for ``target`` with at most ``max_size`` elements.

    Members are in canonical order (size, then canonical key) and named
    ``<target>_<index>``.
    """
    target_graph(target)
    if not 1 <= max_size <= MAX_ENUM_N:
        raise PosetError(f"family size bound must be in 1..{MAX_ENUM_N}")
    if max_size > SHIPPED_FAMILY_SIZE:
        return generate_family(target, max_size)
    members = tuple(P for P in _shipped().get(target, []) if P.n <= max_size)
    keys = tuple(canonical_key(P) for P in members)
    return PatternFamily(target, members, max_size, "generated", keys)


# The usual named claw obstructions: a 5-chain u<a<v<b<w with an extra element
# x that is isolated (S3), covers the bottom (S2), or covers the bottom and is
# covered by the top (S1). The claw centre is x, the leaves u, v, w.
_CLAW_CHAIN = ["u", "a", "v", "b", "w"]
_TRANSCRIBED = {
    "claw": [
        ("S1", _chain_pairs(_CLAW_CHAIN) + [("u", "x"), ("x", "w")]),
        ("S2", _chain_pairs(_CLAW_CHAIN) + [("u", "x")]),
        ("S3", _chain_pairs(_CLAW_CHAIN)),
    ],
}


def transcribed(target: str) -> list[Poset]:
    """Hand-entered obstruction posets for ``target`` (only the claw is known)."""
    return [
        build_poset(_CLAW_CHAIN + ["x"], pairs, name=name, strict=True)
        for name, pairs in _TRANSCRIBED.get(target, [])
    ]


@dataclass
class CrosscheckReport:
    family_name: str
    generated: int
    matches: dict[str, str | None]  # transcribed name -> generated member name
    dual_matches: dict[str, str | None]
    missing: list[str]  # generated members not hit directly
    missing_duals: dict[str, str]  # missing member -> transcribed poset it dualises
    unmatched: list[str]  # transcribed posets outside the family, even up to duality

    @property
    def matched(self) -> int:
        return sum(v is not None for v in self.matches.values())

    @property
    def full_match(self) -> bool:
        """Transcription equals the family up to isomorphism and duality."""
        return not self.unmatched and all(m in self.missing_duals for m in self.missing)

    def summary(self) -> str:
        lines = [
            f"{self.family_name}: {self.matched} of {self.generated} generated members "
            f"matched directly; full match up to duality: {'yes' if self.full_match else 'no'}"
        ]
        for t, g in self.matches.items():
            via = g or (f"dual of {self.dual_matches[t]}" if self.dual_matches[t] else "none")
            lines.append(f"  {t} -> {via}")
        for m in self.missing:
            note = f" (dual of {self.missing_duals[m]})" if m in self.missing_duals else ""
            lines.append(f"  missing {m}{note}")
        return "\n".join(lines)


def crosscheck_transcription(
    family_name: str, transcribed_posets: Sequence[Poset], max_size: int = DEFAULT_FAMILY_SIZE
) -> CrosscheckReport:
    fam = family(family_name, max_size)
    by_key = {k: P.name for k, P in zip(fam.keys, fam.members)}
    matches: dict[str, str | None] = {}
    dual_matches: dict[str, str | None] = {}
    missing_duals: dict[str, str] = {}
    unmatched = []
    hit = set()
    for i, T in enumerate(transcribed_posets):
        tname = T.name or f"t{i + 1}"
        direct = by_key.get(canonical_key(T))
        via_dual = by_key.get(canonical_key(dual(T)))
        matches[tname] = direct
        dual_matches[tname] = via_dual
        if direct:
            hit.add(direct)
        if via_dual and via_dual != direct:
            missing_duals.setdefault(via_dual, tname)
        if direct is None and via_dual is None:
            unmatched.append(tname)
    missing = [P.name for P in fam.members if P.name not in hit]
    missing_duals = {m: t for m, t in missing_duals.items() if m in missing}
    return CrosscheckReport(
        family_name, len(fam), matches, dual_matches, missing, missing_duals, unmatched
    )


if __name__ == "__main__":
    print(family_data_text(), end="")
