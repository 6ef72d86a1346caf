"""Mechanical checks of the C-I graph lemmas and forbidden-subposet theorems."""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import DEFAULT_FAMILY_SIZE, family
from .embedding import Embedding, EmbeddingMode, contains_pattern, is_cover_preserving_subset
from .enumerate import MAX_ENUM_N, enumerate_posets, enumerate_with_keys
from .graph import CIGraph, Occurrence, ci_graph, first_induced, has_induced, induced_subgraph, target_graph
from .poset import Poset, PosetError, Relation, _distance, bits, canonical_key, dual

__all__ = [
    "THEOREMS",
    "LEMMA_ITEMS",
    "BasicPropertiesReport",
    "LemmaCheck",
    "VerificationReport",
    "ClawCase",
    "ClawClassification",
    "ModeEquivalenceReport",
    "VerifySummary",
    "basic_properties_report",
    "subposet_graph_lemma_check",
    "characterization_report",
    "claw_case_classification",
    "mode_equivalence_check",
    "exhaustive_verify",
]

# theorem id -> forbidden induced subgraph
THEOREMS = {"claw": "claw", "house": "house", "domino": "domino", "cograph": "p4"}
LEMMA_ITEMS = ("i", "ii", "iii", "iv", "v", "vi", "vii")
MAX_VERIFY_N = MAX_ENUM_N
MAX_MODE_N = 7


def _theorem_target(theorem: str) -> str:
    try:
        return THEOREMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}") from None


def poset_id(P: Poset) -> str:
    """Canonical key in hex, or ``"-"`` when the poset is too large to key."""
    return canonical_key(P).hex() if P.n <= 10 else "-"


def cover_listing(P: Poset) -> str:
    return f"elements: {' '.join(P.labels)}; covers: " + ", ".join(f"{a}<{b}" for a, b in P.cover_pairs())


# -- basic properties -----------------------------------------------------


@dataclass
class BasicPropertiesReport:
    items: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.items.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, ok in self.items.items() if not ok]


def _masks(n: int):
    return range(1 << n)


def basic_properties_report(P: Poset) -> BasicPropertiesReport:
    """Evaluate the seven elementary C-I graph properties directly on ``P``."""
    G = ci_graph(P)
    n = P.n
    comp = P.comparable

    def is_antichain(mask: int) -> bool:
        return all(comp[v] & mask == 0 for v in bits(mask))

    def is_chain(mask: int) -> bool:
        return all((comp[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_clique(mask: int) -> bool:
        return all((G.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_independent(mask: int) -> bool:
        return all(G.adj[v] & mask == 0 for v in bits(mask))

    long_up = [P.up[v] & ~P.cover_up[v] for v in range(n)]

    def llt(a: int, b: int) -> bool:
        return bool(long_up[a] >> b & 1)

    item_vi = True
    item_vii = True
    for x, y, z in itertools.combinations(range(n), 3):
        e = (G.has_edge(x, y), G.has_edge(x, z), G.has_edge(y, z))
        if all(e) and comp[x] >> y & 1 and comp[x] >> z & 1 and comp[y] >> z & 1:
            item_vi = False
        # every rotation with exactly one edge among the three pairs
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            if G.has_edge(a, b) and not G.has_edge(a, c) and not G.has_edge(b, c):
                if not ((llt(a, c) and llt(b, c)) or (llt(c, a) and llt(c, b))):
                    item_vii = False

    items = {
        "i": G.is_connected(),
        "ii": all(is_clique(m) for m in _masks(n) if is_antichain(m)),
        "iii": all(is_chain(m) for m in _masks(n) if is_independent(m)),
        "iv": sum(G.degree(v) == 1 for v in range(n)) <= 2,
        "v": ci_graph(dual(P)) == G,
        "vi": item_vi,
        "vii": item_vii,
    }
    return BasicPropertiesReport(items)


# -- subposet graph lemma ----------------------------------------------------


@dataclass
class LemmaCheck:
    subset: tuple[str, ...]
    cover_preserving: bool
    graphs_equal: bool
    subposet_graph: CIGraph
    induced_graph: CIGraph

    @property
    def holds(self) -> bool:
        return self.graphs_equal or not self.cover_preserving


def subposet_graph_lemma_check(P: Poset, W: Sequence[str]) -> LemmaCheck:
    """Compare the C-I graph of the subposet on ``W`` with the subgraph of
    ``ci_graph(P)`` induced by ``W`` (identity map)."""
    idx = sorted({P.index(w) for w in W})
    Q = P.subposet(idx)
    GQ = ci_graph(Q)
    H = induced_subgraph(ci_graph(P), Q.labels)
    return LemmaCheck(Q.labels, is_cover_preserving_subset(P, idx), GQ == H, GQ, H)


# -- characterisation reports -------------------------------------------------


@dataclass
class VerificationReport:
    poset_id: str
    theorem: str
    graph_side: bool
    graph_witness: Occurrence | None
    poset_side_isometric: bool
    isometric_witness: tuple[Poset, Embedding] | None
    poset_side_cover_preserving: bool
    cover_preserving_witness: tuple[Poset, Embedding] | None
    family_size: int
    family_complete: bool
    covers: str = ""

    @property
    def discrepancy_corrected(self) -> bool:
        return self.graph_side != self.poset_side_cover_preserving

    @property
    def discrepancy_original(self) -> bool:
        return self.graph_side != self.poset_side_isometric


def _family_for(theorem: str, P: Poset, family_size: int) -> tuple[Poset, ...]:
    return family(_theorem_target(theorem), max(1, min(P.n, family_size))).members


def characterization_report(
    P: Poset, theorem: str, family_size: int = DEFAULT_FAMILY_SIZE
) -> VerificationReport:
    """Graph side (induced target in ``ci_graph(P)``) against containment of the
    generated obstruction family, isometrically and cover-preservingly."""
    target = target_graph(_theorem_target(theorem))
    members = _family_for(theorem, P, family_size)
    occ = first_induced(target, ci_graph(P))
    iso = contains_pattern(P, members, EmbeddingMode.ISOMETRIC) if members else None
    cov = contains_pattern(P, members, EmbeddingMode.COVER_PRESERVING) if members else None
    return VerificationReport(
        poset_id=poset_id(P),
        theorem=theorem,
        graph_side=occ is not None,
        graph_witness=occ,
        poset_side_isometric=iso is not None,
        isometric_witness=iso,
        poset_side_cover_preserving=cov is not None,
        cover_preserving_witness=cov,
        family_size=family_size,
        family_complete=P.n <= family_size,
        covers=cover_listing(P),
    )


# -- claw cases --------------------------------------------------------------


class ClawCase(enum.Enum):
    CASE1 = "case1"  # centre incomparable to all leaves
    CASE2 = "case2"  # bottom leaf covered by the centre
    CASE3 = "case3"  # centre covered by the top leaf
    CASE45 = "case45"  # both


@dataclass(frozen=True)
class ClawClassification:
    case: ClawCase
    centre: str
    leaves: tuple[str, str, str]  # bottom, middle, top
    distance: int  # cover steps between the bottom and top leaves


def claw_case_classification(P: Poset, occ: Occurrence) -> ClawClassification:
    G = ci_graph(P)
    T = occ.target
    if T.n != 4 or sorted(T.degree(v) for v in range(4)) != [1, 1, 1, 3]:
        raise ValueError("occurrence target is not a claw")
    if occ.host != G or first_induced(T, induced_subgraph(G, occ.vertex_set)) is None:
        raise ValueError("occurrence is not an induced claw of this poset's C-I graph")
    centre_t = next(v for v in range(4) if T.degree(v) == 3)
    x = occ.mapping[centre_t]
    leaves = [occ.mapping[v] for v in range(4) if v != centre_t]
    if any(not (P.comparable[a] >> b & 1) for a, b in itertools.combinations(leaves, 2)):
        raise ValueError("claw leaves do not form a chain")
    u, v, w = sorted(leaves, key=lambda a: bin(P.down[a] & P.comparable[a]).count("1"))
    rel = [P.relation(a, x) for a in (u, v, w)]
    inc = Relation.INCOMPARABLE
    if rel == [inc, inc, inc]:
        case = ClawCase.CASE1
    elif rel == [Relation.COVERS, inc, inc]:
        case = ClawCase.CASE2
    elif rel == [inc, inc, Relation.COVERED_BY]:
        case = ClawCase.CASE3
    elif rel == [Relation.COVERS, inc, Relation.COVERED_BY]:
        case = ClawCase.CASE45
    else:
        raise ValueError(f"claw centre relations {[r.value for r in rel]} match no case")
    L = P.labels
    return ClawClassification(case, L[x], (L[u], L[v], L[w]), _distance(P, u, w))


# -- isometric vs cover-preserving --------------------------------------------


@dataclass
class ModeEquivalenceReport:
    pattern: Poset
    n_max: int
    hosts_scanned: int
    differing: list[tuple[str, Poset]] = field(default_factory=list)

    @property
    def coincide(self) -> bool:
        return not self.differing


def mode_equivalence_check(Q: Poset, n_max: int) -> ModeEquivalenceReport:
    """Hosts with at most ``n_max`` elements where isometric and cover-preserving
    containment of ``Q`` disagree."""
    if not Q.n <= n_max <= MAX_MODE_N:
        raise PosetError(f"need |Q| <= n_max <= {MAX_MODE_N}")
    report = ModeEquivalenceReport(Q, n_max, 0)
    for k in range(Q.n, n_max + 1):
        for key, H in enumerate_with_keys(k):
            report.hosts_scanned += 1
            cov = contains_pattern(H, [Q], EmbeddingMode.COVER_PRESERVING) is not None
            iso = contains_pattern(H, [Q], EmbeddingMode.ISOMETRIC) is not None
            if cov != iso:
                report.differing.append((key.hex(), H))
    return report


# -- exhaustive verification ----------------------------------------------------


@dataclass
class VerifySummary:
    theorem: str
    n_max: int
    total: int
    per_size: dict[int, int]
    family_size: int
    graph_true: int
    corrected: list[tuple[str, str]]  # (canonical key, cover listing)
    original: int
    original_example: tuple[str, str] | None

    @property
    def ok(self) -> bool:
        return not self.corrected


def _check_chunk(args) -> list[tuple[bool, bool, bool]]:
    target, members, posets = args
    T = target_graph(target)
    out = []
    for P in posets:
        fam = [Q for Q in members if Q.n <= P.n]
        graph = has_induced(T, ci_graph(P))
        iso = bool(fam) and contains_pattern(P, fam, EmbeddingMode.ISOMETRIC) is not None
        cov = bool(fam) and contains_pattern(P, fam, EmbeddingMode.COVER_PRESERVING) is not None
        out.append((graph, iso, cov))
    return out


def exhaustive_verify(theorem: str, n_max: int, jobs: int = 1, chunk: int = 64) -> VerifySummary:
    """Run the graph-side / poset-side comparison on every poset with at most
    ``n_max`` elements. Output does not depend on ``jobs``."""
    target = _theorem_target(theorem)
    if not 1 <= n_max <= MAX_VERIFY_N:
        raise PosetError(f"n_max must be in 1..{MAX_VERIFY_N}")
    members = family(target, n_max).members
    universe = [kp for n in range(1, n_max + 1) for kp in enumerate_with_keys(n)]
    posets = [P for _, P in universe]
    tasks = [(target, members, posets[i:i + chunk]) for i in range(0, len(posets), chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = [r for part in pool.map(_check_chunk, tasks) for r in part]
    else:
        results = [r for t in tasks for r in _check_chunk(t)]

    summary = VerifySummary(
        theorem, n_max, len(posets),
        {n: len(enumerate_posets(n)) for n in range(1, n_max + 1)},
        n_max, 0, [], 0, None,
    )
    for (key, P), (graph, iso, cov) in zip(universe, results):
        summary.graph_true += graph
        if graph != cov:
            summary.corrected.append((key.hex(), cover_listing(P)))
        if graph != iso:
            summary.original += 1
            if summary.original_example is None:
                summary.original_example = (key.hex(), cover_listing(P))
    return summary
