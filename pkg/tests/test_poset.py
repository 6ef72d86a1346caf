import itertools
import random
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings

from ciposet.catalog import fixture
from ciposet.poset import (
    CycleError,
    DuplicateLabelError,
    NonCoverRelationWarning,
    Poset,
    PosetError,
    Relation,
    SizeBoundError,
    UnknownLabelError,
    antichain,
    build_poset,
    canonical_key,
    chain,
    chain_distance,
    cover_relation,
    dual,
    relation_of,
)

from .strategies import posets
from .oracles import all_labeled_orders, covers, isomorphic_orders, lt_matrix


def test_antichain_has_empty_relation():
    P = build_poset(["a", "b", "c"], [])
    assert P.up == (0, 0, 0)
    assert cover_relation(P) == frozenset()


def test_cograph_fixture_incomparabilities():
    P = build_poset(
        ["v1", "v2", "v3", "v4", "x"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v1", "x"), ("x", "v4")],
    )
    assert relation_of(P, "x", "v2") is Relation.INCOMPARABLE
    assert relation_of(P, "x", "v3") is Relation.INCOMPARABLE
    assert relation_of(P, "v1", "v4") is Relation.LONG_BELOW


@pytest.mark.parametrize(
    "labels, rel, exc",
    [
        (["a", "b"], [("a", "b"), ("b", "a")], CycleError),
        (["a"], [("a", "a")], CycleError),
        (["a", "b"], [("a", "c")], UnknownLabelError),
        (["a", "a"], [], DuplicateLabelError),
        (["a b"], [], PosetError),
    ],
)
def test_build_errors(labels, rel, exc):
    with pytest.raises(exc):
        build_poset(labels, rel)


def test_non_cover_generators_warn_or_fail_in_strict_mode():
    rel = [("a", "b"), ("b", "c"), ("a", "c")]
    with pytest.warns(NonCoverRelationWarning, match="a<c"):
        P = build_poset(["a", "b", "c"], rel)
    assert cover_relation(P) == {("a", "b"), ("b", "c")}
    with pytest.raises(PosetError):
        build_poset(["a", "b", "c"], rel, strict=True)


def test_claw_fixture_covers():
    P = fixture("CE_CLAW")
    assert cover_relation(P) == {
        ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v1", "x"), ("x", "v4"),
    }
    assert not any("v" in pair for pair in cover_relation(P))


def test_relation_of_cograph_fixture():
    P = fixture("CE_COGRAPH")
    assert relation_of(P, "v1", "v3") is Relation.LONG_BELOW
    assert relation_of(P, "v3", "v1") is Relation.LONG_ABOVE
    assert relation_of(P, "x", "v2") is Relation.INCOMPARABLE
    assert relation_of(P, "v1", "x") is Relation.COVERS
    assert relation_of(P, "x", "v1") is Relation.COVERED_BY
    assert relation_of(P, "x", "x") is Relation.EQUAL
    with pytest.raises(UnknownLabelError):
        relation_of(P, "x", "nope")


def test_dual_of_cograph_fixture():
    D = dual(fixture("CE_COGRAPH"))
    assert cover_relation(D) == {("v2", "v1"), ("v3", "v2"), ("v4", "v3"), ("x", "v1"), ("v4", "x")}
    assert dual(antichain(4)) == antichain(4)


def test_chain_distance_with_shortcut():
    P = fixture("FIG1_P")
    assert chain_distance(P, "v1", "v4") == 2
    assert chain_distance(P, "v1", "v2") == 1
    assert chain_distance(P, "v1", "v3") == 2
    assert chain_distance(P, "v2", "v") is None
    assert chain_distance(P, "v4", "v1") is None
    assert chain_distance(P, "v1", "v1") is None


def test_canonical_key_examples():
    c = chain(4)
    labels = list(c.labels)
    random.Random(1).shuffle(labels)
    relabeled = build_poset(labels, zip(labels, labels[1:]))
    assert canonical_key(c) == canonical_key(relabeled)
    assert canonical_key(chain(3)) != canonical_key(antichain(3))
    with pytest.raises(SizeBoundError):
        canonical_key(antichain(11))
    assert canonical_key(antichain(11), bound=11)


def test_canonical_key_is_stable_bytes():
    # 3-chain ordered bottom-up: rows 011, 001, 000 -> 0b011001000
    assert canonical_key(chain(3)).hex() == "0300c8"
    assert canonical_key(antichain(3)).hex() == "030000"
    assert canonical_key(fixture("CE_COGRAPH")).hex() == "0500f08c20"


def test_labeled_posets_on_four_give_sixteen_keys():
    orders = all_labeled_orders(4)
    assert len(orders) == 219
    keys = set()
    for lt in orders:
        up = tuple(sum(1 << v for v in range(4) if lt[u][v]) for u in range(4))
        keys.add(canonical_key(Poset(("a", "b", "c", "d"), up)))
    assert len(keys) == 16
    # independent dedup by permutation search agrees
    reps = []
    for lt in orders:
        if not any(isomorphic_orders(lt, r) for r in reps):
            reps.append(lt)
    assert len(reps) == 16


# properties ---------------------------------------------------------------


@given(posets())
def test_order_axioms_and_cover_closure(P):
    lt = lt_matrix(P)
    n = P.n
    assert not any(lt[u][u] for u in range(n))
    cv = covers(lt)
    assert cover_relation(P) == {(P.labels[u], P.labels[v]) for u, v in cv}
    D = nx.DiGraph(list(cv))
    D.add_nodes_from(range(n))
    closure = nx.transitive_closure_dag(D)
    assert {(u, v) for u in range(n) for v in range(n) if lt[u][v]} == set(closure.edges)


@given(posets())
def test_relation_classification(P):
    cv = cover_relation(P)
    for a, b in itertools.product(P.labels, repeat=2):
        r = relation_of(P, a, b)
        u, v = P.index(a), P.index(b)
        assert (r is Relation.INCOMPARABLE) == (a != b and not P.lt(u, v) and not P.lt(v, u))
        assert (r is Relation.COVERS) == ((a, b) in cv)
        assert (r is Relation.LONG_BELOW) == (P.lt(u, v) and (a, b) not in cv)


@given(posets())
def test_double_dual_is_identity(P):
    assert dual(dual(P)) == P


@given(posets())
def test_chain_distance_matches_graph_search(P):
    D = nx.DiGraph()
    D.add_nodes_from(P.labels)
    D.add_edges_from(cover_relation(P))
    for a, b in itertools.product(P.labels, repeat=2):
        d = chain_distance(P, a, b)
        if P.lt(P.index(a), P.index(b)):
            assert d == nx.shortest_path_length(D, a, b)
        else:
            assert d is None
        assert (d == 1) == ((a, b) in cover_relation(P))


@given(posets(max_size=6))
@settings(max_examples=60)
def test_canonical_key_invariant_under_relabeling(P):
    order = list(range(P.n))
    random.Random(P.n).shuffle(order)
    assert canonical_key(P.permuted(order)) == canonical_key(P)


@given(posets(max_size=6))
@settings(max_examples=60)
def test_self_duality_detected_by_keys(P):
    n = P.n
    lt = lt_matrix(P)
    dl = [[lt[v][u] for v in range(n)] for u in range(n)]
    assert (canonical_key(P) == canonical_key(dual(P))) == isomorphic_orders(lt, dl)


@given(posets(max_size=5), posets(max_size=5))
@settings(max_examples=80)
def test_canonical_key_equality_iff_isomorphic(P, Q):
    assert (canonical_key(P) == canonical_key(Q)) == isomorphic_orders(lt_matrix(P), lt_matrix(Q))


def test_warnings_do_not_leak_from_strict_fixtures():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        fixture("CE_HOUSE")
