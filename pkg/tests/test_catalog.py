import itertools

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from ciposet.catalog import (
    FAMILY_TARGETS,
    FIXTURE_NAMES,
    FIXTURE_NOTES,
    crosscheck_transcription,
    family,
    fixture,
    fixture_record,
    generate_family,
    transcribed,
)
from ciposet.embedding import has_pattern
from ciposet.enumerate import enumerate_posets
from ciposet.graph import ci_graph, has_induced, induced_subgraph, target_graph
from ciposet.poset import build_poset, canonical_key, cover_relation, dual

from .oracles import ci_edges, covers, lt_matrix


def test_fixture_names():
    assert set(FIXTURE_NAMES) == {"FIG1_P", "FIG1_CHAIN", "CE_CLAW", "CE_HOUSE", "CE_DOMINO", "CE_COGRAPH"}
    with pytest.raises(KeyError):
        fixture("FIG99")
    assert fixture_record("CE_CLAW").poset == fixture("CE_CLAW")


def _chain(*labels):
    return list(zip(labels, labels[1:]))


@pytest.mark.parametrize(
    "name, pairs",
    [
        ("FIG1_P", _chain("v1", "v2", "v3", "v4") + [("v1", "v"), ("v", "v4")]),
        ("FIG1_CHAIN", _chain("v1", "v2", "v3", "v4")),
        ("CE_CLAW", _chain("v1", "v2", "v3", "v4", "v5") + [("v1", "x"), ("x", "v4")]),
        ("CE_HOUSE", _chain("v1", "v2", "v3", "v4") + _chain("v1", "v5", "v6", "v7")
         + [("v1", "x"), ("x", "v7")]),
        ("CE_DOMINO", _chain("v1", "v2", "v3", "v4", "v5") + _chain("v6", "v7", "v8", "v9", "v10")
         + [("v6", "x"), ("x", "v10")]),
        ("CE_COGRAPH", _chain("v1", "v2", "v3", "v4") + [("v1", "x"), ("x", "v4")]),
    ],
)
def test_fixture_covers_bit_exact(name, pairs):
    P = fixture(name)
    assert cover_relation(P) == set(pairs)
    assert P == build_poset(P.labels, pairs, strict=True)


def test_fixture_examples():
    assert fixture("CE_COGRAPH").n == 5 and len(cover_relation(fixture("CE_COGRAPH"))) == 5
    P = fixture("CE_CLAW")
    v = P.index("v")
    assert P.comparable[v] == 0
    G = ci_graph(fixture("FIG1_P"))
    H = induced_subgraph(G, ["v1", "v2", "v3", "v4"])
    assert sorted(map(sorted, H.edges())) == [["v1", "v2"], ["v2", "v3"], ["v3", "v4"]]


def test_fixtures_show_their_graph_claims():
    assert has_induced(target_graph("claw"), ci_graph(fixture("CE_CLAW")))
    assert has_induced(target_graph("house"), ci_graph(fixture("CE_HOUSE")))
    assert has_induced(target_graph("p4"), ci_graph(fixture("CE_COGRAPH")))


def test_ce_domino_has_no_domino_and_drawn_vertices_give_k33():
    P = fixture("CE_DOMINO")
    G = ci_graph(P)
    assert not has_induced(target_graph("domino"), G)
    H = induced_subgraph(G, ["v1", "v8", "v5", "v6", "v3", "v10"])
    assert H.edge_count == 9
    assert nx.is_isomorphic(nx.Graph(H.edges()), nx.complete_bipartite_graph(3, 3))
    assert "K3,3" in FIXTURE_NOTES["CE_DOMINO"]


@pytest.mark.parametrize(
    "target, count", [("claw", 4), ("p4", 9), ("c4", 3), ("k3", 4), ("domino", 0)]
)
def test_family_sizes(target, count):
    assert len(family(target)) == count


def test_family_shapes():
    assert {P.n for P in family("claw")} == {6}
    assert sorted(P.n for P in family("p4")) == [4, 6, 6, 6, 6, 6, 6, 7, 7]
    c4 = family("c4")
    assert all(P.n == 6 and max(P.heights()) == 2 for P in c4)
    k3 = {canonical_key(P) for P in family("k3")}
    assert k3 == {canonical_key(P) for P in enumerate_posets(3)} - {
        canonical_key(build_poset("abc", [("a", "b"), ("b", "c")]))
    }
    assert family("p4").names[0] == "p4_1" and family("p4")[0].n == 4


@pytest.mark.parametrize("target", FAMILY_TARGETS)
def test_family_closed_under_duality_and_distinct(target):
    fam = family(target)
    keys = [canonical_key(P) for P in fam]
    assert len(set(keys)) == len(keys)
    assert {canonical_key(dual(P)) for P in fam} == set(keys)
    assert all(has_induced(target_graph(target), ci_graph(P)) for P in fam)


def _oracle_minimal(P, target):
    """No proper cover-preserving subset carries an induced target (networkx check)."""
    lt = lt_matrix(P)
    T = nx.Graph(target_graph(target).edges())
    pc = covers(lt)

    def carries(W):
        sub = [[lt[a][b] for b in W] for a in W]
        G = nx.Graph()
        G.add_nodes_from(range(len(W)))
        G.add_edges_from(tuple(e) for e in ci_edges(sub))
        return GraphMatcher(G, T).subgraph_is_isomorphic()

    if not carries(list(range(P.n))):
        return False
    for k in range(T.number_of_nodes(), P.n):
        for W in itertools.combinations(range(P.n), k):
            sc = covers([[lt[a][b] for b in W] for a in W])
            if {(W[i], W[j]) for i, j in sc} != {(a, b) for a, b in pc if a in W and b in W}:
                continue
            if carries(W):
                return False
    return True


@pytest.mark.parametrize("target", ["claw", "p4", "c4", "k3"])
def test_members_minimal_by_independent_oracle(target):
    assert all(_oracle_minimal(P, target) for P in family(target))


@pytest.mark.parametrize("target", ["claw", "p4", "c4"])
def test_family_complete_up_to_six(target):
    T = target_graph(target)
    fam = family(target)
    for n in range(T.n, 7):
        for P in enumerate_posets(n):
            if has_induced(T, ci_graph(P)):
                assert has_pattern(P, fam, "cover-preserving")
                assert P.n > 6 or _oracle_minimal(P, target) == any(
                    canonical_key(P) == canonical_key(Q) for Q in fam
                )


@pytest.mark.parametrize("target", ["claw", "p4", "c4", "k3", "domino"])
def test_shipped_data_matches_regeneration(target):
    assert generate_family(target, 6).keys == family(target, 6).keys


@pytest.mark.slow
@pytest.mark.parametrize("target", FAMILY_TARGETS)
def test_shipped_data_matches_regeneration_to_seven(target):
    assert generate_family(target, 7).keys == family(target, 7).keys


def test_family_size_bound_filters():
    assert len(family("p4", 4)) == 1
    assert len(family("p4", 6)) == 7
    assert len(family("house", 8)) == 54


def test_crosscheck_claw_transcription():
    S = transcribed("claw")
    assert [P.name for P in S] == ["S1", "S2", "S3"]
    rep = crosscheck_transcription("claw", S)
    assert rep.matched == 3 and rep.generated == 4
    assert len(rep.missing) == 1
    assert rep.missing_duals == {rep.missing[0]: "S2"}
    assert rep.full_match
    assert "3 of 4" in rep.summary()


def test_crosscheck_identity_and_dual_swap():
    members = list(family("p4"))
    assert crosscheck_transcription("p4", members).full_match
    swapped = members[:]
    swapped[1] = dual(swapped[1])
    assert crosscheck_transcription("p4", swapped).full_match
    rep = crosscheck_transcription("claw", [fixture("CE_CLAW")])
    assert rep.unmatched == ["CE_CLAW"] and not rep.full_match
