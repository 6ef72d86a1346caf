"""Cover-incomparability graphs of finite posets and forbidden-subposet checks."""

from .catalog import crosscheck_transcription, family, fixture
from .embedding import Embedding, EmbeddingMode, contains_pattern, find_embeddings
from .enumerate import enumerate_posets, synthesize_posets_with_ci_graph
from .graph import (
    CIGraph,
    Occurrence,
    ci_graph,
    find_induced,
    graphs_isomorphic,
    induced_subgraph,
    is_cograph,
    target_graph,
)
from .io import export_dot, parse_poset_file, parse_poset_stream, serialize_poset
from .poset import (
    Poset,
    PosetError,
    Relation,
    build_poset,
    canonical_key,
    chain_distance,
    cover_relation,
    dual,
    relation_of,
)
from .verify import (
    basic_properties_report,
    characterization_report,
    claw_case_classification,
    exhaustive_verify,
    mode_equivalence_check,
    subposet_graph_lemma_check,
)

__version__ = "0.1.0"
