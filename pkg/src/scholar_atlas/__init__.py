"""Researcher-map toolchain.

Turns researcher publication profiles into a self-contained static JSON
bundle: TFIDF embeddings per researcher, a 2D PCA layout, Gaussian mixture
clusterings for a range of K, and a topic query index, precomputed for
every Control Panel state and consumed by a static browser UI.
"""

from .bundle import (
    AtlasBundle,
    VariantConfig,
    all_variant_configs,
    build_bundle,
    load_bundle,
    save_bundle,
    variant_query,
)
from .embed import TfidfModel, Vocabulary, build_vocabulary, compute_tfidf, embedding_column
from .errors import (
    AtlasError,
    DegenerateInput,
    DuplicateId,
    EmptyCorpus,
    IndexOutOfRange,
    InvalidK,
    InvariantViolation,
    IoError,
    MalformedFile,
    NetworkUnavailable,
    NonPositiveDefinite,
    SchemaVersionMismatch,
    SchemaViolation,
    UnknownTerm,
    UnsupportedSource,
)
from .gmm import Ellipse, GmmComponent, GmmModel, assign, ellipse_params, fit_gmm
from .pca import MapLayout, PcaModel, explained_variance, fit_pca
from .profiles import (
    ProfileSet,
    Publication,
    PublicationMode,
    PublicationSetMode,
    ResearcherProfile,
    fetch_profiles,
    load_profiles,
    save_profiles,
    select_publications,
)
from .query import QueryIndex, QueryResult, build_query_index, score_query, top_k
from .textproc import EmphasisLevel, TokenBag, assemble_document, normalize, tokenize

__version__ = "0.1.0"

__all__ = [
    "AtlasBundle",
    "AtlasError",
    "DegenerateInput",
    "DuplicateId",
    "Ellipse",
    "EmphasisLevel",
    "EmptyCorpus",
    "GmmComponent",
    "GmmModel",
    "IndexOutOfRange",
    "InvalidK",
    "InvariantViolation",
    "IoError",
    "MalformedFile",
    "MapLayout",
    "NetworkUnavailable",
    "NonPositiveDefinite",
    "PcaModel",
    "ProfileSet",
    "Publication",
    "PublicationMode",
    "PublicationSetMode",
    "QueryIndex",
    "QueryResult",
    "ResearcherProfile",
    "SchemaVersionMismatch",
    "SchemaViolation",
    "TfidfModel",
    "TokenBag",
    "UnknownTerm",
    "UnsupportedSource",
    "VariantConfig",
    "Vocabulary",
    "all_variant_configs",
    "assemble_document",
    "assign",
    "build_bundle",
    "build_query_index",
    "build_vocabulary",
    "compute_tfidf",
    "ellipse_params",
    "embedding_column",
    "explained_variance",
    "fetch_profiles",
    "fit_gmm",
    "fit_pca",
    "load_bundle",
    "load_profiles",
    "normalize",
    "save_bundle",
    "save_profiles",
    "score_query",
    "select_publications",
    "tokenize",
    "top_k",
    "variant_query",
]
