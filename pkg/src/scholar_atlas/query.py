"""Free-text relevance scoring against researcher embeddings.

A query is pushed through the same normalize-and-weight pipeline as the
corpus, then compared by cosine similarity against every researcher column.
The index stores unit-L2 columns so scoring one query is a single sparse
matrix-vector product.

Two score flavors travel together: ``raw`` cosine similarities in [0, 1]
(all weights are non-negative) for ranking, and ``display`` scores min-max
rescaled over the current result set for color ramps. Display rescaling is
presentation only; it never reorders anything.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .embed import TfidfModel
from .textproc import tokenize


@dataclass
class QueryIndex:
    terms: list[str]
    term_index: dict[str, int]
    idf: np.ndarray  # (n_terms,)
    columns: sparse.csc_matrix  # n_terms x n_researchers, unit or zero columns
    researcher_ids: tuple[str, ...]
    zero_columns: tuple[int, ...]


@dataclass
class QueryResult:
    researcher_ids: tuple[str, ...]
    raw_scores: np.ndarray  # (n_researchers,) cosine similarity in [0, 1]
    display_scores: np.ndarray  # (n_researchers,) min-max rescaled
    matched_terms: tuple[str, ...]  # query stems found in the vocabulary
    unmatched_terms: tuple[str, ...]  # query stems with no corpus support


def build_query_index(model: TfidfModel, researcher_ids=None) -> QueryIndex:
    """Normalize the TFIDF columns for cosine scoring.

    All-zero columns (researchers with no text) stay zero: they score 0
    against every query instead of producing NaN. ``researcher_ids``
    defaults to zero-padded column indices when the caller has no ids.
    """
    n_docs = model.n_docs
    if researcher_ids is None:
        width = max(4, len(str(max(n_docs - 1, 0))))
        researcher_ids = tuple(f"{i:0{width}d}" for i in range(n_docs))
    else:
        researcher_ids = tuple(researcher_ids)
        if len(researcher_ids) != n_docs:
            raise ValueError(
                f"got {len(researcher_ids)} researcher ids for {n_docs} columns"
            )

    matrix = model.matrix.tocsc(copy=True).astype(np.float64)
    norms = np.sqrt(np.asarray(matrix.power(2).sum(axis=0)).ravel())
    zero_columns = tuple(i for i in range(n_docs) if norms[i] == 0.0)
    inverse = np.zeros(n_docs)
    nonzero = norms > 0.0
    inverse[nonzero] = 1.0 / norms[nonzero]
    matrix = (matrix @ sparse.diags(inverse)).tocsc()
    matrix.eliminate_zeros()

    return QueryIndex(
        terms=list(model.vocab.terms),
        term_index=dict(model.vocab.index),
        idf=np.asarray(model.idf, dtype=float).copy(),
        columns=matrix,
        researcher_ids=researcher_ids,
        zero_columns=zero_columns,
    )


def score_query(index: QueryIndex, text: str) -> QueryResult:
    """Score one free-text query against every researcher.

    The query vector is raw stem counts times the stored idf, restricted to
    vocabulary terms, then L2-normalized. Stems outside the vocabulary are
    reported, not scored; a query with no matched stems scores 0 for
    everyone.
    """
    counts: dict[str, int] = {}
    for token in tokenize(text):
        counts[token] = counts.get(token, 0) + 1

    matched: list[str] = []
    unmatched: list[str] = []
    vector = np.zeros(len(index.terms))
    for term in sorted(counts):
        row = index.term_index.get(term)
        if row is None:
            unmatched.append(term)
        else:
            matched.append(term)
            vector[row] = counts[term] * index.idf[row]

    n = len(index.researcher_ids)
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        raw = np.zeros(n)
    else:
        raw = index.columns.T @ (vector / norm)
        raw = np.minimum(np.maximum(np.asarray(raw).ravel(), 0.0), 1.0)

    return QueryResult(
        researcher_ids=index.researcher_ids,
        raw_scores=raw,
        display_scores=rescale_scores(raw),
        matched_terms=tuple(matched),
        unmatched_terms=tuple(unmatched),
    )


def rescale_scores(raw: np.ndarray) -> np.ndarray:
    """Min-max rescale to [0, 1] for display.

    All-equal scores collapse: everything 0 when the common value is 0,
    everything 1 otherwise. Monotone, so ranking by display score matches
    ranking by raw score.
    """
    scores = np.asarray(raw, dtype=float)
    if scores.size == 0:
        return scores.copy()
    low = float(scores.min())
    high = float(scores.max())
    if high == 0.0:
        return np.zeros_like(scores)
    if high == low:
        return np.ones_like(scores)
    return (scores - low) / (high - low)


def top_k(result: QueryResult, k: int) -> list[tuple[str, float]]:
    """Best k researchers as (id, raw score), score descending, ties broken
    by researcher id ascending. Returns fewer when there are fewer."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    order = sorted(
        range(len(result.researcher_ids)),
        key=lambda i: (-result.raw_scores[i], result.researcher_ids[i]),
    )
    return [(result.researcher_ids[i], float(result.raw_scores[i])) for i in order[:k]]
