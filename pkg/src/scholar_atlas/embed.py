"""Term-by-researcher TFIDF matrix.

Each researcher's document (a TokenBag) becomes one column. Term weight is
raw count times a smoothed inverse document frequency:

    idf(t) = ln((1 + n_docs) / (1 + doc_freq(t))) + 1

The +1 inside numerator and denominator act like one phantom document
containing every term, so idf is finite and positive even for terms in
every document; the trailing +1 keeps ubiquitous terms from washing out to
zero weight. A term appearing in all documents gets idf exactly 1.

The matrix is sparse CSC with explicit zeros pruned; columns follow the
ProfileSet researcher order. Empty documents are legal and stay as all-zero
columns so researcher indices never shift; they are reported by
``empty_columns`` and handled downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import EmptyCorpus, IndexOutOfRange, UnknownTerm
from .textproc import TokenBag


@dataclass
class Vocabulary:
    """Sorted term list with per-term document frequencies."""

    terms: list[str]
    index: dict[str, int]
    doc_freq: list[int]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class TfidfModel:
    vocab: Vocabulary
    idf: np.ndarray  # (n_terms,)
    matrix: sparse.csc_matrix  # n_terms x n_docs
    n_docs: int

    def empty_columns(self) -> list[int]:
        """Indices of all-zero columns (researchers with no usable text)."""
        counts = np.diff(self.matrix.indptr)
        return [i for i in range(self.n_docs) if counts[i] == 0]


def build_vocabulary(bags: list[TokenBag]) -> Vocabulary:
    """Union of all bag terms, lexicographically sorted.

    Raises EmptyCorpus when every bag is empty; a corpus with no terms has
    no matrix, no layout, nothing to do.
    """
    doc_freq: dict[str, int] = {}
    for bag in bags:
        for term in bag.counts:
            doc_freq[term] = doc_freq.get(term, 0) + 1
    if not doc_freq:
        raise EmptyCorpus(f"all {len(bags)} documents are empty")
    terms = sorted(doc_freq)
    return Vocabulary(
        terms=terms,
        index={t: i for i, t in enumerate(terms)},
        doc_freq=[doc_freq[t] for t in terms],
    )


def idf_vector(vocab: Vocabulary, n_docs: int) -> np.ndarray:
    df = np.asarray(vocab.doc_freq, dtype=float)
    return np.log((1.0 + n_docs) / (1.0 + df)) + 1.0


def compute_tfidf(bags: list[TokenBag], vocab: Vocabulary) -> TfidfModel:
    """TFIDF matrix for ``bags`` over ``vocab``.

    Every bag term must be in the vocabulary; a stray term means the caller
    paired bags with the wrong vocabulary, which is UnknownTerm, not data.
    """
    n_docs = len(bags)
    rows: list[int] = []
    cols: list[int] = []
    values: list[float] = []
    idf = idf_vector(vocab, n_docs)
    for col, bag in enumerate(bags):
        for term in sorted(bag.counts):
            row = vocab.index.get(term)
            if row is None:
                raise UnknownTerm(f"document {col} contains '{term}' which is not in the vocabulary")
            weight = bag.counts[term] * idf[row]
            if weight != 0.0:
                rows.append(row)
                cols.append(col)
                values.append(weight)
    matrix = sparse.csc_matrix(
        (values, (rows, cols)), shape=(len(vocab), n_docs), dtype=np.float64
    )
    matrix.sum_duplicates()
    matrix.eliminate_zeros()
    return TfidfModel(vocab=vocab, idf=idf, matrix=matrix, n_docs=n_docs)


def embedding_column(model: TfidfModel, researcher_index: int) -> np.ndarray:
    """Dense copy of one researcher's embedding, shape (n_terms,)."""
    if not 0 <= researcher_index < model.n_docs:
        raise IndexOutOfRange(
            f"researcher index {researcher_index} outside [0, {model.n_docs})"
        )
    return np.asarray(model.matrix[:, [researcher_index]].todense()).ravel().copy()


def term_weight(model: TfidfModel, term: str, researcher_index: int) -> float:
    """Single matrix entry by term name; UnknownTerm for foreign terms."""
    row = model.vocab.index.get(term)
    if row is None:
        raise UnknownTerm(f"'{term}' is not in the vocabulary")
    if not 0 <= researcher_index < model.n_docs:
        raise IndexOutOfRange(
            f"researcher index {researcher_index} outside [0, {model.n_docs})"
        )
    return float(model.matrix[row, researcher_index])
