"""Two-component PCA of the researcher embedding columns.

Columns are L2-normalized first so prolific writers do not dominate the
projection, then mean-centered. With far more terms than researchers the
covariance eigenproblem is solved through the small Gram matrix
G = Xc^T Xc: its eigenvectors v give the term-space components
u = Xc v / sqrt(lambda).

Determinism rules:
* eigensolve is the in-house Jacobi routine (no BLAS variation),
* each component's sign is fixed by making its largest-magnitude entry
  positive, ties resolved toward the lowest term index,
* researchers with empty documents take the centroid of the usable
  projections instead of poisoning the statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput
from .embed import TfidfModel
from .linalg import jacobi_eigh

_RANK_EPS = 1e-12


@dataclass
class PcaModel:
    mean: np.ndarray  # (n_terms,) column mean of the normalized matrix
    components: np.ndarray  # (n_terms, 2), orthonormal columns
    eigenvalues: np.ndarray  # (2,) sample variance along each component
    explained_variance_ratio: np.ndarray  # (2,)
    usable: tuple[int, ...]  # researcher indices that entered the statistics


@dataclass
class MapLayout:
    coords: np.ndarray  # (n_researchers, 2)
    insufficient: tuple[int, ...]  # researchers pinned to the centroid


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    """Flip so the largest-|entry| is positive; first index wins ties."""
    magnitudes = np.abs(vector)
    pivot = int(np.argmax(magnitudes))  # argmax takes the first maximum
    if vector[pivot] < 0:
        return -vector
    return vector


def _orthogonal_complement(existing: list[np.ndarray], dim: int) -> np.ndarray:
    """Deterministic unit vector orthogonal to ``existing``: the first
    standard basis vector whose residual after projection is nonzero."""
    for i in range(dim):
        candidate = np.zeros(dim)
        candidate[i] = 1.0
        for u in existing:
            candidate -= (u @ candidate) * u
        norm = float(np.linalg.norm(candidate))
        if norm > 1e-6:
            return candidate / norm
    raise DegenerateInput("no orthogonal direction left for a map axis")


def _decompose(normalized: np.ndarray):
    """Core fit on an already-normalized term x document matrix: center,
    eigendecompose the document Gram matrix, lift the top two eigenvectors
    back to term space and project. Returns (mean, components, sample
    eigenvalues, explained variance ratio, projected points)."""
    n_terms, n_cols = normalized.shape
    mean = normalized.mean(axis=1)
    centered = normalized - mean[:, None]

    gram = centered.T @ centered
    gram = (gram + gram.T) / 2.0
    eigenvalues, eigenvectors = jacobi_eigh(gram)
    eigenvalues = np.maximum(eigenvalues, 0.0)
    total_variance = float(eigenvalues.sum())

    components = []
    for j in range(2):
        lam = float(eigenvalues[j]) if j < len(eigenvalues) else 0.0
        if lam > _RANK_EPS * max(1.0, float(eigenvalues[0])):
            u = centered @ eigenvectors[:, j]
            u = u / np.linalg.norm(u)  # exactly sqrt(lam) up to roundoff
        else:
            # rank-deficient direction: any unit vector orthogonal to the
            # earlier components carries zero variance; pick one stably
            u = _orthogonal_complement(components, n_terms)
        components.append(_fix_sign(u))
    component_matrix = np.column_stack(components)

    top = np.array([float(eigenvalues[0]), float(eigenvalues[1]) if len(eigenvalues) > 1 else 0.0])
    sample_variance = top / (n_cols - 1)
    ratio = top / total_variance if total_variance > 0.0 else np.zeros(2)

    projected = centered.T @ component_matrix  # (n_cols, 2)
    return mean, component_matrix, sample_variance, ratio, projected


def fit_pca(model: TfidfModel) -> tuple[PcaModel, MapLayout]:
    """Fit the 2D projection and lay out every researcher.

    Researchers whose documents were empty (all-zero columns) cannot be
    normalized; they are excluded from mean, Gram matrix and components,
    then placed at the centroid of the usable projections. Fewer than two
    usable columns leave nothing to spread out, which is DegenerateInput.
    """
    dense = np.asarray(model.matrix.todense(), dtype=float)
    n_terms, n_docs = dense.shape
    if n_terms < 2:
        raise DegenerateInput(f"need at least 2 vocabulary terms for a 2D map, got {n_terms}")

    norms = np.linalg.norm(dense, axis=0)
    usable = [i for i in range(n_docs) if norms[i] > 0.0]
    if len(usable) < 2:
        raise DegenerateInput(
            f"need at least 2 researchers with text, got {len(usable)} of {n_docs}"
        )

    normalized = dense[:, usable] / norms[usable]
    mean, component_matrix, sample_variance, ratio, projected = _decompose(normalized)
    coords = np.zeros((n_docs, 2))
    for row, researcher in enumerate(usable):
        coords[researcher] = projected[row]
    insufficient = [i for i in range(n_docs) if norms[i] == 0.0]
    if insufficient:
        centroid = projected.mean(axis=0)
        for researcher in insufficient:
            coords[researcher] = centroid

    pca_model = PcaModel(
        mean=mean,
        components=component_matrix,
        eigenvalues=sample_variance,
        explained_variance_ratio=ratio,
        usable=tuple(usable),
    )
    return pca_model, MapLayout(coords=coords, insufficient=tuple(insufficient))


def explained_variance(model: PcaModel) -> np.ndarray:
    """Fraction of total variance captured by each of the two axes."""
    return model.explained_variance_ratio.copy()
