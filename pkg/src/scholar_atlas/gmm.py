"""Gaussian mixture clustering of the 2D map, fit with EM.

Everything here is deliberately boring and numerically careful:

* full 2x2 covariances, log-space responsibilities (log-sum-exp),
* 1e-6 added to covariance diagonals every M-step so components that
  collapse onto colinear points stay invertible,
* convergence when |delta log-likelihood| < 1e-8 * max(1, |ll|), cap 500
  iterations,
* k-means++ seeding driven by the package's own SplitMix64 stream, so a
  seed pins the whole fit on any platform.

Labels and responsibilities always come from the final E-step, so
``assign`` on the training points reproduces ``model.labels`` exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, InvalidK, NonPositiveDefinite
from .rng import SplitMix64

COVARIANCE_FLOOR = 1e-6
CONVERGENCE_RTOL = 1e-8
MAX_ITERATIONS = 500
DEFAULT_ELLIPSE_RADIUS = 2.0

_LOG_2PI = math.log(2.0 * math.pi)


@dataclass
class GmmComponent:
    weight: float
    mean: np.ndarray  # (2,)
    covariance: np.ndarray  # (2, 2)


@dataclass
class GmmModel:
    k: int
    components: list[GmmComponent]
    responsibilities: np.ndarray  # (n_points, k)
    labels: np.ndarray  # (n_points,) int
    log_likelihood: float
    ll_trajectory: list[float]
    n_iterations: int
    converged: bool


@dataclass(frozen=True)
class Ellipse:
    """Equal-density contour of one component at a fixed Mahalanobis radius."""

    center: tuple[float, float]
    semi_axes: tuple[float, float]  # major first
    angle: float  # radians, in [0, pi)


def _as_points(points) -> np.ndarray:
    data = getattr(points, "coords", points)
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DegenerateInput(f"expected an (n, 2) point array, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise DegenerateInput("points contain non-finite values")
    return arr


def kmeans_pp_centers(points: np.ndarray, k: int, rng: SplitMix64) -> np.ndarray:
    """k-means++ choice of k initial centers: first uniform, each next one
    drawn with probability proportional to squared distance from the
    nearest center already chosen."""
    n = points.shape[0]
    centers = np.empty((k, 2))
    centers[0] = points[rng.randrange(n)]
    sq_dist = np.sum((points - centers[0]) ** 2, axis=1)
    for j in range(1, k):
        total = float(sq_dist.sum())
        if total <= 0.0:
            # all remaining mass sits on already-chosen points
            centers[j] = points[rng.randrange(n)]
        else:
            threshold = rng.next_double() * total
            idx = int(np.searchsorted(np.cumsum(sq_dist), threshold, side="right"))
            idx = min(idx, n - 1)
            centers[j] = points[idx]
        sq_dist = np.minimum(sq_dist, np.sum((points - centers[j]) ** 2, axis=1))
    return centers


def _log_density(points: np.ndarray, mean: np.ndarray, cov: np.ndarray) -> np.ndarray:
    """Log N(x | mean, cov) for each point, 2D closed form."""
    a = cov[0, 0]
    b = cov[0, 1]
    c = cov[1, 1]
    det = a * c - b * b
    if det <= 0.0 or a <= 0.0 or c <= 0.0:
        raise NonPositiveDefinite(f"covariance {cov.tolist()} is not positive definite")
    dx = points[:, 0] - mean[0]
    dy = points[:, 1] - mean[1]
    quad = (c * dx * dx - 2.0 * b * dx * dy + a * dy * dy) / det
    return -_LOG_2PI - 0.5 * math.log(det) - 0.5 * quad


def _log_joint(points: np.ndarray, components: list[GmmComponent]) -> np.ndarray:
    """(n, k) matrix of log(weight_j) + log density_j(x_i)."""
    columns = []
    for comp in components:
        log_w = math.log(comp.weight) if comp.weight > 0.0 else -math.inf
        columns.append(log_w + _log_density(points, comp.mean, comp.covariance))
    return np.column_stack(columns)


def _logsumexp_rows(matrix: np.ndarray) -> np.ndarray:
    peak = matrix.max(axis=1)
    safe_peak = np.where(np.isfinite(peak), peak, 0.0)
    total = np.exp(matrix - safe_peak[:, None]).sum(axis=1)
    return safe_peak + np.log(total)


def _initial_components(points: np.ndarray, k: int, rng: SplitMix64) -> list[GmmComponent]:
    centers = kmeans_pp_centers(points, k, rng)
    spread = np.cov(points.T, bias=True) if points.shape[0] > 1 else np.eye(2)
    spread = np.atleast_2d(np.asarray(spread, dtype=float))
    if spread.shape != (2, 2):
        spread = np.eye(2) * float(spread)
    base = spread + COVARIANCE_FLOOR * np.eye(2)
    return [
        GmmComponent(weight=1.0 / k, mean=centers[j].copy(), covariance=base.copy())
        for j in range(k)
    ]


def fit_gmm(points, k: int, seed: int, verbose: bool = False) -> GmmModel:
    """Fit a k-component mixture to 2D points with EM.

    ``points`` may be a MapLayout or an (n, 2) array. ``k`` must be in
    [1, n]. The log-likelihood trajectory is recorded per E-step and is
    non-decreasing up to 1e-9 slack; the final labels come from the final
    E-step so they are consistent with the returned parameters.
    """
    data = _as_points(points)
    n = data.shape[0]
    if not isinstance(k, int) or isinstance(k, bool):
        raise InvalidK(f"k must be an integer, got {k!r}")
    if k < 1 or k > n:
        raise InvalidK(f"k={k} outside [1, {n}] for {n} points")
    n_distinct = np.unique(data, axis=0).shape[0]
    if n_distinct < k:
        raise DegenerateInput(f"only {n_distinct} distinct points for k={k} components")

    rng = SplitMix64(seed)
    components = _initial_components(data, k, rng)

    trajectory: list[float] = []
    responsibilities = np.full((n, k), 1.0 / k)
    log_likelihood = -math.inf
    converged = False
    n_iterations = 0

    for iteration in range(1, MAX_ITERATIONS + 1):
        n_iterations = iteration
        joint = _log_joint(data, components)
        row_ll = _logsumexp_rows(joint)
        responsibilities = np.exp(joint - row_ll[:, None])
        new_ll = float(row_ll.sum())
        trajectory.append(new_ll)
        if verbose:
            print(f"iter={iteration} ll={new_ll:.12g}")
        if iteration > 1:
            delta = abs(new_ll - log_likelihood)
            if delta < CONVERGENCE_RTOL * max(1.0, abs(log_likelihood)):
                log_likelihood = new_ll
                converged = True
                break
        log_likelihood = new_ll
        if iteration == MAX_ITERATIONS:
            break

        # M-step
        mass = responsibilities.sum(axis=0)
        safe_mass = np.maximum(mass, 1e-300)
        weights = mass / n
        for j in range(k):
            mean = responsibilities[:, j] @ data / safe_mass[j]
            dx = data - mean
            cov = (responsibilities[:, j][:, None] * dx).T @ dx / safe_mass[j]
            cov = (cov + cov.T) / 2.0 + COVARIANCE_FLOOR * np.eye(2)
            components[j] = GmmComponent(weight=float(weights[j]), mean=mean, covariance=cov)

    labels = np.asarray(np.argmax(responsibilities, axis=1), dtype=int)
    return GmmModel(
        k=k,
        components=components,
        responsibilities=responsibilities,
        labels=labels,
        log_likelihood=log_likelihood,
        ll_trajectory=trajectory,
        n_iterations=n_iterations,
        converged=converged,
    )


def assign(model: GmmModel, points) -> tuple[np.ndarray, np.ndarray]:
    """Labels and responsibilities for ``points`` under a fitted model.

    Running this on the training points reproduces model.labels and
    model.responsibilities exactly: it is the same E-step at the same
    parameters.
    """
    data = _as_points(points)
    joint = _log_joint(data, model.components)
    row_ll = _logsumexp_rows(joint)
    responsibilities = np.exp(joint - row_ll[:, None])
    labels = np.asarray(np.argmax(responsibilities, axis=1), dtype=int)
    return labels, responsibilities


def ellipse_params(component: GmmComponent, radius: float = DEFAULT_ELLIPSE_RADIUS) -> Ellipse:
    """Axis lengths and orientation of a component's density contour.

    The contour at Mahalanobis radius r is an ellipse whose semi-axes are
    r * sqrt(eigenvalue) along each covariance eigenvector. The angle is
    the major axis direction folded into [0, pi): an ellipse is symmetric
    under point reflection, so direction theta and theta+pi are the same
    ellipse.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    cov = np.asarray(component.covariance, dtype=float)
    if cov.shape != (2, 2) or not np.isfinite(cov).all():
        raise NonPositiveDefinite(f"covariance {cov.tolist()} is not a finite 2x2 matrix")
    if abs(cov[0, 1] - cov[1, 0]) > 1e-9 * max(1.0, float(np.abs(cov).max())):
        raise NonPositiveDefinite(f"covariance {cov.tolist()} is not symmetric")

    a = float(cov[0, 0])
    b = float((cov[0, 1] + cov[1, 0]) / 2.0)
    c = float(cov[1, 1])
    half_trace = (a + c) / 2.0
    # eigenvalues of [[a, b], [b, c]] in closed form
    disc = math.hypot((a - c) / 2.0, b)
    lam_major = half_trace + disc
    lam_minor = half_trace - disc
    if lam_minor <= 0.0:
        raise NonPositiveDefinite(
            f"covariance {cov.tolist()} has non-positive eigenvalue {lam_minor}"
        )

    if b == 0.0:
        angle = 0.0 if a >= c else math.pi / 2.0
    else:
        # eigenvector for lam_major is (b, lam_major - a)
        angle = math.atan2(lam_major - a, b)
        if angle < 0.0:
            angle += math.pi
        if angle >= math.pi:
            angle -= math.pi
    return Ellipse(
        center=(float(component.mean[0]), float(component.mean[1])),
        semi_axes=(radius * math.sqrt(lam_major), radius * math.sqrt(lam_minor)),
        angle=angle + 0.0,  # normalizes -0.0
    )
