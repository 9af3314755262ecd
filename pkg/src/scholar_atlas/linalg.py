"""Symmetric eigendecomposition via cyclic Jacobi rotations.

Authored here rather than delegated to LAPACK because the projection layout
must be reproducible bit-for-bit across BLAS builds; LAPACK's eigenvector
signs and degenerate-subspace bases vary by backend. Plain cyclic Jacobi is
deterministic given the input matrix, and the Gram matrices this package
feeds it (a few hundred rows at most) converge in a handful of sweeps.

Verified against numpy.linalg.eigh in the test suite; the two routes stay
independent.
"""

import math

import numpy as np


def jacobi_eigh(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigenvalues and eigenvectors of a real symmetric matrix.

    Returns (eigenvalues, eigenvectors) with eigenvalues sorted descending
    and eigenvectors as the corresponding columns. Sorting ties keep the
    rotation order's result (stable argsort), so output is deterministic.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-9 * max(1.0, float(np.abs(a).max(initial=0.0)))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    vectors = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), vectors

    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n), vectors

    for _ in range(max_sweeps):
        off = float(np.sqrt(np.sum(np.square(a - np.diag(a.diagonal())))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-20 * scale:
                    continue
                # Rutishauser's smaller-angle rotation
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0

                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q

    eigenvalues = a.diagonal().copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], vectors[:, order]
