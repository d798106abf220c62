"""
Linear Algebra Utilities

Small vector and matrix helpers shared by the root system builders,
the Weyl group closure and the potential module.
"""

from typing import Sequence, Tuple

import numpy as np
from scipy import linalg


def as_vector(values: Sequence[float]) -> np.ndarray:
    """Convert a sequence to a 1-d float64 array"""
    return np.asarray(values, dtype=np.float64).reshape(-1)


def reflection_matrix(alpha: np.ndarray) -> np.ndarray:
    """
    Matrix of the reflection sigma_alpha.

    sigma_alpha = I - 2 alpha alpha^T / (alpha . alpha)

    Args:
        alpha: Nonzero root vector

    Returns:
        Symmetric orthogonal N x N matrix
    """
    alpha = as_vector(alpha)
    return np.eye(alpha.size) - 2.0 * np.outer(alpha, alpha) / alpha.dot(alpha)


def find_row(vector: np.ndarray, rows: np.ndarray, tolerance: float) -> int:
    """
    Index of the row of `rows` matching `vector`, or -1.

    Args:
        vector: Vector to look up
        rows: 2-d array, one candidate per row
        tolerance: Maximum Euclidean distance counted as a match
    """
    if rows.size == 0:
        return -1
    distances = np.linalg.norm(rows - vector[None, :], axis=1)
    index = int(np.argmin(distances))
    return index if distances[index] <= tolerance else -1


def dedupe_rows(rows: np.ndarray, tolerance: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Remove near-duplicate rows, keeping first occurrences.

    Returns:
        Tuple of (unique rows, indices of the kept rows)
    """
    kept = []
    for i, row in enumerate(rows):
        if find_row(row, rows[kept], tolerance) < 0:
            kept.append(i)
    kept_idx = np.asarray(kept, dtype=int)
    return rows[kept_idx], kept_idx


def span_and_complement(
    vectors: np.ndarray,
    ambient_dim: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Orthonormal bases of Span(vectors) and of its orthogonal complement.

    Both bases are returned as rows: span_basis is (d x N) and
    perp_basis is ((N - d) x N).
    """
    if vectors.size == 0:
        return np.zeros((0, ambient_dim)), np.eye(ambient_dim)
    span_basis = linalg.orth(vectors.T).T
    perp_basis = linalg.null_space(vectors).T
    return span_basis, perp_basis


def project(x: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Orthogonal projection of x (or of each row of x) onto the row span of basis"""
    x = np.asarray(x, dtype=np.float64)
    if basis.shape[0] == 0:
        return np.zeros_like(x)
    return (x @ basis.T) @ basis


def matrix_key(matrix: np.ndarray, decimals: int) -> Tuple[float, ...]:
    """Hashable key of a matrix, entries rounded to `decimals` places"""
    # Adding 0.0 folds -0.0 into 0.0 so both hash the same
    return tuple((np.round(matrix, decimals) + 0.0).ravel().tolist())
