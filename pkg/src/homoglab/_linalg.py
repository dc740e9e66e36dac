"""Small linear-algebra helpers shared by the geometry modules."""

from __future__ import annotations

import numpy as np


def null_space(A: np.ndarray, rel_cutoff: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (columns) of the null space of A.

    Singular values below ``rel_cutoff`` times the largest one are treated as
    zero.  A zero (or empty) matrix yields the full coordinate space.
    """
    A = np.atleast_2d(np.asarray(A))
    n = A.shape[1]
    if A.size == 0:
        return np.eye(n)
    u, s, vh = np.linalg.svd(A)
    if s.size == 0 or s[0] == 0.0:
        return np.eye(n)
    rank = int(np.sum(s > rel_cutoff * s[0]))
    return vh[rank:].conj().T


def rank_rel(A: np.ndarray, rel_cutoff: float = 1e-8) -> int:
    """Numerical rank with a cutoff relative to the largest singular value."""
    A = np.atleast_2d(np.asarray(A))
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_cutoff * s[0]))


def trace_inner(X: np.ndarray, Y: np.ndarray) -> float:
    """Ad-invariant inner product -tr(XY); real for skew-hermitian arguments."""
    return float(-np.trace(X @ Y).real)


def trace_norm(X: np.ndarray) -> float:
    v = trace_inner(X, X)
    # roundoff can push a zero slightly negative
    return float(np.sqrt(max(v, 0.0)))


def gram_schmidt(vectors, inner, tol: float = 1e-10):
    """Orthonormalize a list of algebra elements w.r.t. ``inner``, dropping
    elements that are dependent on the preceding ones."""
    basis = []
    for v in vectors:
        w = np.array(v, copy=True)
        for b in basis:
            w = w - inner(b, w) * b
        # repeat once for numerical stability
        for b in basis:
            w = w - inner(b, w) * b
        nrm = np.sqrt(max(inner(w, w), 0.0))
        if nrm > tol:
            basis.append(w / nrm)
    return basis


def coordinates(X: np.ndarray, basis, inner) -> np.ndarray:
    """Coordinates of X in an orthonormal basis."""
    return np.array([inner(b, X) for b in basis])


def from_coordinates(coords, basis) -> np.ndarray:
    out = np.zeros_like(basis[0], dtype=np.result_type(basis[0], float))
    for c, b in zip(coords, basis):
        out = out + c * b
    return out
