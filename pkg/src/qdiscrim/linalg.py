"""Dense complex linear-algebra kernel.

Every function takes and returns plain numpy arrays (complex128), never
mutates its inputs, and is safe for unrestricted concurrent use.  Matrices
are validated on entry: two-dimensional, at least 1x1, all entries finite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    InvalidPermutationError,
    NonSquareError,
    NumericalFailureError,
    RankDeficientError,
    ValidationError,
)

#: Hard cap on any matrix dimension produced by ``kron`` (rows or columns).
DEFAULT_DIM_CAP = 4096

#: Singular values at or below this threshold count as numerical rank loss.
RANK_TOL = 1e-9

#: Adjacent singular values closer than this are treated as degenerate.
DEGENERACY_GAP = 1e-8


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a 2-D complex128 array, rejecting NaN/Inf entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ValidationError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix entries must be finite (no NaN/Inf)")
    return a


@dataclass(frozen=True)
class SVDFactors:
    """Factorization m = u @ diag(sigma) @ v.conj().T with sigma descending.

    ``degenerate`` is set when two singular values are closer than
    ``DEGENERACY_GAP``; the individual u/v columns are then not uniquely
    determined (though the product ``u @ v.conj().T`` still is, for full
    rank).
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    degenerate: bool = False

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.sigma) @ self.v.conj().T


def svd(m) -> SVDFactors:
    """Singular value decomposition of a square matrix.

    The phase ambiguity is fixed deterministically: each column of ``u`` is
    rotated so that its first entry of largest modulus is real non-negative,
    and the matching column of ``v`` receives the same phase (leaving the
    reconstruction unchanged).

    Raises:
        NonSquareError: for rectangular input.
        NumericalFailureError: if the underlying iteration does not converge.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise NonSquareError(f"expected a square matrix, got {a.shape}")
    try:
        u, sigma, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"SVD did not converge: {exc}") from exc
    v = vh.conj().T
    # Same phase on both factor columns cancels in u @ diag(sigma) @ v^H.
    for k in range(n):
        col = u[:, k]
        pivot = col[int(np.argmax(np.abs(col)))]
        mag = abs(pivot)
        if mag > 0.0:
            phase = pivot.conjugate() / mag
            u[:, k] *= phase
            v[:, k] *= phase
    degenerate = n > 1 and bool(np.min(sigma[:-1] - sigma[1:]) < DEGENERACY_GAP)
    return SVDFactors(u=u, sigma=sigma, v=v, degenerate=degenerate)


def kron(x, y, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Kronecker product; block (i, j) of the result equals x[i, j] * y.

    Raises DimensionOverflowError when the result would exceed ``dim_cap``
    rows or columns.
    """
    a = as_matrix(x)
    b = as_matrix(y)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > dim_cap:
        raise DimensionOverflowError(
            f"Kronecker result {rows}x{cols} overflows the dimension cap {dim_cap}"
        )
    return np.kron(a, b)


def hadamard(x, y) -> np.ndarray:
    """Entrywise product of two same-shaped matrices."""
    a = as_matrix(x)
    b = as_matrix(y)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return a * b


def pseudo_inverse(m) -> np.ndarray:
    """Moore-Penrose inverse of a square full-rank matrix, via SVD.

    Computed as v @ diag(1/sigma) @ u^H, so the result satisfies
    ``pseudo_inverse(m) @ m == identity`` up to rounding.

    Raises RankDeficientError when the smallest singular value is at or
    below ``RANK_TOL``.
    """
    f = svd(m)
    smin = float(f.sigma[-1])
    if smin <= RANK_TOL:
        raise RankDeficientError(
            f"matrix is rank-deficient (min singular value {smin:.3e} <= {RANK_TOL:.0e})"
        )
    return (f.v / f.sigma) @ f.u.conj().T


def permute_columns(m, perm) -> np.ndarray:
    """Reorder columns: result[:, j] = m[:, perm[j]].

    ``perm`` must be a bijection on the column indices.
    """
    a = as_matrix(m)
    p = np.asarray(perm)
    n = a.shape[1]
    if p.shape != (n,) or not np.issubdtype(p.dtype, np.integer):
        raise InvalidPermutationError(
            f"permutation must be {n} integer indices, got {perm!r}"
        )
    if sorted(p.tolist()) != list(range(n)):
        raise InvalidPermutationError(f"{p.tolist()} is not a bijection on 0..{n - 1}")
    return a[:, p]


def inverse_permutation(perm) -> np.ndarray:
    """Inverse of a permutation given as an index sequence."""
    p = np.asarray(perm)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size)
    return inv
