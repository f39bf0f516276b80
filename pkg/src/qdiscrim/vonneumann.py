"""Optimal projective measurements and stochastic-matrix machinery.

The information-optimal orthonormal basis for a full-rank signal matrix is
its nearest orthonormal matrix in the least-squares sense, i.e. the unitary
polar factor u @ v^H obtained from the SVD.  The transition-probability
matrix it induces is doubly stochastic; for bases that do not achieve this,
alternating row/column normalization (RAS) scales any strictly positive
probability matrix to a doubly stochastic limit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatchError,
    NonSquareError,
    RankDeficientError,
    ValidationError,
)
from .signals import SignalSet

ORTHONORMALITY_TOL = 1e-10

#: Default stopping tolerance and iteration budget for ``sinkhorn_scale``.
SINKHORN_TOL = 1e-8
SINKHORN_MAX_ITER = 10000

PROVENANCE_OPTIMAL = "optimal"
PROVENANCE_PRETTY_GOOD = "pretty-good"
PROVENANCE_USER = "user"


def so2_provenance(phi: float) -> str:
    """Provenance tag for a basis drawn from the planar-rotation family."""
    return f"so2(phi={phi:.12g})"


@dataclass(frozen=True)
class MeasurementBasis:
    """Orthonormal measurement basis (columns are the projector axes).

    ``degenerate`` is propagated from the SVD of the signal matrix the
    basis was derived from: when singular values are (numerically)
    repeated, the optimality certificate of a derived basis is weakened to
    a warning.
    """

    b: np.ndarray
    provenance: str = PROVENANCE_USER
    degenerate: bool = False

    def __post_init__(self):
        b = linalg.as_matrix(self.b)
        if b.shape[0] != b.shape[1]:
            raise NonSquareError(f"measurement basis must be square, got {b.shape}")
        residual = float(
            np.linalg.norm(b.conj().T @ b - np.eye(b.shape[1]), ord="fro")
        )
        if residual > ORTHONORMALITY_TOL:
            raise ValidationError(
                f"basis columns are not orthonormal (residual {residual:.3e})"
            )
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.b.shape[1]


def optimal_von_neumann(s: SignalSet) -> MeasurementBasis:
    """Information-optimal projective measurement for a full-rank signal set.

    Returns the nearest orthonormal matrix to the signal matrix, u @ v^H
    from its SVD.  The product b^H @ a is then Hermitian and the induced
    probability matrix doubly stochastic.  For a signal matrix with
    repeated singular values the returned basis carries ``degenerate=True``;
    the matrix itself is still well defined at full rank.
    """
    f = linalg.svd(s.a)
    smin = float(f.sigma[-1])
    if smin <= linalg.RANK_TOL:
        raise RankDeficientError(
            f"signal matrix is rank-deficient (min singular value {smin:.3e})"
        )
    b = f.u @ f.v.conj().T
    return MeasurementBasis(b=b, provenance=PROVENANCE_OPTIMAL, degenerate=f.degenerate)


def probability_matrix(basis: MeasurementBasis, s: SignalSet) -> np.ndarray:
    """Transition probabilities P[mu, i] = |<basis_mu | signal_i>|^2.

    Rows index measurement outcomes, columns index input signals; every
    column sums to 1 by completeness of the basis.
    """
    if basis.b.shape != s.a.shape:
        raise DimensionMismatchError(
            f"basis is {basis.b.shape}, signal matrix is {s.a.shape}"
        )
    overlaps = basis.b.conj().T @ s.a
    p = linalg.hadamard(overlaps, np.conj(overlaps)).real
    colsum_err = float(np.max(np.abs(p.sum(axis=0) - 1.0)))
    if colsum_err > ORTHONORMALITY_TOL:
        raise ValidationError(
            f"probability columns do not sum to 1 (max deviation {colsum_err:.3e})"
        )
    return p


def is_doubly_stochastic(p, tol: float) -> bool:
    """True iff every row sum and column sum of ``p`` is within ``tol`` of 1."""
    if tol <= 0:
        raise ValidationError(f"tol must be positive, got {tol!r}")
    a = np.asarray(p, dtype=np.float64)
    return bool(
        np.max(np.abs(a.sum(axis=0) - 1.0)) <= tol
        and np.max(np.abs(a.sum(axis=1) - 1.0)) <= tol
    )


@dataclass(frozen=True)
class SinkhornResult:
    """Outcome of RAS scaling: t = diag(d1) @ input @ diag(d2).

    When ``converged`` is false the iteration budget ran out before the row
    and column sums reached the tolerance; ``t`` then holds the last
    iterate.  Non-convergence on a zero-free matrix cannot happen; with
    zero entries it signals that the matrix is not scalable.
    """

    t: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    iterations: int
    converged: bool


def sinkhorn_scale(
    p, tol: float = SINKHORN_TOL, max_iter: int = SINKHORN_MAX_ITER
) -> SinkhornResult:
    """Scale a non-negative square matrix to doubly stochastic form by RAS.

    Alternates row and column normalization, accumulating the diagonal
    scalings.  Requires a square matrix with non-negative entries and no
    all-zero row or column.  Convergence is declared when all row and
    column sums of the scaled matrix lie within ``tol`` of 1.
    """
    x = np.asarray(p, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {x.shape}")
    if np.any(x < 0.0) or not np.all(np.isfinite(x)):
        raise ValidationError("entries must be finite and non-negative")
    if np.any(x.sum(axis=1) == 0.0) or np.any(x.sum(axis=0) == 0.0):
        raise ValidationError("matrix has an all-zero row or column")
    n = x.shape[0]
    d1 = np.ones(n)
    d2 = np.ones(n)
    iterations = 0
    while True:
        t = d1[:, None] * x * d2[None, :]
        deviation = max(
            float(np.max(np.abs(t.sum(axis=1) - 1.0))),
            float(np.max(np.abs(t.sum(axis=0) - 1.0))),
        )
        if deviation < tol:
            return SinkhornResult(t=t, d1=d1, d2=d2, iterations=iterations, converged=True)
        if iterations >= max_iter:
            return SinkhornResult(t=t, d1=d1, d2=d2, iterations=iterations, converged=False)
        # Row pass then column pass; zero sums cannot occur because every
        # row/column has a positive entry and the scalings stay positive.
        d1 = 1.0 / (x @ d2)
        d2 = 1.0 / (x.T @ d1)
        iterations += 1


def pretty_good_measurement(s: SignalSet) -> MeasurementBasis:
    """Square-root measurement M = A @ (A^H A)^(-1/2).

    The inverse square root is taken through the eigendecomposition of the
    Gram matrix, a route independent of :func:`optimal_von_neumann`; at
    full rank the two constructions agree to rounding error.
    """
    a = s.a
    gram = a.conj().T @ a
    evals, evecs = np.linalg.eigh(gram)
    if float(evals[0]) <= linalg.RANK_TOL**2:
        raise RankDeficientError(
            f"signal Gram matrix is rank-deficient (min eigenvalue {float(evals[0]):.3e})"
        )
    inv_sqrt = (evecs / np.sqrt(evals)) @ evecs.conj().T
    m = a @ inv_sqrt
    sigma = np.sqrt(evals)[::-1]
    degenerate = sigma.size > 1 and bool(
        np.min(sigma[:-1] - sigma[1:]) < linalg.DEGENERACY_GAP
    )
    return MeasurementBasis(b=m, provenance=PROVENANCE_PRETTY_GOOD, degenerate=degenerate)
