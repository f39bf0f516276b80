"""Unambiguous state discrimination via reciprocal-state POVMs.

For linearly independent signals the reciprocal (dual-basis) states allow a
POVM that either names the input signal with certainty or reports an
inconclusive outcome.  With uniform priors, the inconclusive probability is
minimized at 1 - sigma_min^2, where sigma_min is the smallest singular
value of the signal matrix; any larger success weight makes the
inconclusive element indefinite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NonUniformPriorsError, RankDeficientError
from .signals import SignalSet

PRIOR_UNIFORMITY_TOL = 1e-12


@dataclass(frozen=True)
class USDPovm:
    """Unambiguous-discrimination POVM for a signal set.

    ``elements[i]`` is the detector for signal i (rank one, built on the
    i-th reciprocal state); ``inconclusive`` completes the set to the
    identity.  All operators are Hermitian positive semidefinite.
    """

    reciprocal: np.ndarray
    elements: tuple
    inconclusive: np.ndarray
    p_inc: float


def reciprocal_states(s: SignalSet) -> np.ndarray:
    """Dual-basis states: columns satisfy <signal_h | dual_k> = delta_hk.

    Computed from the Moore-Penrose inverse of the signal matrix; the dual
    matrix shares the signal matrix's singular vectors with inverted
    singular values.
    """
    return linalg.pseudo_inverse(s.a).conj().T


def usd_povm(s: SignalSet) -> USDPovm:
    """Optimal unambiguous-discrimination POVM for uniform priors.

    All signals share one inconclusive probability, fixed at
    1 - sigma_min^2 so the inconclusive element stays positive
    semidefinite with its smallest eigenvalue exactly at zero.

    Raises:
        NonUniformPriorsError: the construction assumes equiprobable signals.
        RankDeficientError: signals must be linearly independent.
    """
    n = s.n
    if np.max(np.abs(s.priors - 1.0 / n)) > PRIOR_UNIFORMITY_TOL:
        raise NonUniformPriorsError(
            f"priors {s.priors.tolist()} are not uniform; this POVM requires 1/{n} each"
        )
    sigma = np.linalg.svd(s.a, compute_uv=False)
    smin = float(sigma[-1])
    if smin <= linalg.RANK_TOL:
        raise RankDeficientError(
            f"signal matrix is rank-deficient (min singular value {smin:.3e})"
        )
    recip = reciprocal_states(s)
    success = smin**2
    p_inc = max(0.0, 1.0 - success)
    elements = tuple(
        success * np.outer(recip[:, i], recip[:, i].conj()) for i in range(n)
    )
    inconclusive = np.eye(n, dtype=np.complex128) - sum(elements)
    return USDPovm(
        reciprocal=recip, elements=elements, inconclusive=inconclusive, p_inc=p_inc
    )


def completeness_residual(povm: USDPovm) -> float:
    """Frobenius distance of the element sum (including inconclusive) from identity."""
    n = povm.inconclusive.shape[0]
    total = povm.inconclusive + sum(povm.elements)
    return float(np.linalg.norm(total - np.eye(n), ord="fro"))


def eigenvalue_floor(operator) -> float:
    """Smallest eigenvalue of the Hermitian part (h + h^H)/2 of an operator."""
    h = linalg.as_matrix(operator)
    sym = (h + h.conj().T) / 2.0
    return float(np.linalg.eigvalsh(sym)[0])
