"""Collective-versus-individual measurement comparisons.

Joint measurements on K-fold signal blocks are compared against repeated
individual measurements: projective strategies gain nothing from going
collective (the joint probability matrix factorizes as a Kronecker product)
while unambiguous discrimination strictly loses.  Brute-force searches over
planar rotations and random joint bases back the optimality claims
numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ThetaOutOfRangeError, ValidationError
from .infogain import (
    GainReport,
    _entropy_bits,
    info_gain_usd,
    info_gain_von_neumann,
)
from .signals import SignalSet, collective_lift, two_signal_set
from .usd import usd_povm
from .vonneumann import (
    MeasurementBasis,
    optimal_von_neumann,
    probability_matrix,
    so2_provenance,
)


@dataclass(frozen=True)
class StrategyComparison:
    """Gain reports for projective and USD strategies at one angle.

    ``rows`` holds the projective reports for k = 1..k_max followed by the
    USD reports in the same order.  ``p2_factorization_error`` is the
    Frobenius distance between the k=2 probability matrix and the Kronecker
    square of the k=1 one (0.0 when k_max < 2).
    """

    theta: float
    rows: tuple
    p2_factorization_error: float


def compare_strategies(theta: float, k_max: int = 2) -> StrategyComparison:
    """Evaluate all strategies for the two-signal family at one angle."""
    if k_max < 1:
        raise ValidationError(f"k_max must be >= 1, got {k_max}")
    base = two_signal_set(theta)
    vn_rows: list[GainReport] = []
    usd_rows: list[GainReport] = []
    probability_by_k = {}
    for k in range(1, k_max + 1):
        lifted = collective_lift(base, k)
        basis = optimal_von_neumann(lifted)
        vn_rows.append(info_gain_von_neumann(lifted, basis))
        usd_rows.append(info_gain_usd(usd_povm(lifted), n=lifted.n, k=k))
        if k <= 2:
            probability_by_k[k] = probability_matrix(basis, lifted)
    error = 0.0
    if k_max >= 2:
        p1 = probability_by_k[1]
        error = float(
            np.linalg.norm(probability_by_k[2] - np.kron(p1, p1), ord="fro")
        )
    return StrategyComparison(
        theta=theta, rows=tuple(vn_rows + usd_rows), p2_factorization_error=error
    )


def _gain_batch(bases: np.ndarray, a: np.ndarray, priors: np.ndarray) -> np.ndarray:
    """Average information gain for a stack of orthonormal bases.

    Uses the identity i_av = H(priors) + H(outcomes) - H(joint), which
    needs no explicit posterior and is safe at zero probabilities.
    """
    overlaps = np.einsum("bji,jk->bik", bases.conj(), a)
    p = (overlaps * overlaps.conj()).real
    joint = p * priors[None, None, :]
    q = joint.sum(axis=2)
    h_priors = float(_entropy_bits(priors))
    return h_priors + _entropy_bits(q, axis=1) - _entropy_bits(
        joint.reshape(joint.shape[0], -1), axis=1
    )


def _bell_combinations(frame: np.ndarray) -> np.ndarray:
    """Maximally entangled basis built from pairwise products of a 2-D frame."""
    f0, f1 = frame[:, 0], frame[:, 1]
    pairs = [
        np.kron(f0, f0) + np.kron(f1, f1),
        np.kron(f0, f0) - np.kron(f1, f1),
        np.kron(f0, f1) + np.kron(f1, f0),
        np.kron(f0, f1) - np.kron(f1, f0),
    ]
    return np.column_stack(pairs) / math.sqrt(2.0)


@dataclass(frozen=True)
class SuperpositionBoundResult:
    """Outcome of the random search over joint measurement bases.

    ``max_excess`` is the largest gain improvement any sampled basis
    achieved over the product of individual optimal bases; a value at
    rounding level confirms that superposition (including entangled) bases
    do not help.
    """

    theta_label: str
    reference_gain: float
    max_gain: float
    max_excess: float
    n_random: int
    n_structured: int
    best_is_structured: bool


def superposition_bound_check(
    s: SignalSet, samples: int, seed: int
) -> SuperpositionBoundResult:
    """Search random and entangled joint bases for a gain above the product basis.

    Draws ``samples`` Haar-like random orthonormal 4x4 bases (QR of a
    seeded complex Gaussian matrix) plus maximally entangled bases built in
    the optimal frame and in the standard frame, evaluates every basis on
    the two-fold signal lift, and reports the best gain found relative to
    the product of the individual optimal bases.
    """
    if s.n != 2:
        raise ValidationError(f"superposition search expects a 2-signal base set, got n={s.n}")
    if samples < 1:
        raise ValidationError(f"samples must be >= 1, got {samples}")
    lifted = collective_lift(s, 2)
    b = optimal_von_neumann(s).b
    product_basis = linalg.kron(b, b)
    reference = float(
        _gain_batch(product_basis[None, :, :], lifted.a, lifted.priors)[0]
    )

    rng = np.random.default_rng(seed)
    gauss = rng.standard_normal((samples, 4, 4)) + 1j * rng.standard_normal((samples, 4, 4))
    q, r = np.linalg.qr(gauss)
    diag = np.einsum("bii->bi", r)
    q = q * (diag / np.abs(diag))[:, None, :]

    structured = np.stack(
        [_bell_combinations(b), _bell_combinations(np.eye(2, dtype=np.complex128))]
    )
    random_gains = _gain_batch(q, lifted.a, lifted.priors)
    structured_gains = _gain_batch(structured, lifted.a, lifted.priors)
    best_random = float(np.max(random_gains))
    best_structured = float(np.max(structured_gains))
    max_gain = max(best_random, best_structured)
    return SuperpositionBoundResult(
        theta_label=s.label,
        reference_gain=reference,
        max_gain=max_gain,
        max_excess=max_gain - reference,
        n_random=samples,
        n_structured=structured.shape[0],
        best_is_structured=best_structured >= best_random,
    )


def so2_brute_force(theta: float, grid_points: int) -> tuple[float, float]:
    """Grid search over planar rotations (and their reflections) of the basis.

    Evaluates the average information gain of every basis
    B(phi) = [[cos, -sin], [sin, cos]] for phi on a uniform grid over
    (0, 2*pi], plus each basis composed with a column reflection, and
    returns (phi_star, gain_star) for the best.  Ties within 1e-12 resolve
    to the smallest phi in the rotation family first.
    """
    if not (0.0 < theta <= math.pi / 2):
        raise ThetaOutOfRangeError(f"theta={theta!r} outside (0, pi/2]")
    if grid_points < 8:
        raise ValidationError(f"grid_points must be >= 8, got {grid_points}")
    s = two_signal_set(theta)
    phi = 2.0 * math.pi * np.arange(1, grid_points + 1) / grid_points
    cos, sin = np.cos(phi), np.sin(phi)
    rotations = np.zeros((grid_points, 2, 2), dtype=np.complex128)
    rotations[:, 0, 0] = cos
    rotations[:, 0, 1] = -sin
    rotations[:, 1, 0] = sin
    rotations[:, 1, 1] = cos
    reflections = rotations.copy()
    reflections[:, :, 1] *= -1.0
    bases = np.concatenate([rotations, reflections])
    gains = _gain_batch(bases, s.a, s.priors)
    gain_star = float(np.max(gains))
    idx = int(np.argmax(gains >= gain_star - 1e-12))
    phi_star = float(phi[idx % grid_points])
    return phi_star, gain_star


def so2_basis(phi: float) -> MeasurementBasis:
    """Planar rotation basis tagged with its angle."""
    c, s = math.cos(phi), math.sin(phi)
    b = np.array([[c, -s], [s, c]], dtype=np.complex128)
    return MeasurementBasis(b=b, provenance=so2_provenance(phi))
