"""Entropy accounting for measurement strategies.

The average information gain of a strategy is the Shannon entropy of the
signal priors minus the outcome-averaged entropy of the Bayesian posterior.
All entropies are in bits.  The convention 0*log(0) = 0 applies throughout;
probabilities below 1e-300 are clamped to zero before the logarithm.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import BadPriorsError, DimensionMismatchError
from .signals import SignalSet
from .usd import USDPovm
from .vonneumann import (
    MeasurementBasis,
    PROVENANCE_OPTIMAL,
    PROVENANCE_PRETTY_GOOD,
    probability_matrix,
)

PRIOR_SUM_TOL = 1e-12
_LOG_CLAMP = 1e-300

STRATEGY_VN_OPTIMAL = "vn-optimal"
STRATEGY_VN_USER = "vn-user"
STRATEGY_USD = "usd"


@dataclass(frozen=True)
class GainReport:
    """Per-strategy information accounting.

    ``i_av`` equals ``h_in - h_fin`` by construction; ``k`` is the number
    of elementary signals covered by one measurement, so
    ``i_av_per_signal`` is the per-signal figure used when comparing
    individual against collective strategies.  ``p_inc`` is populated for
    unambiguous-discrimination strategies only.
    """

    strategy: str
    k: int
    i_av: float
    i_av_per_signal: float
    p_inc: float | None
    h_in: float
    h_fin: float


def _entropy_bits(dist: np.ndarray, axis=None) -> np.ndarray:
    """Shannon entropy in bits with the 0*log(0) = 0 convention."""
    x = np.where(dist > _LOG_CLAMP, dist, 1.0)
    return -np.sum(np.where(dist > _LOG_CLAMP, dist * np.log2(x), 0.0), axis=axis)


def _check_priors(priors) -> np.ndarray:
    r = np.asarray(priors, dtype=np.float64)
    if r.ndim != 1 or r.size == 0:
        raise BadPriorsError(f"priors must be a non-empty vector, got shape {r.shape}")
    if np.any(r < 0.0) or not np.all(np.isfinite(r)):
        raise BadPriorsError("priors must be finite and non-negative")
    if abs(float(r.sum()) - 1.0) > PRIOR_SUM_TOL:
        raise BadPriorsError(f"priors sum to {float(r.sum())!r}, expected 1")
    return r


def initial_entropy(priors) -> float:
    """Entropy of the signal priors in bits; log2(N) for uniform priors."""
    return float(_entropy_bits(_check_priors(priors)))


def outcome_probabilities(p, priors) -> np.ndarray:
    """Total probability of each outcome: q[mu] = sum_j P[mu, j] * r[j]."""
    a = np.asarray(p, dtype=np.float64)
    r = _check_priors(priors)
    if a.ndim != 2 or a.shape[1] != r.size:
        raise DimensionMismatchError(
            f"probability matrix {a.shape} incompatible with {r.size} priors"
        )
    return a @ r


def posterior_matrix(p, priors) -> np.ndarray:
    """Bayesian posterior Q[i, mu] = P[mu, i] * r[i] / q[mu].

    Outcomes with zero total probability get an all-zero posterior column;
    they carry no weight in the final average and are flagged with a
    warning.
    """
    a = np.asarray(p, dtype=np.float64)
    r = _check_priors(priors)
    q = outcome_probabilities(a, r)
    zero = q <= 0.0
    if np.any(zero):
        warnings.warn(
            f"{int(zero.sum())} outcome(s) have zero probability; "
            "their posterior columns are zeroed",
            RuntimeWarning,
            stacklevel=2,
        )
    q_safe = np.where(zero, 1.0, q)
    posterior = (a.T * r[:, None]) / q_safe[None, :]
    posterior[:, zero] = 0.0
    return posterior


def average_final_entropy(q, posterior) -> float:
    """Outcome-weighted entropy of the posterior columns, in bits."""
    qv = np.asarray(q, dtype=np.float64)
    pm = np.asarray(posterior, dtype=np.float64)
    if pm.ndim != 2 or pm.shape[1] != qv.size:
        raise DimensionMismatchError(
            f"posterior {pm.shape} incompatible with {qv.size} outcomes"
        )
    return float(np.sum(qv * _entropy_bits(pm, axis=0)))


def info_gain_von_neumann(s: SignalSet, basis: MeasurementBasis) -> GainReport:
    """Average information gain of a projective measurement on a signal set."""
    p = probability_matrix(basis, s)
    h_in = initial_entropy(s.priors)
    q = outcome_probabilities(p, s.priors)
    posterior = posterior_matrix(p, s.priors)
    h_fin = average_final_entropy(q, posterior)
    i_av = h_in - h_fin
    strategy = (
        STRATEGY_VN_OPTIMAL
        if basis.provenance in (PROVENANCE_OPTIMAL, PROVENANCE_PRETTY_GOOD)
        else STRATEGY_VN_USER
    )
    return GainReport(
        strategy=strategy,
        k=s.k,
        i_av=i_av,
        i_av_per_signal=i_av / s.k,
        p_inc=None,
        h_in=h_in,
        h_fin=h_fin,
    )


def info_gain_usd(povm: USDPovm, n: int, k: int = 1) -> GainReport:
    """Average information gain of an unambiguous-discrimination POVM.

    For uniform priors over ``n`` signals every conclusive outcome carries
    zero posterior entropy, so the final entropy is p_inc * log2(n) and the
    gain (1 - p_inc) * log2(n).
    """
    h_in = math.log2(n)
    h_fin = povm.p_inc * h_in
    i_av = h_in - h_fin
    return GainReport(
        strategy=STRATEGY_USD,
        k=k,
        i_av=i_av,
        i_av_per_signal=i_av / k,
        p_inc=povm.p_inc,
        h_in=h_in,
        h_fin=h_fin,
    )


@dataclass(frozen=True)
class EntropyProbeResult:
    """Diagnostics from random sampling of posterior distributions.

    The probe always evaluates the uniform distribution and all vertex
    distributions in addition to ``trials`` random draws, so
    ``max_entropy`` attains the log2(n) bound exactly and
    ``vertex_entropy_max`` should be exactly zero.
    """

    n: int
    trials: int
    entropy_bound: float
    max_entropy: float
    argmax_distance_from_uniform: float
    vertex_entropy_max: float
    bound_violations: int


def entropy_extrema_probe(n: int, trials: int, seed: int = 0) -> EntropyProbeResult:
    """Sample posterior distributions and locate the entropy extrema.

    Draws ``trials`` points uniformly from the probability simplex (plus
    the uniform point and the n vertices), computes their entropies, and
    reports the maximum, its distance from the uniform distribution, and
    any violations of the log2(n) bound beyond 1e-9.
    """
    if n < 2:
        raise BadPriorsError(f"need at least 2 outcomes, got {n}")
    rng = np.random.default_rng(seed)
    samples = rng.dirichlet(np.ones(n), size=trials) if trials > 0 else np.empty((0, n))
    uniform = np.full((1, n), 1.0 / n)
    vertices = np.eye(n)
    points = np.vstack([samples, uniform, vertices])
    entropies = _entropy_bits(points, axis=1)
    bound = math.log2(n)
    best = int(np.argmax(entropies))
    return EntropyProbeResult(
        n=n,
        trials=trials,
        entropy_bound=bound,
        max_entropy=float(entropies[best]),
        argmax_distance_from_uniform=float(np.linalg.norm(points[best] - 1.0 / n)),
        vertex_entropy_max=float(np.max(np.abs(entropies[-n:]))),
        bound_violations=int(np.sum(entropies > bound + 1e-9)),
    )
