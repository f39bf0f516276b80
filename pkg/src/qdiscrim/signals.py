"""Construction and validation of signal sets.

A signal set is a square matrix whose columns are unit-norm, linearly
independent state vectors, together with prior probabilities for each
signal.  The two-signal family parametrized by a separation angle and the
K-fold collective lift (Kronecker power) are provided as constructors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    BadPriorsError,
    DimensionOverflowError,
    LinearlyDependentError,
    NotNormalizedError,
    NotSquareError,
    ThetaOutOfRangeError,
    ValidationError,
)

UNIT_NORM_TOL = 1e-10
PRIOR_SUM_TOL = 1e-12


@dataclass(frozen=True)
class SignalSet:
    """Square matrix of signal-state columns plus prior probabilities.

    ``k`` records how many elementary signals each column encodes: 1 for a
    base set, multiplied by each application of :func:`collective_lift`.

    Construction validates shape, finiteness, unit column norms and the
    priors; linear independence is checked by :func:`from_columns` (an SVD)
    and is inherited by lifts.
    """

    a: np.ndarray
    priors: np.ndarray
    label: str = ""
    k: int = 1

    def __post_init__(self):
        a = linalg.as_matrix(self.a)
        if a.shape[0] != a.shape[1]:
            raise NotSquareError(
                f"signal count {a.shape[1]} != dimension {a.shape[0]}"
            )
        norms = np.linalg.norm(a, axis=0)
        worst = float(np.max(np.abs(norms - 1.0)))
        if worst > UNIT_NORM_TOL:
            raise NotNormalizedError(
                f"column norms deviate from 1 by up to {worst:.3e}"
            )
        priors = np.asarray(self.priors, dtype=np.float64)
        if priors.shape != (a.shape[1],):
            raise BadPriorsError(
                f"expected {a.shape[1]} priors, got shape {priors.shape}"
            )
        if np.any(priors < 0.0):
            raise BadPriorsError("priors must be non-negative")
        if abs(float(priors.sum()) - 1.0) > PRIOR_SUM_TOL:
            raise BadPriorsError(f"priors sum to {priors.sum()!r}, expected 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "priors", priors)

    @property
    def n(self) -> int:
        """Number of signal states."""
        return self.a.shape[1]


def uniform_priors(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def from_columns(columns, priors=None, label: str = "") -> SignalSet:
    """Build a signal set from state vectors, validating all invariants.

    Priors default to uniform.  The column count must equal the vector
    dimension, and the columns must be numerically linearly independent.
    """
    a = np.column_stack([np.asarray(c, dtype=np.complex128) for c in columns])
    if a.shape[0] != a.shape[1]:
        raise NotSquareError(
            f"got {a.shape[1]} vectors of dimension {a.shape[0]}; need a square set"
        )
    if priors is None:
        priors = uniform_priors(a.shape[1])
    s = SignalSet(a=a, priors=priors, label=label)
    smin = float(np.linalg.svd(s.a, compute_uv=False)[-1])
    if smin <= linalg.RANK_TOL:
        raise LinearlyDependentError(
            f"columns are linearly dependent (min singular value {smin:.3e})"
        )
    return s


def two_signal_set(theta: float) -> SignalSet:
    """Two equiprobable states separated by angle ``theta`` in (0, pi/2].

    The states are (cos(theta/2), sin(theta/2)) and its mirror image with
    the second component negated, so their inner product is cos(theta).
    """
    if not (0.0 < theta <= math.pi / 2):
        raise ThetaOutOfRangeError(f"theta={theta!r} outside (0, pi/2]")
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    a = np.array([[c, c], [s, -s]], dtype=np.complex128)
    return SignalSet(a=a, priors=uniform_priors(2), label=f"two-signal(theta={theta:.12g})")


def collective_lift(s: SignalSet, k: int, dim_cap: int = linalg.DEFAULT_DIM_CAP) -> SignalSet:
    """K-fold joint signal set: the Kronecker power of states and priors.

    Columns are ordered lexicographically by the index tuple (i1, ..., ik),
    matching the Kronecker convention, so the lifted matrix is literally the
    k-fold Kronecker power of ``s.a``.  Linear independence is inherited
    (the lifted singular values are products of the base ones).
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if s.n**k > dim_cap:
        raise DimensionOverflowError(
            f"lifted dimension {s.n}^{k} exceeds the cap {dim_cap}"
        )
    if k == 1:
        return s
    a = s.a
    priors = s.priors
    for _ in range(k - 1):
        a = linalg.kron(a, s.a, dim_cap=dim_cap)
        priors = np.kron(priors, s.priors)
    label = f"{s.label} (k={k})" if s.label else f"(k={k})"
    return SignalSet(a=a, priors=priors, label=label, k=s.k * k)


def from_json(doc: dict) -> SignalSet:
    """Build a signal set from a parsed JSON document.

    Expected schema::

        {
          "label":   "optional text",
          "columns": [[[re, im], ...], ...],   # one inner list per state
          "priors":  [r1, ...] or null         # omitted/null -> uniform
        }
    """
    if not isinstance(doc, dict):
        raise ValidationError("signal-set document must be a JSON object")
    cols = doc.get("columns")
    if not isinstance(cols, list) or not cols:
        raise ValidationError('signal-set document needs a non-empty "columns" list')
    vectors = []
    for idx, col in enumerate(cols):
        if not isinstance(col, list) or not col:
            raise ValidationError(f"column {idx} must be a non-empty list of [re, im] pairs")
        entries = []
        for comp in col:
            if (
                not isinstance(comp, list)
                or len(comp) != 2
                or not all(isinstance(x, (int, float)) for x in comp)
            ):
                raise ValidationError(
                    f"column {idx} contains a malformed component {comp!r}; expected [re, im]"
                )
            entries.append(complex(comp[0], comp[1]))
        vectors.append(entries)
    priors = doc.get("priors")
    if priors is not None and not isinstance(priors, list):
        raise BadPriorsError(f'"priors" must be a list or null, got {priors!r}')
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise ValidationError(f'"label" must be a string, got {label!r}')
    return from_columns(vectors, priors=priors, label=label)


def load_json(path) -> SignalSet:
    """Read a signal set from a JSON file; see :func:`from_json` for the schema."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    return from_json(doc)
