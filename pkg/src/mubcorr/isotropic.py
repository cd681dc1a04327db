"""Closed forms for the isotropic family p |Psi+><Psi+| + (1-p) I/d^2.

These evaluate without building any matrix, so sweeps at d = 23 (529x529
numerically) cost microseconds.  They double as exact oracles for the
numeric pipeline: the same quantities computed from density matrices must
agree to ~1e-9.

Measurement structure for prime d (same basis both sides, family order
[Z, X, ...]):

* Z: outcome table has d diagonal cells p/d + (1-p)/d^2, the rest (1-p)/d^2.
* X: cells with (i + j) mod d = 0 carry p/d + (1-p)/d^2, the rest (1-p)/d^2.
* every other family basis: uniform 1/d^2 for odd d, hence zero mutual
  information.  At d = 2 the third (circular) basis instead correlates on
  (i + j) odd, with the same cell-value multiset as Z.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measure import JointDistribution
from .mubs import is_prime
from .states import isotropic_p_range


def _check_args(d: int, p: float) -> None:
    if not is_prime(d):
        raise ValueError(f"isotropic closed forms require prime d, got {d}")
    lo, hi = isotropic_p_range(d)
    if not (lo - 1e-12 <= p <= hi + 1e-12):
        raise ValueError(f"p = {p} outside the valid range [{lo}, {hi}]")


def _plogp(x: float) -> float:
    """x log2 x with the 0 log 0 = 0 convention (round-off negatives -> 0)."""
    if x <= 0.0:
        return 0.0
    return x * np.log2(x)


def iso_eigenvalues(d: int, p: float) -> np.ndarray:
    """Spectrum {p + (1-p)/d^2} + {(1-p)/d^2} x (d^2 - 1), sorted descending."""
    _check_args(d, p)
    big = p + (1.0 - p) / d**2
    rest = (1.0 - p) / d**2
    vals = np.full(d * d, rest)
    vals[0] = big
    return np.sort(vals)[::-1].copy()


def iso_mutual_information(d: int, p: float) -> float:
    """Quantum I(A:B): 2 log d + q log q + (d^2-1) r log r.

    Here q = (p(d^2-1)+1)/d^2 is the large eigenvalue and r = (1-p)/d^2 the
    degenerate one; the marginals are maximally mixed over the whole range.
    """
    _check_args(d, p)
    q = (p * (d * d - 1) + 1.0) / d**2
    r = (1.0 - p) / d**2
    return 2.0 * np.log2(d) + _plogp(q) + (d * d - 1) * _plogp(r)


def iso_measured_mi(d: int, p: float) -> float:
    """Classical I(Z:Z) = I(X:X): 2 log d + d a log a + (d^2-d) r log r.

    a = p/d + (1-p)/d^2 is the correlated-cell probability (d cells) and r
    fills the remaining d^2 - d cells.
    """
    _check_args(d, p)
    a = p / d + (1.0 - p) / d**2
    r = (1.0 - p) / d**2
    return 2.0 * np.log2(d) + d * _plogp(a) + (d * d - d) * _plogp(r)


def iso_joint_probs(d: int, p: float, basis: str) -> JointDistribution:
    """Outcome table for a family basis: "Z", "X", or "other"."""
    _check_args(d, p)
    a = p / d + (1.0 - p) / d**2
    r = (1.0 - p) / d**2
    if basis == "Z":
        table = np.full((d, d), r)
        np.fill_diagonal(table, a)
    elif basis == "X":
        i, j = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
        table = np.where((i + j) % d == 0, a, r)
    elif basis == "other":
        if d == 2:
            # The circular qubit basis anti-correlates instead of decohering.
            i, j = np.meshgrid(np.arange(2), np.arange(2), indexing="ij")
            table = np.where((i + j) % 2 == 1, a, r)
        else:
            table = np.full((d, d), 1.0 / d**2)
    else:
        raise ValueError(f"basis must be 'Z', 'X', or 'other', got {basis!r}")
    return JointDistribution(d, table)


def iso_ecqc_gap(d: int, p: float) -> float:
    """I(A:B) minus twice the measured mutual information.

    For odd primes only Z and X correlate, so this is the *full* d+1 basis
    sum — stronger than the drop-the-largest comparison.  At d = 2 all
    three bases correlate equally and the same expression is exactly the
    drop-the-largest comparison.
    """
    return iso_mutual_information(d, p) - 2.0 * iso_measured_mi(d, p)


@dataclass(frozen=True)
class IsotropicPoint:
    """One point of an analytic sweep."""

    dim: int
    p: float
    i_ab: float
    mi_zx: float
    ecqc_rhs_analytic: float


def isotropic_point(d: int, p: float) -> IsotropicPoint:
    """Evaluate the sweep quantities at (d, p).

    ``ecqc_rhs_analytic`` is the drop-the-largest sum: with all per-basis
    mutual informations known ({m, m, 0, ...} for odd d, {m, m, m} at
    d = 2), it equals m and 2m respectively.
    """
    i_ab = iso_mutual_information(d, p)
    m = iso_measured_mi(d, p)
    n_correlated = 3 if d == 2 else 2
    return IsotropicPoint(d, p, i_ab, m, (n_correlated - 1) * m)
