"""Projective measurements on bipartite states and classical information.

Both parties always measure in the *same* basis.  Two-sided measurements
produce a d x d joint outcome table; one-sided measurements produce a
classical-quantum ensemble {p_k, rho^k} over the untouched subsystem.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .mubs import Basis
from .states import BipartiteState, von_neumann_entropy

# Outcome probabilities this far below zero are round-off and get clamped;
# anything lower is a validation failure.
PROB_CLAMP = 1e-12
IMAG_RESIDUE_TOL = 1e-10
PROB_SUM_TOL = 1e-9

# Branches lighter than this carry a zero conditional state and drop out of
# conditional-entropy sums (0 log 0 = 0).
BRANCH_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Joint table p[i][j] = P(A outcome i, B outcome j)."""

    dim: int
    probs: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.probs, dtype=float)
        if p.shape != (self.dim, self.dim):
            raise ValueError(f"probs shape {p.shape} does not match dim {self.dim}")
        lo = float(p.min())
        if lo < -PROB_CLAMP:
            raise ValueError(f"joint probability {lo:.3e} below the -{PROB_CLAMP:.0e} clamp band")
        p = np.clip(p, 0.0, None)
        total = float(p.sum())
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"joint probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", p)

    def marginal_a(self) -> np.ndarray:
        return self.probs.sum(axis=1)

    def marginal_b(self) -> np.ndarray:
        return self.probs.sum(axis=0)


@dataclass(frozen=True, eq=False)
class CqEnsemble:
    """Post-measurement classical-quantum ensemble {(p_k, rho^k)}."""

    dim: int
    branches: tuple[tuple[float, np.ndarray], ...]

    def __post_init__(self) -> None:
        total = sum(p for p, _ in self.branches)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"branch probabilities sum to {total}, not 1")
        for k, (p, cond) in enumerate(self.branches):
            if p <= BRANCH_EPS:
                continue
            if cond.shape != (self.dim, self.dim):
                raise ValueError(f"branch {k} conditional has shape {cond.shape}")
            defect = linalg.hermiticity_defect(cond)
            if defect > 1e-9:
                raise ValueError(f"branch {k} conditional is not Hermitian (defect {defect:.3e})")
            tr = np.trace(cond).real
            if abs(tr - 1.0) > 1e-9:
                raise ValueError(f"branch {k} conditional trace {tr} is not 1")

    def probabilities(self) -> np.ndarray:
        return np.array([p for p, _ in self.branches])

    def conditional_entropy(self) -> float:
        """sum_k p_k H(rho^k), skipping negligible branches."""
        return float(
            sum(p * von_neumann_entropy(cond) for p, cond in self.branches if p > BRANCH_EPS)
        )


def shannon_entropy(dist: JointDistribution | np.ndarray) -> float:
    """-sum p log2 p over a probability vector or joint table."""
    p = dist.probs if isinstance(dist, JointDistribution) else np.asarray(dist, dtype=float)
    p = p.reshape(-1)
    p = p[p > 0.0]
    if p.size == 0:
        return 0.0
    return float(-np.sum(p * np.log2(p)))


def joint_distribution(rho: BipartiteState, basis_a: Basis, basis_b: Basis) -> JointDistribution:
    """Two-sided outcome table p[i][j] = <a_i b_j| rho |a_i b_j>."""
    d = rho.local_dim
    if basis_a.dim != d or basis_b.dim != d:
        raise ValueError(f"basis dims ({basis_a.dim}, {basis_b.dim}) do not match local dim {d}")
    m = np.kron(basis_a.matrix, basis_b.matrix)
    raw = np.einsum("ij,ij->j", m.conj(), rho.matrix @ m)
    residue = float(np.abs(raw.imag).max())
    if residue > IMAG_RESIDUE_TOL:
        raise ValueError(f"joint probabilities have imaginary residue {residue:.3e}")
    return JointDistribution(d, raw.real.reshape(d, d))


def classical_mi(joint: JointDistribution) -> float:
    """I = H(A outcomes) + H(B outcomes) - H(joint)."""
    return (
        shannon_entropy(joint.marginal_a())
        + shannon_entropy(joint.marginal_b())
        - shannon_entropy(joint)
    )


def measure_one_side(rho: BipartiteState, basis: Basis, side: str) -> CqEnsemble:
    """Measure one subsystem projectively, leaving the other quantum.

    Branch k has probability p_k = tr[(P_k (x) I) rho] (side "A"; mirrored
    for "B") and conditional state given by the normalised partial
    projection onto outcome k.
    """
    d = rho.local_dim
    if basis.dim != d:
        raise ValueError(f"basis dim {basis.dim} does not match local dim {d}")
    r4 = rho.matrix.reshape(d, d, d, d)
    b = basis.matrix
    if side == "A":
        blocks = np.einsum("ik,irjs,jk->krs", b.conj(), r4, b)
    elif side == "B":
        blocks = np.einsum("ik,risj,jk->krs", b.conj(), r4, b)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    branches = []
    for k in range(d):
        block = blocks[k]
        p_k = float(np.trace(block).real)
        if p_k > BRANCH_EPS:
            cond = block / p_k
            cond = (cond + cond.conj().T) / 2.0
        else:
            p_k = max(p_k, 0.0)
            cond = np.zeros((d, d), dtype=complex)
        branches.append((p_k, cond))
    return CqEnsemble(d, tuple(branches))


def one_sided_mi(rho: BipartiteState, basis: Basis, side: str) -> float:
    """I(M:quantum rest) = H(rho_rest) - sum_k p_k H(rho_rest^k)."""
    other = "B" if side == "A" else "A"
    ens = measure_one_side(rho, basis, side)
    return von_neumann_entropy(rho.reduced(other)) - ens.conditional_entropy()
