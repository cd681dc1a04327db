"""Bipartite density operators, random-state sampling, and quantum entropies.

States are validated at construction (Hermitian, unit trace, positive up to
a small round-off floor) and treated as immutable afterwards.  All entropic
quantities are in bits (base-2 logarithms) with the 0 log 0 = 0 convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .mubs import is_prime

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10

# Eigenvalues in [-EIGENVALUE_FLOOR band, 0) are round-off and get clamped
# to 0 before entropies; anything lower is a genuine validation failure.
EIGENVALUE_FLOOR = -1e-9

PPT_TOL = 1e-9
MAXIMALLY_MIXED_EPS = 1e-6


def as_generator(rng: np.random.Generator | int | None) -> np.random.Generator:
    """Accept a Generator, an integer seed, or None (OS entropy)."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def clamped_spectrum(values: np.ndarray, floor: float = EIGENVALUE_FLOOR) -> np.ndarray:
    """Clamp round-off negatives to 0; reject anything below the floor."""
    lo = float(values.min())
    if lo < floor:
        raise ValueError(f"spectrum has eigenvalue {lo:.3e} below the {floor:.1e} floor")
    return np.clip(values, 0.0, None)


def _entropy_bits(spectrum: np.ndarray) -> float:
    lam = spectrum[spectrum > 0.0]
    if lam.size == 0:
        return 0.0
    return float(-np.sum(lam * np.log2(lam)))


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """A validated d^2 x d^2 density operator over two d-dimensional parts.

    The (clamped, descending) spectrum is computed during validation and
    kept, so joint-entropy evaluations cost nothing extra.
    """

    matrix: np.ndarray
    local_dim: int
    spectrum: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        d = self.local_dim
        if d < 2:
            raise ValueError(f"local_dim must be >= 2, got {d}")
        if m.shape != (d * d, d * d):
            raise ValueError(f"matrix shape {m.shape} does not match local_dim {d}")
        linalg.require_finite(m, "state matrix")
        defect = linalg.hermiticity_defect(m)
        if defect > HERMITICITY_TOL:
            raise ValueError(f"state is not Hermitian (defect {defect:.3e})")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"state trace {tr} is not 1 within {TRACE_TOL:.1e}")
        spec = clamped_spectrum(linalg.hermitian_eigenvalues(m))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "spectrum", spec)

    @property
    def dim(self) -> int:
        """Total Hilbert-space dimension d^2."""
        return self.local_dim**2

    def reduced(self, side: str) -> np.ndarray:
        """Partial trace keeping the requested side ("A" or "B")."""
        return linalg.partial_trace(self.matrix, self.local_dim, self.local_dim, keep=side)


def pure_state(vec: np.ndarray, d: int) -> BipartiteState:
    """Normalise a length-d^2 amplitude vector into the rank-1 projector |v><v|."""
    v = np.asarray(vec, dtype=complex).reshape(-1)
    if v.size != d * d:
        raise ValueError(f"vector length {v.size} does not match d^2 = {d * d}")
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("cannot normalise the zero vector")
    v = v / norm
    return BipartiteState(np.outer(v, v.conj()), d)


def maximally_entangled(d: int) -> BipartiteState:
    """|Psi+> = sum_i |ii> / sqrt(d) as a density operator."""
    if d < 2:
        raise ValueError("maximally_entangled requires d >= 2")
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0
    return pure_state(v, d)


def isotropic_p_range(d: int) -> tuple[float, float]:
    return (-1.0 / (d * d - 1), 1.0)


def isotropic(d: int, p: float) -> BipartiteState:
    """p |Psi+><Psi+| + (1 - p) I / d^2, positive for p in [-1/(d^2-1), 1]."""
    if not is_prime(d):
        raise ValueError(f"isotropic requires prime d, got {d}")
    lo, hi = isotropic_p_range(d)
    if not (lo <= p <= hi):
        raise ValueError(f"p = {p} outside [{lo}, {hi}] breaks positivity")
    psi = maximally_entangled(d).matrix
    return BipartiteState(p * psi + (1.0 - p) * np.eye(d * d) / (d * d), d)


def random_pure(d: int, rng: np.random.Generator | int | None = None) -> BipartiteState:
    """Haar-random bipartite pure state: normalised i.i.d. complex Gaussians."""
    g = as_generator(rng)
    v = g.standard_normal(d * d) + 1j * g.standard_normal(d * d)
    return pure_state(v, d)


def random_mixed(
    d: int, rank: int | None = None, rng: np.random.Generator | int | None = None
) -> BipartiteState:
    """Ginibre-ensemble mixed state G G^dagger / tr, default full rank d^2."""
    if rank is None:
        rank = d * d
    if not (1 <= rank <= d * d):
        raise ValueError(f"rank must lie in [1, {d * d}], got {rank}")
    g = as_generator(rng)
    gmat = g.standard_normal((d * d, rank)) + 1j * g.standard_normal((d * d, rank))
    rho = gmat @ gmat.conj().T
    rho = (rho + rho.conj().T) / 2.0
    return BipartiteState(rho / np.trace(rho).real, d)


def von_neumann_entropy(rho: BipartiteState | np.ndarray) -> float:
    """H(rho) = -sum lambda log2 lambda over the clamped spectrum."""
    if isinstance(rho, BipartiteState):
        return _entropy_bits(rho.spectrum)
    spec = clamped_spectrum(linalg.hermitian_eigenvalues(np.asarray(rho, dtype=complex)))
    return _entropy_bits(spec)


def subsystem_entropy(rho: BipartiteState, side: str) -> float:
    return von_neumann_entropy(rho.reduced(side))


def conditional_entropy(rho: BipartiteState) -> float:
    """H(A|B) = H(AB) - H(B); negative for sufficiently entangled states."""
    return von_neumann_entropy(rho) - subsystem_entropy(rho, "B")


def quantum_mutual_information(rho: BipartiteState) -> float:
    """I(A:B) = H(A) + H(B) - H(AB)."""
    return subsystem_entropy(rho, "A") + subsystem_entropy(rho, "B") - von_neumann_entropy(rho)


def purity(rho: BipartiteState) -> float:
    return float(np.sum(rho.spectrum**2))


def is_ppt(rho: BipartiteState, tol: float = PPT_TOL) -> bool:
    """Peres-Horodecki test: partial transpose has no eigenvalue below -tol."""
    d = rho.local_dim
    pt = linalg.partial_transpose(rho.matrix, d, d, on="B")
    return bool(linalg.hermitian_eigenvalues(pt).min() >= -tol)


def is_separable_2x2(rho: BipartiteState, tol: float = PPT_TOL) -> bool:
    """Exact separability at d = 2, where PPT is necessary and sufficient."""
    if rho.local_dim != 2:
        raise ValueError("the PPT criterion decides separability only for 2x2 subsystems")
    return is_ppt(rho, tol=tol)


def has_maximally_mixed_subsystem(rho: BipartiteState, eps: float = MAXIMALLY_MIXED_EPS) -> bool:
    """True iff either marginal is within Frobenius distance eps of I/d."""
    d = rho.local_dim
    target = np.eye(d) / d
    return bool(
        np.linalg.norm(rho.reduced("A") - target) <= eps
        or np.linalg.norm(rho.reduced("B") - target) <= eps
    )
