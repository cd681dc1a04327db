"""Complete families of mutually unbiased bases for prime dimensions.

A basis is stored as a unitary matrix whose *columns* are the measurement
states.  For an odd prime d the full family of d + 1 bases is

    [computational, F, D F, D^2 F, ..., D^(d-1) F]

with F the d-dimensional Fourier matrix and D = diag(w^(j^2 mod d)),
w = exp(2 pi i / d).  Dimension 2 is special-cased (the quadratic phases
degenerate there) with the circular basis as the third member.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import require_finite

UNITARITY_TOL = 1e-10
UNBIASED_TOL = 1e-10


def is_prime(n: int) -> bool:
    """Trial-division primality; dimensions in scope are tiny."""
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True, eq=False)
class Basis:
    """A d x d unitary whose columns are the basis states."""

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"basis matrix must be square, got {m.shape}")
        require_finite(m, "basis matrix")
        defect = np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0]))
        if defect > UNITARITY_TOL:
            raise ValueError(f"basis {self.label!r} is not unitary (defect {defect:.3e})")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def column(self, k: int) -> np.ndarray:
        return self.matrix[:, k]


def overlap_matrix(a: Basis, b: Basis) -> np.ndarray:
    """Table of squared overlaps |<a_i|b_j>|^2."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return np.abs(a.matrix.conj().T @ b.matrix) ** 2


def is_mutually_unbiased(a: Basis, b: Basis, tol: float = UNBIASED_TOL) -> bool:
    """True iff every cross overlap |<a_i|b_j>|^2 equals 1/d within tol."""
    ov = overlap_matrix(a, b)
    return bool(np.abs(ov - 1.0 / a.dim).max() <= tol)


@dataclass(frozen=True)
class MubSet:
    """A validated family of d + 1 pairwise mutually unbiased bases."""

    dim: int
    bases: tuple[Basis, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != self.dim + 1:
            raise ValueError(f"expected {self.dim + 1} bases for dim {self.dim}, got {len(self.bases)}")
        for b in self.bases:
            if b.dim != self.dim:
                raise ValueError(f"basis {b.label!r} has dim {b.dim}, family dim is {self.dim}")
        for i in range(len(self.bases)):
            for j in range(i + 1, len(self.bases)):
                if not is_mutually_unbiased(self.bases[i], self.bases[j]):
                    raise ValueError(
                        f"bases {self.bases[i].label!r} and {self.bases[j].label!r} are not mutually unbiased"
                    )
        object.__setattr__(self, "bases", tuple(self.bases))

    def __iter__(self):
        return iter(self.bases)

    def __len__(self) -> int:
        return len(self.bases)

    def __getitem__(self, k: int) -> Basis:
        return self.bases[k]


def computational(d: int) -> Basis:
    return Basis(np.eye(d, dtype=complex), label="Z")


def fourier(d: int) -> Basis:
    """Fourier basis: entries exp(2 pi i x y / d) / sqrt(d)."""
    if d < 2:
        raise ValueError("fourier requires d >= 2")
    x, y = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return Basis(np.exp(2j * np.pi * x * y / d) / np.sqrt(d), label="X")


def mub_family(d: int) -> MubSet:
    """Full family of d + 1 mutually unbiased bases for prime d.

    Ordering is fixed as [Z, X, D X, D^2 X, ...] (computational first,
    Fourier second); published listings of the d = 3 and d = 5 families
    enumerate the same bases in a different order and with permuted
    columns, which leaves every measurement-derived quantity unchanged.
    """
    if not is_prime(d):
        raise ValueError(f"mub_family requires a prime dimension, got {d}")
    if d == 2:
        circular = Basis(np.array([[1, 1], [1j, -1j]], dtype=complex) / np.sqrt(2), label="Y")
        return MubSet(2, (computational(2), fourier(2), circular))
    f = fourier(d)
    omega = np.exp(2j * np.pi / d)
    phases = omega ** (np.arange(d) ** 2 % d)
    bases = [computational(d), f]
    for k in range(1, d):
        mat = (phases**k)[:, None] * f.matrix
        bases.append(Basis(mat, label=f"D{k}X" if k > 1 else "DX"))
    return MubSet(d, tuple(bases))
