"""Dense complex linear algebra for bipartite density operators.

Everything here works on plain ``numpy.ndarray`` values with complex128
entries and is a pure function of its inputs.  Matrices are row-major and
stay dense: the largest object in scope is a 529x529 density operator
(local dimension 23), far below the point where sparse or out-of-core
tricks would pay off.
"""

from __future__ import annotations

import numpy as np

# Entrywise tolerance for accepting a matrix as Hermitian.  Round-off from
# chained Kronecker products stays several orders of magnitude below this.
HERMITICITY_TOL = 1e-10

# Guard against accidentally materialising astronomically large Kronecker
# products (the library itself never needs more than 529x529).
_MAX_KRON_DIM = 8192


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b."""
    a = np.asarray(a)
    b = np.asarray(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > _MAX_KRON_DIM or cols > _MAX_KRON_DIM:
        raise ValueError(f"kron result {rows}x{cols} exceeds the {_MAX_KRON_DIM} size guard")
    return np.kron(a, b)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"matmul shape mismatch: {a.shape} @ {b.shape}")
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def trace(a: np.ndarray) -> complex:
    a = np.asarray(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"trace requires a square matrix, got {a.shape}")
    return complex(np.trace(a))


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation |m - m^dagger|."""
    m = np.asarray(m)
    return float(np.abs(m - m.conj().T).max())


def require_finite(m: np.ndarray, what: str = "matrix") -> None:
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{what} contains NaN or Inf entries")


def _reshape_bipartite(m: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    m = np.asarray(m)
    n = d_a * d_b
    if m.shape != (n, n):
        raise ValueError(f"matrix shape {m.shape} does not factor as ({d_a}*{d_b})^2")
    return m.reshape(d_a, d_b, d_a, d_b)


def partial_trace(m: np.ndarray, d_a: int, d_b: int, keep: str) -> np.ndarray:
    """Trace out one subsystem of a (d_a*d_b)-dimensional operator.

    ``keep="A"`` returns the d_a x d_a reduction, ``keep="B"`` the d_b x d_b
    one.  The full trace is preserved.
    """
    r = _reshape_bipartite(m, d_a, d_b)
    if keep == "A":
        return np.einsum("ikjk->ij", r)
    if keep == "B":
        return np.einsum("kikj->ij", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose(m: np.ndarray, d_a: int, d_b: int, on: str) -> np.ndarray:
    """Transpose one tensor factor in place; linear, trace- and Hermiticity-preserving involution."""
    r = _reshape_bipartite(m, d_a, d_b)
    n = d_a * d_b
    if on == "B":
        return r.transpose(0, 3, 2, 1).reshape(n, n)
    if on == "A":
        return r.transpose(2, 1, 0, 3).reshape(n, n)
    raise ValueError(f"on must be 'A' or 'B', got {on!r}")


def hermitian_eigenvalues(m: np.ndarray, herm_tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, sorted descending.

    Rejects inputs whose Hermiticity defect exceeds ``herm_tol``.  The
    eigenvalues sum to the trace up to LAPACK round-off (~1e-13 relative at
    the sizes in scope).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"eigenvalues require a square matrix, got {m.shape}")
    defect = hermiticity_defect(m)
    if defect > herm_tol:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e} > {herm_tol:.1e})")
    return np.linalg.eigvalsh(m)[::-1].copy()
