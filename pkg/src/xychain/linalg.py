"""
Dense complex linear algebra used throughout the package.

All states and operators are plain ``numpy`` arrays in the big-endian
computational basis: site 1 is the most significant bit, so for three
qubits ``|100>`` sits at index 4. Decompositions are delegated to LAPACK
through ``numpy.linalg``; this module adds the input checks, error types
and the qubit-specific helpers (Kronecker chains, partial traces).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import BadDims, BadSites, NoConvergence, NonHermitian

MAX_DIM = 2**12

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues in ascending order and orthonormal eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def apply_function(self, func) -> np.ndarray:
        """Return ``f(A) = V f(diag(lambda)) V^dagger``."""
        v = self.eigenvectors
        return (v * func(self.eigenvalues)) @ v.conj().T


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise BadDims(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def hermiticity_error(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def eig_hermitian(a, tol: float = 1e-10) -> HermitianEigen:
    """
    Full spectral decomposition of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square matrix with ``max|A - A^dagger| <= tol``.
    tol : float
        Allowed Hermiticity defect. The matrix is symmetrised before the
        decomposition so the defect does not leak into the spectrum.

    Raises
    ------
    NonHermitian
        If the Hermiticity defect exceeds ``tol``.
    NoConvergence
        If LAPACK fails to converge.
    """
    a = _as_square(a)
    if a.shape[0] > MAX_DIM:
        raise BadDims(f"dimension {a.shape[0]} exceeds the supported cap {MAX_DIM}")
    err = hermiticity_error(a)
    if err > tol:
        raise NonHermitian(f"max|A - A^dagger| = {err:.3e} exceeds tol = {tol:.1e}")
    a = 0.5 * (a + a.conj().T)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    w.setflags(write=False)
    v.setflags(write=False)
    return HermitianEigen(w, v)


def eigvals_general(a) -> np.ndarray:
    """All eigenvalues of a general square matrix, unordered."""
    a = _as_square(a)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def kron(*ops) -> np.ndarray:
    """Kronecker product of any number of matrices, leftmost = most significant."""
    if not ops:
        raise BadDims("kron needs at least one operand")
    return reduce(np.kron, (np.asarray(op, dtype=complex) for op in ops))


def site_operator(op, site: int, n_qubits: int) -> np.ndarray:
    """Embed a single-qubit operator at ``site`` (1-based) of an ``n_qubits`` register."""
    if not 1 <= site <= n_qubits:
        raise BadSites(f"site {site} outside 1..{n_qubits}")
    factors = [IDENTITY_2] * n_qubits
    factors[site - 1] = np.asarray(op, dtype=complex)
    return kron(*factors)


def _check_pair(n_qubits: int, keep) -> tuple[int, int]:
    i, j = (int(s) for s in keep)
    if i == j or not (1 <= i <= n_qubits and 1 <= j <= n_qubits):
        raise BadSites(f"sites {keep!r} must be distinct and within 1..{n_qubits}")
    return i, j


def partial_trace(rho, n_qubits: int, keep) -> np.ndarray:
    """
    Reduce an ``n_qubits`` density matrix to the two sites in ``keep``.

    The result is 4x4 in big-endian order over ``(keep[0], keep[1])``;
    ``keep=(3, 1)`` therefore puts site 3 on the more significant bit.
    """
    rho = _as_square(rho)
    if n_qubits < 2 or rho.shape[0] != 2**n_qubits:
        raise BadDims(f"matrix of shape {rho.shape} is not a {n_qubits}-qubit operator")
    i, j = _check_pair(n_qubits, keep)
    others = [s for s in range(n_qubits) if s not in (i - 1, j - 1)]
    order = [i - 1, j - 1, *others]
    t = rho.reshape((2,) * (2 * n_qubits))
    t = t.transpose(order + [n_qubits + s for s in order])
    rest = 2 ** (n_qubits - 2)
    t = t.reshape(4, rest, 4, rest)
    return np.einsum("aibi->ab", t)


def reduced_pair_from_state(psi, n_qubits: int, keep) -> np.ndarray:
    """
    Two-site reduced density matrix of a pure state without forming ``|psi><psi|``.

    Equal to ``partial_trace(outer(psi, psi.conj()), n_qubits, keep)``.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if n_qubits < 2 or psi.shape[0] != 2**n_qubits:
        raise BadDims(f"vector of length {psi.shape[0]} is not a {n_qubits}-qubit state")
    i, j = _check_pair(n_qubits, keep)
    others = [s for s in range(n_qubits) if s not in (i - 1, j - 1)]
    m = psi.reshape((2,) * n_qubits).transpose([i - 1, j - 1, *others]).reshape(4, -1)
    return m @ m.conj().T
