"""Dense complex linear algebra for 2x2 / 4x4 operators and 4-vectors.

All matrices are plain ``numpy`` arrays of dtype ``complex128``.  Two-qubit
operators use the basis order ``|uu>, |ud>, |du>, |dd>`` with qubit A as the
left tensor factor, so ``kron(a, b)[2*i + k, 2*j + l] == a[i, j] * b[k, l]``.
"""
from __future__ import annotations

import json

import numpy as np

DEFAULT_TOL = 1e-9

# Pauli matrices
I2 = np.eye(2, dtype=np.complex128)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)

I4 = np.eye(4, dtype=np.complex128)


class NotHermitian(ValueError):
    """Raised when a routine requiring a Hermitian matrix gets something else."""


def check_tol(tol: float) -> float:
    tol = float(tol)
    if not np.isfinite(tol) or tol <= 0:
        raise ValueError(f"tolerance must be a positive finite number, got {tol!r}")
    return tol


def as_matrix(a, dim: int | None = None) -> np.ndarray:
    """Coerce ``a`` to a finite square complex matrix, optionally of size ``dim``."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def kron(a, b) -> np.ndarray:
    """Tensor product ``a (x) b`` of two 2x2 matrices; ``a`` acts on qubit A."""
    return np.kron(as_matrix(a, 2), as_matrix(b, 2))


def matmul(a, b) -> np.ndarray:
    return as_matrix(a) @ as_matrix(b)


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def approx_equal(a, b, tol: float = DEFAULT_TOL) -> bool:
    """True when the entrywise max-abs difference is at most ``tol``."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    return max_abs_diff(a, b) <= check_tol(tol)


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return approx_equal(a, adjoint(a), tol)


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    m = as_matrix(a)
    return approx_equal(m @ m.conj().T, np.eye(m.shape[0]), tol)


def hermitian_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in ascending order.

    Raises
    ------
    NotHermitian
        If ``a`` differs from its adjoint by more than ``tol`` in any entry.
    """
    m = as_matrix(a)
    err = max_abs_diff(m, m.conj().T)
    if err > check_tol(tol):
        raise NotHermitian(f"matrix is not Hermitian (max |a - a^H| = {err:.3e})")
    # symmetrize so round-off in the input does not leak into the spectrum
    return np.linalg.eigvalsh(0.5 * (m + m.conj().T))


def partial_trace(a, over: str) -> np.ndarray:
    """Reduce a 4x4 two-qubit operator to a 2x2 one.

    ``over="B"`` traces out the right factor and leaves the operator on A;
    ``over="A"`` traces out the left factor.
    """
    t = as_matrix(a, 4).reshape(2, 2, 2, 2)  # indices (iA, iB, jA, jB)
    over = over.upper()
    if over == "B":
        return np.einsum("ikjk->ij", t)
    if over == "A":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"over must be 'A' or 'B', got {over!r}")


def kron_factor(a, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray] | None:
    """Split a 4x4 matrix into ``X (x) Y`` if it is a tensor product.

    The 2x2 blocks of ``a`` are ``X[i, j] * Y``.  The largest block is taken as
    a multiple of ``Y`` and ``X`` is recovered by projecting every block onto
    it.  The result is put in canonical gauge: the first entry of ``X`` (row
    major) whose magnitude exceeds ``tol`` is exactly 1.

    Returns ``None`` when ``a`` is not a tensor product within ``tol``, and for
    the zero matrix, whose factorization is not unique.
    """
    tol = check_tol(tol)
    m = as_matrix(a, 4)
    blocks = m.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3)  # blocks[i, j] = X[i, j] * Y
    norms = np.linalg.norm(blocks, axis=(2, 3))
    i0, j0 = np.unravel_index(np.argmax(norms), norms.shape)
    if norms[i0, j0] <= tol:
        return None
    ref = blocks[i0, j0]
    x = np.einsum("ijkl,kl->ij", blocks, ref.conj()) / np.vdot(ref, ref)
    y = ref.copy()
    if max_abs_diff(np.kron(x, y), m) > tol:
        return None
    lead = x.flat[np.flatnonzero(np.abs(x) > tol)[0]]
    return x / lead, y * lead


# JSON matrix format: {"rows": [[[re, im], ...], ...]}

def matrix_to_jsonable(a) -> dict:
    m = as_matrix(a)
    return {"rows": [[[float(z.real), float(z.imag)] for z in row] for row in m]}


def matrix_from_jsonable(doc) -> np.ndarray:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ValueError('matrix document must be an object with a "rows" key')
    rows = doc["rows"]
    try:
        m = np.array([[complex(float(re), float(im)) for re, im in row] for row in rows])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix entries: {exc}") from exc
    return as_matrix(m)


def dumps_matrix(a) -> str:
    # json writes floats with repr(), i.e. shortest round-trip (17 sig. digits max)
    return json.dumps(matrix_to_jsonable(a))


def loads_matrix(text: str) -> np.ndarray:
    return matrix_from_jsonable(json.loads(text))
