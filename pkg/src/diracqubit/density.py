"""One- and two-qubit density matrices in Bloch / correlation-tensor form.

A general two-qubit state is written as::

    rho = 1/4 (I(x)I + sA_i s_i(x)I + sB_j I(x)s_j + C_ij s_i(x)s_j)

where ``s_i`` are the Pauli matrices, ``sA`` / ``sB`` the Bloch vectors of the
marginals and ``C`` the 3x3 real correlation matrix.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .bell import BellLabel, bell_projector_matrix
from .dirac import DiracCoefficients, DiracLabel
from .linalg import (
    DEFAULT_TOL,
    I2,
    PAULI,
    as_matrix,
    check_tol,
    hermitian_eigenvalues,
    partial_trace,
)

PSD_TOL = 1e-8
BLOCH_SLACK = 1e-9

# Pauli products: PAULI_AB[i, j] = s_i (x) s_j
_PAULI_AB = np.array([[np.kron(a, b) for b in PAULI] for a in PAULI])
_PAULI_A = np.array([np.kron(a, I2) for a in PAULI])
_PAULI_B = np.array([np.kron(I2, b) for b in PAULI])


class BlochOutOfBall(ValueError):
    pass


class NotPositive(ValueError):
    def __init__(self, eigenvalue: float, eigenvalues=None):
        self.eigenvalue = eigenvalue
        self.eigenvalues = eigenvalues
        super().__init__(f"matrix is not positive semidefinite "
                         f"(smallest eigenvalue {eigenvalue:.6g})")


class BadTrace(ValueError):
    pass


def bloch(s) -> np.ndarray:
    """Validate a Bloch vector: three finite reals with norm at most 1."""
    v = np.asarray(s, dtype=float).reshape(-1)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise ValueError(f"Bloch vector must be three finite reals, got {s!r}")
    n = float(np.linalg.norm(v))
    if n > 1 + BLOCH_SLACK:
        raise BlochOutOfBall(f"Bloch vector norm {n:.12g} exceeds 1")
    return v


@dataclass(frozen=True)
class DensityParams:
    """Bloch vectors of both qubits and the correlation matrix ``C[i, j]``."""

    sA: np.ndarray
    sB: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        sA = np.asarray(self.sA, dtype=float).reshape(3)
        sB = np.asarray(self.sB, dtype=float).reshape(3)
        C = np.asarray(self.C, dtype=float).reshape(3, 3)
        for arr in (sA, sB, C):
            if not np.all(np.isfinite(arr)):
                raise ValueError("density parameters must be finite")
            arr.setflags(write=False)
        object.__setattr__(self, "sA", sA)
        object.__setattr__(self, "sB", sB)
        object.__setattr__(self, "C", C)

    def to_jsonable(self) -> dict:
        return {"sA": self.sA.tolist(), "sB": self.sB.tolist(), "C": self.C.tolist()}

    @classmethod
    def from_jsonable(cls, doc: dict) -> "DensityParams":
        try:
            return cls(doc["sA"], doc["sB"], doc["C"])
        except KeyError as exc:
            raise ValueError(f"missing density parameter {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_jsonable())

    @classmethod
    def loads(cls, text: str) -> "DensityParams":
        return cls.from_jsonable(json.loads(text))


@dataclass(frozen=True)
class DensityMatrix:
    m: np.ndarray
    validated: bool = False


def one_qubit_density(s) -> np.ndarray:
    s = bloch(s)
    return 0.5 * (I2 + np.einsum("i,ijk->jk", s, np.array(PAULI)))


def embed(s, which: str) -> np.ndarray:
    """Single-qubit state lifted to two qubits as ``1/2 (rho (x) I)`` (or ``I (x) rho``).

    The extra 1/2 keeps the trace at one; the lifted matrix is never pure,
    even for a pure ``rho`` (its square is half of itself).
    """
    rho = one_qubit_density(s)
    which = which.upper()
    if which == "A":
        return 0.5 * np.kron(rho, I2)
    if which == "B":
        return 0.5 * np.kron(I2, rho)
    raise ValueError(f"which must be 'A' or 'B', got {which!r}")


def embed_dirac_coeffs(s, which: str) -> DiracCoefficients:
    s = bloch(s)
    which = which.upper()
    v = np.zeros(16, dtype=np.complex128)
    v[DiracLabel.UNIT] = 0.25
    if which == "A":
        v[DiracLabel.GAMMA_5] = s[0] / 4
        v[DiracLabel.IG4G5] = s[1] / 4
        v[DiracLabel.GAMMA_4] = -s[2] / 4
    elif which == "B":
        v[DiracLabel.SIGMA_1] = s[0] / 4
        v[DiracLabel.SIGMA_2] = s[1] / 4
        v[DiracLabel.SIGMA_3] = s[2] / 4
    else:
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    return DiracCoefficients(v)


def product_density(sA, sB) -> np.ndarray:
    return np.kron(one_qubit_density(sA), one_qubit_density(sB))


def product_params(sA, sB) -> DensityParams:
    sA, sB = bloch(sA), bloch(sB)
    return DensityParams(sA, sB, np.outer(sA, sB))


def _build(p: DensityParams) -> np.ndarray:
    m = (np.eye(4, dtype=np.complex128)
         + np.einsum("i,ijk->jk", p.sA, _PAULI_A)
         + np.einsum("j,jkl->kl", p.sB, _PAULI_B)
         + np.einsum("ij,ijkl->kl", p.C, _PAULI_AB))
    return m / 4


def density_from_params(p: DensityParams, validate: bool = False) -> DensityMatrix:
    """Assemble the 4x4 matrix from Bloch vectors and correlations.

    The result is Hermitian with unit trace for any real parameters.  With
    ``validate=True`` the spectrum is checked as well.

    Raises
    ------
    NotPositive
        If ``validate`` is set and an eigenvalue is below ``-1e-8``.
    """
    m = _build(p)
    if validate:
        ev = hermitian_eigenvalues(m)
        if ev[0] < -PSD_TOL:
            raise NotPositive(float(ev[0]), ev)
    return DensityMatrix(m, validated=validate)


def _check_trace(d: np.ndarray, tol: float = DEFAULT_TOL) -> None:
    tr = np.trace(d)
    if abs(tr - 1) > tol:
        raise BadTrace(f"trace is {tr:.12g}, expected 1")


def params_of(d, tol: float = DEFAULT_TOL) -> DensityParams:
    """Invert :func:`density_from_params`: ``sA_i = Tr(d s_i(x)I)`` and so on.

    Only the real parts are kept, so the round trip is exact for Hermitian
    input.  Positivity is not required.
    """
    d = as_matrix(d, 4)
    _check_trace(d, check_tol(tol))
    sA = np.einsum("ikl,lk->i", _PAULI_A, d).real
    sB = np.einsum("ikl,lk->i", _PAULI_B, d).real
    C = np.einsum("ijkl,lk->ij", _PAULI_AB, d).real
    return DensityParams(sA, sB, C)


def correlation_residual(p: DensityParams) -> np.ndarray:
    """``C - outer(sA, sB)``: the part of the correlations a product state lacks."""
    return p.C - np.outer(p.sA, p.sB)


def density_dirac_coeffs(p: DensityParams) -> DiracCoefficients:
    """Dirac-basis coefficients of the state, read off the parameters directly."""
    L = DiracLabel
    sA, sB, C = p.sA, p.sB, p.C
    v = np.zeros(16, dtype=np.complex128)
    v[L.UNIT] = 1
    v[L.GAMMA_5] = sA[0]
    v[L.IG4G5] = sA[1]      # C_34 = sA_2
    v[L.GAMMA_4] = -sA[2]   # C_24 = -sA_3
    for j in range(3):
        v[L.GAMMA_1 + j] = C[1, j]
        v[L.IG1G5 + j] = C[2, j]
        v[L.IG1G4 + j] = C[0, j]
        v[L.SIGMA_1 + j] = sB[j]
    return DiracCoefficients(v / 4)


def bell_projector(label: BellLabel) -> DensityMatrix:
    return DensityMatrix(bell_projector_matrix(label), validated=True)


def purity(d) -> float:
    d = as_matrix(d)
    return float(np.trace(d @ d).real)


def marginals(d) -> tuple[np.ndarray, np.ndarray]:
    """Reduced states ``(rho_A, rho_B)``."""
    return partial_trace(d, "B"), partial_trace(d, "A")


def marginal_mixedness(d, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Purities of both one-qubit marginals; 1/2 means maximally mixed."""
    d = as_matrix(d, 4)
    _check_trace(d, check_tol(tol))
    rho_a, rho_b = marginals(d)
    return purity(rho_a), purity(rho_b)


def entanglement_signature(p: DensityParams, tol: float = DEFAULT_TOL) -> bool:
    """Structural fingerprint of a Bell-type state.

    True when both Bloch vectors vanish and ``C`` is diagonal with at least
    one nonzero entry.  This is a heuristic for pure states of the Bell
    family, not a general entanglement test.
    """
    tol = check_tol(tol)
    if np.max(np.abs(p.sA)) > tol or np.max(np.abs(p.sB)) > tol:
        return False
    off = p.C - np.diag(np.diag(p.C))
    if np.max(np.abs(off)) > tol:
        return False
    return bool(np.max(np.abs(np.diag(p.C))) > tol)
