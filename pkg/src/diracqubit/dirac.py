"""The sixteen-element Dirac operator basis for two qubits.

Each basis element is stored as a tensor product of Pauli matrices (qubit A
on the left).  The gamma-matrix products that name them (``-i g2 g3``,
``i g1 g4``, ...) are checked against these tensor forms rather than used to
define them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    I2,
    I4,
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    as_matrix,
    check_tol,
    max_abs_diff,
)


class DiracLabel(enum.IntEnum):
    UNIT = 0
    GAMMA_1 = 1
    GAMMA_2 = 2
    GAMMA_3 = 3
    GAMMA_4 = 4
    SIGMA_1 = 5  # -i g2 g3
    SIGMA_2 = 6  # -i g3 g1
    SIGMA_3 = 7  # -i g1 g2
    IG1G4 = 8
    IG2G4 = 9
    IG3G4 = 10
    IG1G5 = 11
    IG2G5 = 12
    IG3G5 = 13
    IG4G5 = 14
    GAMMA_5 = 15

    @classmethod
    def parse(cls, name: str) -> "DiracLabel":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown Dirac label {name!r}") from None


class TensorRank(enum.Enum):
    SCALAR = "scalar"
    FOUR_VECTOR = "four_vector"
    ANTISYM_TENSOR = "antisym_tensor"
    PSEUDO_VECTOR = "pseudo_vector"
    PSEUDO_SCALAR = "pseudo_scalar"


L = DiracLabel

# (left factor, sign, right factor)
_TENSOR_FORM = {
    L.UNIT: (I2, 1, I2),
    L.GAMMA_1: (SIGMA_2, 1, SIGMA_1),
    L.GAMMA_2: (SIGMA_2, 1, SIGMA_2),
    L.GAMMA_3: (SIGMA_2, 1, SIGMA_3),
    L.GAMMA_4: (SIGMA_3, -1, I2),
    L.SIGMA_1: (I2, 1, SIGMA_1),
    L.SIGMA_2: (I2, 1, SIGMA_2),
    L.SIGMA_3: (I2, 1, SIGMA_3),
    L.IG1G4: (SIGMA_1, 1, SIGMA_1),
    L.IG2G4: (SIGMA_1, 1, SIGMA_2),
    L.IG3G4: (SIGMA_1, 1, SIGMA_3),
    L.IG1G5: (SIGMA_3, 1, SIGMA_1),
    L.IG2G5: (SIGMA_3, 1, SIGMA_2),
    L.IG3G5: (SIGMA_3, 1, SIGMA_3),
    L.IG4G5: (SIGMA_2, 1, I2),
    L.GAMMA_5: (SIGMA_1, 1, I2),
}

_RANK = {
    L.UNIT: TensorRank.SCALAR,
    **{lab: TensorRank.FOUR_VECTOR for lab in (L.GAMMA_1, L.GAMMA_2, L.GAMMA_3, L.GAMMA_4)},
    **{lab: TensorRank.ANTISYM_TENSOR
       for lab in (L.SIGMA_1, L.SIGMA_2, L.SIGMA_3, L.IG1G4, L.IG2G4, L.IG3G4)},
    **{lab: TensorRank.PSEUDO_VECTOR for lab in (L.IG1G5, L.IG2G5, L.IG3G5, L.IG4G5)},
    L.GAMMA_5: TensorRank.PSEUDO_SCALAR,
}


def tensor_form(label: DiracLabel) -> np.ndarray:
    left, sign, right = _TENSOR_FORM[DiracLabel(label)]
    return sign * np.kron(left, right)


# shared read-only; shape (16, 4, 4), indexed by DiracLabel
BASIS = np.stack([tensor_form(lab) for lab in DiracLabel])
BASIS.setflags(write=False)


def dirac_matrix(label: DiracLabel) -> np.ndarray:
    return BASIS[DiracLabel(label)].copy()


def gamma(mu: int, basis: np.ndarray | None = None) -> np.ndarray:
    """``gamma_mu`` for ``mu`` in 1..5."""
    b = BASIS if basis is None else basis
    if mu == 5:
        return b[L.GAMMA_5]
    if mu not in (1, 2, 3, 4):
        raise ValueError(f"gamma index must be in 1..5, got {mu}")
    return b[L.GAMMA_1 + mu - 1]


def rank_of(label: DiracLabel) -> TensorRank:
    return _RANK[DiracLabel(label)]


def product_form(label: DiracLabel, basis: np.ndarray | None = None) -> np.ndarray:
    """Rebuild a basis element from products of ``gamma_1..gamma_5``.

    UNIT is the identity and the five gammas are returned as is, so this is
    only an independent check for the ten product elements.
    """
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    label = DiracLabel(label)
    if label is L.UNIT:
        return I4.copy()
    if L.GAMMA_1 <= label <= L.GAMMA_4:
        return g(label - L.GAMMA_1 + 1).copy()
    if label is L.GAMMA_5:
        return g(5).copy()
    if L.SIGMA_1 <= label <= L.SIGMA_3:
        i, j = {L.SIGMA_1: (2, 3), L.SIGMA_2: (3, 1), L.SIGMA_3: (1, 2)}[label]
        return -1j * g(i) @ g(j)
    if L.IG1G4 <= label <= L.IG3G4:
        return 1j * g(label - L.IG1G4 + 1) @ g(4)
    if L.IG1G5 <= label <= L.IG3G5:
        return 1j * g(label - L.IG1G5 + 1) @ g(5)
    return 1j * g(4) @ g(5)  # IG4G5


def verify_clifford(tol: float = DEFAULT_TOL,
                    basis: np.ndarray | None = None) -> list[tuple]:
    """Check the anticommutation relations of the basis.

    Returns a list of violations, empty on success.  Entries are ``(mu, nu)``
    for a failed ``{g_mu, g_nu} = 2 delta_mu_nu`` with mu, nu in 1..4, ``(5, mu)``
    when ``g5`` fails to anticommute with ``g_mu``, and ``("g5", "g1g2g3g4")``
    when ``g5 != g1 g2 g3 g4``.
    """
    tol = check_tol(tol)
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    bad: list[tuple] = []
    for mu in range(1, 5):
        for nu in range(1, 5):
            expected = 2 * I4 if mu == nu else 0 * I4
            if max_abs_diff(g(mu) @ g(nu) + g(nu) @ g(mu), expected) > tol:
                bad.append((mu, nu))
    for mu in range(1, 5):
        if max_abs_diff(g(5) @ g(mu) + g(mu) @ g(5), 0 * I4) > tol:
            bad.append((5, mu))
    if max_abs_diff(g(1) @ g(2) @ g(3) @ g(4), g(5)) > tol:
        bad.append(("g5", "g1g2g3g4"))
    return bad


@dataclass(frozen=True)
class DiracCoefficients:
    """Expansion weights of a 4x4 operator over the sixteen basis elements."""

    values: np.ndarray  # shape (16,), complex, indexed by DiracLabel

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128).reshape(16)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __getitem__(self, label) -> complex:
        if isinstance(label, str):
            label = DiracLabel.parse(label)
        return complex(self.values[DiracLabel(label)])

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "DiracCoefficients":
        v = np.zeros(16, dtype=np.complex128)
        for key, val in mapping.items():
            lab = DiracLabel.parse(key) if isinstance(key, str) else DiracLabel(key)
            if isinstance(val, (list, tuple)):
                val = complex(val[0], val[1])
            v[lab] = val
        return cls(v)

    def nonzero(self, tol: float = DEFAULT_TOL) -> dict[DiracLabel, complex]:
        return {lab: complex(self.values[lab]) for lab in DiracLabel
                if abs(self.values[lab]) > tol}

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        return bool(np.max(np.abs(self.values.imag)) <= tol)

    def to_jsonable(self) -> dict[str, list[float]]:
        return {lab.name: [float(z.real), float(z.imag)]
                for lab, z in zip(DiracLabel, self.values)}


def decompose(m, basis: np.ndarray | None = None) -> DiracCoefficients:
    """Coefficients ``c_A = Tr(G_A m) / 4`` (Hilbert-Schmidt, basis is self-adjoint)."""
    b = BASIS if basis is None else basis
    m = as_matrix(m, 4)
    return DiracCoefficients(np.einsum("aij,ji->a", b, m) / 4)


def reconstruct(c: DiracCoefficients, basis: np.ndarray | None = None) -> np.ndarray:
    b = BASIS if basis is None else basis
    values = c.values if isinstance(c, DiracCoefficients) else np.asarray(c)
    return np.einsum("a,aij->ij", values, b)
