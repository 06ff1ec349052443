"""Logic gates in the Dirac basis and the even/odd test for two-qubit functions.

The one-qubit gates are 2x2; the rest are 4x4.  ``CNOT`` flips qubit A when
qubit B is down (basis order ``|uu>, |ud>, |du>, |dd>``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bell import (
    BellLabel,
    SymmetryLabel,
    UnsupportedLabel,
    apply_to_bell,
    bell_state,
    symmetry_operator,
)
from .density import bell_projector, marginal_mixedness
from .dirac import BASIS, DiracCoefficients, DiracLabel, decompose, gamma
from .linalg import (
    DEFAULT_TOL,
    I2,
    I4,
    SIGMA_1,
    SIGMA_3,
    as_matrix,
    check_tol,
    is_hermitian,
    max_abs_diff,
)


class GateLabel(enum.Enum):
    NOT1 = "NOT1"
    HADAMARD1 = "HADAMARD1"
    CNOT = "CNOT"
    NOT2 = "NOT2"
    SWAP = "SWAP"

    @classmethod
    def parse(cls, name: str) -> "GateLabel":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise UnknownGate(name) from None


class UnknownGate(ValueError):
    def __init__(self, name):
        super().__init__(f"unknown gate {name!r}; choose from "
                         + ", ".join(g.name for g in GateLabel))


class BadDensity(ValueError):
    pass


_EXPLICIT = {
    GateLabel.CNOT: [[1, 0, 0, 0],
                     [0, 0, 0, 1],
                     [0, 0, 1, 0],
                     [0, 1, 0, 0]],
    GateLabel.NOT2: [[0, 0, 1, 0],
                     [0, 0, 0, 1],
                     [1, 0, 0, 0],
                     [0, 1, 0, 0]],
    GateLabel.SWAP: [[1, 0, 0, 0],
                     [0, 0, 1, 0],
                     [0, 1, 0, 0],
                     [0, 0, 0, 1]],
}


def gate(label: GateLabel) -> np.ndarray:
    label = GateLabel(label)
    if label is GateLabel.NOT1:
        return SIGMA_1.copy()
    if label is GateLabel.HADAMARD1:
        return (SIGMA_1 + SIGMA_3) / np.sqrt(2)
    return np.array(_EXPLICIT[label], dtype=np.complex128)


def gate_dirac_operator(label: GateLabel, basis: np.ndarray | None = None) -> np.ndarray:
    """Two-qubit gate rebuilt from products of gamma matrices."""
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    b = BASIS if basis is None else basis
    unit = b[DiracLabel.UNIT]
    label = GateLabel(label)
    if label is GateLabel.CNOT:
        return 0.5 * (unit - 1j * g(1) @ g(2) + g(5) - 1j * g(3) @ g(4))
    if label is GateLabel.NOT2:
        return g(5)
    if label is GateLabel.SWAP:
        return 0.5 * (unit + 1j * g(1) @ g(4) + g(2) + 1j * g(3) @ g(5))
    raise UnsupportedLabel(f"{label.name} is a one-qubit gate")


def gate_dirac_form(label: GateLabel, basis: np.ndarray | None = None) -> DiracCoefficients:
    return decompose(gate_dirac_operator(label, basis), basis)


def not_from_parity_time(basis: np.ndarray | None = None) -> np.ndarray:
    """``i P T``, which is the two-qubit NOT (= gamma_5)."""
    return 1j * symmetry_operator(SymmetryLabel.PT, basis)


def swap_bell_decomposition(tol: float = DEFAULT_TOL) -> tuple[dict[BellLabel, int], float]:
    """Write SWAP as a signed sum of the four Bell projectors.

    The signs are read off SWAP's action on each Bell state (every Bell state
    is a SWAP eigenvector).  Returns ``(signs, max_error)`` where
    ``max_error`` compares the signed sum with the explicit SWAP matrix.
    """
    tol = check_tol(tol)
    swap = gate(GateLabel.SWAP)
    signs: dict[BellLabel, int] = {}
    for b in BellLabel:
        act = apply_to_bell(swap, b, tol)
        if act.mixes or act.target is not b:
            raise ValueError(f"SWAP does not preserve {b.name}")
        signs[b] = int(round(act.phase.real))
    total = sum(s * bell_projector(b).m for b, s in signs.items())
    return signs, max_abs_diff(total, swap)


# --- even / odd density matrices -------------------------------------------

class Parity(enum.Enum):
    EVEN = "EVEN"
    ODD = "ODD"


class EvenOddKind(enum.Enum):
    EVEN_PLUS = "EVEN_PLUS"
    EVEN_MINUS = "EVEN_MINUS"
    ODD_PLUS = "ODD_PLUS"
    ODD_MINUS = "ODD_MINUS"
    NEITHER = "NEITHER"


def _sign(sign) -> int:
    if sign in ("+", 1, +1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def even_odd_template(kind: Parity | str, sign) -> np.ndarray:
    """Explicit even/odd pure-state matrices.

    EVEN: ``1/2 [[1, ±1], [±1, 1]]`` on ``|uu>, |ud>``; ODD: the same block on
    ``|ud>, |du>``.
    """
    kind, s = Parity(kind), _sign(sign)
    m = np.zeros((4, 4), dtype=np.complex128)
    idx = (0, 1) if kind is Parity.EVEN else (1, 2)
    m[np.ix_(idx, idx)] = 0.5 * np.array([[1, s], [s, 1]])
    return m


def even_odd_dirac_form(kind: Parity | str, sign,
                        basis: np.ndarray | None = None) -> np.ndarray:
    """The templates written as gamma-matrix combinations.

    even(±) = 1/4 (I - g4 ∓ i g2 g3 ± i g1 g5)
    odd(±)  = 1/4 (I - i g3 g5 ± i g1 g4 ± g2)
    """
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    b = BASIS if basis is None else basis
    kind, s = Parity(kind), _sign(sign)
    unit = b[DiracLabel.UNIT]
    if kind is Parity.EVEN:
        return 0.25 * (unit - g(4) - s * 1j * g(2) @ g(3) + s * 1j * g(1) @ g(5))
    return 0.25 * (unit - 1j * g(3) @ g(5) + s * 1j * g(1) @ g(4) + s * g(2))


def even_state_vector(sign) -> np.ndarray:
    """``(|Ψ+> + |Ψ-> ± |Φ+> ± |Φ->) / 2``, whose projector is the even template."""
    s = _sign(sign)
    v = (bell_state(BellLabel.PSI_PLUS) + bell_state(BellLabel.PSI_MINUS)
         + s * bell_state(BellLabel.PHI_PLUS) + s * bell_state(BellLabel.PHI_MINUS))
    return v / np.linalg.norm(v)


_TEMPLATES = {
    EvenOddKind.EVEN_PLUS: (Parity.EVEN, "+"),
    EvenOddKind.EVEN_MINUS: (Parity.EVEN, "-"),
    EvenOddKind.ODD_PLUS: (Parity.ODD, "+"),
    EvenOddKind.ODD_MINUS: (Parity.ODD, "-"),
}


@dataclass(frozen=True)
class EvenOddVerdict:
    kind: EvenOddKind
    c_invariant: bool
    p_invariant: bool
    separable_marginal: bool
    marginal_purities: tuple[float, float] = (float("nan"), float("nan"))

    def to_jsonable(self) -> dict:
        return {
            "kind": self.kind.value,
            "c_invariant": self.c_invariant,
            "p_invariant": self.p_invariant,
            "separable_marginal": self.separable_marginal,
            "marginal_purities": list(self.marginal_purities),
        }


def is_invariant(op, d, tol: float = DEFAULT_TOL) -> bool:
    """True when conjugation by ``op`` leaves ``d`` unchanged."""
    op = as_matrix(op, 4)
    return max_abs_diff(op @ d @ op.conj().T, d) <= tol


def classify_even_odd(d, tol: float = DEFAULT_TOL) -> EvenOddVerdict:
    """Match ``d`` against the four even/odd templates and test its symmetries.

    Raises
    ------
    BadDensity
        If ``d`` is not Hermitian with unit trace.
    """
    tol = check_tol(tol)
    try:
        d = as_matrix(d, 4)
    except ValueError as exc:
        raise BadDensity(str(exc)) from None
    if not is_hermitian(d, tol):
        raise BadDensity("matrix is not Hermitian")
    if abs(np.trace(d) - 1) > tol:
        raise BadDensity(f"trace is {np.trace(d):.12g}, expected 1")
    kind = EvenOddKind.NEITHER
    for k, (par, s) in _TEMPLATES.items():
        if max_abs_diff(d, even_odd_template(par, s)) <= tol:
            kind = k
            break
    pa, pb = marginal_mixedness(d, tol)
    return EvenOddVerdict(
        kind=kind,
        c_invariant=is_invariant(symmetry_operator(SymmetryLabel.C), d, tol),
        p_invariant=is_invariant(symmetry_operator(SymmetryLabel.P), d, tol),
        separable_marginal=abs(pa - 1) <= tol and abs(pb - 1) <= tol,
        marginal_purities=(pa, pb),
    )


# --- unitaries encoding the even two-bit functions ---------------------------

class AMUnitaryLabel(enum.Enum):
    U04 = "U04"
    U40 = "U40"
    U22_G4_PLUS = "U22_G4_PLUS"
    U22_G4_MINUS = "U22_G4_MINUS"
    U22_IG1G2_PLUS = "U22_IG1G2_PLUS"
    U22_IG1G2_MINUS = "U22_IG1G2_MINUS"
    U22_IG3G5_PLUS = "U22_IG3G5_PLUS"
    U22_IG3G5_MINUS = "U22_IG3G5_MINUS"


def am_unitary(label: AMUnitaryLabel, basis: np.ndarray | None = None) -> np.ndarray:
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    label = AMUnitaryLabel(label)
    if label is AMUnitaryLabel.U04:
        return I4.copy()
    if label is AMUnitaryLabel.U40:
        return -I4
    sign = 1 if label.name.endswith("PLUS") else -1
    if "_G4_" in label.name:
        return sign * g(4)
    if "IG1G2" in label.name:
        return sign * 1j * g(1) @ g(2)
    return sign * 1j * g(3) @ g(5)


# tensor factors (A, B) of each unitary, up to an overall sign
AM_FACTORS = {
    AMUnitaryLabel.U04: (I2, I2),
    AMUnitaryLabel.U40: (I2, I2),
    AMUnitaryLabel.U22_G4_PLUS: (SIGMA_3, I2),
    AMUnitaryLabel.U22_G4_MINUS: (SIGMA_3, I2),
    AMUnitaryLabel.U22_IG1G2_PLUS: (I2, SIGMA_3),
    AMUnitaryLabel.U22_IG1G2_MINUS: (I2, SIGMA_3),
    AMUnitaryLabel.U22_IG3G5_PLUS: (SIGMA_3, SIGMA_3),
    AMUnitaryLabel.U22_IG3G5_MINUS: (SIGMA_3, SIGMA_3),
}
