"""Bell and singlet-triplet bases, the T/C/P operators, and their action on Bell states.

The symmetry operators are plain 4x4 unitaries.  They act on states by left
multiplication and on operators by conjugation ``O M O^H``; time reversal is
*not* made antiunitary.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .dirac import BASIS, DiracLabel, gamma
from .linalg import DEFAULT_TOL, SIGMA_1, SIGMA_3, as_matrix, check_tol

_R2 = 1 / np.sqrt(2)


class UnsupportedLabel(ValueError):
    pass


class BellLabel(enum.IntEnum):
    PSI_PLUS = 0
    PSI_MINUS = 1
    PHI_PLUS = 2
    PHI_MINUS = 3

    @property
    def symbol(self) -> str:
        return {0: "Ψ+", 1: "Ψ-", 2: "Φ+", 3: "Φ-"}[self.value]


class SpinLabel(enum.IntEnum):
    SINGLET = 0
    T_PLUS = 1
    T_ZERO = 2
    T_MINUS = 3


class SymmetryLabel(enum.Enum):
    C = "C"
    P = "P"
    T = "T"
    CP = "CP"
    PT = "PT"
    TC = "TC"
    TCP = "TCP"


_BELL = {
    BellLabel.PSI_PLUS: np.array([0, _R2, _R2, 0], dtype=np.complex128),
    BellLabel.PSI_MINUS: np.array([0, _R2, -_R2, 0], dtype=np.complex128),
    BellLabel.PHI_PLUS: np.array([_R2, 0, 0, _R2], dtype=np.complex128),
    BellLabel.PHI_MINUS: np.array([_R2, 0, 0, -_R2], dtype=np.complex128),
}

# columns are the Bell states in BellLabel order
BELL_MATRIX = np.stack([_BELL[b] for b in BellLabel], axis=1)
BELL_MATRIX.setflags(write=False)


def bell_state(label: BellLabel) -> np.ndarray:
    return _BELL[BellLabel(label)].copy()


def outer(u, v=None) -> np.ndarray:
    """``|u><v|`` (``|u><u|`` when ``v`` is omitted)."""
    u = np.asarray(u, dtype=np.complex128)
    v = u if v is None else np.asarray(v, dtype=np.complex128)
    return np.outer(u, v.conj())


def bell_projector_matrix(label: BellLabel) -> np.ndarray:
    b = bell_state(label)
    return outer(b)


def spin_state(label: SpinLabel) -> np.ndarray:
    """Singlet/triplet states written as combinations of Bell states."""
    label = SpinLabel(label)
    phi_p, phi_m = _BELL[BellLabel.PHI_PLUS], _BELL[BellLabel.PHI_MINUS]
    if label is SpinLabel.SINGLET:
        return bell_state(BellLabel.PSI_MINUS)
    if label is SpinLabel.T_ZERO:
        return bell_state(BellLabel.PSI_PLUS)
    if label is SpinLabel.T_PLUS:
        return _R2 * (phi_p + phi_m)
    return _R2 * (phi_p - phi_m)


def bell_operator() -> np.ndarray:
    """CHSH-type Bell operator ``2 sqrt(2) (|Φ+><Φ+| - |Ψ-><Ψ-|)``."""
    return 2 * np.sqrt(2) * (bell_projector_matrix(BellLabel.PHI_PLUS)
                             - bell_projector_matrix(BellLabel.PSI_MINUS))


def bell_operator_pauli_form() -> np.ndarray:
    return np.sqrt(2) * (np.kron(SIGMA_1, SIGMA_1) + np.kron(SIGMA_3, SIGMA_3))


def _tcp(basis=None) -> dict[str, np.ndarray]:
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    return {"T": g(5) @ g(4), "C": -1j * g(2), "P": 1j * g(4)}


def symmetry_operator(label: SymmetryLabel, basis: np.ndarray | None = None) -> np.ndarray:
    """Matrix of a discrete symmetry or of a product of them.

    T, C and P come from the gamma matrices (``g5 g4``, ``-i g2``, ``i g4``);
    products are taken in the order the label is spelled, e.g. ``TC = T @ C``.
    """
    label = SymmetryLabel(label)
    ops = _tcp(basis)
    out = np.eye(4, dtype=np.complex128)
    for ch in label.value:
        out = out @ ops[ch]
    return out


def symmetry_operator_gamma_form(label: SymmetryLabel,
                                 basis: np.ndarray | None = None) -> np.ndarray:
    """The same operators written directly as gamma products.

    Note that ``T @ C`` is ``+Sigma_2``; the sign is fixed by the product, not
    by a quoted closed form.
    """
    g = lambda mu: gamma(mu, basis)  # noqa: E731
    b = BASIS if basis is None else basis
    label = SymmetryLabel(label)
    return {
        SymmetryLabel.T: g(5) @ g(4),
        SymmetryLabel.C: -1j * g(2),
        SymmetryLabel.P: 1j * g(4),
        SymmetryLabel.TC: b[DiracLabel.SIGMA_2],
        SymmetryLabel.CP: g(2) @ g(4),
        SymmetryLabel.PT: -1j * g(5),
        SymmetryLabel.TCP: g(2) @ g(5),
    }[label]


@dataclass(frozen=True)
class PhaseAction:
    """Result of applying an operator to a Bell state.

    ``target`` and ``phase`` are ``None`` when the image is spread over more
    than one Bell state (or vanishes).
    """

    target: BellLabel | None
    phase: complex | None

    @property
    def mixes(self) -> bool:
        return self.target is None

    def __str__(self) -> str:
        if self.mixes:
            return "MIXES"
        return f"{format_phase(self.phase)}{self.target.symbol}"


def bell_coefficients(vec) -> np.ndarray:
    """Components ``<b|vec>`` for the four Bell states."""
    return BELL_MATRIX.conj().T @ np.asarray(vec, dtype=np.complex128)


def apply_to_bell(op, state: BellLabel, tol: float = DEFAULT_TOL) -> PhaseAction:
    tol = check_tol(tol)
    coeffs = bell_coefficients(as_matrix(op, 4) @ _BELL[BellLabel(state)])
    hits = np.flatnonzero(np.abs(coeffs) > tol)
    if len(hits) != 1:
        return PhaseAction(None, None)
    k = int(hits[0])
    return PhaseAction(BellLabel(k), complex(coeffs[k]))


def format_phase(z: complex, tol: float = DEFAULT_TOL) -> str:
    """Render a unit phase as ``+``, ``-``, ``+i``, ``-i``, or a general number."""
    for text, val in (("+", 1), ("-", -1), ("+i", 1j), ("-i", -1j)):
        if abs(z - val) <= tol:
            return text
    return f"({z.real:.12g}{z.imag:+.12g}j)"


# row order: UNIT, gamma_1..gamma_5, Sigma_k, i g_j g_4, i g_j g_5, i g_4 g_5
DIRAC_TABLE_ORDER = (
    [DiracLabel.UNIT]
    + [DiracLabel.GAMMA_1, DiracLabel.GAMMA_2, DiracLabel.GAMMA_3,
       DiracLabel.GAMMA_4, DiracLabel.GAMMA_5]
    + [DiracLabel.SIGMA_1, DiracLabel.SIGMA_2, DiracLabel.SIGMA_3]
    + [DiracLabel.IG1G4, DiracLabel.IG2G4, DiracLabel.IG3G4]
    + [DiracLabel.IG1G5, DiracLabel.IG2G5, DiracLabel.IG3G5, DiracLabel.IG4G5]
)
SYMMETRY_TABLE_ORDER = list(SymmetryLabel)


@dataclass(frozen=True)
class TableEntry:
    operator: str
    source: BellLabel
    action: PhaseAction

    def to_jsonable(self) -> dict:
        a = self.action
        return {
            "operator": self.operator,
            "source": self.source.name,
            "target": None if a.mixes else a.target.name,
            "phase": None if a.mixes else [a.phase.real, a.phase.imag],
        }


def derive_symmetry_table(tol: float = DEFAULT_TOL,
                          basis: np.ndarray | None = None) -> list[TableEntry]:
    """Action of all 16 Dirac matrices and 7 symmetry operators on the Bell states.

    64 Dirac rows followed by 28 symmetry rows, each computed by direct
    matrix-vector products.
    """
    b = BASIS if basis is None else basis
    rows: list[TableEntry] = []
    for lab in DIRAC_TABLE_ORDER:
        for src in BellLabel:
            rows.append(TableEntry(lab.name, src, apply_to_bell(b[lab], src, tol)))
    for sym in SYMMETRY_TABLE_ORDER:
        op = symmetry_operator(sym, b)
        for src in BellLabel:
            rows.append(TableEntry(sym.value, src, apply_to_bell(op, src, tol)))
    return rows


def table_to_text(rows: list[TableEntry]) -> str:
    lines = []
    by_op: dict[str, list[TableEntry]] = {}
    for r in rows:
        by_op.setdefault(r.operator, []).append(r)
    width = max(len(k) for k in by_op)
    for op, entries in by_op.items():
        cells = [f"{e.source.symbol} → {e.action}" for e in entries]
        lines.append(f"{op:<{width}}: " + "   ".join(cells))
    return "\n".join(lines)


def table_to_json(rows: list[TableEntry]) -> str:
    return json.dumps([r.to_jsonable() for r in rows], indent=2)


def gamma_from_bell_outer(label: DiracLabel) -> np.ndarray:
    """Build ``gamma_1..gamma_4`` from outer products of Bell states."""
    label = DiracLabel(label)
    pp, pm, fp, fm = (_BELL[b] for b in BellLabel)
    if label is DiracLabel.GAMMA_1:
        return 1j * (outer(pp, pm) - outer(pm, pp) + outer(fp, fm) - outer(fm, fp))
    if label is DiracLabel.GAMMA_2:
        return outer(pp) - outer(pm) - outer(fp) + outer(fm)
    if label is DiracLabel.GAMMA_3:
        return 1j * (outer(pp, fp) - outer(pm, fm) - outer(fp, pp) + outer(fm, pm))
    if label is DiracLabel.GAMMA_4:
        return -(outer(pp, pm) + outer(pm, pp) + outer(fp, fm) + outer(fm, fp))
    raise UnsupportedLabel(f"no Bell outer-product form for {label.name}")


def gamma2_spin_form() -> np.ndarray:
    """``gamma_2`` in the singlet-triplet basis.

    ``gamma_2`` is diagonal on ``|t0>`` (+1) and ``|s>`` (-1) but couples the
    two polarized triplets: ``|t0><t0| - |s><s| - |t+><t-| - |t-><t+|``.
    """
    s, tp, t0, tm = (spin_state(lab) for lab in SpinLabel)
    return outer(t0) - outer(s) - outer(tp, tm) - outer(tm, tp)


def gamma2_spin_form_diagonal() -> np.ndarray:
    """The all-diagonal variant ``|t0><t0| - |s><s| - |t+><t+| - |t-><t-|``.

    Kept only to show it is *not* ``gamma_2``: it has trace -2.
    """
    s, tp, t0, tm = (spin_state(lab) for lab in SpinLabel)
    return outer(t0) - outer(s) - outer(tp) - outer(tm)
