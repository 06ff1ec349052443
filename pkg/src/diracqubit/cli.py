"""Command-line front end.

    diracqubit verify [--tol T] [--format text|json]
    diracqubit decompose MATRIX.json [--basis dirac|pauli|bell]
    diracqubit density --sa x,y,z --sb x,y,z --c c11,...,c33
    diracqubit table
    diracqubit gate {NOT1,HADAMARD1,CNOT,NOT2,SWAP}
    diracqubit classify MATRIX.json

Exit status is 0 on success, 1 when ``verify`` has failing checks, and 2 for
bad input (unreadable file, malformed matrix, unknown gate, ...).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bell import BELL_MATRIX, BellLabel, derive_symmetry_table, table_to_json, table_to_text
from .density import (
    BlochOutOfBall,
    DensityParams,
    NotPositive,
    correlation_residual,
    density_dirac_coeffs,
    density_from_params,
    entanglement_signature,
    marginal_mixedness,
    marginals,
    purity,
)
from .dirac import DiracLabel, decompose, reconstruct
from .gates import BadDensity, GateLabel, UnknownGate, classify_even_odd, gate, gate_dirac_form
from .linalg import (
    DEFAULT_TOL,
    I2,
    PAULI,
    hermitian_eigenvalues,
    matrix_from_jsonable,
    matrix_to_jsonable,
    max_abs_diff,
)
from .reference import SWAP_SIGNS
from .verify import corrupted_basis, run_checks

PAULI4 = (I2,) + PAULI
PAULI_NAMES = ("I", "X", "Y", "Z")


class ParseError(ValueError):
    pass


# --- formatting --------------------------------------------------------------

def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def fmt_complex(z: complex) -> str:
    z = complex(z)
    re, im = z.real, z.imag
    if abs(im) == 0:
        return fmt_real(re)
    if abs(re) == 0:
        return f"{fmt_real(im)}j"
    return f"{fmt_real(re)}{im:+.12g}j"


def fmt_matrix(m) -> str:
    cells = [[fmt_complex(z) for z in row] for row in np.asarray(m)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  [" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _emit(args, text: str, doc) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# --- input -------------------------------------------------------------------

def load_matrix(path: str) -> np.ndarray:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    try:
        m = matrix_from_jsonable(json.loads(p.read_text()))
    except (json.JSONDecodeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if m.shape != (4, 4):
        raise ParseError(f"{path}: expected a 4x4 matrix, got {m.shape[0]}x{m.shape[1]}")
    return m


def parse_floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"{what}: expected {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n:
        raise ParseError(f"{what}: expected {n} numbers, got {len(vals)}")
    return vals


# --- commands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    basis = None
    if args.corrupt:
        basis = corrupted_basis(DiracLabel.parse(args.corrupt))
    report = run_checks(args.tol, basis)
    _emit(args, report.to_text(), report.to_jsonable())
    return 0 if report.ok else 1


def _decompose_dirac(m):
    c = decompose(m)
    err = max_abs_diff(reconstruct(c), m)
    rows = [(lab.name, c[lab]) for lab in DiracLabel]
    return rows, err


def _decompose_pauli(m):
    coeffs = np.array([[np.trace(np.kron(a, b) @ m) / 4 for b in PAULI4] for a in PAULI4])
    back = sum(coeffs[i, j] * np.kron(PAULI4[i], PAULI4[j]) for i in range(4) for j in range(4))
    rows = [(f"{PAULI_NAMES[i]}{PAULI_NAMES[j]}", coeffs[i, j])
            for i in range(4) for j in range(4)]
    return rows, max_abs_diff(back, m)


def _decompose_bell(m):
    coeffs = BELL_MATRIX.conj().T @ m @ BELL_MATRIX  # <b|m|b'>
    back = BELL_MATRIX @ coeffs @ BELL_MATRIX.conj().T
    rows = [(f"|{x.name}><{y.name}|", coeffs[x, y]) for x in BellLabel for y in BellLabel]
    return rows, max_abs_diff(back, m)


def cmd_decompose(args) -> int:
    m = load_matrix(args.input)
    rows, err = {"dirac": _decompose_dirac, "pauli": _decompose_pauli,
                 "bell": _decompose_bell}[args.basis](m)
    width = max(len(k) for k, _ in rows)
    text = "\n".join(f"{k:<{width}}  {fmt_complex(v)}" for k, v in rows)
    text += f"\nreconstruction error: {err:.3e}"
    doc = {"basis": args.basis,
           "coefficients": {k: _pair(v) for k, v in rows},
           "reconstruction_error": err}
    _emit(args, text, doc)
    return 0


def _density_params(args) -> DensityParams:
    sa = parse_floats(args.sa, 3, "--sa")
    sb = parse_floats(args.sb, 3, "--sb")
    c = parse_floats(args.c, 9, "--c")
    return DensityParams(sa, sb, np.reshape(c, (3, 3)))


def cmd_density(args) -> int:
    p = _density_params(args)
    try:
        d = density_from_params(p, validate=True)
        positive = True
    except NotPositive as exc:
        print(f"warning: {exc}", file=sys.stderr)
        d = density_from_params(p)
        positive = False
    m = d.m
    ev = hermitian_eigenvalues(m)
    rho_a, rho_b = marginals(m)
    pur_a, pur_b = marginal_mixedness(m, args.tol)
    res = correlation_residual(p)
    coeffs = density_dirac_coeffs(p)
    sig = entanglement_signature(p, args.tol)
    doc = {
        "params": p.to_jsonable(),
        "matrix": matrix_to_jsonable(m)["rows"],
        "positive_semidefinite": positive,
        "eigenvalues": ev.tolist(),
        "marginal_A": matrix_to_jsonable(rho_a)["rows"],
        "marginal_B": matrix_to_jsonable(rho_b)["rows"],
        "purity": purity(m),
        "marginal_purities": [pur_a, pur_b],
        "correlation_residual": res.tolist(),
        "dirac_coefficients": {lab.name: float(coeffs[lab].real) for lab in DiracLabel},
        "entanglement_signature": sig,
    }
    text = "\n".join([
        "density matrix:", fmt_matrix(m),
        f"positive semidefinite: {'yes' if positive else 'NO'}",
        "eigenvalues: " + ", ".join(fmt_real(x) for x in ev),
        "marginal A:", fmt_matrix(rho_a),
        "marginal B:", fmt_matrix(rho_b),
        f"purity: {fmt_real(purity(m))}",
        f"marginal purities: {fmt_real(pur_a)}, {fmt_real(pur_b)}",
        "correlation residual C - sA sB^T:",
        *("  " + "  ".join(fmt_real(x) for x in row) for row in res),
        "Dirac coefficients:",
        *(f"  {lab.name:<8} {fmt_real(coeffs[lab].real)}"
          for lab, _ in coeffs.nonzero(args.tol).items()),
        f"entanglement signature: {sig}",
    ])
    _emit(args, text, doc)
    return 0


def cmd_table(args) -> int:
    rows = derive_symmetry_table(args.tol)
    if args.format == "json":
        print(table_to_json(rows))
    else:
        print(table_to_text(rows))
    return 0


def _swap_sum_text() -> str:
    idx = {BellLabel.PSI_PLUS: 1, BellLabel.PSI_MINUS: 2,
           BellLabel.PHI_PLUS: 3, BellLabel.PHI_MINUS: 4}
    return " ".join(f"{'+' if s > 0 else '−'}Π{idx[b]}" for b, s in SWAP_SIGNS.items())


def cmd_gate(args) -> int:
    label = GateLabel.parse(args.label)
    m = gate(label)
    doc = {"gate": label.name, "matrix": matrix_to_jsonable(m)["rows"]}
    lines = [f"{label.name}:", fmt_matrix(m)]
    if m.shape == (4, 4):
        c = gate_dirac_form(label)
        nz = c.nonzero(args.tol)
        doc["dirac_coefficients"] = {lab.name: _pair(v) for lab, v in nz.items()}
        lines.append("Dirac form: " + "  ".join(f"{fmt_complex(v)}·{lab.name}"
                                                for lab, v in nz.items()))
        doc["reconstruction_error"] = max_abs_diff(reconstruct(c), m)
    if label is GateLabel.SWAP:
        doc["bell_projector_sum"] = _swap_sum_text()
        lines.append("SWAP = " + _swap_sum_text())
    if label is GateLabel.NOT2:
        doc["identity"] = "γ5 = i·P·T"
        lines.append("NOT2 = γ5 = i·P·T")
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_classify(args) -> int:
    verdict = classify_even_odd(load_matrix(args.input), args.tol)
    doc = verdict.to_jsonable()
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    _emit(args, text, doc)
    return 0


# --- entry point -------------------------------------------------------------

def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0 or x == float("inf"):
        raise argparse.ArgumentTypeError("tolerance must be positive and finite")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="comparison tolerance (default 1e-9)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="diracqubit",
        description="Two-qubit operators in the Dirac-matrix basis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("--corrupt", metavar="LABEL",
                   help="negate one basis matrix before checking (self-test hook)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="expand a 4x4 matrix in a basis")
    p.add_argument("input", help='JSON file {"rows": [[[re, im], ...], ...]}')
    p.add_argument("--basis", choices=("dirac", "pauli", "bell"), default="dirac")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("density", parents=[common], help="analyse a two-qubit state")
    p.add_argument("--sa", default="0,0,0", help="Bloch vector of qubit A")
    p.add_argument("--sb", default="0,0,0", help="Bloch vector of qubit B")
    p.add_argument("--c", default="0,0,0,0,0,0,0,0,0",
                   help="correlation matrix, nine values row-major")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("table", parents=[common], help="action of operators on Bell states")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gate", parents=[common], help="show a gate and its Dirac form")
    p.add_argument("label", help=", ".join(g.name for g in GateLabel))
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("classify", parents=[common], help="even/odd classification")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, ParseError, UnknownGate, BadDensity, BlochOutOfBall,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
