"""Named identity checks over the whole library.

Every check returns the largest numerical deviation it saw; a check passes
when that deviation is at most the tolerance.  Structural checks (counts,
labels) report 0 on success and ``inf`` on failure.

Most checks accept an alternative 16x4x4 ``basis`` so that a deliberately
corrupted basis can be fed through the suite.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import reference as ref
from .bell import (
    BELL_MATRIX,
    BellLabel,
    SpinLabel,
    SymmetryLabel,
    apply_to_bell,
    bell_operator,
    bell_operator_pauli_form,
    bell_projector_matrix,
    gamma_from_bell_outer,
    gamma2_spin_form,
    outer,
    spin_state,
    symmetry_operator,
    symmetry_operator_gamma_form,
)
from .density import (
    DensityParams,
    density_dirac_coeffs,
    density_from_params,
    embed,
    embed_dirac_coeffs,
    marginal_mixedness,
    one_qubit_density,
    params_of,
    product_density,
)
from .dirac import (
    BASIS,
    DiracLabel,
    TensorRank,
    _TENSOR_FORM,
    decompose,
    gamma,
    product_form,
    rank_of,
    reconstruct,
    verify_clifford,
)
from .gates import (
    AM_FACTORS,
    AMUnitaryLabel,
    EvenOddKind,
    GateLabel,
    Parity,
    am_unitary,
    classify_even_odd,
    even_odd_dirac_form,
    even_odd_template,
    even_state_vector,
    gate,
    gate_dirac_form,
    is_invariant,
    not_from_parity_time,
)
from .linalg import (
    DEFAULT_TOL,
    I2,
    I4,
    PAULI,
    SIGMA_2,
    SIGMA_3,
    check_tol,
    kron_factor,
    max_abs_diff,
    partial_trace,
)

SEED = 20011
INF = math.inf


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail"
    detail: str
    max_error: float


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if c.status != "pass"]

    def to_jsonable(self) -> dict:
        out = []
        for c in self.checks:
            d = asdict(c)
            if math.isinf(d["max_error"]):
                d["max_error"] = None  # JSON has no infinity
            out.append(d)
        return {"ok": self.ok, "passed": len(out) - len(self.failed),
                "total": len(out), "checks": out}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), indent=2)

    def to_text(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = []
        for c in self.checks:
            err = "inf" if math.isinf(c.max_error) else f"{c.max_error:.3e}"
            lines.append(f"{c.status.upper():4}  {c.name:<{width}}  max_error={err}  {c.detail}")
        n_fail = len(self.failed)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)


# --- random samples ----------------------------------------------------------

def random_density(rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random two-qubit density matrix (Ginibre ensemble)."""
    k = rank or int(rng.integers(1, 5))
    g = rng.normal(size=(4, k)) + 1j * rng.normal(size=(4, k))
    d = g @ g.conj().T
    return d / np.trace(d).real


def random_params(rng: np.random.Generator) -> DensityParams:
    return params_of(random_density(rng))


def random_unit_vector(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_matrix(rng: np.random.Generator) -> np.ndarray:
    return rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))


# --- individual checks -------------------------------------------------------
# each takes (basis, tol) and returns (max_error, detail)

def _tensor_products(b, tol):
    errs = {}
    for lab in DiracLabel:
        left, sign, right = _TENSOR_FORM[lab]
        errs[lab] = max_abs_diff(b[lab], sign * np.kron(left, right))
    worst = max(errs, key=errs.get)
    bad = [lab.name for lab, e in errs.items() if e > tol]
    return errs[worst], ("mismatch: " + ", ".join(bad)) if bad else "all 16 match their Pauli products"


def _product_relations(b, tol):
    errs = {lab: max_abs_diff(product_form(lab, b), b[lab]) for lab in DiracLabel}
    bad = [lab.name for lab, e in errs.items() if e > tol]
    return max(errs.values()), ("mismatch: " + ", ".join(bad)) if bad else "gamma products reproduce the basis"


def _basis_elements(b, tol):
    err = max_abs_diff(b[DiracLabel.UNIT], I4)
    for lab in DiracLabel:
        m = b[lab]
        err = max(err, max_abs_diff(m, m.conj().T), max_abs_diff(m @ m, I4))
        if lab is not DiracLabel.UNIT:
            err = max(err, abs(np.trace(m)))
    return err, "Hermitian, square to I, traceless (except UNIT)"


def _rank_counts(b, tol):
    counts = {r: 0 for r in TensorRank}
    for lab in DiracLabel:
        counts[rank_of(lab)] += 1
    got = tuple(counts[r] for r in TensorRank)
    return (0.0 if got == (1, 4, 6, 4, 1) else INF), f"counts {got}"


def _clifford(b, tol):
    err = 0.0
    for mu in range(1, 5):
        for nu in range(1, 5):
            expected = 2 * I4 if mu == nu else 0 * I4
            anti = gamma(mu, b) @ gamma(nu, b) + gamma(nu, b) @ gamma(mu, b)
            err = max(err, max_abs_diff(anti, expected))
    bad = [p for p in verify_clifford(tol, b) if isinstance(p[0], int) and p[0] != 5]
    return err, f"violations {bad}" if bad else "16 anticommutators"


def _gamma5(b, tol):
    g = lambda mu: gamma(mu, b)  # noqa: E731
    err = max_abs_diff(g(1) @ g(2) @ g(3) @ g(4), g(5))
    for mu in range(1, 5):
        err = max(err, max_abs_diff(g(5) @ g(mu) + g(mu) @ g(5), 0 * I4))
    return err, "g5 = g1 g2 g3 g4, anticommutes with g1..g4"


def _orthogonality(b, tol):
    gram = np.einsum("aij,bji->ab", b, b)
    return max_abs_diff(gram, 4 * np.eye(16)), "Tr(G_A G_B) = 4 delta_AB"


def _completeness(b, tol):
    rng = np.random.default_rng(SEED)
    err = 0.0
    for _ in range(1000):
        m = random_matrix(rng)
        err = max(err, max_abs_diff(reconstruct(decompose(m, b), b), m))
    return err, "1000 random matrices"


def _hermitian_real_coeffs(b, tol):
    rng = np.random.default_rng(SEED + 1)
    err = 0.0
    for _ in range(100):
        m = random_matrix(rng)
        h = m + m.conj().T
        c = decompose(h, b)
        err = max(err, float(np.max(np.abs(c.values.imag))),
                  max_abs_diff(reconstruct(c, b), h))
    return err, "100 random Hermitian matrices have real coefficients"


def _tcp_operators(b, tol):
    expected = {
        SymmetryLabel.T: 1j * np.kron(SIGMA_2, I2),
        SymmetryLabel.C: -1j * np.kron(SIGMA_2, SIGMA_2),
        SymmetryLabel.P: -1j * np.kron(SIGMA_3, I2),
    }
    err = max(max_abs_diff(symmetry_operator(s, b), m) for s, m in expected.items())
    return err, "T = i s2(x)I, C = -i s2(x)s2, P = -i s3(x)I"


def _symmetry_products(b, tol):
    err = max(max_abs_diff(symmetry_operator(s, b), symmetry_operator_gamma_form(s, b))
              for s in SymmetryLabel)
    return err, "TC = Sigma_2, CP = g2 g4, PT = -i g5, TCP = g2 g5"


def _symmetry_unitary(b, tol):
    err = 0.0
    for s in SymmetryLabel:
        o = symmetry_operator(s, b)
        err = max(err, max_abs_diff(o @ o.conj().T, I4))
    return err, "all seven are unitary"


def _compare_actions(ops: dict, expected: dict, tol):
    err, bad = 0.0, []
    for name, op in ops.items():
        for src in BellLabel:
            tgt, ph = expected[name][src]
            act = apply_to_bell(op, src, tol)
            if act.mixes or act.target is not tgt:
                err = INF
                bad.append(f"{getattr(name, 'name', name)}|{src.name}>")
                continue
            e = max(abs(act.phase - ph), abs(abs(act.phase) - 1))
            if e > tol:
                bad.append(f"{getattr(name, 'name', name)}|{src.name}> phase")
            err = max(err, e)
    return err, bad


def _dirac_actions(b, tol):
    err, bad = _compare_actions({lab: b[lab] for lab in DiracLabel}, ref.DIRAC_ACTIONS, tol)
    return err, ("wrong: " + ", ".join(bad)) if bad else "64 single-state actions match"


def _symmetry_actions(b, tol):
    ops = {s: symmetry_operator(s, b) for s in SymmetryLabel}
    err, bad = _compare_actions(ops, ref.symmetry_actions(), tol)
    return err, ("wrong: " + ", ".join(bad)) if bad else "28 single-state actions match"


def _c_only_preserves(b, tol):
    preserving = []
    for s in SymmetryLabel:
        op = symmetry_operator(s, b)
        acts = [apply_to_bell(op, src, tol) for src in BellLabel]
        if all(not a.mixes and a.target is src for a, src in zip(acts, BellLabel)):
            preserving.append(s.value)
    ok = preserving == ["C"]
    return (0.0 if ok else INF), f"label-preserving: {preserving}"


def _bell_orthonormal(b, tol):
    return max_abs_diff(BELL_MATRIX.conj().T @ BELL_MATRIX, I4), "Gram matrix is I"


def _bell_completeness(b, tol):
    total = sum(bell_projector_matrix(lab) for lab in BellLabel)
    return max_abs_diff(total, I4), "sum of projectors is I"


def _bell_operator(b, tol):
    B = bell_operator()
    err = max_abs_diff(B, bell_operator_pauli_form())
    err = max(err, max_abs_diff(B @ B, 4 * (I4 - np.kron(SIGMA_2, SIGMA_2))))
    ev = np.linalg.eigvalsh(B)
    err = max(err, max_abs_diff(ev, [-2 * np.sqrt(2), 0, 0, 2 * np.sqrt(2)]))
    return err, "B = sqrt2(s1s1 + s3s3), B^2 = 4(I - s2s2)"


def _bell_projector_coeffs(b, tol):
    err = 0.0
    for lab, (c14, c2, c35) in ref.BELL_PROJECTOR_SIGNS.items():
        expected = np.zeros(16, dtype=complex)
        expected[[DiracLabel.UNIT, DiracLabel.IG1G4, DiracLabel.GAMMA_2, DiracLabel.IG3G5]] = \
            np.array([1, c14, c2, c35]) / 4
        err = max(err, max_abs_diff(decompose(bell_projector_matrix(lab), b).values, expected))
    return err, "coefficient signs of the four projectors"


def _bell_projector_pure(b, tol):
    err = 0.0
    for x in BellLabel:
        px = bell_projector_matrix(x)
        err = max(err, max_abs_diff(px @ px, px), abs(np.trace(px) - 1))
        for y in BellLabel:
            py = bell_projector_matrix(y)
            err = max(err, abs(np.trace(px @ py) - (x == y)))
    return err, "idempotent, unit trace, mutually orthogonal"


def _gamma_bell_outer(b, tol):
    labs = (DiracLabel.GAMMA_1, DiracLabel.GAMMA_2, DiracLabel.GAMMA_3, DiracLabel.GAMMA_4)
    return max(max_abs_diff(gamma_from_bell_outer(lab), b[lab]) for lab in labs), \
        "g1..g4 from Bell outer products"


def _gamma2_bell_eigen(b, tol):
    g2_bell = BELL_MATRIX.conj().T @ b[DiracLabel.GAMMA_2] @ BELL_MATRIX
    return max_abs_diff(g2_bell, np.diag([1, -1, -1, 1])), "diag(+1,-1,-1,+1) on (Ψ+,Ψ-,Φ+,Φ-)"


def _bell_marginals(b, tol):
    err = 0.0
    for lab in BellLabel:
        p = bell_projector_matrix(lab)
        err = max(err, max_abs_diff(partial_trace(p, "B"), I2 / 2),
                  max_abs_diff(partial_trace(p, "A"), I2 / 2))
    return err, "both marginals are I/2"


def _spin_orthonormal(b, tol):
    S = np.stack([spin_state(s) for s in SpinLabel], axis=1)
    err = max_abs_diff(S.conj().T @ S, I4)
    err = max(err, max_abs_diff(spin_state(SpinLabel.T_PLUS), [1, 0, 0, 0]),
              max_abs_diff(spin_state(SpinLabel.T_MINUS), [0, 0, 0, 1]))
    return err, "orthonormal; t+ = |uu>, t- = |dd>"


def _gamma2_spin(b, tol):
    return max_abs_diff(gamma2_spin_form(), b[DiracLabel.GAMMA_2]), \
        "g2 = |t0><t0| - |s><s| - |t+><t-| - |t-><t+|"


def _marginals(b, tol):
    rng = np.random.default_rng(SEED + 2)
    err = 0.0
    for _ in range(100):
        p = random_params(rng)
        d = density_from_params(p).m
        err = max(err, max_abs_diff(partial_trace(d, "B"), one_qubit_density(p.sA)),
                  max_abs_diff(partial_trace(d, "A"), one_qubit_density(p.sB)))
    return err, "Tr_B -> rho(sA), Tr_A -> rho(sB); 100 random states"


def _residual(b, tol):
    rng = np.random.default_rng(SEED + 3)
    err = 0.0
    for _ in range(100):
        p = random_params(rng)
        res = p.C - np.outer(p.sA, p.sB)
        rebuilt = product_density(p.sA, p.sB) + 0.25 * sum(
            res[i, j] * np.kron(PAULI[i], PAULI[j]) for i in range(3) for j in range(3))
        err = max(err, max_abs_diff(rebuilt, density_from_params(p).m))
    return err, "state = product part + residual correlations; 100 random states"


def _dirac_coeffs(b, tol):
    rng = np.random.default_rng(SEED + 4)
    err = 0.0
    for _ in range(100):
        p = random_params(rng)
        err = max(err, max_abs_diff(density_dirac_coeffs(p).values,
                                    decompose(density_from_params(p).m, b).values))
    return err, "parameter map matches decompose; 100 random states"


def _embed_coeffs(b, tol):
    rng = np.random.default_rng(SEED + 5)
    err = 0.0
    for _ in range(20):
        s = random_unit_vector(rng) * rng.uniform()
        for which in "AB":
            err = max(err, max_abs_diff(reconstruct(embed_dirac_coeffs(s, which), b),
                                        embed(s, which)))
        # 1/4 (I + s1 iPT - s2 iT + s3 iP)
        P = symmetry_operator(SymmetryLabel.P, b)
        T = symmetry_operator(SymmetryLabel.T, b)
        alt = 0.25 * (b[DiracLabel.UNIT] + s[0] * 1j * P @ T - s[1] * 1j * T + s[2] * 1j * P)
        err = max(err, max_abs_diff(alt, embed(s, "A")))
    return err, "one-qubit embeddings in Dirac and T/P form"


def _product_coeffs(b, tol):
    rng = np.random.default_rng(SEED + 6)
    L = DiracLabel
    err = 0.0
    for _ in range(100):
        sA, sB = random_unit_vector(rng), random_unit_vector(rng) * rng.uniform()
        c = decompose(product_density(sA, sB), b).values
        exp = np.zeros(16, dtype=complex)
        exp[L.UNIT] = 1
        exp[[L.GAMMA_5, L.IG4G5, L.GAMMA_4]] = sA[0], sA[1], -sA[2]
        for j in range(3):
            exp[L.SIGMA_1 + j] = sB[j]
            exp[L.IG1G4 + j] = sA[0] * sB[j]
            exp[L.GAMMA_1 + j] = sA[1] * sB[j]
            exp[L.IG1G5 + j] = sA[2] * sB[j]
        err = max(err, max_abs_diff(c, exp / 4))
    return err, "product-state coefficients; 100 random pairs"


def _embed_square(b, tol):
    rng = np.random.default_rng(SEED + 7)
    err = 0.0
    for _ in range(20):
        s = random_unit_vector(rng)
        for which in "AB":
            e = embed(s, which)
            err = max(err, max_abs_diff(e @ e, e / 2))
    return err, "pure s: embed(s)^2 = embed(s)/2; 20 random"


def _params_roundtrip(b, tol):
    rng = np.random.default_rng(SEED + 8)
    err = 0.0
    for _ in range(100):
        m = random_matrix(rng)
        h = m + m.conj().T
        h = h - (np.trace(h).real - 1) * I4 / 4
        err = max(err, max_abs_diff(density_from_params(params_of(h)).m, h))
    return err, "100 random Hermitian unit-trace matrices"


def _one_qubit_gates(b, tol):
    h = gate(GateLabel.HADAMARD1)
    up, dn = np.array([1, 0]), np.array([0, 1])
    h_outer = ((np.outer(up + dn, up) + np.outer(up - dn, dn)) / np.sqrt(2))
    err = max(max_abs_diff(gate(GateLabel.NOT1), np.outer(up, dn) + np.outer(dn, up)),
              max_abs_diff(h, h_outer), max_abs_diff(h @ h, I2))
    return err, "NOT = s1, H = (s1+s3)/sqrt2, H^2 = I"


def _gate_form(label: GateLabel):
    def check(b, tol):
        c = gate_dirac_form(label, b)
        exp = np.zeros(16, dtype=complex)
        for lab, v in ref.GATE_COEFFS[label.name].items():
            exp[lab] = v
        err = max(max_abs_diff(reconstruct(c, b), gate(label)),
                  max_abs_diff(c.values, exp))
        return err, f"explicit {label.name} matrix equals its gamma combination"
    return check


def _not_parity_time(b, tol):
    err = max(max_abs_diff(gate(GateLabel.NOT2), b[DiracLabel.GAMMA_5]),
              max_abs_diff(not_from_parity_time(b), b[DiracLabel.GAMMA_5]))
    return err, "NOT (x) I = g5 = i P T"


def _cnot_contains_pt(b, tol):
    c = decompose(gate(GateLabel.CNOT), b)
    return abs(c[DiracLabel.GAMMA_5] - 0.5), "CNOT has g5 = iPT coefficient 1/2"


def _swap_bell(b, tol):
    total = sum(s * bell_projector_matrix(lab) for lab, s in ref.SWAP_SIGNS.items())
    return max_abs_diff(total, gate(GateLabel.SWAP)), "SWAP = P1 - P2 + P3 + P4"


def _gates_unitary(b, tol):
    err = 0.0
    for g in GateLabel:
        u = gate(g)
        n = u.shape[0]
        err = max(err, max_abs_diff(u @ u.conj().T, np.eye(n)))
        if g is not GateLabel.HADAMARD1:
            err = max(err, max_abs_diff(u @ u, np.eye(n)))
    return err, "unitary; CNOT, NOT, SWAP square to I"


def _templates(par: Parity):
    def check(b, tol):
        err = 0.0
        for s in "+-":
            t = even_odd_template(par, s)
            err = max(err, max_abs_diff(even_odd_dirac_form(par, s, b), t),
                      max_abs_diff(t @ t, t), abs(np.trace(t) - 1))
        return err, f"{par.value.lower()} templates: gamma form, pure, unit trace"
    return check


def _odd_is_bell(b, tol):
    err = max(max_abs_diff(even_odd_template(Parity.ODD, "+"), bell_projector_matrix(BellLabel.PSI_PLUS)),
              max_abs_diff(even_odd_template(Parity.ODD, "-"), bell_projector_matrix(BellLabel.PSI_MINUS)))
    return err, "odd(+) = |Ψ+><Ψ+|, odd(-) = |Ψ-><Ψ-|"


def _even_vector(b, tol):
    err = max(max_abs_diff(outer(even_state_vector(s)), even_odd_template(Parity.EVEN, s))
              for s in "+-")
    return err, "even(±) = |v><v|, v = (Ψ+ + Ψ- ± Φ+ ± Φ-)/2"


def _even_odd_symmetry(b, tol):
    C = symmetry_operator(SymmetryLabel.C, b)
    P = symmetry_operator(SymmetryLabel.P, b)
    err = 0.0
    for s in "+-":
        odd = even_odd_template(Parity.ODD, s)
        even = even_odd_template(Parity.EVEN, s)
        err = max(err, max_abs_diff(C @ odd @ C.conj().T, odd),
                  max_abs_diff(P @ even @ P.conj().T, even))
        if is_invariant(P, odd, tol) or is_invariant(C, even, tol):
            err = INF
        err = max(err, max_abs_diff(marginal_mixedness(odd), (0.5, 0.5)),
                  max_abs_diff(marginal_mixedness(even), (1, 1)))
        vo, ve = classify_even_odd(odd, tol), classify_even_odd(even, tol)
        if vo.kind.name.startswith("EVEN") or ve.kind is EvenOddKind.NEITHER:
            err = INF
    return err, "odd: C-invariant, mixed marginals; even: P-invariant, pure marginals"


def _am_p_invariant(b, tol):
    P = symmetry_operator(SymmetryLabel.P, b)
    err = 0.0
    for lab in AMUnitaryLabel:
        u = am_unitary(lab, b)
        err = max(err, max_abs_diff(P @ u @ P.conj().T, u), max_abs_diff(u @ u.conj().T, I4))
    return err, "eight unitaries, all unitary and P-invariant"


def _am_separable(b, tol):
    err = 0.0
    for lab in AMUnitaryLabel:
        u = am_unitary(lab, b)
        fac = kron_factor(u, tol)
        if fac is None:
            return INF, f"{lab.name} does not factor"
        x, y = fac
        err = max(err, max_abs_diff(np.kron(x, y), u))
        xa, yb = AM_FACTORS[lab]
        # equal up to an overall sign
        err = max(err, min(max_abs_diff(u, np.kron(xa, yb)), max_abs_diff(u, -np.kron(xa, yb))))
    return err, "each unitary is +/- a product of I and s3"


CHECKS: list[tuple[str, Callable]] = [
    ("eq2.tensor_products", _tensor_products),
    ("eq2.product_relations", _product_relations),
    ("eq2.basis_elements", _basis_elements),
    ("eq2.rank_counts", _rank_counts),
    ("clifford.anticommutators", _clifford),
    ("clifford.gamma5", _gamma5),
    ("basis.orthogonality", _orthogonality),
    ("basis.completeness", _completeness),
    ("basis.hermitian_real_coeffs", _hermitian_real_coeffs),
    ("eq3a.tcp_operators", _tcp_operators),
    ("eq3b.symmetry_products", _symmetry_products),
    ("eq3.symmetry_unitary", _symmetry_unitary),
    ("table1.dirac_actions", _dirac_actions),
    ("table1.symmetry_actions", _symmetry_actions),
    ("eq18.c_only_preserves", _c_only_preserves),
    ("eq13.bell_orthonormal", _bell_orthonormal),
    ("eq13.bell_completeness", _bell_completeness),
    ("sec4.bell_operator", _bell_operator),
    ("eq14_15.bell_projector_coeffs", _bell_projector_coeffs),
    ("eq14_15.bell_projector_pure", _bell_projector_pure),
    ("eq16.gamma_bell_outer", _gamma_bell_outer),
    ("eq16.gamma2_bell_eigen", _gamma2_bell_eigen),
    ("eq17.bell_marginals", _bell_marginals),
    ("eq19.spin_orthonormal", _spin_orthonormal),
    ("eq20.gamma2_spin_form", _gamma2_spin),
    ("eq8.marginals", _marginals),
    ("eq9.residual", _residual),
    ("eq10.dirac_coeffs", _dirac_coeffs),
    ("eq11.embed_coeffs", _embed_coeffs),
    ("eq12.product_coeffs", _product_coeffs),
    ("sec3.embed_square_half", _embed_square),
    ("roundtrip.params", _params_roundtrip),
    ("eq21.one_qubit_gates", _one_qubit_gates),
    ("eq22.cnot_dirac_form", _gate_form(GateLabel.CNOT)),
    ("eq22.cnot_contains_pt", _cnot_contains_pt),
    ("eq23.not_parity_time", _not_parity_time),
    ("eq23.not_dirac_form", _gate_form(GateLabel.NOT2)),
    ("eq24.swap_dirac_form", _gate_form(GateLabel.SWAP)),
    ("eq25.swap_bell_sum", _swap_bell),
    ("gates.unitary", _gates_unitary),
    ("eq26.even_templates", _templates(Parity.EVEN)),
    ("eq27.odd_templates", _templates(Parity.ODD)),
    ("sec5.odd_is_bell", _odd_is_bell),
    ("sec5.even_state_vector", _even_vector),
    ("sec5.even_odd_symmetry", _even_odd_symmetry),
    ("eq28.am_p_invariant", _am_p_invariant),
    ("eq29.am_separable", _am_separable),
]


def corrupted_basis(label: DiracLabel, replacement=None) -> np.ndarray:
    """Copy of the basis with one element swapped out (negated by default)."""
    b = np.array(BASIS)
    lab = DiracLabel(label)
    b[lab] = -b[lab] if replacement is None else replacement
    return b


def run_checks(tol: float = DEFAULT_TOL, basis: np.ndarray | None = None) -> Report:
    tol = check_tol(tol)
    b = BASIS if basis is None else np.asarray(basis, dtype=np.complex128)
    report = Report()
    for name, fn in CHECKS:
        try:
            err, detail = fn(b, tol)
        except Exception as exc:  # a broken basis can make a check blow up
            err, detail = INF, f"error: {type(exc).__name__}: {exc}"
        err = float(err)
        status = "pass" if err <= tol else "fail"
        report.checks.append(CheckResult(name, status, detail, err))
    return report
