"""Numbered acceptance criteria.

Each test carries a ``criterion`` marker; the conftest hook prints one
PASS/FAIL line per criterion at the end of the run.
"""
import numpy as np
import pytest

from diracqubit.bell import (
    BellLabel,
    SymmetryLabel,
    bell_state,
    derive_symmetry_table,
    gamma2_spin_form,
    gamma_from_bell_outer,
    symmetry_operator,
)
from diracqubit.cli import main
from diracqubit.density import (
    bell_projector,
    density_dirac_coeffs,
    density_from_params,
    embed,
    marginal_mixedness,
    marginals,
    params_of,
)
from diracqubit.dirac import BASIS, DiracLabel, decompose, gamma, reconstruct
from diracqubit.gates import (
    AMUnitaryLabel,
    GateLabel,
    am_unitary,
    classify_even_odd,
    even_odd_template,
    gate,
    gate_dirac_operator,
    is_invariant,
    not_from_parity_time,
    swap_bell_decomposition,
)
from diracqubit.linalg import I2, I4, PAULI, kron_factor
from diracqubit.reference import BELL_PROJECTOR_SIGNS
from diracqubit.verify import CHECKS

D = DiracLabel
B = BellLabel


def err(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def one_qubit(s):
    return 0.5 * (I2 + sum(x * sig for x, sig in zip(s, PAULI)))


def random_state(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    d = g @ g.conj().T
    return d / np.trace(d).real


@pytest.mark.criterion(1, "Clifford algebra and basis orthogonality")
def test_clifford_algebra():
    worst = 0.0
    for mu in range(1, 5):
        for nu in range(1, 5):
            gm, gn = gamma(mu), gamma(nu)
            worst = max(worst, err(gm @ gn + gn @ gm, 2 * (mu == nu) * I4))
    assert worst <= 1e-12
    for lab in D:
        g = BASIS[lab]
        assert err(g, g.conj().T) <= 1e-12
        assert err(g @ g, I4) <= 1e-12
        if lab is not D.UNIT:
            assert abs(np.trace(g)) <= 1e-12
    gram = np.einsum("aij,bji->ab", BASIS, BASIS)
    assert err(gram, 4 * np.eye(16)) <= 1e-10


@pytest.mark.criterion(2, "Bell-state action table")
def test_action_table():
    rows = derive_symmetry_table()
    assert len(rows) == 64 + 28
    for r in rows:
        assert not r.action.mixes
        assert abs(abs(r.action.phase) - 1) <= 1e-10
    for sym in SymmetryLabel:
        mine = [r for r in rows if r.operator == sym.value]
        assert len(mine) == 4
        preserves = all(r.action.target is r.source for r in mine)
        if sym is SymmetryLabel.C:
            assert preserves
        else:
            assert not preserves, sym


@pytest.mark.criterion(3, "gate identities")
def test_gate_identities():
    for label in (GateLabel.CNOT, GateLabel.NOT2, GateLabel.SWAP):
        assert err(gate_dirac_operator(label), gate(label)) <= 1e-10
    assert err(not_from_parity_time(), gate(GateLabel.NOT2)) <= 1e-10
    P, T = symmetry_operator(SymmetryLabel.P), symmetry_operator(SymmetryLabel.T)
    assert err(1j * P @ T, gate(GateLabel.NOT2)) <= 1e-10
    signs, e = swap_bell_decomposition()
    assert signs == {B.PSI_PLUS: 1, B.PSI_MINUS: -1, B.PHI_PLUS: 1, B.PHI_MINUS: 1}
    assert e <= 1e-10


@pytest.mark.criterion(4, "density-matrix algebra")
def test_density_algebra():
    rng = np.random.default_rng(4)
    for _ in range(100):
        d = random_state(rng)
        p = params_of(d)
        ra, rb = marginals(d)
        rho_a, rho_b = one_qubit(p.sA), one_qubit(p.sB)
        assert err(ra, rho_a) <= 1e-9 and err(rb, rho_b) <= 1e-9
        # product part plus residual correlations
        res = p.C - np.outer(p.sA, p.sB)
        prod = np.kron(rho_a, rho_b)
        extra = 0.25 * sum(res[i, j] * np.kron(PAULI[i], PAULI[j])
                           for i in range(3) for j in range(3))
        assert err(prod + extra, d) <= 1e-9
        assert err(density_dirac_coeffs(p).values, decompose(d).values) <= 1e-9
    for _ in range(20):
        s = rng.normal(size=3)
        s /= np.linalg.norm(s)
        for which in ("A", "B"):
            e = embed(s, which)
            assert err(e @ e, 0.5 * e) <= 1e-10


@pytest.mark.criterion(5, "Bell projectors")
def test_bell_projectors():
    for b in B:
        d = bell_projector(b).m
        assert err(d @ d, d) <= 1e-10
        assert abs(np.trace(d) - 1) <= 1e-10
        pa, pb = marginal_mixedness(d)
        assert abs(pa - 0.5) <= 1e-10 and abs(pb - 0.5) <= 1e-10
        c = decompose(d)
        expected = np.zeros(16)
        expected[D.UNIT] = 0.25
        for lab, s in zip((D.IG1G4, D.GAMMA_2, D.IG3G5), BELL_PROJECTOR_SIGNS[b]):
            expected[lab] = s / 4
        assert err(c.values, expected) <= 1e-10


@pytest.mark.criterion(6, "gamma matrices from Bell and spin states")
def test_bell_and_spin_forms():
    for lab in (D.GAMMA_1, D.GAMMA_2, D.GAMMA_3, D.GAMMA_4):
        assert err(gamma_from_bell_outer(lab), BASIS[lab]) <= 1e-10
    assert err(gamma2_spin_form(), BASIS[D.GAMMA_2]) <= 1e-10
    g2 = BASIS[D.GAMMA_2]
    eig = [np.vdot(bell_state(b), g2 @ bell_state(b)) for b in B]
    assert err(eig, [1, -1, -1, 1]) <= 1e-10
    for b, e in zip(B, eig):
        assert err(g2 @ bell_state(b), e * bell_state(b)) <= 1e-10


@pytest.mark.criterion(7, "even/odd density matrices and parity-invariant unitaries")
def test_even_odd():
    C = symmetry_operator(SymmetryLabel.C)
    P = symmetry_operator(SymmetryLabel.P)
    assert err(even_odd_template("ODD", "+"), bell_projector(B.PSI_PLUS).m) <= 1e-10
    assert err(even_odd_template("ODD", "-"), bell_projector(B.PSI_MINUS).m) <= 1e-10
    for s in ("+", "-"):
        odd, even = even_odd_template("ODD", s), even_odd_template("EVEN", s)
        assert is_invariant(C, odd, 1e-10)
        assert np.allclose(marginal_mixedness(odd), 0.5, atol=1e-10)
        assert is_invariant(P, even, 1e-10)
        assert np.allclose(marginal_mixedness(even), 1, atol=1e-10)
        assert classify_even_odd(odd, 1e-10).c_invariant
        assert classify_even_odd(even, 1e-10).separable_marginal
    for lab in AMUnitaryLabel:
        u = am_unitary(lab)
        assert err(u @ P, P @ u) <= 1e-10
        f = kron_factor(u, 1e-10)
        assert f is not None and err(np.kron(*f), u) <= 1e-10


@pytest.mark.criterion(8, "round trips")
def test_round_trips():
    rng = np.random.default_rng(8)
    for _ in range(1000):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert err(reconstruct(decompose(m)), m) <= 1e-9
    for _ in range(100):
        d = random_state(rng)
        assert err(density_from_params(params_of(d)).m, d) <= 1e-9


@pytest.mark.criterion(9, "command-line verify contract")
def test_cli_contract(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == len(CHECKS)
    for lab in D:
        assert main(["verify", "--corrupt", lab.name]) != 0
        out = capsys.readouterr().out
        failing = [ln.split()[1] for ln in out.splitlines() if ln.startswith("FAIL")]
        assert failing and all(name in dict(CHECKS) for name in failing), lab
