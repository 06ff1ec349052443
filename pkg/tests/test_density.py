import numpy as np
import pytest

from diracqubit.bell import BellLabel, bell_state
from diracqubit.dirac import BASIS, DiracLabel, decompose
from diracqubit.density import (
    BadTrace,
    BlochOutOfBall,
    DensityParams,
    NotPositive,
    bell_projector,
    bloch,
    correlation_residual,
    density_dirac_coeffs,
    density_from_params,
    embed,
    embed_dirac_coeffs,
    entanglement_signature,
    marginal_mixedness,
    marginals,
    one_qubit_density,
    params_of,
    product_density,
    product_params,
    purity,
)
from diracqubit.linalg import I2, I4, PAULI, approx_equal


def random_bloch(rng, inside=True):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return v * rng.uniform(0, 1) if inside else v


def random_state(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    d = g @ g.conj().T
    return d / np.trace(d)


def params_by_loops(d):
    # independent of the einsum-based inverse
    sA = [np.trace(d @ np.kron(p, I2)).real for p in PAULI]
    sB = [np.trace(d @ np.kron(I2, p)).real for p in PAULI]
    C = [[np.trace(d @ np.kron(p, q)).real for q in PAULI] for p in PAULI]
    return np.array(sA), np.array(sB), np.array(C)


class TestBloch:
    def test_accepts_unit_norm(self):
        assert np.allclose(bloch([0, 0, 1]), [0, 0, 1])

    def test_slack(self):
        bloch([0, 0, 1 + 1e-10])

    def test_out_of_ball(self):
        with pytest.raises(BlochOutOfBall):
            bloch([1, 1, 0])

    @pytest.mark.parametrize("bad", [[1, 0], [np.nan, 0, 0], [[0, 0, 0]] * 2])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            bloch(bad)

    def test_one_qubit(self):
        assert approx_equal(one_qubit_density([0, 0, 1]), np.diag([1, 0]))
        assert approx_equal(one_qubit_density([0, 0, 0]), I2 / 2)


class TestEmbed:
    def test_spin_up_a(self):
        assert approx_equal(embed([0, 0, 1], "A"), 0.5 * np.diag([1, 1, 0, 0]))

    @pytest.mark.parametrize("which", ["A", "B"])
    def test_square_is_half(self, which, rng):
        s = random_bloch(rng, inside=False)
        e = embed(s, which)
        assert approx_equal(e @ e, 0.5 * e)
        assert abs(np.trace(e) - 1) < 1e-12
        assert purity(e) == pytest.approx(0.5)

    @pytest.mark.parametrize("which", ["A", "B"])
    def test_dirac_coeffs(self, which, rng):
        s = random_bloch(rng)
        got = embed_dirac_coeffs(s, which).values
        assert np.allclose(got, decompose(embed(s, which)).values, atol=1e-12)

    def test_time_parity_form(self, rng):
        # qubit A's Bloch components sit on g5, i g4 g5 and -g4
        s = random_bloch(rng)
        g4, g5 = BASIS[DiracLabel.GAMMA_4], BASIS[DiracLabel.GAMMA_5]
        expected = 0.25 * (I4 + s[0] * g5 + s[1] * 1j * g4 @ g5 - s[2] * g4)
        assert approx_equal(embed(s, "A"), expected)

    def test_bad_side(self):
        with pytest.raises(ValueError):
            embed([0, 0, 0], "C")
        with pytest.raises(ValueError):
            embed_dirac_coeffs([0, 0, 0], "x")


class TestParams:
    def test_maximally_mixed(self):
        d = density_from_params(DensityParams(np.zeros(3), np.zeros(3), np.zeros((3, 3))))
        assert approx_equal(d.m, I4 / 4)

    def test_singlet_from_minus_identity(self):
        d = density_from_params(DensityParams(np.zeros(3), np.zeros(3), -np.eye(3)), validate=True)
        psi = bell_state(BellLabel.PSI_MINUS)
        assert approx_equal(d.m, np.outer(psi, psi.conj()))
        assert d.validated

    def test_not_positive(self):
        p = DensityParams(np.zeros(3), np.zeros(3), np.diag([2.0, 0, 0]))
        with pytest.raises(NotPositive) as info:
            density_from_params(p, validate=True)
        assert info.value.eigenvalue == pytest.approx(-0.25, abs=1e-12)
        # without validation the matrix is still built
        d = density_from_params(p)
        assert not d.validated and abs(np.trace(d.m) - 1) < 1e-12

    def test_phi_plus_params(self):
        p = params_of(bell_projector(BellLabel.PHI_PLUS).m)
        assert np.allclose(p.sA, 0) and np.allclose(p.sB, 0)
        assert np.allclose(p.C, np.diag([1, -1, 1]), atol=1e-12)

    def test_against_loops(self, rng):
        d = random_state(rng)
        p = params_of(d)
        sA, sB, C = params_by_loops(d)
        assert np.allclose(p.sA, sA) and np.allclose(p.sB, sB) and np.allclose(p.C, C)

    @pytest.mark.parametrize("seed", range(5))
    def test_roundtrip_state(self, seed):
        d = random_state(np.random.default_rng(seed))
        assert np.max(np.abs(density_from_params(params_of(d)).m - d)) <= 1e-12

    def test_roundtrip_params(self, rng):
        p = DensityParams(rng.normal(size=3), rng.normal(size=3), rng.normal(size=(3, 3)))
        q = params_of(density_from_params(p).m)
        assert np.allclose(q.sA, p.sA) and np.allclose(q.sB, p.sB) and np.allclose(q.C, p.C)

    def test_hermitian_unit_trace_for_any_params(self, rng):
        p = DensityParams(rng.normal(size=3), rng.normal(size=3), rng.normal(size=(3, 3)))
        m = density_from_params(p).m
        assert approx_equal(m, m.conj().T) and abs(np.trace(m) - 1) < 1e-12

    def test_bad_trace(self):
        with pytest.raises(BadTrace):
            params_of(I4)

    def test_nonfinite(self):
        with pytest.raises(ValueError):
            DensityParams([np.inf, 0, 0], np.zeros(3), np.zeros((3, 3)))

    def test_readonly(self):
        p = DensityParams(np.zeros(3), np.zeros(3), np.zeros((3, 3)))
        with pytest.raises(ValueError):
            p.C[0, 0] = 1

    def test_json(self, rng):
        p = DensityParams(rng.normal(size=3), rng.normal(size=3), rng.normal(size=(3, 3)))
        q = DensityParams.loads(p.dumps())
        assert np.array_equal(q.C, p.C) and np.array_equal(q.sA, p.sA)
        with pytest.raises(ValueError):
            DensityParams.from_jsonable({"sA": [0, 0, 0]})


class TestProducts:
    def test_product_params(self, rng):
        sA, sB = random_bloch(rng), random_bloch(rng)
        p = params_of(product_density(sA, sB))
        q = product_params(sA, sB)
        assert np.allclose(p.C, q.C) and np.allclose(p.C, np.outer(sA, sB))
        assert np.allclose(correlation_residual(p), 0, atol=1e-12)

    def test_product_coeffs_factor(self, rng):
        # coefficients of rho_A (x) rho_B are products of one-qubit coefficients
        sA, sB = random_bloch(rng), random_bloch(rng)
        c = density_dirac_coeffs(product_params(sA, sB))
        assert c[DiracLabel.GAMMA_2].real == pytest.approx(sA[1] * sB[1] / 4)
        assert c[DiracLabel.IG3G5].real == pytest.approx(sA[2] * sB[2] / 4)
        assert c[DiracLabel.IG1G4].real == pytest.approx(sA[0] * sB[0] / 4)

    def test_singlet_residual(self):
        p = params_of(bell_projector(BellLabel.PSI_MINUS).m)
        assert np.allclose(correlation_residual(p), -np.eye(3))


class TestDiracCoeffs:
    @pytest.mark.parametrize("seed", range(5))
    def test_matches_decompose(self, seed):
        d = random_state(np.random.default_rng(seed))
        got = density_dirac_coeffs(params_of(d)).values
        assert np.max(np.abs(got - decompose(d).values)) <= 1e-12

    def test_unit_coefficient(self, rng):
        assert density_dirac_coeffs(params_of(random_state(rng)))[DiracLabel.UNIT] == 0.25

    def test_real(self, rng):
        assert density_dirac_coeffs(params_of(random_state(rng))).is_real()


class TestBellProjectors:
    @pytest.mark.parametrize("b", list(BellLabel))
    def test_pure_with_mixed_marginals(self, b):
        d = bell_projector(b).m
        assert approx_equal(d @ d, d)
        assert purity(d) == pytest.approx(1)
        ra, rb = marginals(d)
        assert approx_equal(ra, I2 / 2) and approx_equal(rb, I2 / 2)
        assert marginal_mixedness(d) == pytest.approx((0.5, 0.5))

    @pytest.mark.parametrize("b", list(BellLabel))
    def test_signature(self, b):
        assert entanglement_signature(params_of(bell_projector(b).m))

    def test_signature_negative_cases(self, rng):
        zeros = DensityParams(np.zeros(3), np.zeros(3), np.zeros((3, 3)))
        assert not entanglement_signature(zeros)
        assert not entanglement_signature(product_params([0, 0, 1], [0, 0, 1]))
        off = DensityParams(np.zeros(3), np.zeros(3), [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
        assert not entanglement_signature(off)

    def test_product_marginals_pure(self):
        assert marginal_mixedness(product_density([1, 0, 0], [0, 1, 0])) == pytest.approx((1, 1))

    def test_mixedness_bad_trace(self):
        with pytest.raises(BadTrace):
            marginal_mixedness(2 * I4)
