import numpy as np
import pytest

from cvcloning.gaussian import (
    GaussianState,
    RejectedTransformError,
    SymplecticTransform,
    apply,
    coherent_state,
    fidelity_vs_coherent,
    fidelity_vs_pure,
    omega,
    optimal_added_variance,
    optimal_fidelity,
    quadrature_variance,
    reduced_state,
    squeezed_vacuum,
    symplectic_eigenvalues,
    tensor,
    vacuum_state,
)

from oracles import overlap_fidelity

TOL = 1e-12


class TestConstructors:
    def test_vacuum_single_mode(self):
        s = vacuum_state(1)
        assert np.array_equal(s.mean, [0.0, 0.0])
        assert np.array_equal(s.cov, np.diag([0.5, 0.5]))

    def test_vacuum_three_modes(self):
        s = vacuum_state(3)
        assert s.n_modes == 3
        assert np.array_equal(s.mean, np.zeros(6))
        assert np.array_equal(s.cov, 0.5 * np.eye(6))

    def test_vacuum_symplectic_eigenvalues(self):
        assert np.allclose(symplectic_eigenvalues(vacuum_state(2).cov), [0.5, 0.5], atol=TOL)

    def test_vacuum_rejects_zero_modes(self):
        with pytest.raises(ValueError):
            vacuum_state(0)

    def test_coherent_zero_is_vacuum(self):
        s = coherent_state(0.0, 0.0)
        assert np.array_equal(s.mean, vacuum_state(1).mean)
        assert np.array_equal(s.cov, vacuum_state(1).cov)

    def test_coherent_real_amplitude(self):
        assert np.allclose(coherent_state(1.0, 0.0).mean, [np.sqrt(2), 0.0], atol=TOL)

    def test_coherent_round_trip(self):
        s = coherent_state(1.0, 2.0)
        assert abs(s.amplitude() - (1 + 2j)) < 1e-14

    def test_squeezed_zero_is_vacuum(self):
        assert np.allclose(squeezed_vacuum(0.0).cov, 0.5 * np.eye(2), atol=0)

    def test_squeezed_ln2(self):
        s = squeezed_vacuum(np.log(2))
        assert np.allclose(s.cov, np.diag([1 / 8, 2.0]), atol=TOL)
        assert np.isclose(np.linalg.det(s.cov), 0.25, atol=TOL)

    @pytest.mark.parametrize("r", [-1.3, 0.0, 0.4, 2.0])
    def test_squeezed_is_pure(self, r):
        assert np.allclose(symplectic_eigenvalues(squeezed_vacuum(r).cov), [0.5], atol=1e-10)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            GaussianState(np.zeros(2), [[0.5, 0.1], [0.0, 0.5]])

    def test_rejects_uncertainty_violation(self):
        with pytest.raises(ValueError, match="uncertainty"):
            GaussianState(np.zeros(2), 0.4 * np.eye(2))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            GaussianState(np.zeros(4), 0.5 * np.eye(2))

    def test_state_is_immutable(self):
        s = vacuum_state(1)
        with pytest.raises(ValueError):
            s.cov[0, 0] = 3.0


class TestTensorAndReduce:
    def test_vacuum_product(self):
        s = tensor(vacuum_state(1), vacuum_state(1))
        assert np.array_equal(s.cov, vacuum_state(2).cov)

    def test_marginal_of_product(self):
        a = coherent_state(0.3, -1.1)
        s = tensor(a, vacuum_state(1))
        m = reduced_state(s, [0])
        assert np.array_equal(m.mean, a.mean)
        assert np.array_equal(m.cov, a.cov)

    def test_coherent_squeezed_blocks(self):
        s = tensor(coherent_state(1.0, 0.0), squeezed_vacuum(1.0))
        expected = np.diag([0.5, 0.5, np.exp(-2) / 2, np.exp(2) / 2])
        assert np.allclose(s.cov, expected, atol=TOL)

    def test_reduce_identity(self):
        s = tensor(coherent_state(1, 2), squeezed_vacuum(0.3))
        r = reduced_state(s, [0, 1])
        assert np.array_equal(r.cov, s.cov) and np.array_equal(r.mean, s.mean)

    def test_reduce_reorders(self):
        s = tensor(coherent_state(1, 2), squeezed_vacuum(0.3))
        r = reduced_state(s, [1, 0])
        assert np.array_equal(r.mode_cov(0), s.mode_cov(1))

    @pytest.mark.parametrize("modes", [[2], [0, 0], [-1], []])
    def test_reduce_bad_indices(self, modes):
        with pytest.raises((IndexError, ValueError)):
            reduced_state(vacuum_state(2), modes)


class TestApply:
    def test_identity(self):
        s = tensor(coherent_state(1, 2), squeezed_vacuum(0.3))
        out = apply(s, SymplecticTransform.identity(2))
        assert np.array_equal(out.mean, s.mean) and np.array_equal(out.cov, s.cov)

    def test_displacement(self):
        out = apply(vacuum_state(1), SymplecticTransform(np.eye(2), [1.0, -2.0]))
        assert np.array_equal(out.mean, [1.0, -2.0])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply(vacuum_state(2), SymplecticTransform.identity(1))

    def test_rejects_non_symplectic(self):
        with pytest.raises(RejectedTransformError):
            apply(vacuum_state(1), SymplecticTransform(np.diag([2.0, 2.0])))

    def test_composition_order(self):
        a = SymplecticTransform(np.diag([2.0, 0.5]))
        b = SymplecticTransform(np.array([[0.0, 1.0], [-1.0, 0.0]]), [1.0, 0.0])
        s = coherent_state(0.7, 0.2)
        assert np.allclose(apply(s, a @ b).mean, apply(apply(s, b), a).mean, atol=TOL)

    def test_inverse(self):
        t = SymplecticTransform(np.diag([3.0, 1 / 3]), [0.5, 0.1])
        assert np.allclose((t @ t.inverse()).S, np.eye(2), atol=TOL)
        assert np.allclose((t @ t.inverse()).d, 0, atol=TOL)


class TestQuadratureVariance:
    @pytest.mark.parametrize("phi", [0.0, 0.3, np.pi / 2, 2.0])
    def test_vacuum(self, phi):
        assert abs(quadrature_variance(vacuum_state(1), 0, phi) - 0.5) < TOL

    @pytest.mark.parametrize("r", [0.2, 1.0])
    def test_squeezed_x(self, r):
        assert abs(quadrature_variance(squeezed_vacuum(r), 0, 0.0) - np.exp(-2 * r) / 2) < TOL

    def test_bad_mode(self):
        with pytest.raises(IndexError):
            quadrature_variance(vacuum_state(1), 1, 0.0)


class TestFidelity:
    def test_self(self):
        assert abs(fidelity_vs_coherent(coherent_state(1.5, -0.5), 1.5 - 0.5j) - 1) < TOL

    def test_multimode_rejected(self):
        with pytest.raises(ValueError):
            fidelity_vs_coherent(vacuum_state(2), 0)

    @pytest.mark.parametrize(
        "N,M,expected",
        [(1, 2, 2 / 3), (2, 3, 6 / 7), (3, 7, 21 / 25), (2, 5, 10 / 13)],
    )
    def test_isotropic_noise_gives_cloning_bound(self, N, M, expected):
        s = 1 + 2 / N - 2 / M
        state = GaussianState(np.sqrt(2) * np.array([0.4, 1.2]), s / 2 * np.eye(2))
        assert abs(fidelity_vs_coherent(state, 0.4 + 1.2j) - expected) < 1e-12

    @pytest.mark.parametrize(
        "cov,mean",
        [
            (np.eye(2), np.array([0.0, 0.0])),
            (np.diag([0.7, 1.9]), np.array([0.3, -0.8])),
            (np.array([[1.0, 0.3], [0.3, 0.8]]), np.array([1.0, 0.5])),
            (0.5 * np.eye(2), np.array([1.0, 0.5])),
        ],
    )
    def test_matches_wigner_overlap(self, cov, mean):
        state = GaussianState(mean, cov)
        ref = overlap_fidelity(cov, mean, 0.5 * np.eye(2), np.zeros(2))
        assert abs(fidelity_vs_coherent(state, 0) - ref) < 1e-9

    def test_pure_squeezed_target_matches_wigner_overlap(self):
        target = squeezed_vacuum(0.5)
        state = GaussianState([0.2, 0.1], 2 * target.cov)
        ref = overlap_fidelity(state.cov, state.mean, target.cov, target.mean)
        assert abs(fidelity_vs_pure(state, target) - ref) < 1e-9

    def test_displaced_vacuum_frozen(self):
        # exp(-|delta|^2 / 2) for delta = (1, 0.5); confirmed by Wigner overlap
        state = GaussianState([1.0, 0.5], 0.5 * np.eye(2))
        assert abs(fidelity_vs_coherent(state, 0) - 0.5352614285189903) < 1e-12


class TestBounds:
    def test_added_variance(self):
        assert optimal_added_variance(1, 2) == 0.5
        assert optimal_added_variance(4, 4) == 0.0
        assert abs(optimal_added_variance(2, 3) - 1 / 6) < 1e-15

    def test_fidelity(self):
        assert abs(optimal_fidelity(1, 2) - 2 / 3) < 1e-15
        assert optimal_fidelity(5, 5) == 1.0
        assert abs(optimal_fidelity(1, 10**6) - 0.5) < 1e-6
        assert optimal_fidelity(1, 10**6) > 0.5

    @pytest.mark.parametrize("f", [optimal_added_variance, optimal_fidelity])
    @pytest.mark.parametrize("N,M", [(3, 2), (0, 1)])
    def test_invalid(self, f, N, M):
        with pytest.raises(ValueError):
            f(N, M)


def test_omega_single_mode():
    assert np.array_equal(omega(1), [[0, 1], [-1, 0]])
