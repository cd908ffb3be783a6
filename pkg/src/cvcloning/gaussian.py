"""
Gaussian states and symplectic transformations over n bosonic modes.

Conventions
-----------
Quadratures are ordered xp-interleaved, ``(x_0, p_0, x_1, p_1, ...)``, with
``a = (x + i p) / sqrt(2)`` and hbar = 1, so the vacuum covariance matrix is
``I / 2``. A coherent state ``|alpha>`` therefore has mean
``(sqrt(2) Re alpha, sqrt(2) Im alpha)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

#: Variance of either quadrature of the vacuum.
VACUUM_VARIANCE = 0.5

SYMMETRY_TOL = 1e-10
SYMPLECTIC_TOL = 1e-10
UNCERTAINTY_TOL = 1e-9


class RejectedTransformError(ValueError):
    """Raised when a transform fails the symplectic condition."""


def omega(n: int) -> np.ndarray:
    """Symplectic form for ``n`` modes in xp-interleaved ordering."""
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def symplectic_residual(S: np.ndarray) -> float:
    """Return ``max |S Omega S^T - Omega|``."""
    n = S.shape[0] // 2
    om = omega(n)
    return float(np.max(np.abs(S @ om @ S.T - om))) if n else 0.0


def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of ``cov``, sorted ascending, one value per mode.

    These are the moduli of the eigenvalues of ``i Omega cov``, which come in
    +/- pairs; every other one is kept.
    """
    n = cov.shape[0] // 2
    ev = np.linalg.eigvals(1j * omega(n) @ cov)
    return np.sort(np.abs(ev))[::2]


def _quad_indices(modes: Sequence[int]) -> np.ndarray:
    return np.array([[2 * m, 2 * m + 1] for m in modes], dtype=int).reshape(-1)


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Gaussian state of ``n_modes`` modes given by its first two moments.

    Parameters
    ----------
    mean : array_like, shape (2n,)
        Quadrature means.
    cov : array_like, shape (2n, 2n)
        Symmetric covariance matrix, ``cov_ij = <{dr_i, dr_j}>/2``.
    validate : bool
        Check symmetry and the uncertainty relation ``cov + i Omega / 2 >= 0``.
    """

    mean: np.ndarray
    cov: np.ndarray
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(-1)
        cov = np.array(self.cov, dtype=float)
        if mean.size == 0 or mean.size % 2:
            raise ValueError(f"mean must have positive even length, got {mean.size}")
        if cov.shape != (mean.size, mean.size):
            raise ValueError(
                f"cov shape {cov.shape} does not match mean length {mean.size}"
            )
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        if self.validate:
            asym = np.max(np.abs(cov - cov.T))
            if asym > SYMMETRY_TOL:
                raise ValueError(f"cov is not symmetric (max asymmetry {asym:.3e})")
            nu = symplectic_eigenvalues(cov)
            if nu[0] < VACUUM_VARIANCE - UNCERTAINTY_TOL:
                raise ValueError(
                    f"cov violates the uncertainty relation "
                    f"(smallest symplectic eigenvalue {nu[0]:.6g} < 1/2)"
                )

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2

    def purity_det(self) -> float:
        """``det(2 cov)``; equals 1 for pure states."""
        return float(np.linalg.det(2.0 * self.cov))

    def mode_mean(self, mode: int) -> np.ndarray:
        return self.mean[2 * mode : 2 * mode + 2]

    def mode_cov(self, mode: int) -> np.ndarray:
        return self.cov[2 * mode : 2 * mode + 2, 2 * mode : 2 * mode + 2]

    def amplitude(self, mode: int = 0) -> complex:
        """Mean of the annihilation operator, ``<a> = (<x> + i<p>)/sqrt(2)``."""
        x, p = self.mode_mean(mode)
        return complex(x, p) / np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class SymplecticTransform:
    """Affine map ``r -> S r + d`` on quadratures.

    Composition follows matrix order: ``(a @ b)`` applies ``b`` first.
    """

    S: np.ndarray
    d: np.ndarray | None = None

    def __post_init__(self):
        S = np.array(self.S, dtype=float)
        if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2:
            raise ValueError(f"S must be square with even size, got {S.shape}")
        d = np.zeros(S.shape[0]) if self.d is None else np.array(self.d, dtype=float)
        if d.shape != (S.shape[0],):
            raise ValueError(f"displacement shape {d.shape} does not match S")
        S.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "d", d)

    @property
    def n_modes(self) -> int:
        return self.S.shape[0] // 2

    @classmethod
    def identity(cls, n: int) -> "SymplecticTransform":
        return cls(np.eye(2 * n))

    def residual(self) -> float:
        return symplectic_residual(self.S)

    def is_symplectic(self, tol: float = SYMPLECTIC_TOL) -> bool:
        return self.residual() < tol

    def __matmul__(self, other: "SymplecticTransform") -> "SymplecticTransform":
        if self.n_modes != other.n_modes:
            raise ValueError(
                f"cannot compose transforms on {self.n_modes} and {other.n_modes} modes"
            )
        return SymplecticTransform(self.S @ other.S, self.S @ other.d + self.d)

    def inverse(self) -> "SymplecticTransform":
        # S^-1 = -Omega S^T Omega for symplectic S
        om = omega(self.n_modes)
        Sinv = -om @ self.S.T @ om
        return SymplecticTransform(Sinv, -Sinv @ self.d)


@dataclass(frozen=True, eq=False)
class ComplexModeUnitary:
    """Passive linear map ``a_k -> sum_l U_kl a_l`` on annihilation operators."""

    U: np.ndarray

    def __post_init__(self):
        U = np.array(self.U, dtype=complex)
        if U.ndim != 2 or U.shape[0] != U.shape[1] or U.shape[0] == 0:
            raise ValueError(f"U must be a non-empty square matrix, got {U.shape}")
        err = np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0])))
        if err > SYMPLECTIC_TOL:
            raise ValueError(f"matrix is not unitary (max |U^dag U - I| = {err:.3e})")
        U.setflags(write=False)
        object.__setattr__(self, "U", U)

    @property
    def m(self) -> int:
        return self.U.shape[0]


def vacuum_state(n: int) -> GaussianState:
    """``n``-mode vacuum: zero mean, covariance ``I/2``."""
    if n < 1:
        raise ValueError(f"number of modes must be positive, got {n}")
    return GaussianState(np.zeros(2 * n), VACUUM_VARIANCE * np.eye(2 * n))


def coherent_state(alpha_re: float, alpha_im: float = 0.0) -> GaussianState:
    """Single-mode coherent state ``|alpha>``, ``alpha = alpha_re + i alpha_im``."""
    mean = np.sqrt(2.0) * np.array([alpha_re, alpha_im], dtype=float)
    return GaussianState(mean, VACUUM_VARIANCE * np.eye(2))


def squeezed_vacuum(r: float) -> GaussianState:
    """Single-mode squeezed vacuum with x-variance ``e^{-2r}/2``."""
    return GaussianState(
        np.zeros(2), VACUUM_VARIANCE * np.diag([np.exp(-2 * r), np.exp(2 * r)])
    )


def displaced(state: GaussianState, mode: int, alpha: complex) -> GaussianState:
    """Shift the mean of ``mode`` by the coherent amplitude ``alpha``."""
    mean = state.mean.copy()
    mean[2 * mode] += np.sqrt(2.0) * np.real(alpha)
    mean[2 * mode + 1] += np.sqrt(2.0) * np.imag(alpha)
    return GaussianState(mean, state.cov, validate=False)


def tensor(a: GaussianState, b: GaussianState) -> GaussianState:
    """Product state ``a (x) b``; modes of ``b`` follow those of ``a``."""
    n = a.cov.shape[0]
    m = b.cov.shape[0]
    cov = np.zeros((n + m, n + m))
    cov[:n, :n] = a.cov
    cov[n:, n:] = b.cov
    return GaussianState(np.concatenate([a.mean, b.mean]), cov, validate=False)


def tensor_all(states: Sequence[GaussianState]) -> GaussianState:
    if not states:
        raise ValueError("need at least one state")
    mean = np.concatenate([s.mean for s in states])
    cov = np.zeros((mean.size, mean.size))
    i = 0
    for s in states:
        k = s.mean.size
        cov[i : i + k, i : i + k] = s.cov
        i += k
    return GaussianState(mean, cov, validate=False)


def apply(state: GaussianState, t: SymplecticTransform) -> GaussianState:
    """Propagate ``state`` through ``t``: ``mean <- S mean + d``, ``cov <- S cov S^T``.

    Raises
    ------
    ValueError
        Mode counts differ.
    RejectedTransformError
        ``t`` is not symplectic within tolerance.
    """
    if state.n_modes != t.n_modes:
        raise ValueError(
            f"state has {state.n_modes} modes but transform acts on {t.n_modes}"
        )
    res = t.residual()
    if res >= SYMPLECTIC_TOL:
        raise RejectedTransformError(
            f"transform is not symplectic (max |S Omega S^T - Omega| = {res:.3e})"
        )
    cov = t.S @ state.cov @ t.S.T
    # symmetrize away round-off
    cov = 0.5 * (cov + cov.T)
    return GaussianState(t.S @ state.mean + t.d, cov, validate=False)


def reduced_state(state: GaussianState, modes: Sequence[int]) -> GaussianState:
    """Marginal on ``modes``, in the order given."""
    modes = list(modes)
    if not modes:
        raise ValueError("need at least one mode")
    if len(set(modes)) != len(modes):
        raise ValueError(f"mode indices must be distinct, got {modes}")
    for m in modes:
        if not 0 <= m < state.n_modes:
            raise IndexError(f"mode {m} out of range for {state.n_modes}-mode state")
    idx = _quad_indices(modes)
    return GaussianState(state.mean[idx], state.cov[np.ix_(idx, idx)], validate=False)


def quadrature_variance(state: GaussianState, mode: int, phi: float) -> float:
    """Variance of ``cos(phi) x + sin(phi) p`` on ``mode``."""
    if not 0 <= mode < state.n_modes:
        raise IndexError(f"mode {mode} out of range for {state.n_modes}-mode state")
    u = np.array([np.cos(phi), np.sin(phi)])
    return float(u @ state.mode_cov(mode) @ u)


def fidelity_vs_pure(state: GaussianState, target: GaussianState) -> float:
    """Fidelity ``<psi|rho|psi>`` of a single-mode Gaussian ``state`` with the
    pure Gaussian ``target``.

    Uses ``F = exp(-d^T (V1+V2)^-1 d / 2) / sqrt(det(V1+V2))`` with ``d`` the
    difference of the means. Round-off above 1 is clipped.
    """
    if state.n_modes != 1 or target.n_modes != 1:
        raise ValueError("fidelity is only defined here for single-mode states")
    sigma = state.cov + target.cov
    delta = state.mean - target.mean
    f = np.exp(-0.5 * delta @ np.linalg.solve(sigma, delta)) / np.sqrt(
        np.linalg.det(sigma)
    )
    return float(min(f, 1.0))


def fidelity_vs_coherent(state: GaussianState, alpha: complex) -> float:
    """Fidelity of a single-mode Gaussian state with ``|alpha>``."""
    return fidelity_vs_pure(state, coherent_state(np.real(alpha), np.imag(alpha)))


def _check_nm(N: int, M: int) -> None:
    if N < 1 or M < N:
        raise ValueError(f"need M >= N >= 1, got N={N}, M={M}")


def optimal_added_variance(N: int, M: int) -> float:
    """Minimal noise added to each quadrature of every clone for N -> M cloning."""
    _check_nm(N, M)
    return (2.0 / N - 2.0 / M) * VACUUM_VARIANCE


def optimal_fidelity(N: int, M: int) -> float:
    """Maximal N -> M coherent-state cloning fidelity, ``MN / (MN + M - N)``."""
    _check_nm(N, M)
    return M * N / (M * N + M - N)
