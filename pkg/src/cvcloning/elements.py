"""
Linear-optics elements as symplectic maps.

Every element knows the modes it touches and its local symplectic block on
those modes (xp-interleaved). Embedding into a larger mode space fills the
rest with identity. Mode indices are 0-based throughout.

The phase-free beam splitter on modes ``(k, l)`` is the real mode matrix
``[[sin t, cos t], [cos t, -sin t]]``. Note that ``t = 0`` is a mirrored swap
rather than the identity, and ``t = pi/2`` leaves ``k`` alone and flips the sign
of ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Sequence

import numpy as np

from .gaussian import ComplexModeUnitary, SymplecticTransform

__all__ = [
    "BeamSplitter",
    "Amplifier",
    "PhaseShift",
    "Permutation",
    "DFTBlock",
    "UnitaryBlock",
    "Element",
    "beam_splitter",
    "amplifier",
    "phase_shift",
    "m_splitter",
    "inverse_n_splitter",
    "m_splitter_elements",
    "inverse_n_splitter_elements",
    "dft",
    "dft_matrix",
    "symplectic_from_unitary",
    "mode_matrix_to_symplectic",
    "embed",
    "element_from_dict",
]


def mode_matrix_to_symplectic(U: np.ndarray) -> np.ndarray:
    """Quadrature form of the passive map ``a -> U a``.

    With ``a = (x + ip)/sqrt(2)`` this is ``[[Re U, -Im U], [Im U, Re U]]`` in
    block (xx..pp..) ordering, returned here re-interleaved.
    """
    U = np.asarray(U, dtype=complex)
    m = U.shape[0]
    S = np.empty((2 * m, 2 * m))
    S[0::2, 0::2] = U.real
    S[0::2, 1::2] = -U.imag
    S[1::2, 0::2] = U.imag
    S[1::2, 1::2] = U.real
    return S


def embed(local: np.ndarray, modes: Sequence[int], n: int) -> np.ndarray:
    """Place the symplectic block ``local`` on ``modes`` of an ``n``-mode space."""
    idx = np.array([[2 * m, 2 * m + 1] for m in modes], dtype=int).reshape(-1)
    S = np.eye(2 * n)
    S[np.ix_(idx, idx)] = local
    return S


def _check_modes(modes: Sequence[int], n: int | None = None) -> None:
    if len(set(modes)) != len(modes):
        raise ValueError(f"element acts on repeated modes {list(modes)}")
    for m in modes:
        if m < 0 or (n is not None and m >= n):
            raise ValueError(f"mode index {m} out of range for {n} modes")


class Element:
    """Base class for circuit elements."""

    kind: ClassVar[str] = ""

    @property
    def modes(self) -> tuple[int, ...]:
        raise NotImplementedError

    def local_matrix(self) -> np.ndarray:
        raise NotImplementedError

    def symplectic(self, n: int) -> SymplecticTransform:
        """The element embedded in an ``n``-mode space."""
        _check_modes(self.modes, n)
        return SymplecticTransform(embed(self.local_matrix(), self.modes, n))

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class BeamSplitter(Element):
    """Phase-free beam splitter between modes ``k`` and ``l``."""

    k: int
    l: int
    theta: float
    kind: ClassVar[str] = "bs"

    def __post_init__(self):
        _check_modes((self.k, self.l))

    @property
    def modes(self):
        return (self.k, self.l)

    def mode_matrix(self) -> np.ndarray:
        s, c = np.sin(self.theta), np.cos(self.theta)
        return np.array([[s, c], [c, -s]])

    def local_matrix(self):
        return mode_matrix_to_symplectic(self.mode_matrix())

    def to_dict(self):
        return {"type": "bs", "k": self.k, "l": self.l, "theta": float(self.theta)}


@dataclass(frozen=True)
class Amplifier(Element):
    """Ideal phase-insensitive amplifier of power gain ``gain``.

    Heisenberg action, with ``g = sqrt(G)`` and ``h = sqrt(G - 1)``::

        x_s' = g x_s + h x_z      p_s' = g p_s - h p_z
        x_z' = h x_s + g x_z      p_z' = -h p_s + g p_z

    i.e. ``a_s' = g a_s + h a_z^dag`` and ``a_z' = h a_s^dag + g a_z``. With the
    ancilla in vacuum the noise it adds to each signal quadrature is
    ``(G - 1)/2``, the least allowed for a phase-insensitive amplifier.
    """

    signal: int
    ancilla: int
    gain: float
    kind: ClassVar[str] = "amp"

    def __post_init__(self):
        _check_modes((self.signal, self.ancilla))
        if not self.gain >= 1.0:
            raise ValueError(f"amplifier gain must be >= 1, got {self.gain}")

    @property
    def modes(self):
        return (self.signal, self.ancilla)

    def local_matrix(self):
        g = np.sqrt(self.gain)
        h = np.sqrt(self.gain - 1.0)
        return np.array(
            [
                [g, 0.0, h, 0.0],
                [0.0, g, 0.0, -h],
                [h, 0.0, g, 0.0],
                [0.0, -h, 0.0, g],
            ]
        )

    def to_dict(self):
        return {
            "type": "amp",
            "signal": self.signal,
            "ancilla": self.ancilla,
            "gain": float(self.gain),
        }


@dataclass(frozen=True)
class PhaseShift(Element):
    """Rotation ``a -> exp(i phi) a`` of a single mode. Auxiliary; the cloning
    circuits never need it."""

    mode: int
    phi: float
    kind: ClassVar[str] = "ps"

    @property
    def modes(self):
        return (self.mode,)

    def local_matrix(self):
        return mode_matrix_to_symplectic(np.array([[np.exp(1j * self.phi)]]))

    def to_dict(self):
        return {"type": "ps", "mode": self.mode, "phi": float(self.phi)}


@dataclass(frozen=True)
class Permutation(Element):
    """Relabel modes: input mode ``i`` leaves as mode ``map[i]``.

    Acts on modes ``0 .. len(map) - 1``.
    """

    map: tuple[int, ...]
    kind: ClassVar[str] = "perm"

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(i) for i in self.map))
        if sorted(self.map) != list(range(len(self.map))):
            raise ValueError(f"not a permutation: {self.map}")

    @property
    def modes(self):
        return tuple(range(len(self.map)))

    def mode_matrix(self) -> np.ndarray:
        P = np.zeros((len(self.map), len(self.map)))
        for i, j in enumerate(self.map):
            P[j, i] = 1.0
        return P

    def local_matrix(self):
        return mode_matrix_to_symplectic(self.mode_matrix())

    def to_dict(self):
        return {"type": "perm", "map": list(self.map)}


def dft_matrix(m: int) -> np.ndarray:
    """``F_kl = exp(2 pi i k l / m) / sqrt(m)``."""
    if m < 1:
        raise ValueError(f"DFT size must be positive, got {m}")
    k = np.arange(m)
    return np.exp(2j * np.pi * np.outer(k, k) / m) / np.sqrt(m)


@dataclass(frozen=True)
class DFTBlock(Element):
    """Discrete Fourier transform multiport over ``modes`` (in that order)."""

    block_modes: tuple[int, ...]
    inverse: bool = False
    kind: ClassVar[str] = "dft"

    def __post_init__(self):
        object.__setattr__(self, "block_modes", tuple(int(i) for i in self.block_modes))
        _check_modes(self.block_modes)

    @property
    def modes(self):
        return self.block_modes

    def mode_matrix(self) -> np.ndarray:
        F = dft_matrix(len(self.block_modes))
        return F.conj().T if self.inverse else F

    def local_matrix(self):
        return mode_matrix_to_symplectic(self.mode_matrix())

    def to_dict(self):
        return {"type": "dft", "modes": list(self.block_modes), "inverse": self.inverse}


@dataclass(frozen=True)
class UnitaryBlock(Element):
    """Arbitrary passive multiport ``a -> U a`` over ``modes``."""

    block_modes: tuple[int, ...]
    unitary: ComplexModeUnitary = field(compare=False)
    kind: ClassVar[str] = "unitary"

    def __post_init__(self):
        object.__setattr__(self, "block_modes", tuple(int(i) for i in self.block_modes))
        _check_modes(self.block_modes)
        if self.unitary.m != len(self.block_modes):
            raise ValueError(
                f"{self.unitary.m}x{self.unitary.m} unitary on "
                f"{len(self.block_modes)} modes"
            )

    @property
    def modes(self):
        return self.block_modes

    def mode_matrix(self) -> np.ndarray:
        return self.unitary.U

    def local_matrix(self):
        return mode_matrix_to_symplectic(self.unitary.U)

    def to_dict(self):
        return {
            "type": "unitary",
            "modes": list(self.block_modes),
            "re": self.unitary.U.real.tolist(),
            "im": self.unitary.U.imag.tolist(),
        }


def element_from_dict(d: dict) -> Element:
    """Inverse of ``Element.to_dict``."""
    kind = d.get("type")
    if kind == "bs":
        return BeamSplitter(int(d["k"]), int(d["l"]), float(d["theta"]))
    if kind == "amp":
        return Amplifier(int(d["signal"]), int(d["ancilla"]), float(d["gain"]))
    if kind == "ps":
        return PhaseShift(int(d["mode"]), float(d["phi"]))
    if kind == "perm":
        return Permutation(tuple(d["map"]))
    if kind == "dft":
        return DFTBlock(tuple(d["modes"]), bool(d.get("inverse", False)))
    if kind == "unitary":
        U = np.array(d["re"], dtype=float) + 1j * np.array(d["im"], dtype=float)
        return UnitaryBlock(tuple(d["modes"]), ComplexModeUnitary(U))
    raise ValueError(f"unknown element type {kind!r}")


def beam_splitter(n: int, spec: BeamSplitter) -> SymplecticTransform:
    """Beam splitter ``spec`` embedded in ``n`` modes."""
    return spec.symplectic(n)


def amplifier(n: int, spec: Amplifier) -> SymplecticTransform:
    """Amplifier ``spec`` embedded in ``n`` modes."""
    return spec.symplectic(n)


def phase_shift(n: int, mode: int, phi: float) -> SymplecticTransform:
    return PhaseShift(mode, phi).symplectic(n)


def m_splitter_elements(modes: Sequence[int]) -> list[BeamSplitter]:
    """Beam-splitter cascade distributing ``modes[0]`` equally over ``modes``.

    Returned in application order: the splitter between ``modes[0]`` and
    ``modes[1]`` (angle ``asin(1/sqrt(M))``) acts first, the one between the
    last two modes (angle ``asin(1/sqrt(2))``) last.
    """
    modes = list(modes)
    M = len(modes)
    return [
        BeamSplitter(modes[j], modes[j + 1], float(np.arcsin(1.0 / np.sqrt(M - j))))
        for j in range(M - 1)
    ]


def inverse_n_splitter_elements(modes: Sequence[int]) -> list[BeamSplitter]:
    """Cascade concentrating ``len(modes)`` equal amplitudes into ``modes[0]``.

    Each splitter matrix is symmetric and orthogonal, so the inverse cascade is
    the same list in reverse order.
    """
    return m_splitter_elements(modes)[::-1]


def _compose(elements: Sequence[Element], n: int) -> SymplecticTransform:
    S = np.eye(2 * n)
    for e in elements:
        idx = np.array([[2 * m, 2 * m + 1] for m in e.modes], dtype=int).reshape(-1)
        S[idx, :] = e.local_matrix() @ S[idx, :]
    return SymplecticTransform(S)


def m_splitter(M: int) -> SymplecticTransform:
    """``M``-splitter on ``M`` modes; identity for ``M = 1``."""
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    return _compose(m_splitter_elements(range(M)), M)


def inverse_n_splitter(N: int) -> SymplecticTransform:
    """Transpose (= inverse) of ``m_splitter(N)``."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return _compose(inverse_n_splitter_elements(range(N)), N)


def dft(m: int) -> ComplexModeUnitary:
    """DFT multiport on ``m`` modes as a mode unitary."""
    return ComplexModeUnitary(dft_matrix(m))


def symplectic_from_unitary(u: ComplexModeUnitary) -> SymplecticTransform:
    """Quadrature-space form of a passive mode unitary."""
    return SymplecticTransform(mode_matrix_to_symplectic(u.U))
