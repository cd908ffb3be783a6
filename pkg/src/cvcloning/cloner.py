"""
Optimal N -> M coherent-state cloning circuits.

Three constructions are provided, all built from phase-free beam splitters (or
DFT multiports) and ideal phase-insensitive amplifiers:

``msplitter`` / ``dft``
    Concentrate the N inputs into one mode, amplify it once with gain M/N,
    then distribute it over M modes. Uses ``M + 1`` modes: signals/blanks
    ``0 .. M-1`` and the amplifier ancilla ``M``.
``percopy``
    Amplify every input separately with gain M/N, split each over M modes, and
    recombine the N copies carrying the same output index. Mode ``k*M + l``
    carries copy ``k``, branch ``l``; ancillas follow at ``N*M + k``. The
    clones end up on modes ``0 .. M-1`` and ``M(N-1)`` modes are left as waste.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import elements as el
from .gaussian import (
    VACUUM_VARIANCE,
    GaussianState,
    SymplecticTransform,
    apply,
    coherent_state,
    displaced,
    fidelity_vs_pure,
    optimal_added_variance,
    optimal_fidelity,
    quadrature_variance,
    reduced_state,
    squeezed_vacuum,
    tensor_all,
)

VARIANTS = ("msplitter", "dft", "percopy")

#: Quadrature angles sampled in reports.
REPORT_ANGLES = tuple(np.arange(8) * np.pi / 8)

SATURATION_TOL = 1e-9


@dataclass(frozen=True)
class ClonerLayout:
    """Role of every mode in a cloning circuit."""

    N: int
    M: int
    variant: str
    inputs: tuple[int, ...]
    clones: tuple[int, ...]
    anticlones: tuple[int, ...]
    waste: tuple[int, ...] = ()
    blanks: tuple[int, ...] = ()

    def __post_init__(self):
        groups = (self.inputs, self.blanks)
        outs = (self.clones, self.anticlones, self.waste)
        for gs in (groups, outs):
            flat = [m for g in gs for m in g]
            if len(flat) != len(set(flat)):
                raise ValueError("mode roles overlap")
        if len(self.clones) != self.M:
            raise ValueError(f"expected {self.M} clones, got {len(self.clones)}")

    @property
    def gain(self) -> float:
        return self.M / self.N

    def roles(self) -> dict[str, list[int]]:
        return {
            "inputs": list(self.inputs),
            "blanks": list(self.blanks),
            "clones": list(self.clones),
            "anticlones": list(self.anticlones),
            "waste": list(self.waste),
        }

    def to_dict(self) -> dict:
        return {"N": self.N, "M": self.M, "variant": self.variant, **self.roles()}

    @classmethod
    def from_dict(cls, d: dict) -> "ClonerLayout":
        return cls(
            N=int(d["N"]),
            M=int(d["M"]),
            variant=str(d["variant"]),
            inputs=tuple(d["inputs"]),
            clones=tuple(d["clones"]),
            anticlones=tuple(d["anticlones"]),
            waste=tuple(d.get("waste", ())),
            blanks=tuple(d.get("blanks", ())),
        )


@dataclass
class Circuit:
    """Ordered list of elements acting on ``n_modes`` modes.

    ``roles`` maps a role name (inputs, blanks, clones, anticlones, waste) to
    mode indices. Input-side roles refer to the modes before the circuit,
    output-side roles to the modes after it.
    """

    n_modes: int
    elements: list[el.Element] = field(default_factory=list)
    roles: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        for e in self.elements:
            for m in e.modes:
                if not 0 <= m < self.n_modes:
                    raise ValueError(
                        f"{type(e).__name__} touches mode {m}, circuit has {self.n_modes}"
                    )

    def transform(self) -> SymplecticTransform:
        """Compose all elements into one transform (first element acts first)."""
        S = np.eye(2 * self.n_modes)
        for e in self.elements:
            idx = np.array([[2 * m, 2 * m + 1] for m in e.modes], dtype=int).reshape(-1)
            S[idx, :] = e.local_matrix() @ S[idx, :]
        return SymplecticTransform(S)

    def truncated(self, k: int) -> "Circuit":
        """The first ``k`` elements only."""
        return Circuit(self.n_modes, list(self.elements[:k]), dict(self.roles))

    def count(self, kind: str) -> int:
        return sum(1 for e in self.elements if e.kind == kind)

    def to_dict(self, layout: ClonerLayout | None = None) -> dict:
        d = {
            "n_modes": self.n_modes,
            "elements": [e.to_dict() for e in self.elements],
            "roles": {k: list(v) for k, v in self.roles.items()},
        }
        if layout is not None:
            d["layout"] = {"N": layout.N, "M": layout.M, "variant": layout.variant}
        return d

    def to_json(self, layout: ClonerLayout | None = None, **kw) -> str:
        return json.dumps(self.to_dict(layout), **kw)


def circuit_from_dict(d: dict) -> tuple[Circuit, ClonerLayout | None]:
    """Rebuild a circuit (and its layout, when recorded) from ``Circuit.to_dict``."""
    circuit = Circuit(
        int(d["n_modes"]),
        [el.element_from_dict(e) for e in d["elements"]],
        {k: [int(i) for i in v] for k, v in d.get("roles", {}).items()},
    )
    layout = None
    if "layout" in d:
        layout = ClonerLayout.from_dict({**d["layout"], **circuit.roles})
    return circuit, layout


def circuit_from_json(text: str) -> tuple[Circuit, ClonerLayout | None]:
    return circuit_from_dict(json.loads(text))


def _check_nm(N: int, M: int) -> None:
    if int(N) != N or int(M) != M or N < 1 or M < N:
        raise ValueError(f"need integers M >= N >= 1, got N={N}, M={M}")


def _make(n_modes: int, elements, layout: ClonerLayout) -> tuple[Circuit, ClonerLayout]:
    return Circuit(n_modes, list(elements), layout.roles()), layout


def build_duplicator() -> tuple[Circuit, ClonerLayout]:
    """1 -> 2 cloner: gain-2 amplifier on (0, ancilla 2), then a 50:50 splitter
    on (0, 1)."""
    return build_cloner_dft(1, 2, device="msplitter")


def build_cloner_dft(
    N: int, M: int, device: str = "msplitter"
) -> tuple[Circuit, ClonerLayout]:
    """Concentrate / amplify / distribute cloner on ``M + 1`` modes.

    ``device`` selects the concentration and distribution hardware:
    ``"msplitter"`` for beam-splitter cascades (``N + M - 2`` splitters in
    total) or ``"dft"`` for DFT multiports. The forward DFT already leaves the
    concentrated amplitude on mode 0, so no relabelling is needed.
    """
    _check_nm(N, M)
    if device not in ("msplitter", "dft"):
        raise ValueError(f"unknown device {device!r}")
    ancilla = M
    elements: list[el.Element] = []
    if N > 1:
        if device == "msplitter":
            elements += el.inverse_n_splitter_elements(range(N))
        else:
            elements.append(el.DFTBlock(tuple(range(N))))
    elements.append(el.Amplifier(0, ancilla, M / N))
    if M > 1:
        if device == "msplitter":
            elements += el.m_splitter_elements(range(M))
        else:
            elements.append(el.DFTBlock(tuple(range(M))))
    layout = ClonerLayout(
        N=N,
        M=M,
        variant=device,
        inputs=tuple(range(N)),
        blanks=tuple(range(N, M)) + (ancilla,),
        clones=tuple(range(M)),
        anticlones=(ancilla,),
    )
    return _make(M + 1, elements, layout)


def build_cloner_percopy(N: int, M: int) -> tuple[Circuit, ClonerLayout]:
    """Per-copy amplification cloner on ``N*M + N`` modes.

    Element order: N amplifiers, N M-splitters (``M - 1`` splitters each), then
    M inverse N-splitters (``N - 1`` splitters each) over the modes sharing a
    branch index.
    """
    _check_nm(N, M)
    anc = [N * M + k for k in range(N)]
    elements: list[el.Element] = [el.Amplifier(k * M, anc[k], M / N) for k in range(N)]
    for k in range(N):
        elements += el.m_splitter_elements([k * M + l for l in range(M)])
    for l in range(M):
        elements += el.inverse_n_splitter_elements([k * M + l for k in range(N)])
    inputs = tuple(k * M for k in range(N))
    layout = ClonerLayout(
        N=N,
        M=M,
        variant="percopy",
        inputs=inputs,
        blanks=tuple(m for m in range(N * M) if m not in inputs) + tuple(anc),
        clones=tuple(range(M)),
        anticlones=tuple(anc),
        waste=tuple(k * M + l for k in range(1, N) for l in range(M)),
    )
    return _make(N * M + N, elements, layout)


def build_cloner(N: int, M: int, variant: str = "msplitter") -> tuple[Circuit, ClonerLayout]:
    """Dispatch on ``variant`` (one of ``VARIANTS``)."""
    if variant == "percopy":
        return build_cloner_percopy(N, M)
    if variant in ("msplitter", "dft"):
        return build_cloner_dft(N, M, device=variant)
    raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")


def input_state(alpha: complex, squeeze: float = 0.0) -> GaussianState:
    """The state being cloned: ``|alpha>``, squeezed in x by ``squeeze``."""
    return displaced(squeezed_vacuum(squeeze), 0, alpha)


def prepare(
    circuit: Circuit,
    alpha: complex,
    input_squeeze: float = 0.0,
    ancilla_squeeze: float = 0.0,
) -> GaussianState:
    """Initial state: ``input_state(alpha, input_squeeze)`` on every input mode
    and ``squeezed_vacuum(ancilla_squeeze)`` on all other modes."""
    inputs = set(circuit.roles.get("inputs", ()))
    if not inputs:
        raise ValueError("circuit declares no input modes")
    psi = input_state(alpha, input_squeeze)
    aux = squeezed_vacuum(ancilla_squeeze)
    return tensor_all([psi if m in inputs else aux for m in range(circuit.n_modes)])


def run(
    circuit: Circuit,
    alpha: complex,
    input_squeeze: float = 0.0,
    ancilla_squeeze: float = 0.0,
) -> GaussianState:
    """Prepare the inputs and propagate them through ``circuit``.

    For squeezed inputs pass the same value as ``ancilla_squeeze`` to squeeze
    every blank and ancilla mode identically, which keeps the cloning optimal
    with respect to the squeezed input.
    """
    return apply(prepare(circuit, alpha, input_squeeze, ancilla_squeeze), circuit.transform())


def noise_contribution(
    circuit: Circuit, sources: Sequence[int], state: GaussianState | None = None
) -> np.ndarray:
    """Output covariance due to the input modes ``sources`` alone.

    Valid because prepared inputs are uncorrelated across modes. ``state``
    defaults to vacuum on every mode.
    """
    S = circuit.transform().S
    idx = np.array([[2 * m, 2 * m + 1] for m in sources], dtype=int).reshape(-1)
    if state is None:
        cov = VACUUM_VARIANCE * np.eye(idx.size)
    else:
        cov = state.cov[np.ix_(idx, idx)]
    return S[:, idx] @ cov @ S[:, idx].T


@dataclass
class CloneReport:
    """Per-clone statistics of one cloning run compared with the optimal bounds."""

    N: int
    M: int
    variant: str
    alpha: complex
    squeeze: float
    means: np.ndarray  # (M, 2)
    covs: np.ndarray  # (M, 2, 2)
    angles: tuple[float, ...]
    variances: np.ndarray  # (M, len(angles))
    fidelities: np.ndarray  # (M,)
    added_variance: np.ndarray  # (M, 2), per quadrature, relative to the input
    anticlone_means: np.ndarray  # (n_anticlones, 2)
    optimal_added_variance: float
    optimal_fidelity: float
    tol: float = SATURATION_TOL

    @property
    def fidelity_saturated(self) -> bool:
        return bool(np.all(np.abs(self.fidelities - self.optimal_fidelity) < self.tol))

    @property
    def noise_saturated(self) -> bool:
        return bool(
            np.all(np.abs(self.added_variance - self.optimal_added_variance) < self.tol)
        )

    @property
    def saturated(self) -> bool:
        return self.fidelity_saturated and self.noise_saturated

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "M": self.M,
            "variant": self.variant,
            "alpha": [self.alpha.real, self.alpha.imag],
            "squeeze": self.squeeze,
            "clone_means": self.means.tolist(),
            "clone_covs": self.covs.tolist(),
            "angles": list(self.angles),
            "variances": self.variances.tolist(),
            "fidelities": self.fidelities.tolist(),
            "fidelity": float(np.min(self.fidelities)),
            "added_variance": self.added_variance.tolist(),
            "anticlone_means": self.anticlone_means.tolist(),
            "optimal_fidelity": self.optimal_fidelity,
            "optimal_added_variance": self.optimal_added_variance,
            "fidelity_saturated": self.fidelity_saturated,
            "noise_saturated": self.noise_saturated,
            "saturated": self.saturated,
        }


def report(
    circuit: Circuit,
    layout: ClonerLayout,
    alpha: complex,
    squeeze: float = 0.0,
    ancilla_squeeze: float | None = None,
    tol: float = SATURATION_TOL,
) -> CloneReport:
    """Run ``circuit`` on ``alpha`` and compare every clone against the bounds.

    With ``squeeze`` non-zero the input is a displaced squeezed state and, unless
    ``ancilla_squeeze`` says otherwise, every auxiliary mode is squeezed to
    match. Fidelities are taken against that squeezed input, and added variance
    is the clone variance minus the input variance, per quadrature.
    """
    alpha = complex(alpha)
    if ancilla_squeeze is None:
        ancilla_squeeze = squeeze
    out = run(circuit, alpha, squeeze, ancilla_squeeze)
    target = input_state(alpha, squeeze)
    clones = [reduced_state(out, [m]) for m in layout.clones]
    means = np.array([c.mean for c in clones])
    covs = np.array([c.cov for c in clones])
    variances = np.array(
        [[quadrature_variance(c, 0, phi) for phi in REPORT_ANGLES] for c in clones]
    )
    fids = np.array([fidelity_vs_pure(c, target) for c in clones])
    added = np.array([np.diag(c.cov) - np.diag(target.cov) for c in clones])
    # added noise is in units of the input's variance for squeezed inputs
    added = added / (np.diag(target.cov) / VACUUM_VARIANCE)
    anti = np.array([out.mode_mean(m) for m in layout.anticlones]).reshape(-1, 2)
    return CloneReport(
        N=layout.N,
        M=layout.M,
        variant=layout.variant,
        alpha=alpha,
        squeeze=float(squeeze),
        means=means,
        covs=covs,
        angles=REPORT_ANGLES,
        variances=variances,
        fidelities=fids,
        added_variance=added,
        anticlone_means=anti,
        optimal_added_variance=optimal_added_variance(layout.N, layout.M),
        optimal_fidelity=optimal_fidelity(layout.N, layout.M),
        tol=tol,
    )


@dataclass
class AnticloneReport:
    modes: tuple[int, ...]
    means: np.ndarray  # (k, 2)
    covs: np.ndarray  # (k, 2, 2)

    @property
    def amplitudes(self) -> np.ndarray:
        return (self.means[:, 0] + 1j * self.means[:, 1]) / np.sqrt(2.0)


def anticlone_report(circuit: Circuit, layout: ClonerLayout, alpha: complex) -> AnticloneReport:
    """Means and covariances of the anticlone outputs.

    For the single-amplifier circuits the anticlone amplitude is
    ``sqrt(M - N) * conj(alpha)``, the phase conjugate of the input for 1 -> 2.
    """
    if not layout.anticlones:
        raise ValueError("layout has no anticlone modes")
    out = run(circuit, alpha)
    return AnticloneReport(
        modes=tuple(layout.anticlones),
        means=np.array([out.mode_mean(m) for m in layout.anticlones]),
        covs=np.array([out.mode_cov(m) for m in layout.anticlones]),
    )
