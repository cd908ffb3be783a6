"""
Amplifying every copy separately
================================

Amplify each of the N inputs with gain M/N, split each over M modes, and
recombine the N branches sharing an output index. More amplification and more
intermediate noise, yet the clones are still optimal; M(N - 1) output modes are
left carrying only noise.
"""
import numpy as np

from cvcloning import build_cloner_percopy, report, run
from cvcloning.cloner import noise_contribution

N, M = 2, 4
circuit, layout = build_cloner_percopy(N, M)
print(f"{circuit.n_modes} modes, {circuit.count('amp')} amplifiers, "
      f"{circuit.count('bs')} beam splitters, {len(layout.waste)} waste modes")

rep = report(circuit, layout, 2 + 1j)
print("clone fidelities:", rep.fidelities)

out = run(circuit, 2 + 1j)
print("waste means:", np.array([out.mode_mean(m) for m in layout.waste]).round(14).tolist())

# Noise that the vacuum branches leave on each intermediate mode after the
# M-splitters: (M - 1) / 2M per quadrature.
stage = circuit.truncated(N + N * (M - 1))
vac = [k * M + l for k in range(N) for l in range(1, M)]
d = noise_contribution(stage, vac)
print("intermediate vacuum noise:", d[0, 0], " expected:", (M - 1) / (2 * M))
