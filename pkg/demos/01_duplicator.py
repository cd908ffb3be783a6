"""
1 -> 2 cloning of a coherent state
==================================

A gain-2 phase-insensitive amplifier followed by a 50:50 beam splitter turns
one coherent state into two identical clones of fidelity 2/3, and leaves the
amplifier ancilla centred on the phase-conjugate amplitude.
"""
import numpy as np

from cvcloning import anticlone_report, build_duplicator, report, run

circuit, layout = build_duplicator()
for e in circuit.elements:
    print(e)

alpha = 1.5 + 0.5j
out = run(circuit, alpha)

# Both clones sit on the input mean, with twice the vacuum noise in every
# direction of phase space.
for m in layout.clones:
    print(f"clone {m}: mean {out.mode_mean(m)}, cov\n{out.mode_cov(m)}")

rep = report(circuit, layout, alpha)
print("fidelities:", rep.fidelities, " optimal:", rep.optimal_fidelity)

# The fidelity does not depend on the amplitude being cloned.
for a in [0, 1j, -2 + 3j, 5]:
    print(f"alpha={a!s:>8}  F={report(circuit, layout, a).fidelities[0]:.12f}")

# The ancilla carries the anticlone (x0, -p0).
anti = anticlone_report(circuit, layout, alpha)
print("anticlone amplitude:", anti.amplitudes[0], " conj(alpha):", np.conj(alpha))
