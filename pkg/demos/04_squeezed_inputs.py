"""
Cloning squeezed states
=======================

For squeezed inputs the cloner stays optimal only if every auxiliary mode,
amplifier ancilla included, is squeezed the same way. With plain vacuum on the
auxiliary modes the clones are worse.
"""
from cvcloning import build_cloner, optimal_fidelity, report

r = 0.5
for N, M in [(1, 2), (2, 3), (2, 5)]:
    circuit, layout = build_cloner(N, M, "msplitter")
    matched = report(circuit, layout, 1 + 1j, squeeze=r)
    vacuum = report(circuit, layout, 1 + 1j, squeeze=r, ancilla_squeeze=0.0)
    print(f"{N} -> {M}: optimal {optimal_fidelity(N, M):.6f}  matched "
          f"{matched.fidelities.min():.6f}  vacuum ancillas {vacuum.fidelities.min():.6f}")

# The DFT multiport has complex phases, which rotate the squeezing of the
# auxiliary modes; identically squeezed ancillas are then not enough.
circuit, layout = build_cloner(2, 3, "dft")
print("dft device, 2 -> 3:", report(circuit, layout, 1, squeeze=r).fidelities.round(6))
