"""
N -> M cloning with one amplifier
=================================

Concentrate the N copies into one mode, amplify it with gain M/N, distribute it
over M modes. The concentration and distribution can use beam-splitter cascades
or DFT multiports; both give the optimal fidelity MN / (MN + M - N).
"""
from cvcloning import build_cloner, optimal_added_variance, report

N, M = 3, 7
for device in ("msplitter", "dft"):
    circuit, layout = build_cloner(N, M, device)
    rep = report(circuit, layout, 1 - 2j)
    print(f"{device:>9}: {circuit.count('bs')} beam splitters, "
          f"{circuit.count('amp')} amplifier, {circuit.count('dft')} DFT blocks")
    print(f"           fidelities {rep.fidelities.round(12)}")
    print(f"           added variance {rep.added_variance[0]} "
          f"(bound {optimal_added_variance(N, M)})")

# Fidelity table for small N, M.
print("\n N\\M " + "".join(f"{m:>8}" for m in range(1, 7)))
for n in range(1, 7):
    row = [report(*build_cloner(n, m), 1).fidelities[0] if m >= n else None
           for m in range(1, 7)]
    print(f"{n:>4} " + "".join(f"{f:8.4f}" if f else " " * 8 for f in row))
