"""From quantum to classical correlations, one measurement at a time.

Measuring both sides of a bipartite state in the same basis turns shared
quantum correlations into a classical joint distribution.  The data
processing inequality orders the three layers:

    I(M:M)  <=  I(M^A:B)  <=  I(A:B)
"""

import numpy as np

from mubcorr import (
    classical_mi,
    joint_distribution,
    maximally_entangled,
    mub_family,
    one_sided_mi,
    quantum_mutual_information,
    random_mixed,
    shannon_entropy,
)

d = 3
fam = mub_family(d)

bell = maximally_entangled(d)
print(f"maximally entangled state, d = {d}: I(A:B) = {quantum_mutual_information(bell):.4f}")
joint = joint_distribution(bell, fam[0], fam[0])
print("Z-basis joint outcome table (perfectly correlated):")
print(np.round(joint.probs, 4))
print(f"H(joint) = {shannon_entropy(joint):.4f}, I(Z:Z) = {classical_mi(joint):.4f}")

# In the Fourier basis the correlation moves to (i + j) mod d = 0.
jx = joint_distribution(bell, fam[1], fam[1])
print("\nX-basis joint outcome table:")
print(np.round(jx.probs, 4))

print("\nDPI chain on a random mixed state:")
st = random_mixed(d, rng=2024)
i_ab = quantum_mutual_information(st)
print(f"{'basis':>6} {'I(M:M)':>10} {'I(M^A:B)':>10} {'I(A:B)':>10}")
for basis in fam:
    two = classical_mi(joint_distribution(st, basis, basis))
    one = one_sided_mi(st, basis, "A")
    print(f"{basis.label:>6} {two:10.6f} {one:10.6f} {i_ab:10.6f}")
    assert two <= one + 1e-9 <= i_ab + 2e-9
print("every row satisfies I(M:M) <= I(M^A:B) <= I(A:B)")
