"""Tour of the mutually unbiased basis families.

Builds the complete d+1 families for a few prime dimensions, checks the
defining overlap property, and shows the quadratic-phase structure that
generates every basis beyond Z and X.
"""

import numpy as np

from mubcorr import mub_family, overlap_matrix

for d in (2, 3, 5, 7):
    fam = mub_family(d)
    print(f"d = {d}: {len(fam)} bases, labels {[b.label for b in fam]}")
    worst = 0.0
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            dev = np.abs(overlap_matrix(fam[i], fam[j]) - 1 / d).max()
            worst = max(worst, dev)
    print(f"  worst |overlap^2 - 1/d| across all pairs: {worst:.2e}")

# The d = 5 family comes from diag(w^(j^2 mod 5)) applied to the Fourier
# basis; the exponents 0,1,4,4,1 are why the published diagonal generator
# reads (1, w, w^4, w^4, w).
print("\nquadratic residues j^2 mod 5:", [j * j % 5 for j in range(5)])

fam5 = mub_family(5)
print("\nthird basis of the d = 5 family (phases as multiples of 2*pi/5):")
angles = np.angle(fam5[2].matrix * np.sqrt(5)) / (2 * np.pi / 5)
print(np.round(angles).astype(int) % 5)

# Any pair drawn from different bases really does have |<x|z>|^2 = 1/5.
x0 = fam5[1].column(0)
g3 = fam5[3].column(2)
print(f"\nexample overlap |<x0|g3>|^2 = {abs(np.vdot(x0, g3))**2:.6f}  (1/5 = {1/5})")
