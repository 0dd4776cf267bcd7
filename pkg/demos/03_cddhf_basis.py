"""
The commuting-matrix Hermite basis used by the eigendecomposition method
========================================================================

The comparison method scales signals through a discrete Hermite-Gaussian
basis: the eigenvectors of S = M^4 D^2 + U^2, built from the centered
second difference and the squared coordinate.  For the continuous
harmonic oscillator the eigenvalues would be N(2p+1)/(2pi); the discrete
ones track that line closely at the bottom of the spectrum and bend away
near the top, where the zero-crossing ordering also breaks down.
"""

import numpy as np

from opscale import cddhf_basis

N = 32

basis = cddhf_basis(N, 1.0)
vecs = basis.vectors
vals = basis.eigenvalues

# --- orthonormality ---------------------------------------------------------
gram = np.max(np.abs(vecs.T @ vecs - np.eye(N)))
print(f"orthonormality  max|V^T V - I| = {gram:.3e}")

# --- eigenvalues vs the oscillator prediction -------------------------------
predicted = N * (2 * np.arange(N) + 1) / (2 * np.pi)
print("\n  p   eigenvalue   N(2p+1)/(2pi)   rel. gap")
for p in (0, 1, 2, 3, 8, 16, 24, 31):
    gap = abs(vals[p] - predicted[p]) / predicted[p]
    print(f" {p:3d}   {vals[p]:9.4f}   {predicted[p]:12.4f}   {gap:.2e}")

# --- zero crossings ----------------------------------------------------------
# A true Hermite function of order p crosses zero p times.  Count sign
# changes of each eigenvector; the bottom of the spectrum behaves, the
# top two pairs swap.
def crossings(v):
    kept = v[np.abs(v) > 1e-8 * np.max(np.abs(v))]
    return int(np.sum(np.sign(kept[1:]) != np.sign(kept[:-1])))

counts = [crossings(vecs[:, p]) for p in range(N)]
print("\nzero crossings per order:", counts)
mismatches = [p for p in range(N) if counts[p] != p]
print("orders where crossings != p:", mismatches if mismatches else "none")

# The lowest-order vector should look like a discrete Gaussian bell:
h0 = vecs[:, 0]
print(f"\nh_0: no sign changes = {crossings(h0) == 0}, peak at index {int(np.argmax(np.abs(h0)))} (center = {N // 2 - 1} or {N // 2})")
