#!/usr/bin/env python3
"""Winding numbers on the truncated circle.

The multiplication operator u(t) = exp(i m t) has winding number m.
Compressing it to the Fourier modes -N..N gives a non-invertible
Toeplitz matrix, but the matrix is still 1-gapped, and pairing it with
the truncated Dirac operator through the spectral localizer recovers m
as a quarter-signature -- already at very small truncation levels.
"""

import numpy as np

from specloc import (
    build_reduced,
    circle_dirac,
    circle_unitary_truncation,
    eig_hermitian,
    inertia_signature,
    max_delta,
    valid_region,
    winding_demo,
)
from specloc.svgplot import eigenvalue_scatter

# --- the m = 1, N = 3 example -------------------------------------------

triple = circle_dirac(3)
x = circle_unitary_truncation(1, 3)
print("truncated Dirac:", np.real(np.diag(triple.D0)))
print("gap of the truncated unitary: max_delta =", max_delta(x))

# the reduced (odd) localizer at kappa = 1
reduced = build_reduced(triple, x, kappa=1.0)
inert, sig = inertia_signature(reduced)
print(f"reduced localizer: inertia = {tuple(inert)}, signature = {sig}")

idx, report = winding_demo(1, 3, kappa=1.0, s=0.0)
print(f"index = Sig/4 = {idx}   (generalized signature {report.signature})")

with open("circle_m1_N3.svg", "w", encoding="utf-8") as fh:
    fh.write(eigenvalue_scatter(report.eigenvalues, "circle m=1, N=3, kappa=1"))
print("wrote circle_m1_N3.svg (red diamonds mark the positive surplus)")

# --- a winding sweep with the default evaluation point ------------------

print("\nwinding sweep at N = 8:")
for m in (-3, -2, -1, 1, 2, 3):
    idx, report = winding_demo(m, 8)
    print(f"  m = {m:+d}: index = {idx:+d}   "
          f"(kappa = {report.kappa:.4f}, min |eig| = {report.min_abs_eig:.3f})")

# --- where the signature is provably constant ---------------------------

region = valid_region(triple, x, delta=1.0)
print("\nsufficient constancy region for m=1, N=3 (delta = 1):")
print(f"  ||[D, x]|| = {region.commutator_norm}")
print(f"  kappa_max(s = 0.5) = {region.kappa_max(0.5)}")
print("  in this small-coupling region the signature is constant (and zero:")
print("  a fixed truncation only pairs nontrivially at finite kappa, here s = 0).")

eigs = eig_hermitian(build_reduced(triple, x, kappa=1.0))
print("\nreduced localizer spectrum:", np.round(eigs, 3))
