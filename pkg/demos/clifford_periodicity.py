#!/usr/bin/env python3
"""Clifford matrix models and the periodicity reductions.

The complex Clifford algebra on p generators is represented in
dimension 2^ceil(p/2); odd p sits block-diagonally under a swap
grading, even p carries the diagonal grading diag(I, -I).  Embedding an
element into the odd part of E (x) CCl_1 or CCl_2 and reducing back is
the matrix shadow of the formal periodicity of the gapped invariants.
"""

import numpy as np

from specloc import (
    bilateral_shift_truncation,
    clifford_rep,
    embed_low,
    graded_part,
    max_delta,
    operator_element,
    reduce_periodic,
    sigma_spectrum,
    verify_doubling,
)

# --- the small algebras ----------------------------------------------------

for p in (1, 2, 3, 4):
    rep = clifford_rep(p)
    print(f"CCl_{p}: dim {rep.rep_dim}, grading parity '{rep.parity}'")
    worst = 0.0
    eye = np.eye(rep.rep_dim)
    for i, gi in enumerate(rep.generators):
        for j, gj in enumerate(rep.generators):
            target = 2.0 * eye if i == j else 0.0 * eye
            worst = max(worst, np.linalg.norm(gi @ gj + gj @ gi - target, 2))
    print(f"  worst anticommutation residual: {worst:.2e}")

rep2 = clifford_rep(2)
print("\nCCl_2 generators (Pauli x and y):")
print(np.round(rep2.generators[0], 10))
print(np.round(rep2.generators[1], 10))

# graded parts are complementary projections
rng = np.random.default_rng(1)
a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
even, odd = graded_part(a, rep2, 0), graded_part(a, rep2, 1)
print("even + odd reassembles:", np.allclose(even + odd, a))

# --- embed and reduce --------------------------------------------------------

x = bilateral_shift_truncation(3)
emb = embed_low(x, "V1")
print("\nshift embedded in E (x) CCl_2: size", emb.matrix.shape[0],
      "self-adjoint:", emb.self_adjoint)
print("gap preserved:", max_delta(emb) == max_delta(x))
print("Sigma doubled:", np.allclose(
    sigma_spectrum(emb),
    np.sort(np.concatenate([sigma_spectrum(x)] * 2)),
))

back = reduce_periodic(emb, 1)
print("round trip exact:", np.array_equal(back.matrix, x.matrix))

h = rng.standard_normal((3, 3))
h = operator_element(h + h.T, self_adjoint=True)
print("V0 round trip exact:",
      np.array_equal(reduce_periodic(embed_low(h, "V0"), 0).matrix, h.matrix))

# --- the four-block doubling similarity --------------------------------------

print("\ndoubling similarity (four-block form ~ bordered (x) I_2):")
print("  unit, s = 0.5:  ", verify_doubling(operator_element(np.eye(2)), 0.5))
print("  shift, s = 0.3: ", verify_doubling(x, 0.3))
g = operator_element(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
print("  random, s = 0.7:", verify_doubling(g, 0.7))
