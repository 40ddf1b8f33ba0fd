import numpy as np
import pytest

from specloc import (
    bilateral_shift_truncation,
    clifford_rep,
    embed_low,
    graded_part,
    identity_element,
    max_delta,
    operator_element,
    reduce_periodic,
    sigma_spectrum,
    verify_doubling,
)
from specloc.errors import DimensionMismatchError, ModeMismatchError, NotOddError


def relation_residual(rep):
    eye = np.eye(rep.rep_dim)
    worst = 0.0
    for i, gi in enumerate(rep.generators):
        worst = max(worst, np.linalg.norm(gi - gi.conj().T, 2))
        worst = max(worst, np.linalg.norm(rep.grading @ gi + gi @ rep.grading, 2))
        for j, gj in enumerate(rep.generators):
            target = 2.0 * eye if i == j else 0.0 * eye
            worst = max(worst, np.linalg.norm(gi @ gj + gj @ gi - target, 2))
    worst = max(worst, np.linalg.norm(rep.grading @ rep.grading - eye, 2))
    return worst


def test_p1_exact_form():
    rep = clifford_rep(1)
    assert rep.rep_dim == 2 and rep.parity == "odd"
    np.testing.assert_allclose(rep.generators[0], np.diag([1.0, -1.0]))
    np.testing.assert_allclose(rep.grading, [[0, 1], [1, 0]])


def test_p2_exact_form():
    rep = clifford_rep(2)
    assert rep.rep_dim == 2 and rep.parity == "even"
    np.testing.assert_allclose(rep.generators[0], [[0, 1], [1, 0]])
    np.testing.assert_allclose(rep.generators[1], [[0, -1j], [1j, 0]])
    np.testing.assert_allclose(rep.grading, np.diag([1.0, -1.0]))


@pytest.mark.parametrize("p", [1, 2, 3, 4, 7, 8])
def test_relations(p):
    rep = clifford_rep(p)
    assert rep.rep_dim == 2 ** ((p + 1) // 2)
    assert len(rep.generators) == p
    assert relation_residual(rep) < 1e-12


def test_even_grading_is_balanced_diagonal():
    rep = clifford_rep(4)
    half = rep.rep_dim // 2
    np.testing.assert_allclose(
        rep.grading, np.diag([1.0] * half + [-1.0] * half)
    )


def test_graded_part_projectors():
    rep = clifford_rep(2)
    rng = np.random.default_rng(0)
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    even = graded_part(a, rep, 0)
    odd = graded_part(a, rep, 1)
    np.testing.assert_allclose(even + odd, a)
    np.testing.assert_allclose(graded_part(even, rep, 0), even)
    np.testing.assert_allclose(graded_part(even, rep, 1), np.zeros((2, 2)), atol=1e-15)


def test_graded_parts_match_block_structure():
    # odd p: even part of diag(x, -x) w.r.t. the swap grading vanishes
    rep1 = clifford_rep(1)
    a = np.diag([2.0, -2.0])
    np.testing.assert_allclose(graded_part(a, rep1, 0), np.zeros((2, 2)), atol=1e-15)
    np.testing.assert_allclose(graded_part(a, rep1, 1), a)
    # even p: the antidiagonal block form is purely odd
    rep2 = clifford_rep(2)
    rng = np.random.default_rng(1)
    b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    z = np.zeros((3, 3))
    anti = np.block([[z, b], [b.conj().T, z]])
    np.testing.assert_allclose(graded_part(anti, rep2, 1), anti)


def test_graded_part_dimension_check():
    with pytest.raises(DimensionMismatchError):
        graded_part(np.eye(3), clifford_rep(2), 0)


def test_embed_low_unit():
    e = identity_element(1)
    emb = embed_low(e, "V0")
    np.testing.assert_allclose(emb.matrix, np.diag([1.0, -1.0]))
    assert emb.self_adjoint and emb.ambient_dim == 2


def test_embed_low_shift_v1():
    x = bilateral_shift_truncation(3)
    emb = embed_low(x, "V1")
    np.testing.assert_allclose(emb.matrix[:3, 3:], x.matrix)
    np.testing.assert_allclose(emb.matrix[3:, :3], x.matrix.conj().T)
    np.testing.assert_allclose(emb.matrix[:3, :3], np.zeros((3, 3)))


def test_embed_low_doubles_sigma():
    x = bilateral_shift_truncation(4)
    sigma = sigma_spectrum(x)
    doubled = sigma_spectrum(embed_low(x, "V1"))
    np.testing.assert_allclose(doubled, np.sort(np.concatenate([sigma, sigma])), atol=1e-12)
    assert max_delta(embed_low(x, "V1")) == pytest.approx(max_delta(x))


def test_embed_low_v0_needs_self_adjoint():
    with pytest.raises(ModeMismatchError):
        embed_low(bilateral_shift_truncation(3), "V0")


def test_round_trips():
    rng = np.random.default_rng(2)
    h = rng.standard_normal((3, 3))
    h = operator_element(h + h.T, self_adjoint=True)
    back = reduce_periodic(embed_low(h, "V0"), 0)
    np.testing.assert_allclose(back.matrix, h.matrix)
    assert back.self_adjoint
    x = bilateral_shift_truncation(3)
    back = reduce_periodic(embed_low(x, "V1"), 1)
    np.testing.assert_allclose(back.matrix, x.matrix)


def test_reduce_p2_preserves_sigma():
    # odd element of E (x) CCl_3: diag(a, -a) with a self-adjoint on 2*dn
    rng = np.random.default_rng(3)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    a = a + a.conj().T
    y = operator_element(
        np.block([[a, np.zeros((4, 4))], [np.zeros((4, 4)), -a]]),
        self_adjoint=True,
    )
    reduced = reduce_periodic(y, 2)
    np.testing.assert_allclose(reduced.matrix, a)
    assert max_delta(reduced) == pytest.approx(max_delta(y))


def test_reduce_rejects_non_odd():
    bad = identity_element(4)  # commutes with any grading
    with pytest.raises(NotOddError):
        reduce_periodic(bad, 0)


def test_reduce_rejects_off_algebra():
    # anticommutes with the swap grading but has off-diagonal blocks
    b = np.array([[0.0, 1.0], [1.0, 0.0]])
    y = operator_element(np.block([[np.zeros((2, 2)), b], [b, np.zeros((2, 2))]]))
    with pytest.raises(NotOddError):
        reduce_periodic(y, 0)


def test_verify_doubling_unit():
    e = identity_element(1)
    assert verify_doubling(e, 0.5)
    # both sides of the similarity have eigenvalues {-0.5 x2, 1.5 x2}
    from specloc import bordered, eig_hermitian

    np.testing.assert_allclose(
        eig_hermitian(np.kron(bordered(e, 0.5), np.eye(2))),
        [-0.5, -0.5, 1.5, 1.5],
        atol=1e-12,
    )


def test_doubling_eigenvalue_multisets_agree():
    from specloc import bordered, eig_hermitian

    rng = np.random.default_rng(5)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    x = operator_element(a)
    s = 0.3
    zero, eye = np.zeros((3, 3)), s * np.eye(3)
    ah = a.conj().T
    four = np.block(
        [[eye, zero, zero, a], [zero, eye, ah, zero],
         [zero, a, eye, zero], [ah, zero, zero, eye]]
    )
    np.testing.assert_allclose(
        eig_hermitian(four),
        eig_hermitian(np.kron(bordered(x, s), np.eye(2))),
        atol=1e-12,
    )


def test_verify_doubling_shift():
    assert verify_doubling(bilateral_shift_truncation(3), 0.3)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_verify_doubling_random(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert verify_doubling(operator_element(a), 0.4)
    h = operator_element(a + a.conj().T, self_adjoint=True)
    assert verify_doubling(h, 0.4)
