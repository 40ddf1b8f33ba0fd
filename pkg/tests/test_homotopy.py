import numpy as np
import pytest

from specloc import (
    HomotopyPath,
    bilateral_shift_truncation,
    circle_dirac,
    circle_unitary_truncation,
    contract_invertible,
    direct_sum_class,
    distinct_by_index,
    equal_certified,
    identity_element,
    make_witness,
    max_delta,
    min_singular_value,
    operator_element,
    sigma_spectrum,
    stabilize,
    verify_path,
    verify_similarity,
)
from specloc.errors import (
    DimensionMismatchError,
    GapViolationError,
    LevelTooSmallError,
    ModeMismatchError,
    NotGappedError,
    NotInvertibleError,
    ShapeMismatchError,
)


def unitary_exp(h, t):
    """exp(i t h) for self-adjoint h."""
    eigs, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * t * eigs)) @ vecs.conj().T


def constant_path(x, samples=5):
    params = tuple(k / (samples - 1) for k in range(samples))
    return HomotopyPath(tuple(x for _ in params), params)


def test_constant_path_certified():
    cert = verify_path(constant_path(identity_element(2)), 0.5)
    assert cert.verdict and not cert.violations


def test_rotation_path_certified():
    rng = np.random.default_rng(0)
    h = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = (h + h.conj().T) / 2
    x0 = identity_element(4)
    params = tuple(k / 32 for k in range(33))
    samples = []
    for t in params:
        u = unitary_exp(h, t)
        samples.append(operator_element(u @ x0.matrix @ u.conj().T))
    cert = verify_path(HomotopyPath(tuple(samples), params), 0.5)
    assert cert.verdict
    # Sigma is constant along a conjugation path
    for s in samples:
        np.testing.assert_allclose(sigma_spectrum(s), [-1, -1, -1, -1, 1, 1, 1, 1], atol=1e-12)


def test_linear_path_through_zero_fails():
    e = identity_element(1).matrix
    params = tuple(k / 10 for k in range(11))
    samples = tuple(operator_element((1 - t) * e + t * (-e)) for t in params)
    cert = verify_path(HomotopyPath(samples, params), 0.5)
    assert not cert.verdict
    assert any(kind == "gap" for kind, _ in cert.violations)
    with pytest.raises(GapViolationError):
        verify_path(HomotopyPath(samples, params), 0.5, strict=True)


def test_big_step_fails_guard():
    rng = np.random.default_rng(1)
    u = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))[0]
    a = identity_element(3)
    b = operator_element(u)  # both gapped, but far apart
    cert = verify_path(HomotopyPath((a, b), (0.0, 1.0)), 0.5)
    assert any(kind == "step" for kind, _ in cert.violations)


def test_sa_mode_requires_self_adjoint_samples():
    with pytest.raises(ModeMismatchError):
        verify_path(constant_path(bilateral_shift_truncation(3)), 0.5, mode="sa")


def test_path_shape_validation():
    a = identity_element(2)
    with pytest.raises(ShapeMismatchError):
        HomotopyPath((a, identity_element(3)), (0.0, 1.0))
    with pytest.raises(ShapeMismatchError):
        HomotopyPath((a, a), (0.0, 0.5))


def test_stabilize():
    e = identity_element(1)
    up = stabilize(e, 2)
    np.testing.assert_allclose(up.matrix, np.eye(2))
    assert up.block_size == 2
    with pytest.raises(LevelTooSmallError):
        stabilize(up, 1)


def test_stabilize_spectrum():
    x = bilateral_shift_truncation(5)
    up = stabilize(x, 2)
    expected = np.sort(np.concatenate([sigma_spectrum(x), [-1.0] * 5, [1.0] * 5]))
    np.testing.assert_allclose(sigma_spectrum(up), expected, atol=1e-12)
    assert max_delta(up) == pytest.approx(min(max_delta(x), 1.0))


def test_stabilize_associative():
    x = bilateral_shift_truncation(3)
    np.testing.assert_allclose(
        stabilize(stabilize(x, 2), 4).matrix, stabilize(x, 4).matrix
    )


def test_direct_sum_class():
    e = identity_element(2)
    total = direct_sum_class(e, e)
    assert total.block_size == 2 and total.dim == 4
    x = bilateral_shift_truncation(4)
    y = identity_element(4)
    assert max_delta(direct_sum_class(x, y)) == pytest.approx(
        min(max_delta(x), max_delta(y))
    )
    with pytest.raises(DimensionMismatchError):
        direct_sum_class(identity_element(2), identity_element(3))


def test_direct_sum_commutative_up_to_swap():
    rng = np.random.default_rng(2)
    a = operator_element(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    b = operator_element(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    ab = direct_sum_class(a, b).matrix
    ba = direct_sum_class(b, a).matrix
    swap = np.zeros((4, 4))
    swap[:2, 2:] = np.eye(2)
    swap[2:, :2] = np.eye(2)
    assert verify_similarity(ab, ba, swap)


def test_contract_identity():
    path = contract_invertible(identity_element(2), steps=33)
    assert len(path.samples) == 33
    np.testing.assert_allclose(path.samples[0].matrix, np.eye(2))
    np.testing.assert_allclose(path.samples[-1].matrix, 1j * np.eye(2))
    assert all(min_singular_value(s.matrix) > 0.7 for s in path.samples)


def test_contract_sign_matrix():
    x = operator_element(np.diag([1.0, -1.0]), self_adjoint=True)
    path = contract_invertible(x, steps=33)
    np.testing.assert_allclose(path.samples[-1].matrix, 1j * np.eye(2))
    assert all(min_singular_value(s.matrix) > 0.7 for s in path.samples)


def test_contract_mixed_phases():
    x = operator_element(np.diag([1.0, 1j]))
    path = contract_invertible(x, steps=33)
    assert all(min_singular_value(s.matrix) > 1e-8 for s in path.samples)


def test_contract_rejects_singular():
    with pytest.raises(NotInvertibleError):
        contract_invertible(bilateral_shift_truncation(3))


def test_contract_path_verifies_at_delta_zero():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    a = a + 3.0 * np.eye(4)  # comfortably invertible
    path = contract_invertible(operator_element(a), steps=65)
    cert = verify_path(path, 0.0)
    assert cert.verdict
    # and at any delta below the path's minimal gap
    delta = 0.5 * min(min_singular_value(s.matrix) for s in path.samples)
    assert verify_path(path, delta).verdict


def test_witness_equengance_via_constant_path():
    e1 = make_witness(identity_element(1), 0.5)
    e2 = make_witness(stabilize(identity_element(1), 2), 0.5)
    level = max(e1.level, e2.level)
    a = stabilize(e1.plus, level)
    path = constant_path(a, samples=3)
    assert equal_certified(e1, e2, path)


def test_witness_rejects_ungapped():
    with pytest.raises(NotGappedError):
        make_witness(bilateral_shift_truncation(3), 1.5)


def test_witnesses_distinct_by_winding():
    triple = circle_dirac(3)
    w1 = make_witness(circle_unitary_truncation(1, 3), 1.0)
    w2 = make_witness(circle_unitary_truncation(2, 3), 1.0)
    assert distinct_by_index(w1, w2, triple, kappa=0.1, s=0.0)
    assert w1.invariant_indices["circle-N3"] == 1
    assert w2.invariant_indices["circle-N3"] == 2


def test_witness_index_invariant_under_stabilization():
    triple = circle_dirac(3)
    x = circle_unitary_truncation(1, 3)
    w = make_witness(x, 1.0)
    w_up = make_witness(stabilize(x, 2), 1.0)
    assert not distinct_by_index(w, w_up, triple, kappa=0.5, s=0.0)
    assert w.invariant_indices == w_up.invariant_indices


def test_witnesses_equal_under_conjugation():
    rng = np.random.default_rng(4)
    x = identity_element(3)
    h = rng.standard_normal((3, 3))
    h = (h + h.T) / 2
    params = tuple(k / 16 for k in range(17))
    samples = tuple(
        operator_element(unitary_exp(h, t) @ x.matrix @ unitary_exp(h, t).conj().T)
        for t in params
    )
    w1 = make_witness(samples[0], 0.5)
    w2 = make_witness(samples[-1], 0.5)
    assert equal_certified(w1, w2, HomotopyPath(samples, params))
