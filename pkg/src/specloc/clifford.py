"""Matrix models of the complex Clifford algebras and their gap-preserving
embeddings and periodicity reductions.

Generators are built by the Jordan-Wigner tensor recursion and then
conjugated into the normal form where the grading of an even algebra is
exactly diag(I, -I); the odd algebra CCl_{2m+1} sits block-diagonally
inside M_{2^{m+1}} with the swap grading, which lives in the multiplier
algebra rather than the algebra itself.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ModeMismatchError, NotOddError, NotSelfAdjointError
from .gap import OperatorElement, bordered
from .linalg import DEFAULT_POLICY, TolerancePolicy, as_matrix, operator_norm, verify_similarity

_SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class CliffordRep:
    p: int
    rep_dim: int
    generators: tuple
    grading: np.ndarray
    parity: str  # "even": diagonal grading; "odd": block-swap grading


def _jordan_wigner(m: int):
    """Generators of CCl_{2m} in M_{2^m} with the grading sorted to diag(I, -I)."""
    gens = []
    for k in range(1, m + 1):
        for seed in (_SX, _SY):
            factors = [_SZ] * (k - 1) + [seed] + [np.eye(2, dtype=np.complex128)] * (m - k)
            g = np.array([[1.0 + 0j]])
            for f in factors:
                g = np.kron(g, f)
            gens.append(g)
    grading = np.array([[1.0 + 0j]])
    for _ in range(m):
        grading = np.kron(grading, _SZ)
    order = np.argsort(-np.real(np.diag(grading)), kind="stable")
    perm = np.eye(2**m)[order]
    return [perm @ g @ perm.T for g in gens], perm @ grading @ perm.T


def _freeze(arrays):
    for a in arrays:
        a.setflags(write=False)
    return arrays


def clifford_rep(p: int) -> CliffordRep:
    """Concrete representation of CCl_p with self-adjoint unitary generators."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if p % 2 == 0:
        gens, grading = _jordan_wigner(p // 2)
        _freeze(gens + [grading])
        return CliffordRep(p, 2 ** (p // 2), tuple(gens), grading, "even")
    m = (p - 1) // 2
    base, base_grading = _jordan_wigner(m)
    base.append(base_grading)  # the volume element anticommutes with all others
    half = 2**m
    zero = np.zeros((half, half), dtype=np.complex128)
    gens = [np.block([[b, zero], [zero, -b]]) for b in base]
    eye = np.eye(half, dtype=np.complex128)
    grading = np.block([[zero, eye], [eye, zero]])
    _freeze(gens + [grading])
    return CliffordRep(p, 2 * half, tuple(gens), grading, "odd")


def graded_part(a, rep: CliffordRep, parity: int) -> np.ndarray:
    """(a + (-1)^parity * G a G) / 2 relative to the representation's grading."""
    a = as_matrix(a)
    c = rep.rep_dim
    if a.shape[0] != a.shape[1] or a.shape[0] % c:
        raise DimensionMismatchError(f"size {a.shape} incompatible with rep_dim {c}")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    g = np.kron(rep.grading, np.eye(a.shape[0] // c))
    sign = 1.0 if parity == 0 else -1.0
    return (a + sign * (g @ a @ g)) / 2.0


def embed_low(x: OperatorElement, target: str) -> OperatorElement:
    """Embed x as an odd self-adjoint element of E (x) CCl_1 or CCl_2.

    V0 (self-adjoint x): diag(x, -x), the odd part of the CCl_1 picture.
    V1 (general x): [[0, x], [x*, 0]], the odd part of the CCl_2 picture.
    The Clifford factor is the outer tensor slot.
    """
    if target not in ("V0", "V1"):
        raise ValueError("target must be 'V0' or 'V1'")
    m = x.matrix
    zero = np.zeros_like(m)
    if target == "V0":
        if not x.self_adjoint:
            raise ModeMismatchError("V0 embedding requires a self-adjoint element")
        doubled = np.block([[m, zero], [zero, -m]])
    else:
        doubled = np.block([[zero, m], [m.conj().T, zero]])
    return OperatorElement(doubled, x.block_size, 2 * x.ambient_dim, True)


def reduce_periodic(
    y: OperatorElement, p: int, policy: TolerancePolicy = DEFAULT_POLICY
) -> OperatorElement:
    """Invert the periodicity embedding: extract x from an odd self-adjoint
    element y of M_n(E (x) CCl_{p+1}).

    For even p the odd part is {diag(x, -x)} and x is returned as a
    self-adjoint element; for odd p it is the corner-block form
    [[0, x], [x*, 0]] and the (generally non-self-adjoint) corner is
    returned.  Gap data is preserved: max_delta(y) = max_delta(result).
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    m = y.matrix
    dim = m.shape[0]
    if dim % 2:
        raise DimensionMismatchError("odd-sized matrix cannot be graded-reduced")
    half = dim // 2
    scale = max(operator_norm(m), 1.0)
    tol = policy.scaled_tol(dim, scale)
    if operator_norm(m - m.conj().T) > tol:
        raise NotSelfAdjointError("reduction input must be self-adjoint")

    rep = clifford_rep(p + 1)
    if dim % rep.rep_dim:
        raise DimensionMismatchError(
            f"size {dim} incompatible with the CCl_{p + 1} representation "
            f"dimension {rep.rep_dim}"
        )
    grading = np.kron(rep.grading, np.eye(dim // rep.rep_dim))
    if operator_norm(grading @ m + m @ grading) > tol:
        raise NotOddError("element does not anticommute with the grading")

    if p % 2 == 0:
        block = m[:half, :half]
        expected = np.block(
            [[block, np.zeros_like(block)], [np.zeros_like(block), -block]]
        )
        self_adjoint = True
    else:
        block = m[:half, half:]
        expected = np.block(
            [[np.zeros_like(block), block], [block.conj().T, np.zeros_like(block)]]
        )
        self_adjoint = False
    if operator_norm(m - expected) > tol:
        raise NotOddError("element is odd but not in the represented algebra")
    return OperatorElement(
        np.array(block), y.block_size, y.ambient_dim // 2, self_adjoint
    )


def verify_doubling(
    x: OperatorElement, s: float, policy: TolerancePolicy = DEFAULT_POLICY
) -> bool:
    """Check the four-block doubling similarity against bordered(x, s) (x) I_2.

    Uses the V0 form for self-adjoint x (which needs a signed
    permutation conjugator) and the V1 form otherwise (plain
    permutation); the conjugator is constructed by index bookkeeping.
    """
    m = x.matrix
    q = m.shape[0]
    zero = np.zeros_like(m)
    eye = s * np.eye(q)
    if x.self_adjoint:
        four = np.block(
            [
                [eye, zero, m, zero],
                [zero, eye, zero, -m],
                [m, zero, eye, zero],
                [zero, -m, zero, eye],
            ]
        )
        block_map = {0: (0, 0, 1.0), 1: (0, 1, 1.0), 2: (1, 0, 1.0), 3: (1, 1, -1.0)}
    else:
        mh = m.conj().T
        four = np.block(
            [
                [eye, zero, zero, m],
                [zero, eye, mh, zero],
                [zero, m, eye, zero],
                [mh, zero, zero, eye],
            ]
        )
        block_map = {0: (0, 0, 1.0), 1: (1, 1, 1.0), 2: (0, 1, 1.0), 3: (1, 0, 1.0)}

    conj = np.zeros((4 * q, 4 * q))
    for u, (beta, t, sign) in block_map.items():
        for j in range(q):
            conj[(beta * q + j) * 2 + t, u * q + j] = sign
    target = np.kron(bordered(x, s), np.eye(2))
    return verify_similarity(four, target, conj, policy)
