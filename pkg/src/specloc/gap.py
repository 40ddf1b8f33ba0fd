"""Gap certificates for concretely represented operator system elements.

An element x of M_n(E), carried as a dn x dn complex matrix, is
delta-singular ("delta-gapped") when the spectrum of the doubled matrix

    Sigma_x = spec [[0, x], [x*, 0]]

avoids (-delta, 0) and (0, delta).  The bordered matrix
``[[s, x], [x*, s]]`` probes this: its eigenvalues are ``s + Sigma_x``,
so the element is delta-singular exactly when the bordered matrix stays
invertible for every shift s in (0, delta).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ModeMismatchError, NonFiniteError
from .linalg import (
    DEFAULT_POLICY,
    TolerancePolicy,
    as_matrix,
    eig_hermitian,
    operator_norm,
)

MODES = ("spectrum", "grid", "self_adjoint")


@dataclass(frozen=True)
class OperatorElement:
    """A matrix over M_n(E) with its block metadata.

    ``matrix`` has size (ambient_dim * block_size); element blocks are
    outer, the ambient representation space inner.
    """

    matrix: np.ndarray
    block_size: int = 1
    ambient_dim: int = 1
    self_adjoint: bool = False

    def __post_init__(self):
        m = as_matrix(self.matrix).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"element matrix must be square, got {m.shape}")
        if self.block_size < 1 or self.ambient_dim < 1:
            raise ValueError("block_size and ambient_dim must be positive")
        if self.block_size * self.ambient_dim != m.shape[0]:
            raise ValueError(
                f"matrix size {m.shape[0]} != block_size {self.block_size} "
                f"* ambient_dim {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def operator_element(
    matrix,
    block_size: int = 1,
    self_adjoint: bool | None = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> OperatorElement:
    """Wrap a matrix, inferring ambient dimension and (optionally) self-adjointness."""
    m = as_matrix(matrix)
    if m.shape[0] % block_size:
        raise ValueError(f"size {m.shape[0]} not divisible by block_size {block_size}")
    if self_adjoint is None:
        self_adjoint = operator_norm(m - m.conj().T) <= policy.tau(m)
    return OperatorElement(m, block_size, m.shape[0] // block_size, bool(self_adjoint))


def identity_element(ambient_dim: int, block_size: int = 1) -> OperatorElement:
    """The unit e_n = identity of M_n(E)."""
    return OperatorElement(
        np.eye(ambient_dim * block_size, dtype=np.complex128),
        block_size,
        ambient_dim,
        True,
    )


@dataclass(frozen=True)
class GapCertificate:
    sigma_x: np.ndarray
    delta_max: float
    queried_delta: float
    verdict: bool
    marginal: bool
    s_gaps: tuple = field(default_factory=tuple)
    mode: str = "spectrum"


def bordered(x: OperatorElement, s: float) -> np.ndarray:
    """The self-adjoint probe [[s, x], [x*, s]]."""
    if not math.isfinite(s):
        raise NonFiniteError("shift s must be finite")
    m = x.matrix
    eye = s * np.eye(m.shape[0])
    return np.block([[eye, m], [m.conj().T, eye]])


def sigma_spectrum(x: OperatorElement, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Sigma_x: ascending eigenvalues of the doubled matrix, symmetric about 0."""
    return eig_hermitian(bordered(x, 0.0), policy)


def max_delta(x: OperatorElement, policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    """Largest certifiable gap: smallest |lambda| over nonzero lambda in Sigma_x."""
    return _max_delta_from(sigma_spectrum(x, policy), bordered(x, 0.0), policy)


def s_gap(x: OperatorElement, s: float, policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    """Smallest absolute eigenvalue of the bordered matrix at shift s."""
    if s < 0:
        raise ValueError("shift s must be nonnegative")
    return float(np.min(np.abs(eig_hermitian(bordered(x, s), policy))))


def delta_singular_check(
    x: OperatorElement,
    delta: float,
    mode: str = "spectrum",
    grid_points: int = 9,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapCertificate:
    """Certify (or refute) that x is delta-singular.

    Modes:
      * ``spectrum`` - one eigensolve of the doubled matrix; exact.
      * ``grid`` - independent oracle: per-sample eigensolves of the
        bordered matrix on an interior grid of shifts, each checked
        against the min{s, delta-s} lower bound for gapped elements.
      * ``self_adjoint`` - checks sigma(x) directly (valid by the
        similarity bordered(x,s) ~ (s+x) + (s-x) for self-adjoint x).

    ``delta = 0`` degenerates to invertibility of the doubled matrix.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not math.isfinite(delta) or delta < 0:
        raise ValueError("delta must be finite and nonnegative")
    if mode == "self_adjoint" and not x.self_adjoint:
        raise ModeMismatchError("self_adjoint mode requires a self-adjoint element")

    doubled = bordered(x, 0.0)
    tau = policy.tau(doubled)

    if mode == "self_adjoint":
        eigs = eig_hermitian(x.matrix, policy)
        sigma = np.sort(np.concatenate([np.abs(eigs), -np.abs(eigs)]))
        tau = policy.tau(x.matrix)
    else:
        sigma = eig_hermitian(doubled, policy)

    magnitudes = np.abs(sigma)
    dmax = _max_delta_from(sigma, doubled, policy, tau=tau)

    if mode == "grid":
        if grid_points < 2:
            raise ValueError("grid mode requires at least 2 sample points")
        if delta <= 0:
            raise ValueError("grid mode requires delta > 0")
        samples = []
        verdict = True
        marginal = False
        for i in range(1, grid_points + 1):
            s = delta * i / (grid_points + 1)  # open interval: endpoints excluded
            g = s_gap(x, s, policy)
            bound = min(s, delta - s) - tau
            samples.append((s, g))
            if g < bound:
                verdict = False
            if abs(g - bound) <= tau:
                marginal = True
        return GapCertificate(
            sigma, dmax, float(delta), verdict, marginal, tuple(samples), mode
        )

    if delta == 0.0:
        smallest = float(magnitudes.min())
        verdict = smallest > tau
        marginal = tau < smallest <= 2 * tau
        s_gaps = ()
    else:
        violating = (magnitudes > tau) & (magnitudes < delta - tau)
        verdict = not bool(np.any(violating))
        near_zero = (magnitudes > tau) & (magnitudes <= 2 * tau)
        near_delta = (magnitudes >= delta - tau) & (magnitudes < delta + tau)
        marginal = bool(np.any(near_zero) or np.any(near_delta))
        # analytic per-shift gaps: eig(bordered(x, s)) = s + Sigma_x
        s_gaps = tuple(
            (s, float(np.min(np.abs(s + sigma))))
            for s in (delta * i / 10.0 for i in range(1, 10))
        )
    return GapCertificate(sigma, dmax, float(delta), verdict, marginal, s_gaps, mode)


def _max_delta_from(sigma, reference, policy, tau=None) -> float:
    if tau is None:
        tau = policy.tau(reference)
    nonzero = np.abs(sigma)[np.abs(sigma) > tau]
    return float(nonzero.min()) if nonzero.size else math.inf
