"""Operator system spectral triples and the spectral localizer index pairing.

The reduced localizers are the classical ones,

    L_odd  = [[kappa*D, x], [x*, -kappa*D]],
    L_even = [[x_+, kappa*D0], [kappa*D0*, -x_-]],

and the generalized (shifted) localizer used for delta-gapped elements is

    L(kappa, s) = I_2 (x) L_reduced + s * (sigma_x (x) W),

with W the swap [[0,I],[I,0]] in the odd case and the grading
diag(I,-I) in the even case.  This assembly satisfies, exactly:

  * L(kappa, 0) = L_reduced (+) L_reduced;
  * for x = e the eigenvalues are +-sqrt((1 +-' s)^2 + kappa^2 lambda^2)
    over the Dirac spectrum;
  * the square bound L(kappa, s)^2 >= g_loc^2 - kappa*||[D, x]||, where
    g_loc = min over +- of the smallest singular value of x -+ s*e is
    the localizer gap.  For self-adjoint (more generally normal) x the
    localizer gap equals the bordered s-gap, which in turn dominates
    min{s, delta-s} for delta-gapped elements, giving the sufficient
    constancy region 0 < kappa < min{s, delta-s}^2 / ||[D, x]||.

For a fixed finite truncation the region-certified signature is the
small-coupling limit (zero for winding classes); integer indices of
truncated symbols are obtained at explicit (kappa, s), typically s = 0,
where invertibility is checked directly rather than via the bound.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DimensionMismatchError,
    InconsistentSignatureError,
    ModeMismatchError,
    NotDivisibleBy4Error,
    NotGappedError,
    NotSelfAdjointError,
    SingularLocalizerError,
)
from .gap import OperatorElement, delta_singular_check
from .linalg import (
    DEFAULT_POLICY,
    Inertia,
    TolerancePolicy,
    as_matrix,
    eig_hermitian,
    operator_norm,
)


@dataclass(frozen=True)
class SpectralTriple:
    """Finite spectral triple data: parity, Dirac block, optional grading.

    Odd: D0 is the self-adjoint Dirac matrix itself.  Even: D0 is the
    off-diagonal block of D = [[0, D0], [D0*, 0]] with respect to the
    balanced grading diag(I, -I); represented elements must commute
    with the grading.
    """

    parity: str
    D0: np.ndarray
    grading: np.ndarray | None = None
    label: str = ""

    def __post_init__(self):
        d0 = as_matrix(self.D0).copy()
        d0.setflags(write=False)
        object.__setattr__(self, "D0", d0)
        if self.parity not in ("odd", "even"):
            raise ValueError("parity must be 'odd' or 'even'")
        if d0.shape[0] != d0.shape[1]:
            raise DimensionMismatchError("Dirac block must be square")

    @property
    def ambient_dim(self) -> int:
        return self.D0.shape[0] * (2 if self.parity == "even" else 1)

    def amplified_D0(self, n: int) -> np.ndarray:
        """n-fold amplification, element blocks outer."""
        return np.kron(np.eye(n), self.D0)

    def assembled_dirac(self, n: int = 1) -> np.ndarray:
        if self.parity == "odd":
            return self.amplified_D0(n)
        h = self.D0.shape[0]
        zero = np.zeros((h, h), dtype=np.complex128)
        full = np.block([[zero, self.D0], [self.D0.conj().T, zero]])
        return np.kron(np.eye(n), full)


def odd_triple(
    D, label: str = "", policy: TolerancePolicy = DEFAULT_POLICY
) -> SpectralTriple:
    d = as_matrix(D)
    if operator_norm(d - d.conj().T) > policy.tau(d):
        raise NotSelfAdjointError("odd Dirac operator must be self-adjoint")
    return SpectralTriple("odd", d, None, label)


def even_triple(D0, label: str = "") -> SpectralTriple:
    d0 = as_matrix(D0)
    h = d0.shape[0]
    grading = np.diag(np.concatenate([np.ones(h), -np.ones(h)])).astype(np.complex128)
    return SpectralTriple("even", d0, grading, label)


def _level(T: SpectralTriple, x: OperatorElement) -> int:
    if x.dim % T.ambient_dim:
        raise DimensionMismatchError(
            f"element size {x.dim} incompatible with ambient dimension {T.ambient_dim}"
        )
    return x.dim // T.ambient_dim


def _even_halves(T: SpectralTriple, x: OperatorElement, policy: TolerancePolicy):
    """Split an even element into its grading compressions x_+ and x_-."""
    n = _level(T, x)
    h = T.D0.shape[0]
    d = 2 * h
    gamma = np.kron(np.eye(n), np.asarray(T.grading))
    m = x.matrix
    if operator_norm(gamma @ m - m @ gamma) > policy.scaled_tol(
        m.shape[0], max(operator_norm(m), 1.0)
    ):
        raise ModeMismatchError("even element must commute with the grading")
    blocks = m.reshape(n, d, n, d)
    x_plus = blocks[:, :h, :, :h].reshape(n * h, n * h)
    x_minus = blocks[:, h:, :, h:].reshape(n * h, n * h)
    return x_plus, x_minus


def commutator_norm(
    T: SpectralTriple, x: OperatorElement, policy: TolerancePolicy = DEFAULT_POLICY
) -> float:
    """||[D, x]|| with D assembled per parity and amplified blockwise."""
    n = _level(T, x)
    dirac = T.assembled_dirac(n)
    return operator_norm(dirac @ x.matrix - x.matrix @ dirac)


def build_reduced(
    T: SpectralTriple,
    x: OperatorElement,
    kappa: float,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> np.ndarray:
    """The odd or even spectral localizer (half the generalized one at s=0)."""
    n = _level(T, x)
    if T.parity == "odd":
        kd = kappa * T.amplified_D0(n)
        m = x.matrix
        return np.block([[kd, m], [m.conj().T, -kd]])
    if not x.self_adjoint:
        raise ModeMismatchError("even localizer requires a self-adjoint element")
    x_plus, x_minus = _even_halves(T, x, policy)
    kd = kappa * T.amplified_D0(n)
    return np.block([[x_plus, kd], [kd.conj().T, -x_minus]])


def build_generalized(
    T: SpectralTriple,
    x: OperatorElement,
    kappa: float,
    s: float,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> np.ndarray:
    """Shifted localizer I_2 (x) L_reduced + s * (sigma_x (x) W); see module docstring."""
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    if s < 0 or not math.isfinite(s):
        raise ValueError("s must be finite and nonnegative")
    reduced = build_reduced(T, x, kappa, policy)
    half = reduced.shape[0] // 2
    if T.parity == "odd":
        w = np.zeros((2 * half, 2 * half), dtype=np.complex128)
        w[:half, half:] = np.eye(half)
        w[half:, :half] = np.eye(half)
    else:
        w = np.diag(np.concatenate([np.ones(half), -np.ones(half)])).astype(np.complex128)
    return np.block([[reduced, s * w], [s * w, reduced]])


@dataclass(frozen=True)
class RegionDescription:
    """The (kappa, s) region where the localizer signature is certifiably constant."""

    delta: float
    commutator_norm: float
    unbounded: bool
    s_star: float
    kappa_star: float
    curve: tuple  # sampled (s, kappa_max(s)) pairs

    def kappa_max(self, s: float) -> float:
        if not 0 < s < self.delta:
            return 0.0
        if self.unbounded:
            return math.inf
        return min(s, self.delta - s) ** 2 / self.commutator_norm


def valid_region(
    T: SpectralTriple,
    x: OperatorElement,
    delta: float,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> RegionDescription:
    """Sufficient constancy region 0 < kappa < min{s, delta-s}^2 / ||[D,x]||."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not delta_singular_check(x, delta, policy=policy).verdict:
        raise NotGappedError(f"element is not {delta}-singular")
    norm = commutator_norm(T, x, policy)
    scale = max(operator_norm(T.assembled_dirac(_level(T, x))) * operator_norm(x.matrix), 1.0)
    unbounded = norm <= policy.scaled_tol(x.dim, scale)
    region = RegionDescription(float(delta), norm, unbounded, delta / 2.0, 0.0, ())
    kappa_star = 1.0 if unbounded else 0.5 * region.kappa_max(region.s_star)
    curve = tuple(
        (s, region.kappa_max(s)) for s in (delta * i / 10.0 for i in range(1, 10))
    )
    return replace(region, kappa_star=kappa_star, curve=curve)


def localizer_gap(x: OperatorElement, s: float) -> float:
    """min over +- of the smallest singular value of x -+ s*e.

    This is the quantity that lower-bounds the shifted localizer; it
    equals the bordered s-gap whenever x is normal (in particular
    self-adjoint) and is never larger than it.
    """
    eye = np.eye(x.dim)
    return min(
        float(np.linalg.svd(x.matrix - s * eye, compute_uv=False)[-1]),
        float(np.linalg.svd(x.matrix + s * eye, compute_uv=False)[-1]),
    )


@dataclass(frozen=True)
class GapBoundReport:
    passed: bool
    min_eig_sq: float
    bound: float  # g_loc^2 - kappa * ||[D, x]||


def gap_bound_check(
    T: SpectralTriple,
    x: OperatorElement,
    kappa: float,
    s: float,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapBoundReport:
    """Verify min eig(L^2) >= g_loc^2 - kappa*||[D,x]|| - tau."""
    loc = build_generalized(T, x, kappa, s, policy)
    eigs = eig_hermitian(loc, policy)
    min_eig_sq = float(np.min(eigs**2))
    g = localizer_gap(x, s)
    bound = g * g - kappa * commutator_norm(T, x, policy)
    tol = policy.scaled_tol(loc.shape[0], max(operator_norm(loc) ** 2, 1.0))
    return GapBoundReport(min_eig_sq >= bound - tol, min_eig_sq, bound)


@dataclass(frozen=True)
class LocalizerReport:
    parity: str
    kappa: float
    s: float
    delta: float
    eigenvalues: np.ndarray
    inertia: Inertia
    signature: int
    index: int
    min_abs_eig: float
    gap_bound: float
    commutator_norm: float
    samples: tuple  # (s, kappa, signature) triples actually evaluated
    tolerance_factor: float
    reduced_signature: int | None = None


def _signature_at(T, x, kappa, s, policy):
    loc = build_generalized(T, x, kappa, s, policy)
    eigs = eig_hermitian(loc, policy)
    tau = policy.tau(loc)
    min_abs = float(np.min(np.abs(eigs)))
    if min_abs <= tau:
        raise SingularLocalizerError(
            f"localizer singular at (kappa={kappa}, s={s}): |eig| down to {min_abs:.3e}"
        )
    n_plus = int(np.count_nonzero(eigs > tau))
    n_minus = int(np.count_nonzero(eigs < -tau))
    inert = Inertia(n_plus, len(eigs) - n_plus - n_minus, n_minus)
    return eigs, inert, n_plus - n_minus, min_abs


def index(
    T: SpectralTriple,
    x: OperatorElement,
    delta: float,
    kappa: float | None = None,
    s: float | None = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> tuple[int, LocalizerReport]:
    """Quarter-signature index of a delta-gapped element.

    With explicit (kappa, s), e.g. the kappa = 1, s = 0 regime of the
    circle demo, the localizer is evaluated there, with invertibility
    checked directly.  Otherwise the signature is sampled at the default
    interior point of the constancy region and at the four corners of a
    shrunken sub-rectangle; all five values must agree.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not delta_singular_check(x, delta, policy=policy).verdict:
        raise NotGappedError(f"element is not {delta}-singular")
    region = valid_region(T, x, delta, policy)

    if kappa is not None or s is not None:
        points = [(s if s is not None else 0.0, kappa if kappa is not None else region.kappa_star)]
    else:
        s_lo, s_hi = delta / 4.0, 3.0 * delta / 4.0
        if region.unbounded:
            kappa_lo, kappa_hi = 0.5, 2.0
        else:
            cap = region.kappa_max(s_lo)
            kappa_lo, kappa_hi = 0.2 * cap, 0.8 * cap
        points = [
            (region.s_star, region.kappa_star),
            (s_lo, kappa_lo),
            (s_lo, kappa_hi),
            (s_hi, kappa_lo),
            (s_hi, kappa_hi),
        ]

    evaluations = []
    for s_i, kappa_i in points:
        eigs, inert, sig, min_abs = _signature_at(T, x, kappa_i, s_i, policy)
        evaluations.append((s_i, kappa_i, sig, eigs, inert, min_abs))

    signatures = {sig for _, _, sig, _, _, _ in evaluations}
    if len(signatures) != 1:
        raise InconsistentSignatureError(
            f"signature varies over the sampled region: {sorted(signatures)}"
        )
    sig = signatures.pop()
    if sig % 4:
        raise NotDivisibleBy4Error(f"signature {sig} is not divisible by 4")

    s0, kappa0, _, eigs, inert, min_abs = evaluations[0]
    g = localizer_gap(x, s0)
    report = LocalizerReport(
        parity=T.parity,
        kappa=kappa0,
        s=s0,
        delta=float(delta),
        eigenvalues=eigs,
        inertia=inert,
        signature=sig,
        index=sig // 4,
        min_abs_eig=min_abs,
        gap_bound=g * g - kappa0 * region.commutator_norm,
        commutator_norm=region.commutator_norm,
        samples=tuple((s_i, k_i, sg) for s_i, k_i, sg, _, _, _ in evaluations),
        tolerance_factor=policy.zero_threshold_factor,
    )
    return sig // 4, report
