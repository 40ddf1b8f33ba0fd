"""Certification of discrete homotopies, stabilization, contraction paths,
and Grothendieck-class witnesses.

A sampled path is certified when every sample is delta-singular *and*
consecutive samples are closer than half the smallest mid-gap along the
path; by Weyl's inequality the bordered spectra then cannot cross zero
between samples, so the discrete certificate is meaningful for the
underlying continuous path.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatchError,
    GapViolationError,
    LevelTooSmallError,
    ModeMismatchError,
    NoGapFoundError,
    NotGappedError,
    NotInvertibleError,
    ShapeMismatchError,
    StepTooLargeError,
)
from .gap import (
    OperatorElement,
    delta_singular_check,
    identity_element,
    s_gap,
)
from .linalg import (
    DEFAULT_POLICY,
    TolerancePolicy,
    direct_sum,
    min_singular_value,
    operator_norm,
)
from . import localizer as _localizer


@dataclass(frozen=True)
class HomotopyPath:
    samples: tuple  # OperatorElement values of identical shape
    parameters: tuple  # strictly increasing, 0 = first, 1 = last

    def __post_init__(self):
        samples = tuple(self.samples)
        params = tuple(float(t) for t in self.parameters)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "parameters", params)
        if len(samples) != len(params) or len(samples) < 2:
            raise ShapeMismatchError("need matching samples/parameters, at least 2")
        if abs(params[0]) > 1e-12 or abs(params[-1] - 1.0) > 1e-12:
            raise ShapeMismatchError("parameters must start at 0 and end at 1")
        if any(b <= a for a, b in zip(params, params[1:])):
            raise ShapeMismatchError("parameters must be strictly increasing")
        shapes = {s.matrix.shape for s in samples}
        if len(shapes) != 1:
            raise ShapeMismatchError(f"inhomogeneous sample shapes {shapes}")


@dataclass(frozen=True)
class PathCertificate:
    verdict: bool
    delta: float
    mode: str
    sample_trace: tuple  # (t, sample verdict, delta_max) per sample
    step_guard: float
    max_step: float
    violations: tuple  # ("gap"|"step", index)


def verify_path(
    path: HomotopyPath,
    delta: float,
    mode: str = "general",
    policy: TolerancePolicy = DEFAULT_POLICY,
    strict: bool = False,
) -> PathCertificate:
    """Certify that a sampled path stays delta-singular with controlled steps."""
    if mode not in ("sa", "general"):
        raise ValueError("mode must be 'sa' or 'general'")
    if mode == "sa" and not all(x.self_adjoint for x in path.samples):
        raise ModeMismatchError("sa mode requires every sample self-adjoint")

    check_mode = "self_adjoint" if mode == "sa" else "spectrum"
    violations = []
    trace = []
    for k, x in enumerate(path.samples):
        cert = delta_singular_check(x, delta, mode=check_mode, policy=policy)
        trace.append((path.parameters[k], cert.verdict, cert.delta_max))
        if not cert.verdict:
            violations.append(("gap", k))
            if strict:
                raise GapViolationError(k)

    # mid-gap guard: half the worst s-gap at s = delta/2 (at s -> 0 for delta = 0)
    guard_shift = delta / 2.0
    guard = 0.5 * min(s_gap(x, guard_shift, policy) for x in path.samples)
    max_step = 0.0
    for k in range(len(path.samples) - 1):
        step = operator_norm(path.samples[k + 1].matrix - path.samples[k].matrix)
        max_step = max(max_step, step)
        if step >= guard:
            violations.append(("step", k))
            if strict:
                raise StepTooLargeError(k)

    return PathCertificate(
        not violations, float(delta), mode, tuple(trace), guard, max_step, tuple(violations)
    )


def stabilize(x: OperatorElement, target_level: int) -> OperatorElement:
    """Pad with identity blocks: x in M_n(E) -> x (+) e_{m-n} in M_m(E)."""
    if target_level < x.block_size:
        raise LevelTooSmallError(
            f"target level {target_level} below current level {x.block_size}"
        )
    if target_level == x.block_size:
        return x
    pad = np.eye((target_level - x.block_size) * x.ambient_dim, dtype=np.complex128)
    return OperatorElement(
        direct_sum(x.matrix, pad), target_level, x.ambient_dim, x.self_adjoint
    )


def direct_sum_class(x: OperatorElement, y: OperatorElement) -> OperatorElement:
    """Semigroup sum of representatives: [x] + [y] = [x (+) y]."""
    if x.ambient_dim != y.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {x.ambient_dim} vs {y.ambient_dim}"
        )
    return OperatorElement(
        direct_sum(x.matrix, y.matrix),
        x.block_size + y.block_size,
        x.ambient_dim,
        x.self_adjoint and y.self_adjoint,
    )


def contract_invertible(
    x: OperatorElement,
    steps: int = 33,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> HomotopyPath:
    """Linear contraction of an invertible element onto a scalar multiple of e.

    Chooses z on the unit circle in the widest angular gap of the
    eigenvalue arguments of x (antipodes included, so the whole line
    through +-z avoids the spectrum); the segment (1-t) x + t z e is
    then invertible for every t, and each sample is certified to be so.
    Sample 0 is x, sample 1 is z*e.
    """
    if steps < 2:
        raise ValueError("need at least 2 steps")
    m = x.matrix
    if min_singular_value(m) <= policy.tau(m):
        raise NotInvertibleError("element is singular at tolerance")

    args = np.angle(np.linalg.eigvals(m))
    points = np.sort(np.mod(np.concatenate([args, args + np.pi]), 2 * np.pi))
    gaps = np.diff(np.concatenate([points, [points[0] + 2 * np.pi]]))
    widest = int(np.argmax(gaps))
    if gaps[widest] <= 1e-9:
        raise NoGapFoundError("no eigenvalue-free direction at angular tolerance")
    z = np.exp(1j * (points[widest] + gaps[widest] / 2.0))

    eye = np.eye(m.shape[0], dtype=np.complex128)
    params = [k / (steps - 1) for k in range(steps)]
    samples = []
    for t in params:
        sample = (1.0 - t) * m + t * z * eye
        if min_singular_value(sample) <= policy.tau(sample):
            raise NotInvertibleError(f"contraction sample t={t:.4f} singular")
        samples.append(
            OperatorElement(sample, x.block_size, x.ambient_dim, False)
        )
    return HomotopyPath(tuple(samples), tuple(params))


@dataclass(frozen=True)
class KClassWitness:
    """Formal Grothendieck pair [plus] - [minus] of stabilized representatives."""

    plus: OperatorElement
    minus: OperatorElement
    level: int
    delta: float
    invariant_indices: dict = field(default_factory=dict)


def make_witness(
    x: OperatorElement, delta: float, policy: TolerancePolicy = DEFAULT_POLICY
) -> KClassWitness:
    """Witness for [x] - [e] at the declared delta."""
    if not delta_singular_check(x, delta, policy=policy).verdict:
        raise NotGappedError(f"representative is not {delta}-singular")
    minus = identity_element(x.ambient_dim, x.block_size)
    return KClassWitness(x, minus, x.block_size, float(delta))


def equal_certified(
    w: KClassWitness,
    w2: KClassWitness,
    path: HomotopyPath,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """Certify [w] = [w2] via a user-supplied path between stabilized pluses."""
    level = max(w.level, w2.level)
    a = stabilize(w.plus, level)
    b = stabilize(w2.plus, level)
    if path.samples[0].matrix.shape != a.matrix.shape:
        raise ShapeMismatchError("path samples do not match the stabilized level")
    tol = policy.scaled_tol(a.dim, max(operator_norm(a.matrix), 1.0))
    if (
        operator_norm(path.samples[0].matrix - a.matrix) > tol
        or operator_norm(path.samples[-1].matrix - b.matrix) > tol
    ):
        raise ShapeMismatchError("path endpoints do not match the witnesses")
    delta = min(w.delta, w2.delta)
    return verify_path(path, delta, mode="general", policy=policy).verdict


def distinct_by_index(
    w: KClassWitness,
    w2: KClassWitness,
    triple,
    kappa: float | None = None,
    s: float | None = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """Sound refutation of equality: True when the localizer indices differ.

    A False return never proves equality.  Indices are cached on the
    witnesses under the triple's label.
    """
    key = triple.label or f"triple-{triple.D0.shape[0]}-{triple.parity}"

    def _pair_index(witness):
        plus, _ = _localizer.index(
            triple, witness.plus, witness.delta, kappa=kappa, s=s, policy=policy
        )
        minus, _ = _localizer.index(
            triple, witness.minus, witness.delta, kappa=kappa, s=s, policy=policy
        )
        return plus - minus

    for witness in (w, w2):
        if key not in witness.invariant_indices:
            witness.invariant_indices[key] = _pair_index(witness)
    return w.invariant_indices[key] != w2.invariant_indices[key]
