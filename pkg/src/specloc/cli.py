"""Command-line front end.

One verb per module capability: ``gap-check``, ``localizer``, ``index``,
``circle``, ``clifford-verify``, ``homotopy-verify``, ``contract``.
Reports are JSON (stdout or --out); --plot additionally writes an SVG
eigenvalue scatter plus a CSV eigenvalue dump next to it.

Exit codes: 0 success, 2 verdict-false, 1 errors, 64 usage errors.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import clifford as _clifford
from .errors import SpeclocError
from .gap import delta_singular_check, operator_element
from .homotopy import contract_invertible, verify_path
from .linalg import TolerancePolicy, eig_hermitian, operator_norm
from .localizer import (
    build_generalized,
    build_reduced,
    even_triple,
    index as _index,
    odd_triple,
)
from .models import winding_demo
from .serialize import (
    certificate_to_json,
    dumps,
    element_to_json,
    eigenvalues_to_csv,
    load_matrix,
    localizer_report_to_json,
    path_certificate_to_json,
    path_from_json,
    path_to_json,
    report_envelope,
)
from .svgplot import eigenvalue_scatter

USAGE_ERROR = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _policy(args) -> TolerancePolicy:
    factor = args.tol_factor
    if factor is None:
        factor = float(os.environ.get("SPECLOC_TOL_FACTOR", 16.0))
    return TolerancePolicy(factor)


def _emit(args, payload: dict, exit_code: int) -> int:
    text = dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code


def _emit_plot(plot_path: str, eigenvalues, title: str):
    with open(plot_path, "w", encoding="utf-8") as fh:
        fh.write(eigenvalue_scatter(eigenvalues, title))
    csv_path = os.path.splitext(plot_path)[0] + ".csv"
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(eigenvalues_to_csv(eigenvalues))


def _load_element(args, policy):
    matrix = load_matrix(args.matrix)
    return operator_element(matrix, block_size=args.block_size, policy=policy)


def _load_triple(args, policy):
    dirac = load_matrix(args.dirac)
    if args.parity == "even":
        return even_triple(dirac)
    return odd_triple(dirac, policy=policy)


def _cmd_gap_check(args) -> int:
    policy = _policy(args)
    x = _load_element(args, policy)
    cert = delta_singular_check(
        x, args.delta, mode=args.mode.replace("-", "_"),
        grid_points=args.grid_points, policy=policy,
    )
    payload = report_envelope("gap-check", certificate_to_json(cert), policy)
    payload["seed"] = args.seed
    return _emit(args, payload, 0 if cert.verdict else 2)


def _cmd_localizer(args) -> int:
    policy = _policy(args)
    x = _load_element(args, policy)
    triple = _load_triple(args, policy)
    if args.reduced:
        loc = build_reduced(triple, x, args.kappa, policy)
        title = f"reduced localizer (kappa={args.kappa})"
    else:
        loc = build_generalized(triple, x, args.kappa, args.s, policy)
        title = f"localizer (kappa={args.kappa}, s={args.s})"
    eigs = eig_hermitian(loc, policy)
    tau = policy.tau(loc)
    report = {
        "kappa": args.kappa,
        "s": None if args.reduced else args.s,
        "reduced": bool(args.reduced),
        "eigenvalues": [float(v) for v in eigs],
        "signature": int((eigs > tau).sum() - (eigs < -tau).sum()),
        "min_abs_eig": float(np.min(np.abs(eigs))),
    }
    payload = report_envelope("localizer", report, policy)
    payload["seed"] = args.seed
    if args.plot:
        _emit_plot(args.plot, eigs, title)
    return _emit(args, payload, 0)


def _cmd_index(args) -> int:
    policy = _policy(args)
    x = _load_element(args, policy)
    triple = _load_triple(args, policy)
    idx, report = _index(
        triple, x, args.delta, kappa=args.kappa, s=args.s, policy=policy
    )
    payload = report_envelope("index", localizer_report_to_json(report), policy)
    payload["seed"] = args.seed
    if args.plot:
        _emit_plot(args.plot, report.eigenvalues, f"localizer index = {idx}")
    return _emit(args, payload, 0)


def _cmd_circle(args) -> int:
    policy = _policy(args)
    m, N, kappa, s = args.m, args.N, args.kappa, args.s
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
        if config.get("model", "circle") != "circle":
            raise ValueError(f"unsupported model {config.get('model')!r}")
        m = config["m"] if m is None else m
        N = config["N"] if N is None else N
        kappa = config.get("kappa") if kappa is None else kappa
        s = config.get("s") if s is None else s
    if m is None or N is None:
        raise ValueError("m and N must be given by flag or config file")
    idx, report = winding_demo(m, N, kappa=kappa, s=s, policy=policy)
    payload = report_envelope("circle", localizer_report_to_json(report), policy)
    payload["report"]["m"] = m
    payload["report"]["N"] = N
    payload["seed"] = args.seed
    if args.plot:
        _emit_plot(
            args.plot,
            report.eigenvalues,
            f"circle m={m}, N={N}, kappa={report.kappa}",
        )
    return _emit(args, payload, 0)


def _cmd_clifford_verify(args) -> int:
    policy = _policy(args)
    rep = _clifford.clifford_rep(args.p)
    eye = np.eye(rep.rep_dim)
    residuals = {}
    worst = 0.0
    for i, gi in enumerate(rep.generators):
        residuals[f"hermitian_{i}"] = operator_norm(gi - gi.conj().T)
        residuals[f"grading_anticommute_{i}"] = operator_norm(
            rep.grading @ gi + gi @ rep.grading
        )
        for j, gj in enumerate(rep.generators[: i + 1]):
            target = 2.0 * eye if i == j else 0.0 * eye
            residuals[f"clifford_{j}{i}"] = operator_norm(gi @ gj + gj @ gi - target)
    residuals["grading_square"] = operator_norm(rep.grading @ rep.grading - eye)
    residuals["grading_hermitian"] = operator_norm(rep.grading - rep.grading.conj().T)
    worst = max(residuals.values())
    report = {
        "p": args.p,
        "rep_dim": rep.rep_dim,
        "parity": rep.parity,
        "max_residual": float(worst),
        "residuals": {k: float(v) for k, v in sorted(residuals.items())},
        "verdict": bool(worst < 1e-12),
    }
    payload = report_envelope("clifford-verify", report, policy)
    payload["seed"] = args.seed
    return _emit(args, payload, 0 if report["verdict"] else 2)


def _cmd_homotopy_verify(args) -> int:
    policy = _policy(args)
    with open(args.path, "r", encoding="utf-8") as fh:
        path, delta, mode = path_from_json(json.load(fh), policy)
    if args.delta is not None:
        delta = args.delta
    if args.mode is not None:
        mode = args.mode
    cert = verify_path(path, delta, mode=mode, policy=policy)
    payload = report_envelope("homotopy-verify", path_certificate_to_json(cert), policy)
    payload["seed"] = args.seed
    return _emit(args, payload, 0 if cert.verdict else 2)


def _cmd_contract(args) -> int:
    policy = _policy(args)
    x = _load_element(args, policy)
    path = contract_invertible(x, steps=args.steps, policy=policy)
    min_sv = min(
        float(np.linalg.svd(s.matrix, compute_uv=False)[-1]) for s in path.samples
    )
    report = path_to_json(path, 0.0)
    report["steps"] = args.steps
    report["min_singular_value"] = min_sv
    report["endpoint"] = element_to_json(path.samples[-1])
    payload = report_envelope("contract", report, policy)
    payload["seed"] = args.seed
    return _emit(args, payload, 0)


def _add_shared(sub):
    sub.add_argument("--tol-factor", type=float, default=None,
                     help="zero-threshold factor (default: SPECLOC_TOL_FACTOR or 16)")
    sub.add_argument("--out", default=None, help="write the JSON report here")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--plot", default=None,
                     help="write an SVG eigenvalue scatter (plus CSV dump) here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specloc")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gap-check", parents=[], help="delta-singularity certificate")
    p.add_argument("--matrix", required=True)
    p.add_argument("--block-size", type=int, default=1)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--mode", choices=["spectrum", "grid", "self-adjoint"],
                   default="spectrum")
    p.add_argument("--grid-points", type=int, default=9)
    _add_shared(p)
    p.set_defaults(func=_cmd_gap_check)

    p = subs.add_parser("localizer", help="assemble a localizer and report its spectrum")
    p.add_argument("--matrix", required=True)
    p.add_argument("--dirac", required=True)
    p.add_argument("--parity", choices=["odd", "even"], default="odd")
    p.add_argument("--block-size", type=int, default=1)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--reduced", action="store_true")
    _add_shared(p)
    p.set_defaults(func=_cmd_localizer)

    p = subs.add_parser("index", help="quarter-signature index of a gapped element")
    p.add_argument("--matrix", required=True)
    p.add_argument("--dirac", required=True)
    p.add_argument("--parity", choices=["odd", "even"], default="odd")
    p.add_argument("--block-size", type=int, default=1)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--s", type=float, default=None)
    _add_shared(p)
    p.set_defaults(func=_cmd_index)

    p = subs.add_parser("circle", help="winding-number demo on the truncated circle")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--config", default=None,
                   help='JSON model config {"model": "circle", "N": ..., "m": ...}')
    _add_shared(p)
    p.set_defaults(func=_cmd_circle)

    p = subs.add_parser("clifford-verify", help="verify Clifford matrix-model relations")
    p.add_argument("--p", type=int, required=True)
    _add_shared(p)
    p.set_defaults(func=_cmd_clifford_verify)

    p = subs.add_parser("homotopy-verify", help="certify a sampled homotopy path")
    p.add_argument("--path", required=True, help="path JSON file")
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--mode", choices=["sa", "general"], default=None)
    _add_shared(p)
    p.set_defaults(func=_cmd_homotopy_verify)

    p = subs.add_parser("contract", help="contract an invertible element to a scalar")
    p.add_argument("--matrix", required=True)
    p.add_argument("--block-size", type=int, default=1)
    p.add_argument("--steps", type=int, default=33)
    _add_shared(p)
    p.set_defaults(func=_cmd_contract)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpeclocError as exc:
        sys.stdout.write(dumps({"error": exc.code, "detail": str(exc)}))
        return 1
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stdout.write(dumps({"error": "parse_error", "detail": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
