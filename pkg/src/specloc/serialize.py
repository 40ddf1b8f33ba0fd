"""JSON and CSV wire formats.

Matrix JSON: ``{"rows": r, "cols": c, "data": [[re, im], ...]}`` with
``data`` row-major.  Matrix CSV: one row per line, cells separated by
semicolons, each cell a ``re,im`` pair.  All report serialization sorts
keys and leaves floats in ``repr`` form, so identical inputs produce
byte-identical output.
"""

import json
import math

import numpy as np

from . import __version__
from .gap import GapCertificate, OperatorElement, operator_element
from .homotopy import HomotopyPath, PathCertificate
from .linalg import DEFAULT_POLICY, TolerancePolicy, as_matrix
from .localizer import LocalizerReport


def matrix_to_json(matrix) -> dict:
    m = as_matrix(matrix)
    data = [[float(v.real), float(v.imag)] for v in m.reshape(-1)]
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]), "data": data}


def matrix_from_json(payload: dict) -> np.ndarray:
    rows, cols = int(payload["rows"]), int(payload["cols"])
    data = payload["data"]
    if len(data) != rows * cols:
        raise ValueError(f"data length {len(data)} != rows*cols = {rows * cols}")
    try:
        flat = np.array(
            [complex(float(re), float(im)) for re, im in data], dtype=np.complex128
        )
    except (TypeError, ValueError) as exc:
        raise ValueError(f"matrix data must be [re, im] pairs: {exc}") from None
    return flat.reshape(rows, cols)


def matrix_to_csv(matrix) -> str:
    m = as_matrix(matrix)
    lines = []
    for row in m:
        lines.append(";".join(f"{float(v.real)!r},{float(v.imag)!r}" for v in row))
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str) -> np.ndarray:
    rows = []
    for line in text.strip().splitlines():
        cells = []
        for cell in line.strip().split(";"):
            re, im = cell.split(",")
            cells.append(complex(float(re), float(im)))
        rows.append(cells)
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged or empty CSV matrix")
    return np.array(rows, dtype=np.complex128)


def load_matrix(path: str) -> np.ndarray:
    """Read a matrix from a .json or .csv file by extension."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".csv"):
        return matrix_from_csv(text)
    return matrix_from_json(json.loads(text))


def _number(x: float):
    return "inf" if math.isinf(x) else float(x)


def certificate_to_json(cert: GapCertificate) -> dict:
    return {
        "sigma_x": [float(v) for v in cert.sigma_x],
        "delta_max": _number(cert.delta_max),
        "delta": float(cert.queried_delta),
        "verdict": bool(cert.verdict),
        "marginal": bool(cert.marginal),
        "s_gaps": [[float(s), float(g)] for s, g in cert.s_gaps],
        "mode": cert.mode,
    }


def localizer_report_to_json(report: LocalizerReport) -> dict:
    return {
        "parity": report.parity,
        "kappa": float(report.kappa),
        "s": float(report.s),
        "delta": float(report.delta),
        "eigenvalues": [float(v) for v in report.eigenvalues],
        "inertia": {
            "n_plus": report.inertia.n_plus,
            "n_zero": report.inertia.n_zero,
            "n_minus": report.inertia.n_minus,
        },
        "signature": int(report.signature),
        "index": int(report.index),
        "min_abs_eig": float(report.min_abs_eig),
        "gap_bound": float(report.gap_bound),
        "commutator_norm": float(report.commutator_norm),
        "samples": [[float(s), float(k), int(sig)] for s, k, sig in report.samples],
        "reduced_signature": report.reduced_signature,
    }


def path_certificate_to_json(cert: PathCertificate) -> dict:
    return {
        "verdict": bool(cert.verdict),
        "delta": float(cert.delta),
        "mode": cert.mode,
        "samples": [
            {"t": float(t), "verdict": bool(v), "delta_max": _number(dm)}
            for t, v, dm in cert.sample_trace
        ],
        "step_guard": float(cert.step_guard),
        "max_step": float(cert.max_step),
        "violations": [[kind, int(i)] for kind, i in cert.violations],
    }


def path_to_json(path: HomotopyPath, delta: float, mode: str = "general") -> dict:
    return {
        "delta": float(delta),
        "mode": mode,
        "samples": [
            {"t": float(t), "matrix": matrix_to_json(x.matrix)}
            for t, x in zip(path.parameters, path.samples)
        ],
    }


def path_from_json(
    payload: dict, policy: TolerancePolicy = DEFAULT_POLICY
) -> tuple[HomotopyPath, float, str]:
    samples = []
    params = []
    for entry in payload["samples"]:
        params.append(float(entry["t"]))
        samples.append(
            operator_element(
                matrix_from_json(entry["matrix"]),
                block_size=int(entry.get("block_size", 1)),
                policy=policy,
            )
        )
    path = HomotopyPath(tuple(samples), tuple(params))
    return path, float(payload["delta"]), payload.get("mode", "general")


def eigenvalues_to_csv(eigenvalues) -> str:
    return "\n".join(repr(float(v)) for v in eigenvalues) + "\n"


def element_to_json(x: OperatorElement) -> dict:
    payload = matrix_to_json(x.matrix)
    payload["block_size"] = x.block_size
    payload["self_adjoint"] = bool(x.self_adjoint)
    return payload


def report_envelope(subcommand: str, payload: dict, policy: TolerancePolicy) -> dict:
    """Common wrapper: every report embeds the tolerance policy and version."""
    return {
        "subcommand": subcommand,
        "version": __version__,
        "tolerance_factor": float(policy.zero_threshold_factor),
        "report": payload,
    }


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
