"""Projection onto the eigenbasis, reconstruction and Parseval bookkeeping.

Coefficients are always computed by quadrature so the transform stays generic
over the target function; the closed-form integrals known for special targets
are reserved for tests, which keeps the two routes independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ResolutionError, ValidationError
from .params import OperatorParams
from .quadrature import Grid, QuadratureRule, SampledFunction, _evaluate
from .spectrum import eigenfunction, eigenvalue

_CHUNK = 128  # modes per block when filling eigenfunction matrices


@dataclass(frozen=True)
class CoefficientVector:
    """Truncated coefficients a_0..a_N of a function in the eigenbasis."""

    params: OperatorParams
    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coefficients, dtype=float))
        object.__setattr__(self, "coefficients", coeffs)
        if coeffs.ndim != 1 or len(coeffs) == 0:
            raise ValidationError("coefficients must be a non-empty 1-d array")
        if not np.all(np.isfinite(coeffs)):
            raise ValidationError("coefficients must be finite")

    @property
    def n_max(self) -> int:
        return len(self.coefficients) - 1


def _require_resolved(rule: QuadratureRule, n_max: int):
    needed = 8 * (n_max + 1)
    if len(rule.nodes) < needed:
        raise ResolutionError(
            f"rule has {len(rule.nodes)} nodes; mode {n_max} needs at least {needed}"
        )


def _basis_matrix(params: OperatorParams, n_max: int, v: np.ndarray) -> np.ndarray:
    """Rows psi_0(v)..psi_{n_max}(v), filled in blocks to bound memory."""
    out = np.empty((n_max + 1, len(v)))
    for start in range(0, n_max + 1, _CHUNK):
        stop = min(start + _CHUNK, n_max + 1)
        ns = np.arange(start, stop)[:, None]
        out[start:stop] = eigenfunction(params, ns, v[None, :])
    return out


def project(params: OperatorParams, f: Callable, n_max: int, rule: QuadratureRule) -> CoefficientVector:
    """Coefficients a_n = integral of f * psi_n for n = 0..n_max."""
    n_max = int(n_max)
    if n_max < 0:
        raise ValidationError("n_max must be >= 0")
    _require_resolved(rule, n_max)
    values = _evaluate(f, rule.nodes)
    if not np.all(np.isfinite(values)):
        raise ValidationError("target function must be finite on the quadrature nodes")
    weighted = rule.weights * values
    coeffs = _basis_matrix(params, n_max, rule.nodes) @ weighted
    return CoefficientVector(params=params, coefficients=coeffs)


def evaluate(coeffs: CoefficientVector, v) -> np.ndarray:
    """Pointwise value of the truncated expansion at v."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    basis = _basis_matrix(coeffs.params, coeffs.n_max, v)
    return coeffs.coefficients @ basis


def reconstruct(coeffs: CoefficientVector, grid: Grid) -> SampledFunction:
    """Sampled partial sum  sum_n a_n psi_n  over the grid."""
    return SampledFunction(grid=grid, values=evaluate(coeffs, grid.points))


def l2_norm(params: OperatorParams, f: Callable, rule: QuadratureRule) -> float:
    """sqrt of the quadrature integral of f^2."""
    values = _evaluate(f, rule.nodes)
    if not np.all(np.isfinite(values)):
        raise ValidationError("target function must be finite on the quadrature nodes")
    return float(np.sqrt(np.dot(rule.weights, values**2)))


def parseval_defect(params: OperatorParams, f: Callable, n_max: int, rule: QuadratureRule) -> float:
    """||f||^2 minus the truncated coefficient sum; raw value, no clamping.

    Quadrature noise may push the result slightly negative (no lower than
    about -1e-9 for a resolved rule); the raw value is reported so that an
    under-resolved rule shows up instead of being masked.
    """
    coeffs = project(params, f, n_max, rule)
    norm = l2_norm(params, f, rule)
    return float(norm**2 - np.sum(coeffs.coefficients**2))


def apply_operator_spectral(coeffs: CoefficientVector) -> CoefficientVector:
    """Action of the operator in its eigenbasis: a_n -> C_n a_n."""
    ns = np.arange(coeffs.n_max + 1)
    scaled = eigenvalue(coeffs.params, ns) * coeffs.coefficients
    return CoefficientVector(params=coeffs.params, coefficients=scaled)


def gram_matrix(params: OperatorParams, n_max: int, rule: QuadratureRule) -> np.ndarray:
    """Quadrature inner products <psi_n, psi_m> for n, m <= n_max."""
    n_max = int(n_max)
    if n_max < 0:
        raise ValidationError("n_max must be >= 0")
    _require_resolved(rule, n_max)
    basis = _basis_matrix(params, n_max, rule.nodes)
    return (basis * rule.weights) @ basis.T
