"""Self-contained finite-difference eigensolver used to cross-check the
closed-form spectrum.

The operator is discretized with the 3-point second difference on interior
points (Dirichlet rows eliminated), giving a symmetric tridiagonal Toeplitz
matrix.  Eigenvalues come from Sturm-sequence bisection inside Gershgorin
bounds with a few safeguarded Newton corrections on the characteristic
recurrence; eigenvectors from shifted inverse iteration with a partially
pivoted tridiagonal solve.  Nothing here touches the sine basis, so agreement
with the analytic spectrum is a genuine two-route check.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConditioningWarning, NumericalError, ValidationError
from .params import OperatorParams
from .spectrum import eigenvalue


@dataclass(frozen=True)
class TridiagonalSymmetricMatrix:
    """Symmetric tridiagonal matrix stored as its two bands."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.atleast_1d(np.asarray(self.diag, dtype=float))
        off = np.asarray(self.offdiag, dtype=float).reshape(-1)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)
        if len(off) != len(diag) - 1:
            raise ValidationError("offdiag must have length dim - 1")
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
            raise ValidationError("matrix entries must be finite")

    @property
    def dim(self) -> int:
        return len(self.diag)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out


@dataclass(frozen=True)
class FDSpectrumReport:
    """Per-grid comparison of discrete and analytic eigenvalues."""

    m: int
    h: float
    eigenvalues_fd: np.ndarray
    eigenvalues_analytic: np.ndarray
    abs_errors: np.ndarray
    rel_errors: np.ndarray
    convergence_order: float = math.nan


def discretize(params: OperatorParams, m: int) -> TridiagonalSymmetricMatrix:
    """3-point discretization of the operator on m interior points, h = 2 v_c/(m+1)."""
    m = int(m)
    if m < 3:
        raise ValidationError("discretization needs m >= 3 interior points")
    h = 2.0 * params.v_c / (m + 1)
    coeff = math.pi * params.hbar**2 / (params.c**2 * h**2)
    diag = np.full(m, math.pi - 2.0 * coeff)
    offdiag = np.full(m - 1, coeff)
    return TridiagonalSymmetricMatrix(diag=diag, offdiag=offdiag)


def interior_grid(params: OperatorParams, m: int) -> np.ndarray:
    """The m interior points the discretization acts on."""
    return np.linspace(-params.v_c, params.v_c, int(m) + 2)[1:-1]


def _sturm_counts(diag: np.ndarray, off2: np.ndarray, pivmin: float, xs: np.ndarray) -> np.ndarray:
    """Number of eigenvalues <= x for each shift x (negative-pivot count).

    Zero pivots are treated as negative (replaced by -pivmin before the next
    division), which keeps the count monotone when a shift hits an eigenvalue
    of a leading submatrix exactly.
    """
    d = diag[0] - xs
    count = (d <= 0).astype(np.int64)
    with np.errstate(divide="ignore", over="ignore"):
        for i in range(1, len(diag)):
            d = np.where(d == 0.0, -pivmin, d)
            d = diag[i] - xs - off2[i - 1] / d
            count += d <= 0
    return count


def _newton_steps(diag, off2, x, lo, hi, steps=3):
    """Safeguarded Newton on the characteristic recurrence, in ratio form.

    Tracks q_i = p_i/p_{i-1} and r_i = p_i'/p_i, so the step -p/p' = -1/r is
    computed without overflowing p itself; any non-finite intermediate or a
    step leaving the bracket falls back to the bisection value.
    """
    for _ in range(steps):
        with np.errstate(all="ignore"):
            q_prev = diag[0] - x
            r_prev2 = np.zeros_like(x)
            r_prev = -1.0 / q_prev
            bad = ~np.isfinite(r_prev)
            for i in range(1, len(diag)):
                q_i = diag[i] - x - off2[i - 1] / q_prev
                r_i = (-1.0 + (diag[i] - x) * r_prev - off2[i - 1] * r_prev2 / q_prev) / q_i
                r_prev2, r_prev, q_prev = r_prev, r_i, q_i
                bad |= ~np.isfinite(r_i) | ~np.isfinite(q_i)
            candidate = x - 1.0 / r_prev
        ok = ~bad & np.isfinite(candidate) & (candidate > lo) & (candidate < hi)
        x = np.where(ok, candidate, x)
    return x


def _eigenvalues_ascending(A: TridiagonalSymmetricMatrix, indices: np.ndarray) -> np.ndarray:
    off2 = A.offdiag**2
    pivmin = max(float(np.max(off2)) if len(off2) else 0.0, 1.0) * 1e-290
    radius = np.zeros(A.dim)
    radius[:-1] += np.abs(A.offdiag)
    radius[1:] += np.abs(A.offdiag)
    lo = np.full(len(indices), float(np.min(A.diag - radius)))
    hi = np.full(len(indices), float(np.max(A.diag + radius)))
    for _ in range(110):
        mid = 0.5 * (lo + hi)
        below = _sturm_counts(A.diag, off2, pivmin, mid) <= indices
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        tol = 1e-15 * np.maximum(np.maximum(np.abs(lo), np.abs(hi)), 1e-30)
        if np.all(hi - lo <= tol):
            break
    return _newton_steps(A.diag, off2, 0.5 * (lo + hi), lo, hi)


def eigenvalues_tridiagonal(A: TridiagonalSymmetricMatrix) -> np.ndarray:
    """All eigenvalues, sorted decreasing."""
    if A.dim == 1:
        return A.diag.copy()
    return _eigenvalues_ascending(A, np.arange(A.dim))[::-1].copy()


def top_eigenvalues(A: TridiagonalSymmetricMatrix, count: int) -> np.ndarray:
    """The `count` largest eigenvalues, sorted decreasing."""
    count = int(count)
    if not 1 <= count <= A.dim:
        raise ValidationError("count must be in [1, dim]")
    if A.dim == 1:
        return A.diag.copy()
    indices = np.arange(A.dim - count, A.dim)
    return _eigenvalues_ascending(A, indices)[::-1].copy()


def _solve_shifted(A: TridiagonalSymmetricMatrix, lam: float, b: np.ndarray) -> np.ndarray:
    """Solve (A - lam I) x = b by LU with partial pivoting (one fill-in band).

    Pivots are floored at eps * scale so an exactly singular shift produces a
    huge but finite solution whose direction is the wanted eigenvector.
    """
    n = A.dim
    main = A.diag - lam
    upper = np.zeros(n)
    upper[:-1] = A.offdiag
    fill = np.zeros(n)
    lower = np.zeros(n)
    lower[:-1] = A.offdiag
    scale = float(np.max(np.abs(main))) + 2.0 * (float(np.max(np.abs(A.offdiag))) if n > 1 else 0.0)
    floor = np.finfo(float).eps * max(scale, 1e-290)
    x = np.asarray(b, dtype=float).copy()
    for i in range(n - 1):
        if abs(lower[i]) > abs(main[i]):
            main[i], lower[i] = lower[i], main[i]
            upper[i], main[i + 1] = main[i + 1], upper[i]
            if i + 1 < n - 1:
                fill[i], upper[i + 1] = upper[i + 1], 0.0
            x[i], x[i + 1] = x[i + 1], x[i]
        if abs(main[i]) < floor:
            main[i] = floor if main[i] >= 0 else -floor
        mult = lower[i] / main[i]
        main[i + 1] -= mult * upper[i]
        if i + 1 < n - 1:
            upper[i + 1] -= mult * fill[i]
        x[i + 1] -= mult * x[i]
    if abs(main[-1]) < floor:
        main[-1] = floor if main[-1] >= 0 else -floor
    x[-1] /= main[-1]
    if n >= 2:
        x[-2] = (x[-2] - upper[-2] * x[-1]) / main[-2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - upper[i] * x[i + 1] - fill[i] * x[i + 2]) / main[i]
    return x


def eigenvector_inverse_iteration(
    A: TridiagonalSymmetricMatrix, lam: float, tol: float = 1e-8, max_iterations: int = 50
) -> np.ndarray:
    """Unit eigenvector for an eigenvalue estimate within 1e-6 of a simple eigenvalue.

    Sign is gauged so the first component of noticeable size is positive.
    Emits :class:`ConditioningWarning` when another eigenvalue lies within
    1e-6 of the shift (the result spans an ill-determined subspace then).
    """
    lam = float(lam)
    off2 = A.offdiag**2
    pivmin = max(float(np.max(off2)) if len(off2) else 0.0, 1.0) * 1e-290
    scale = float(np.max(np.abs(A.diag)) + (np.max(np.abs(A.offdiag)) if A.dim > 1 else 0.0))
    gap = 1e-6 * max(1.0, scale)
    nearby = _sturm_counts(A.diag, off2, pivmin, np.array([lam + gap, lam - gap]))
    if int(nearby[0] - nearby[1]) > 1:
        warnings.warn("clustered eigenvalues near the shift", ConditioningWarning)
    rng = np.random.default_rng(0)
    v = rng.standard_normal(A.dim)
    v /= np.linalg.norm(v)
    for _ in range(max_iterations):
        w = _solve_shifted(A, lam, v)
        norm = np.linalg.norm(w)
        if not np.isfinite(norm) or norm == 0.0:
            raise NumericalError("inverse iteration produced a non-finite iterate")
        v = w / norm
        residual = np.linalg.norm(A.matvec(v) - lam * v)
        if residual <= tol:
            break
    else:
        raise NumericalError(
            f"inverse iteration did not reach residual {tol} in {max_iterations} iterations"
        )
    significant = np.nonzero(np.abs(v) > 1e-12 * np.max(np.abs(v)))[0]
    if len(significant) and v[significant[0]] < 0:
        v = -v
    return v


def validate_against_analytic(params: OperatorParams, m: int, n_modes: int) -> FDSpectrumReport:
    """Compare the top n_modes discrete eigenvalues with the closed form."""
    m = int(m)
    n_modes = int(n_modes)
    if n_modes < 1:
        raise ValidationError("n_modes must be >= 1")
    if n_modes > m / 4:
        raise ValidationError("only well-resolved modes are compared: need n_modes <= m/4")
    A = discretize(params, m)
    lam_fd = top_eigenvalues(A, n_modes)
    lam_an = eigenvalue(params, np.arange(n_modes))
    abs_err = np.abs(lam_fd - lam_an)
    return FDSpectrumReport(
        m=m,
        h=2.0 * params.v_c / (m + 1),
        eigenvalues_fd=lam_fd,
        eigenvalues_analytic=lam_an,
        abs_errors=abs_err,
        rel_errors=abs_err / np.abs(lam_an),
    )


def refinement_study(params: OperatorParams, m_list, n_modes: int = 1) -> list[FDSpectrumReport]:
    """Validation at each grid size, with the mode-0 convergence order fitted
    across the refinements and stored on every report."""
    m_list = [int(m) for m in m_list]
    if len(m_list) < 2 or any(b <= a for a, b in zip(m_list, m_list[1:])):
        raise ValidationError("m_list must contain at least two increasing grid sizes")
    reports = [validate_against_analytic(params, m, n_modes) for m in m_list]
    hs = np.array([r.h for r in reports])
    errs = np.array([r.abs_errors[0] for r in reports])
    if np.any(errs == 0.0):
        raise NumericalError("zero error in refinement study; cannot fit an order")
    order = float(np.polyfit(np.log(hs), np.log(errs), 1)[0])
    return [replace(r, convergence_order=order) for r in reports]
