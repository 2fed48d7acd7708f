"""Closed-form spectrum of the Dirichlet operator pi*(1 + (hbar/c)^2 d^2/dv^2).

With Dirichlet conditions on [-v_c, v_c] the eigenpairs are

    psi_n(v) = sqrt(1/v_c) * sin(k_n (v + v_c)),   k_n = (n+1) pi / (2 v_c),
    C_n      = pi * (1 - (hbar/c)^2 k_n^2),

so the spectrum is simple, strictly decreasing and bounded above by pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResolutionError, ValidationError
from .params import OperatorParams


def sinpi(x):
    """sin(pi*x) with argument reduction so integer x gives exactly 0.0.

    The reduction x - round(x) is exact in binary floating point, which makes
    eigenfunction values at the interval endpoints exact zeros instead of
    O(n*eps) residue from rounding pi*(n+1).
    """
    x = np.asarray(x, dtype=float)
    n = np.round(x)
    r = x - n
    sign = 1.0 - 2.0 * (np.asarray(n, dtype=np.int64) % 2)
    out = sign * np.sin(np.pi * r)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Mode:
    """One spectral pair: index, wavenumber and eigenvalue."""

    n: int
    wavenumber: float
    eigenvalue: float


@dataclass(frozen=True)
class CriticalIndexReport:
    """Floor-formula index versus the exact largest n with a non-negative eigenvalue."""

    x: float
    n_star_paper: int
    n_star_exact: int | None
    agree: bool


def _check_index(n) -> np.ndarray:
    n = np.asarray(n)
    if not np.issubdtype(n.dtype, np.integer) or np.any(n < 0):
        raise ValidationError("mode index n must be a non-negative integer")
    return n


def wavenumber(params: OperatorParams, n):
    """Dirichlet wavenumber k_n = (n+1) pi / (2 v_c); scalar or ndarray n."""
    n = _check_index(n)
    out = (n + 1) * (math.pi / (2.0 * params.v_c))
    return float(out) if np.ndim(out) == 0 else out


def eigenvalue(params: OperatorParams, n):
    """Eigenvalue C_n = pi * (1 - (hbar/c)^2 k_n^2); strictly below pi."""
    k = wavenumber(params, n)
    ratio = params.hbar / params.c
    return math.pi * (1.0 - (ratio * k) ** 2)


def asymptotic_coefficient(params: OperatorParams) -> float:
    """Quadratic decay rate alpha = hbar^2 pi^3 / (4 c^2 v_c^2)."""
    return params.hbar**2 * math.pi**3 / (4.0 * params.c**2 * params.v_c**2)


def asymptotic_eigenvalue(params: OperatorParams, n):
    """Large-n approximant pi - alpha n^2; the remainder is exactly -alpha(2n+1)."""
    n = _check_index(n)
    out = math.pi - asymptotic_coefficient(params) * np.asarray(n, dtype=float) ** 2
    return float(out) if np.ndim(n) == 0 else out


def eigenfunction(params: OperatorParams, n, v):
    """Normalized eigenfunction sqrt(1/v_c) * sin(k_n (v + v_c)) at v.

    Either argument may be an ndarray (they broadcast).  Values at exactly
    +-v_c are exact zeros.  Raises :class:`DomainError` for |v| > v_c.
    """
    n = _check_index(n)
    v = np.asarray(v, dtype=float)
    if np.any(np.abs(v) > params.v_c):
        bad = float(v.flat[int(np.argmax(np.abs(v)))])
        raise DomainError(f"v = {bad!r} outside [-v_c, v_c] with v_c = {params.v_c!r}")
    # phase written as (n+1) * (v + v_c)/(2 v_c) so sinpi sees integers at the endpoints
    two_vc = params.v_c + params.v_c
    t = (v + params.v_c) / two_vc
    out = math.sqrt(1.0 / params.v_c) * sinpi((np.asarray(n, dtype=float) + 1.0) * t)
    return float(out) if np.ndim(out) == 0 else out


def modes(params: OperatorParams, n_max: int) -> list[Mode]:
    """Modes 0..n_max with strictly decreasing eigenvalues."""
    n_max = int(n_max)
    if n_max < 0:
        raise ValidationError("n_max must be >= 0")
    ns = np.arange(n_max + 1)
    ks = wavenumber(params, ns)
    cs = eigenvalue(params, ns)
    return [Mode(int(n), float(k), float(c)) for n, k, c in zip(ns, ks, cs)]


def critical_index(params: OperatorParams) -> CriticalIndexReport:
    """Compare the floor formula floor(2 v_c c / (pi hbar)) with the exact sign change.

    C_n >= 0 is equivalent to n + 1 <= x with x = 2 v_c c / (pi hbar), so the
    exact largest non-negative index is floor(x) - 1 whenever x >= 1 and there
    is none otherwise.  Both indices are reported; ``agree`` records whether
    the floor formula matches the exact index.  For moderate x the candidate
    is confirmed by directly scanning eigenvalue signs.
    """
    x = 2.0 * params.v_c * params.c / (math.pi * params.hbar)
    n_star_paper = math.floor(x)
    n_star_exact: int | None = n_star_paper - 1 if x >= 1.0 else None
    if x < 2**52:
        # local sign scan; float eigenvalues are well conditioned at this scale
        cand = n_star_exact if n_star_exact is not None else -1
        while eigenvalue(params, cand + 1) >= 0.0:
            cand += 1
        while cand >= 0 and eigenvalue(params, cand) < 0.0:
            cand -= 1
        n_star_exact = cand if cand >= 0 else None
    agree = n_star_exact is not None and n_star_exact == n_star_paper
    return CriticalIndexReport(x=x, n_star_paper=n_star_paper, n_star_exact=n_star_exact, agree=agree)


def count_interior_zeros(params: OperatorParams, n: int, grid_points: int = 1000) -> int:
    """Count sign changes of psi_n strictly inside (-v_c, v_c) on a uniform scan grid.

    Samples within one band width 2 v_c / grid_points of each endpoint are
    excluded so the Dirichlet zeros at the boundary are never counted.
    Returns exactly n for the analytic eigenfunctions once resolved.
    """
    n = int(n)
    grid_points = int(grid_points)
    if n < 0:
        raise ValidationError("mode index n must be a non-negative integer")
    if grid_points < 1000:
        raise ValidationError("grid_points must be >= 1000")
    if grid_points < 10 * (n + 1):
        raise ResolutionError(
            f"grid_points = {grid_points} too coarse for mode {n}; need >= {10 * (n + 1)}"
        )
    grid = np.linspace(-params.v_c, params.v_c, grid_points)
    band = 2.0 * params.v_c / grid_points
    values = eigenfunction(params, n, grid[np.abs(grid) < params.v_c - band])
    signs = np.sign(values)
    signs = signs[signs != 0.0]
    return int(np.sum(signs[1:] * signs[:-1] < 0))
