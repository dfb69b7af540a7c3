"""Normalized B-spline bases evaluated per covariate.

Each covariate gets its own basis: interior knots sit at empirical
quantiles of the observed values and the boundary knots are repeated
``degree + 1`` times, so the evaluated basis satisfies the usual
partition of unity (rows sum to one, entries in [0, 1]).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import BSpline

from .errors import InvalidDimension, TooFewDistinctValues

DEFAULT_DEGREE = 3


@dataclass(frozen=True)
class SplineBasis:
    """A univariate B-spline basis on a bounded support.

    Parameters
    ----------
    degree : int
        Polynomial degree of the spline pieces.
    knots : np.ndarray
        Full non-decreasing knot vector with each boundary knot repeated
        ``degree + 1`` times.
    """

    degree: int
    knots: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        """Number of basis functions."""
        return len(self.knots) - self.degree - 1

    @property
    def support(self) -> tuple[float, float]:
        """Interval on which the basis is defined; evaluation clamps to it."""
        return float(self.knots[0]), float(self.knots[-1])

    @property
    def interior_knots(self) -> np.ndarray:
        return self.knots[self.degree + 1 : -(self.degree + 1)]


def build_basis(x, dim: int, degree: int = DEFAULT_DEGREE) -> SplineBasis:
    """Construct a B-spline basis for one covariate.

    Interior knots are placed at empirical quantiles of ``x`` so that the
    basis adapts to skewed designs; the support is ``[min(x), max(x)]``.

    Parameters
    ----------
    x : array-like
        Observed covariate values.
    dim : int
        Number of basis functions (``dim - degree - 1`` interior knots).
    degree : int
        Spline degree, at least 1 (default cubic).

    Raises
    ------
    InvalidDimension
        If ``dim < degree + 1`` or ``degree < 1``.
    TooFewDistinctValues
        If ``x`` has fewer than ``dim`` distinct values.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    if degree < 1:
        raise InvalidDimension(f"degree must be at least 1, got {degree}")
    if dim < degree + 1:
        raise InvalidDimension(
            f"dim={dim} requires at least degree+1={degree + 1} basis functions"
        )
    if np.unique(x).size < dim:
        raise TooFewDistinctValues(
            f"need at least {dim} distinct covariate values, "
            f"got {np.unique(x).size}"
        )
    a, b = float(x.min()), float(x.max())
    n_interior = dim - degree - 1
    if n_interior > 0:
        probs = np.arange(1, n_interior + 1) / (n_interior + 1)
        interior = np.quantile(x, probs)
    else:
        interior = np.empty(0)
    knots = np.concatenate(
        [np.full(degree + 1, a), interior, np.full(degree + 1, b)]
    )
    return SplineBasis(degree=degree, knots=knots)


def evaluate(basis: SplineBasis, x) -> np.ndarray:
    """Evaluate all basis functions at ``x``, clamped to the support.

    Returns an ``(m, dim)`` matrix whose rows sum to one; values outside
    the support are evaluated at the nearest support endpoint so that
    test points slightly beyond the training range remain usable.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    a, b = basis.support
    xc = np.clip(x, a, b)
    dm = BSpline.design_matrix(xc, basis.knots, basis.degree)
    return np.asarray(dm.todense())


@dataclass(frozen=True)
class BasisBlock:
    """Column-centered evaluation of one covariate's basis.

    ``values + column_means`` recovers the raw basis evaluations exactly.
    Centering implements the mean-zero component convention; note it makes
    the columns linearly dependent (rows of the raw matrix sum to one), so
    least-squares coefficients on a centered block carry a gauge freedom
    that downstream fits resolve by the sum-to-zero normalization.
    """

    values: np.ndarray = field(repr=False)
    column_means: np.ndarray = field(repr=False)
    basis: SplineBasis | None = None

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def raw(self) -> np.ndarray:
        """Reconstruct the uncentered basis evaluations."""
        return self.values + self.column_means


def center_block(raw, basis: SplineBasis | None = None) -> BasisBlock:
    """Center the columns of a raw basis evaluation matrix.

    Parameters
    ----------
    raw : array-like, shape (n, dim)
        Uncentered basis evaluations, n >= 2.
    basis : SplineBasis, optional
        Basis that produced ``raw``; carried along for prediction.
    """
    raw = np.asarray(raw, dtype=np.float64)
    if raw.ndim != 2 or raw.shape[0] < 2:
        raise ValueError("raw must be an (n, dim) matrix with n >= 2")
    means = raw.mean(axis=0)
    return BasisBlock(values=raw - means, column_means=means, basis=basis)


def design_block(basis: SplineBasis, x) -> BasisBlock:
    """Evaluate ``basis`` at ``x`` and center the columns."""
    return center_block(evaluate(basis, x), basis=basis)
