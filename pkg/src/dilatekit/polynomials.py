"""Polynomial functional calculus on defect operators.

The squared defects ``S^2 = I - A A*`` and ``T^2 = I - A* A`` of a
contraction satisfy ``S^2 A = A T^2``, hence ``p(S^2) A = A p(T^2)`` for
every real polynomial ``p`` - an exact algebraic identity whose numerical
residual must sit at rounding level regardless of what ``p`` approximates.
Taking ``p`` through a sequence converging uniformly to ``sqrt`` on [0, 1]
turns that identity into ``S A = A T`` in the limit.

The sequence used here is the classical monotone iteration

    ``p_0 = 0,   p_{j+1}(t) = p_j(t) + (t - p_j(t)^2) / 2``

which increases pointwise to ``sqrt(t)`` on [0, 1] with uniform error at most
``2 / (k + 1)`` after ``k`` steps.

A caution that shapes this module: the monomial coefficients of ``p_k`` grow
doubly exponentially (coefficient mass ~7e130 at k = 12) even though the
polynomial itself maps [0, 1] into [0, 1].  Horner evaluation of the
coefficient form is therefore meaningless in float64 beyond roughly k = 8;
``sqrt_poly_matrix`` evaluates the very same polynomial by running the
defining recursion on the matrix argument, which keeps every intermediate
bounded and the rounding error at eps level for all supported k.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

from .dilation import Contraction
from .linalg import DEFAULT_BASE_TOL, ShapeError, adjoint, frobenius
from .report import ResidualCheck, ResidualReport

__all__ = [
    "MAX_SQRT_POLY_LEVEL",
    "as_polynomial",
    "coefficient_mass",
    "horner_matrix",
    "sqrt_poly_sequence",
    "sqrt_poly_matrix",
    "poly_intertwine_residual",
    "weierstrass_convergence_check",
]

# p_k has degree 2^(k-1); the cap keeps the coefficient form representable.
MAX_SQRT_POLY_LEVEL = 12


def as_polynomial(coefficients) -> np.ndarray:
    """Coerce to a 1-D float64 coefficient vector, ascending degree."""
    c = np.asarray(coefficients, dtype=np.float64)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("polynomial coefficients must form a nonempty 1-D vector")
    if not np.isfinite(c).all():
        raise ValueError("polynomial coefficients must be finite")
    return c


def coefficient_mass(coefficients) -> float:
    """Sum of absolute coefficient values; scales rounding-level tolerances."""
    return float(np.sum(np.abs(as_polynomial(coefficients))))


def horner_matrix(coefficients, m: np.ndarray) -> np.ndarray:
    """Evaluate ``p(M)`` by Horner's scheme for a square matrix ``M``."""
    c = as_polynomial(coefficients)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"polynomial evaluation needs a square matrix, got {m.shape}")
    eye = np.eye(m.shape[0], dtype=np.complex128)
    result = c[-1] * eye
    for coeff in c[-2::-1]:
        result = result @ m + coeff * eye
    return result


def sqrt_poly_sequence(k: int) -> np.ndarray:
    """Coefficients of the k-th square-root approximant ``p_k``.

    ``p_1(t) = t/2``, ``p_2(t) = t - t^2/8``, and in general ``p_k`` has
    degree ``2^(k-1)``.  Each ``p_k`` maps [0, 1] into [0, 1], the sequence
    increases pointwise to ``sqrt(t)``, and
    ``sup_[0,1] |p_k(t) - sqrt(t)| <= 2/(k+1)``.

    Raises
    ------
    ValueError
        If ``k < 1`` or ``k > MAX_SQRT_POLY_LEVEL``.
    """
    if not 1 <= k <= MAX_SQRT_POLY_LEVEL:
        raise ValueError(
            f"square-root approximant level must lie in [1, {MAX_SQRT_POLY_LEVEL}], got {k}"
        )
    t = np.array([0.0, 1.0])
    p = np.zeros(1)
    for _ in range(k):
        p = npoly.polyadd(p, 0.5 * npoly.polysub(t, npoly.polymul(p, p)))
    return p


def sqrt_poly_matrix(m: np.ndarray, k: int) -> np.ndarray:
    """``p_k(M)`` evaluated by running the defining recursion on ``M``.

    Identical to Horner evaluation of :func:`sqrt_poly_sequence` in exact
    arithmetic, but numerically stable for every supported ``k`` (see the
    module docstring).  ``M`` should be Hermitian with spectrum in [0, 1].
    """
    if not 1 <= k <= MAX_SQRT_POLY_LEVEL:
        raise ValueError(
            f"square-root approximant level must lie in [1, {MAX_SQRT_POLY_LEVEL}], got {k}"
        )
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"polynomial evaluation needs a square matrix, got {m.shape}")
    p = np.zeros_like(m, dtype=np.complex128)
    for _ in range(k):
        p = p + 0.5 * (m - p @ p)
    return p


def poly_intertwine_residual(a: Contraction, coefficients) -> float:
    """``||p(S^2) A - A p(T^2)||_F`` with both sides Horner-evaluated.

    ``S^2`` and ``T^2`` are formed directly as ``I - A A*`` and ``I - A* A``;
    no square root enters.  The identity is exact, so the residual is pure
    rounding: at most about ``dim * 1e-11 * coefficient_mass(p)``.
    """
    c = as_polynomial(coefficients)
    mat = a.matrix
    s_sq = np.eye(a.dim_h, dtype=np.complex128) - mat @ adjoint(mat)
    t_sq = np.eye(a.dim_k, dtype=np.complex128) - adjoint(mat) @ mat
    return frobenius(horner_matrix(c, s_sq) @ mat - mat @ horner_matrix(c, t_sq))


def weierstrass_convergence_check(
    a: Contraction, k: int, base: float = DEFAULT_BASE_TOL
) -> ResidualReport:
    """How far ``p_k`` has carried the polynomial identity toward ``S A = A T``.

    Two checks:

    - ``sqrt_approximation``: ``||p_k(S^2) - S||_F`` against
      ``dim_h * 2/(k+1)`` - shrinks only as ``k`` grows;
    - ``polynomial_intertwining``: ``||p_k(S^2) A - A p_k(T^2)||_F`` against
      ``(dim_h + dim_k) * base/10`` - rounding level for every ``k``, because
      the polynomial identity is exact while only the limit recovers ``S``.

    Both evaluate ``p_k`` through :func:`sqrt_poly_matrix`.
    """
    mat = a.matrix
    s_sq = np.eye(a.dim_h, dtype=np.complex128) - mat @ adjoint(mat)
    t_sq = np.eye(a.dim_k, dtype=np.complex128) - adjoint(mat) @ mat
    p_s = sqrt_poly_matrix(s_sq, k)
    p_t = sqrt_poly_matrix(t_sq, k)
    return ResidualReport(checks=(
        ResidualCheck(
            "sqrt_approximation",
            frobenius(p_s - a.defects.s),
            a.dim_h * 2.0 / (k + 1),
        ),
        ResidualCheck(
            "polynomial_intertwining",
            frobenius(p_s @ mat - mat @ p_t),
            (a.dim_h + a.dim_k) * (base / 10.0),
        ),
    ))
