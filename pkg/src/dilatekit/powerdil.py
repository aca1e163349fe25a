"""Finite unitary power dilations of square contractions.

For a square contraction ``A`` on an ``n``-dimensional space and a horizon
``N``, the dilation lives on ``N + 1`` copies of that space and has block
companion form

    row 0:      ``A   0  ...  0   S``
    row 1:      ``T   0  ...  0  -A*``
    row i >= 2: identity in column ``i - 1``

with ``(S, T)`` the defect pair of ``A``.  Unitarity of the construction
rests on the intertwining identity: the inner product of the first and last
block columns is ``A* S - T A*``, which vanishes because ``S A = A T``.
Compressing ``U^m`` to the first block coordinate reproduces ``A^m`` for
``0 <= m <= N``, since every walk other than ``A -> A -> ...`` needs at least
``N + 1`` steps to return to the first coordinate.

For ``N = 1`` the matrix is exactly the Halmos dilation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dilation import Contraction
from .linalg import DEFAULT_BASE_TOL, ShapeError, adjoint, frobenius, frozen
from .report import ResidualCheck, ResidualReport

__all__ = [
    "MAX_POWER_STEPS",
    "PowerDilation",
    "power_dilation",
    "dilation_residuals",
]

# Size grows linearly and checking costs one multiply per power; the cap
# keeps whole-corpus verification sub-second.
MAX_POWER_STEPS = 16


@dataclass(frozen=True, eq=False)
class PowerDilation:
    """A unitary whose compressed powers reproduce the contraction's powers.

    ``u`` has side ``(n_steps + 1) * dim_h``; the compression property is
    guaranteed for powers ``0 .. n_steps`` only.
    """

    u: np.ndarray
    n_steps: int
    dim_h: int


def power_dilation(a: Contraction, n_steps: int) -> PowerDilation:
    """Block companion unitary dilating ``a`` up to the ``n_steps``-th power.

    Raises
    ------
    ShapeError
        If ``a`` is not square.
    ValueError
        If ``n_steps`` is outside ``[1, MAX_POWER_STEPS]``.
    """
    if a.dim_h != a.dim_k:
        raise ShapeError(
            f"power dilation needs a square contraction, got {a.dim_h}x{a.dim_k}"
        )
    if not 1 <= n_steps <= MAX_POWER_STEPS:
        raise ValueError(
            f"n_steps must lie in [1, {MAX_POWER_STEPS}], got {n_steps}"
        )
    n = a.dim_h
    pair = a.defects
    u = np.zeros(((n_steps + 1) * n, (n_steps + 1) * n), dtype=np.complex128)
    last = n_steps * n
    u[:n, :n] = a.matrix
    u[:n, last:] = pair.s
    u[n : 2 * n, :n] = pair.t
    u[n : 2 * n, last:] = -adjoint(a.matrix)
    for i in range(2, n_steps + 1):
        u[i * n : (i + 1) * n, (i - 1) * n : i * n] = np.eye(n)
    return PowerDilation(u=frozen(u), n_steps=n_steps, dim_h=n)


def dilation_residuals(
    d: PowerDilation, a: Contraction, base: float = DEFAULT_BASE_TOL
) -> ResidualReport:
    """Unitarity of the dilation plus one compression residual per power.

    Checks:

    - ``unitarity``: ``||U* U - I||_F`` against ``size * base``;
    - ``compression_m`` for ``m = 0 .. n_steps``:
      ``||P U^m P - A^m||_F`` against ``size * base * 10``, where ``P``
      projects onto the first block coordinate.

    Raises
    ------
    ShapeError
        If ``d`` was not built from a contraction of the shape of ``a``.
    """
    if a.dim_h != a.dim_k or a.dim_h != d.dim_h:
        raise ShapeError(
            f"dilation of block size {d.dim_h} does not match a "
            f"{a.dim_h}x{a.dim_k} contraction"
        )
    size = d.u.shape[0]
    n = d.dim_h
    eye = np.eye(size, dtype=np.complex128)
    checks = [
        ResidualCheck("unitarity", frobenius(adjoint(d.u) @ d.u - eye), size * base)
    ]
    compression_tol = size * base * 10.0
    u_pow = np.eye(size, dtype=np.complex128)
    a_pow = np.eye(n, dtype=np.complex128)
    for m in range(d.n_steps + 1):
        checks.append(
            ResidualCheck(
                f"compression_{m}",
                frobenius(u_pow[:n, :n] - a_pow),
                compression_tol,
            )
        )
        u_pow = u_pow @ d.u
        a_pow = a_pow @ a.matrix
    return ResidualReport(checks=tuple(checks))
