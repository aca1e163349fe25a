"""Contractions, defect operators, Julia operators, and Halmos dilations.

A contraction ``A`` mapping a ``dim_k``-dimensional space into a
``dim_h``-dimensional one carries two defect operators,

    ``S = (I - A A*)^{1/2}``   on the codomain,
    ``T = (I - A* A)^{1/2}``   on the domain,

from which the block constructions assemble:

    Julia operator          ``[[S, A], [-A*, T]]``      (unitary)
    Halmos dilation         ``[[A, S], [T, -A*]]``      (unitary, square ``A``)
    column-switched Julia   ``[[A, S], [T, -A*]]``      (any ``A``)

The defect pair is computed once per :class:`Contraction` and cached, so the
factorization identity "Halmos dilation = Julia operator times flip" holds
bit-exactly, not merely up to square-root rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .linalg import (
    DEFAULT_BASE_TOL,
    ShapeError,
    adjoint,
    as_matrix,
    block2x2_assemble,
    frobenius,
    frozen,
    operator_norm,
    psd_sqrt,
    scaled_tol,
)
from .report import ResidualCheck, ResidualReport

__all__ = [
    "CONTRACTION_NORM_SLACK",
    "NotAContractionError",
    "Contraction",
    "DefectPair",
    "DCSplit",
    "Block2x2",
    "contraction",
    "defect_pair",
    "julia",
    "dc_split",
    "verify_julia",
    "intertwining_residual",
    "intertwining_residual_from_split",
    "flip",
    "halmos",
    "julia_column_switched",
]

# Admission is looser than the verification base tolerance so that generated
# unitaries with rounding-level norm overshoot are never rejected.
CONTRACTION_NORM_SLACK = 1e-8


class NotAContractionError(ValueError):
    """Matrix has operator norm beyond 1; carries the measured norm."""

    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(
            f"matrix is not a contraction: measured operator norm {norm:.12g} "
            f"exceeds 1 + {CONTRACTION_NORM_SLACK:g}"
        )


@dataclass(frozen=True, eq=False)
class DefectPair:
    """The two defect operators of one contraction.

    ``s`` is ``(I - A A*)^{1/2}`` (square, side ``dim_h``) and ``t`` is
    ``(I - A* A)^{1/2}`` (square, side ``dim_k``).  Both are Hermitian PSD.
    """

    s: np.ndarray
    t: np.ndarray


@dataclass(frozen=True, eq=False)
class Contraction:
    """A complex matrix with operator norm at most 1 (plus admission slack).

    Build instances through :func:`contraction`, which measures the norm and
    rejects anything beyond the bound.
    """

    matrix: np.ndarray
    norm: float

    @property
    def dim_h(self) -> int:
        """Codomain dimension (rows)."""
        return self.matrix.shape[0]

    @property
    def dim_k(self) -> int:
        """Domain dimension (columns)."""
        return self.matrix.shape[1]

    @cached_property
    def defects(self) -> DefectPair:
        """Defect pair ``(S, T)``, computed once and shared by every construction."""
        a = self.matrix
        s_sq = np.eye(self.dim_h, dtype=np.complex128) - a @ adjoint(a)
        t_sq = np.eye(self.dim_k, dtype=np.complex128) - adjoint(a) @ a
        return DefectPair(s=frozen(psd_sqrt(s_sq)), t=frozen(psd_sqrt(t_sq)))


def contraction(values) -> Contraction:
    """Validate ``values`` as a contraction.

    Raises
    ------
    NotAContractionError
        If the measured operator norm exceeds ``1 + CONTRACTION_NORM_SLACK``.
    """
    m = frozen(as_matrix(values))
    norm = operator_norm(m)
    if norm > 1.0 + CONTRACTION_NORM_SLACK:
        raise NotAContractionError(norm)
    return Contraction(matrix=m, norm=norm)


def defect_pair(a: Contraction) -> DefectPair:
    """Defect operators ``(S, T)`` of ``a`` (cached on the contraction)."""
    return a.defects


@dataclass(frozen=True, eq=False)
class Block2x2:
    """Four compatible blocks of one operator on a direct sum.

    The codomain split is ``(tl.rows, bl.rows)`` and the domain split is
    ``(tl.cols, tr.cols)``; both are recoverable from the blocks.
    """

    tl: np.ndarray
    tr: np.ndarray
    bl: np.ndarray
    br: np.ndarray

    def __post_init__(self):
        if self.tl.shape[0] != self.tr.shape[0] or self.bl.shape[0] != self.br.shape[0]:
            raise ShapeError(
                f"block rows disagree: tl {self.tl.shape}, tr {self.tr.shape}, "
                f"bl {self.bl.shape}, br {self.br.shape}"
            )
        if self.tl.shape[1] != self.bl.shape[1] or self.tr.shape[1] != self.br.shape[1]:
            raise ShapeError(
                f"block columns disagree: tl {self.tl.shape}, tr {self.tr.shape}, "
                f"bl {self.bl.shape}, br {self.br.shape}"
            )

    @property
    def row_split(self) -> int:
        return self.tl.shape[0]

    @property
    def col_split(self) -> int:
        return self.tl.shape[1]

    def to_matrix(self) -> np.ndarray:
        """Assemble the blocks into one dense matrix."""
        return block2x2_assemble(self.tl, self.tr, self.bl, self.br)


@dataclass(frozen=True, eq=False)
class DCSplit:
    """Split of the Julia operator into positive and skew-adjoint parts.

    ``d`` is the block-diagonal positive part ``diag(S, T)`` and ``c`` the
    off-diagonal skew-adjoint part ``[[0, A], [-A*, 0]]``; their sum is the
    Julia operator bit-exactly.
    """

    d: np.ndarray
    c: np.ndarray


def julia(a: Contraction) -> Block2x2:
    """Julia operator ``[[S, A], [-A*, T]]`` of the contraction ``a``.

    A unitary on the ``(dim_h + dim_k)``-dimensional direct sum, whatever the
    shape of ``a``.
    """
    pair = a.defects
    return Block2x2(tl=pair.s, tr=a.matrix, bl=-adjoint(a.matrix), br=pair.t)


def dc_split(a: Contraction) -> DCSplit:
    """Positive/skew-adjoint split ``J = D + C`` of the Julia operator."""
    pair = a.defects
    h, k = a.dim_h, a.dim_k
    zero_hk = np.zeros((h, k), dtype=np.complex128)
    zero_kh = np.zeros((k, h), dtype=np.complex128)
    d = block2x2_assemble(pair.s, zero_hk, zero_kh, pair.t)
    c = block2x2_assemble(np.zeros((h, h), dtype=np.complex128), a.matrix,
                          -adjoint(a.matrix), np.zeros((k, k), dtype=np.complex128))
    return DCSplit(d=d, c=c)


def verify_julia(a: Contraction, base: float = DEFAULT_BASE_TOL) -> ResidualReport:
    """Residuals behind the unitarity of the Julia operator.

    Four checks, all judged against ``(dim_h + dim_k) * base * (1 + ||A||_F)``:

    - ``isometry``:        ``||J* J - I||_F``
    - ``coisometry``:      ``||J J* - I||_F``
    - ``split_commutator``: ``||D C - C D||_F``
    - ``split_squares``:   ``||D^2 - C^2 - I||_F``

    The last two are the mechanism: ``C`` commutes with ``D``, so
    ``J* J = (D - C)(D + C) = D^2 - C^2 = I``.
    """
    j = julia(a).to_matrix()
    split = dc_split(a)
    n = a.dim_h + a.dim_k
    eye = np.eye(n, dtype=np.complex128)
    tol = scaled_tol(n, frobenius(a.matrix), base)
    return ResidualReport(checks=(
        ResidualCheck("isometry", frobenius(adjoint(j) @ j - eye), tol),
        ResidualCheck("coisometry", frobenius(j @ adjoint(j) - eye), tol),
        ResidualCheck("split_commutator",
                      frobenius(split.d @ split.c - split.c @ split.d), tol),
        ResidualCheck("split_squares",
                      frobenius(split.d @ split.d - split.c @ split.c - eye), tol),
    ))


def intertwining_residual(a: Contraction) -> float:
    """``||S A - A T||_F`` for the defect pair of ``a``.

    Zero in exact arithmetic: the defects intertwine with the contraction,
    ``(I - A A*)^{1/2} A = A (I - A* A)^{1/2}``.
    """
    pair = a.defects
    return frobenius(pair.s @ a.matrix - a.matrix @ pair.t)


def intertwining_residual_from_split(a: Contraction) -> float:
    """The same residual read off the top-right block of ``DC - CD``.

    An independent route to :func:`intertwining_residual`; the two must agree
    to within 1e-13.
    """
    split = dc_split(a)
    comm = split.d @ split.c - split.c @ split.d
    return frobenius(comm[: a.dim_h, a.dim_h:])


def flip(dim_top: int, dim_bottom: int) -> Block2x2:
    """Block operator ``[[0, I], [I, 0]]`` exchanging two direct summands.

    Maps vectors ordered bottom-then-top to top-then-bottom, where the top
    summand has dimension ``dim_top`` and the bottom ``dim_bottom``.  Exactly
    unitary; ``flip(n, n)`` is an involution and
    ``flip(m, n) @ flip(n, m) = I``.
    """
    if dim_top < 1 or dim_bottom < 1:
        raise ShapeError("flip needs positive summand dimensions")
    return Block2x2(
        tl=np.zeros((dim_top, dim_bottom), dtype=np.complex128),
        tr=np.eye(dim_top, dtype=np.complex128),
        bl=np.eye(dim_bottom, dtype=np.complex128),
        br=np.zeros((dim_bottom, dim_top), dtype=np.complex128),
    )


def halmos(a: Contraction) -> Block2x2:
    """Halmos dilation ``[[A, S], [T, -A*]]`` of a square contraction.

    Equals the Julia operator composed with the flip: both consume the cached
    defect pair of ``a``, and right-multiplication by the flip is a column
    permutation, so ``halmos(a).to_matrix()`` equals
    ``julia(a).to_matrix() @ flip(n, n).to_matrix()`` bit-exactly.

    Raises
    ------
    ShapeError
        If ``a`` is not square.
    """
    if a.dim_h != a.dim_k:
        raise ShapeError(
            f"Halmos dilation needs a square contraction, got {a.dim_h}x{a.dim_k}"
        )
    pair = a.defects
    return Block2x2(tl=a.matrix, tr=pair.s, bl=pair.t, br=-adjoint(a.matrix))


def julia_column_switched(a: Contraction) -> Block2x2:
    """Column-switched Julia operator ``[[A, S], [T, -A*]]``.

    Maps the ``(dim_k, dim_h)``-split domain to the ``(dim_h, dim_k)``-split
    codomain.  Equals ``julia(a)`` composed with the rectangular flip whose
    domain carries that same ``(dim_k, dim_h)`` split, i.e.
    ``flip(dim_h, dim_k)``.  Unitary like the Julia operator itself.
    """
    pair = a.defects
    return Block2x2(tl=a.matrix, tr=pair.s, bl=pair.t, br=-adjoint(a.matrix))
