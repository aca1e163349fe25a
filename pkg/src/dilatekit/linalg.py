"""Dense complex matrix kernels.

Everything in this package operates on 2-D ``numpy.ndarray`` values of dtype
``complex128``.  This module supplies the shared primitives: adjoints,
dimension-checked products, the operator norm, Hermitian eigendecomposition,
positive-semidefinite square roots, and 2x2 block assembly/extraction.

Tolerances follow one convention throughout: an operation working on a matrix
``M`` of side ``dim`` accepts a residual up to ``dim * base * (1 + ||M||_F)``
with ``base`` defaulting to :data:`DEFAULT_BASE_TOL`.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "DEFAULT_BASE_TOL",
    "ShapeError",
    "NotHermitianError",
    "NotPositiveSemidefiniteError",
    "HermitianEigen",
    "as_matrix",
    "frozen",
    "scaled_tol",
    "frobenius",
    "adjoint",
    "multiply",
    "operator_norm",
    "hermitian_eigen",
    "psd_sqrt",
    "block2x2_assemble",
    "block2x2_extract",
]

DEFAULT_BASE_TOL = 1e-10


class ShapeError(ValueError):
    """Raised when matrix dimensions rule the requested operation out."""


class NotHermitianError(ValueError):
    """Input fails the Hermitian precondition; carries the measured asymmetry."""

    def __init__(self, asymmetry: float, tolerance: float):
        self.asymmetry = asymmetry
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: ||M - M*||_F = {asymmetry:.3e} "
            f"exceeds tolerance {tolerance:.3e}"
        )


class NotPositiveSemidefiniteError(ValueError):
    """Input has an eigenvalue below the PSD tolerance; carries that eigenvalue."""

    def __init__(self, eigenvalue: float, tolerance: float):
        self.eigenvalue = eigenvalue
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e} "
            f"is below -{tolerance:.3e}"
        )


def as_matrix(values, name: str = "matrix") -> np.ndarray:
    """Coerce ``values`` to a finite 2-D complex128 array.

    Parameters
    ----------
    values : array_like
        Anything ``numpy.asarray`` accepts: nested lists, an ndarray, ...
    name : str
        Label used in error messages.

    Returns
    -------
    ndarray
        A complex128 matrix with at least one row and one column.

    Raises
    ------
    ShapeError
        If the input is not 2-D or has a zero-length axis.
    ValueError
        If any entry is NaN or infinite.
    """
    m = np.asarray(values, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got {m.ndim}-D data")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"{name} must have positive dimensions, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite entries")
    return m


def frozen(m: np.ndarray) -> np.ndarray:
    """Return a read-only copy of ``m``; stored values are immutable by contract."""
    out = np.array(m, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


def scaled_tol(dim: int, ref_norm: float, base: float = DEFAULT_BASE_TOL) -> float:
    """Residual tolerance ``dim * base * (1 + ref_norm)``."""
    return dim * base * (1.0 + ref_norm)


def frobenius(m: np.ndarray) -> float:
    """Frobenius norm as a Python float."""
    return float(np.linalg.norm(m))


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose of ``m``."""
    return m.conj().T


def multiply(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit shape check.

    Raises
    ------
    ShapeError
        If ``left.cols != right.rows``; the message names both shapes.
    """
    if left.shape[1] != right.shape[0]:
        raise ShapeError(
            f"cannot multiply {left.shape[0]}x{left.shape[1]} by "
            f"{right.shape[0]}x{right.shape[1]}: inner dimensions disagree"
        )
    return left @ right


class HermitianEigen(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; the columns of ``eigenvectors``
    are the matching orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(m: np.ndarray, base: float = DEFAULT_BASE_TOL) -> HermitianEigen:
    """Eigendecomposition of a (numerically) Hermitian matrix.

    The input must satisfy ``||M - M*||_F <= base * (1 + ||M||_F)``; the
    decomposition is then computed for the symmetrized matrix ``(M + M*)/2``.

    Raises
    ------
    NotHermitianError
        If the asymmetry exceeds the tolerance; the error reports it.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"eigendecomposition needs a square matrix, got {m.shape}")
    asymmetry = frobenius(m - adjoint(m))
    tolerance = base * (1.0 + frobenius(m))
    if asymmetry > tolerance:
        raise NotHermitianError(asymmetry, tolerance)
    sym = (m + adjoint(m)) / 2.0
    eigenvalues, eigenvectors = np.linalg.eigh(sym)
    return HermitianEigen(eigenvalues, eigenvectors)


def operator_norm(m: np.ndarray) -> float:
    """Largest singular value of ``m``.

    Computed as ``sqrt(max eigenvalue of M* M)`` so the one Hermitian
    eigensolver backs every norm in the package.
    """
    m = as_matrix(m)
    gram = adjoint(m) @ m
    eig = hermitian_eigen(gram)
    return float(np.sqrt(max(float(eig.eigenvalues[-1]), 0.0)))


def psd_sqrt(p: np.ndarray, base: float = DEFAULT_BASE_TOL) -> np.ndarray:
    """Positive square root of a Hermitian PSD matrix.

    Computed as ``V diag(sqrt(clamp(lambda))) V*`` from
    :func:`hermitian_eigen`.  Eigenvalues within ``base * (1 + ||P||_F)`` of
    zero collapse to exactly zero, so defect operators of numerically unitary
    or isometric inputs vanish identically instead of inflating to
    ``sqrt(rounding noise)``.

    Raises
    ------
    NotPositiveSemidefiniteError
        If some eigenvalue lies below ``-base * (1 + ||P||_F)``; the error
        reports the offending eigenvalue.
    """
    p = as_matrix(p)
    eig = hermitian_eigen(p, base=base)
    tolerance = base * (1.0 + frobenius(p))
    smallest = float(eig.eigenvalues[0])
    if smallest < -tolerance:
        raise NotPositiveSemidefiniteError(smallest, tolerance)
    clamped = np.where(np.abs(eig.eigenvalues) <= tolerance, 0.0, eig.eigenvalues)
    root = (eig.eigenvectors * np.sqrt(clamped)) @ adjoint(eig.eigenvectors)
    return (root + adjoint(root)) / 2.0


def block2x2_assemble(
    tl: np.ndarray, tr: np.ndarray, bl: np.ndarray, br: np.ndarray
) -> np.ndarray:
    """Assemble four blocks into ``[[tl, tr], [bl, br]]``.

    Raises
    ------
    ShapeError
        If the block shapes are mutually incompatible.
    """
    if tl.shape[0] != tr.shape[0] or bl.shape[0] != br.shape[0]:
        raise ShapeError(
            f"block rows disagree: tl {tl.shape}, tr {tr.shape}, "
            f"bl {bl.shape}, br {br.shape}"
        )
    if tl.shape[1] != bl.shape[1] or tr.shape[1] != br.shape[1]:
        raise ShapeError(
            f"block columns disagree: tl {tl.shape}, tr {tr.shape}, "
            f"bl {bl.shape}, br {br.shape}"
        )
    return np.block([[tl, tr], [bl, br]]).astype(np.complex128, copy=False)


def block2x2_extract(
    m: np.ndarray, split_row: int, split_col: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Cut ``m`` into four blocks at the given row/column split.

    Inverse of :func:`block2x2_assemble`: the round trip reproduces the
    blocks bit-exactly.

    Raises
    ------
    ShapeError
        If a split does not fall strictly inside the matrix.
    """
    rows, cols = m.shape
    if not 0 < split_row < rows:
        raise ShapeError(f"row split {split_row} not strictly inside {rows} rows")
    if not 0 < split_col < cols:
        raise ShapeError(f"column split {split_col} not strictly inside {cols} columns")
    return (
        m[:split_row, :split_col].copy(),
        m[:split_row, split_col:].copy(),
        m[split_row:, :split_col].copy(),
        m[split_row:, split_col:].copy(),
    )
