"""Seeded random contraction generators.

Each kind pins a different region of the contraction ball:

- ``generic``:        singular values resampled uniformly in [0, 1]
- ``strict``:         singular values resampled uniformly in [0, 0.9]
- ``unitary``:        Haar-like unitary (square only)
- ``isometry``:       first ``dim_k`` columns of a unitary (``dim_h >= dim_k``)
- ``coisometry``:     adjoint of an isometry (``dim_h <= dim_k``)
- ``rank_deficient``: one singular value forced to 1 and one to 0

Singular values are resampled rather than obtained by dividing a Gaussian
matrix by its norm: division never lands on the norm-1 boundary, and the
boundary (isometries, coisometries, unitaries) is exactly where the dilation
identities are most fragile.

Unitaries come from modified Gram-Schmidt (two passes) on a complex Gaussian
matrix.  Normalizing against positive column norms fixes the phase freedom of
the factorization, which is what makes the distribution Haar-like.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dilation import Contraction, contraction
from .linalg import adjoint
from .rng import MASK64, Xoshiro256StarStar

__all__ = ["KINDS", "GeneratorSpec", "gen_contraction", "haar_unitary"]

KINDS = ("generic", "strict", "unitary", "isometry", "coisometry", "rank_deficient")


@dataclass(frozen=True)
class GeneratorSpec:
    """Dimensions, kind, and seed pinning one generated contraction."""

    dim_h: int
    dim_k: int
    kind: str
    seed: int

    def __post_init__(self):
        if self.dim_h < 1 or self.dim_k < 1:
            raise ValueError(
                f"dimensions must be positive, got {self.dim_h}x{self.dim_k}"
            )
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not 0 <= int(self.seed) <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.kind == "unitary" and self.dim_h != self.dim_k:
            raise ValueError(f"unitary kind needs dim_h == dim_k, got {self.dim_h}x{self.dim_k}")
        if self.kind == "isometry" and self.dim_h < self.dim_k:
            raise ValueError(f"isometry kind needs dim_h >= dim_k, got {self.dim_h}x{self.dim_k}")
        if self.kind == "coisometry" and self.dim_h > self.dim_k:
            raise ValueError(f"coisometry kind needs dim_h <= dim_k, got {self.dim_h}x{self.dim_k}")
        if self.kind == "rank_deficient" and min(self.dim_h, self.dim_k) < 2:
            raise ValueError(
                "rank_deficient kind needs min(dim_h, dim_k) >= 2 to force "
                "both a zero and a unit singular value"
            )


def haar_unitary(n: int, stream: Xoshiro256StarStar) -> np.ndarray:
    """Haar-like ``n x n`` unitary from orthonormalized complex Gaussians."""
    g = stream.complex_normals((n, n))
    q = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        v = g[:, j].copy()
        while True:
            for _ in range(2):  # second pass restores orthogonality lost to rounding
                if j:
                    v = v - q[:, :j] @ (q[:, :j].conj().T @ v)
            norm = np.linalg.norm(v)
            if norm > 1e-8:
                break
            v = stream.complex_normals((n,))
        q[:, j] = v / norm
    return q


def _from_singular_values(
    stream: Xoshiro256StarStar, dim_h: int, dim_k: int, sigma: np.ndarray
) -> np.ndarray:
    u = haar_unitary(dim_h, stream)
    v = haar_unitary(dim_k, stream)
    r = sigma.size
    return (u[:, :r] * sigma) @ adjoint(v[:, :r])


def gen_contraction(spec: GeneratorSpec) -> Contraction:
    """Deterministic contraction for ``spec``: same spec, same bits."""
    stream = Xoshiro256StarStar(spec.seed)
    h, k = spec.dim_h, spec.dim_k
    r = min(h, k)
    if spec.kind == "unitary":
        m = haar_unitary(h, stream)
    elif spec.kind == "isometry":
        m = haar_unitary(h, stream)[:, :k]
    elif spec.kind == "coisometry":
        m = adjoint(haar_unitary(k, stream)[:, :h])
    elif spec.kind == "generic":
        m = _from_singular_values(stream, h, k, stream.uniforms(r))
    elif spec.kind == "strict":
        m = _from_singular_values(stream, h, k, 0.9 * stream.uniforms(r))
    else:  # rank_deficient
        sigma = np.concatenate(([1.0], stream.uniforms(r - 2), [0.0]))
        m = _from_singular_values(stream, h, k, sigma)
    return contraction(m)
