"""Frobenius-Perron dimensions of fusion rings."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .category_data import BaseEmbedding, FusionRing, ObjectClass
from .errors import InvalidCategoryError, NumericalError, RingMismatchError

POWER_TOL = 1e-12
MAX_ITER = 100_000
CHARACTER_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DimensionVector:
    ring: FusionRing
    dims: np.ndarray
    category_dim: float

    def __getitem__(self, label) -> float:
        return float(self.dims[self.ring.index(label)])

    def character_residual(self) -> float:
        """``max |d_i d_j - sum_k N_ij^k d_k|`` over all pairs."""
        d = self.dims
        lhs = np.outer(d, d)
        rhs = self.ring.tensor @ d
        return float(np.abs(lhs - rhs).max())


def total_fusion_matrix(ring: FusionRing) -> np.ndarray:
    """``M = sum_i N_i``; entrywise positive for a fusion ring."""
    return ring.tensor.sum(axis=0)


def fpdims(ring: FusionRing, *, tol: float = POWER_TOL, max_iter: int = MAX_ITER) -> DimensionVector:
    """Perron eigenvector of the total fusion matrix, scaled so ``d_unit = 1``.

    Power iteration from the all-ones vector; stops when successive
    max-normalized iterates agree to ``tol``.

    Raises
    ------
    NumericalError
        No convergence within ``max_iter`` steps.
    InvalidCategoryError
        Converged vector violates ``d_i d_j = sum_k N_ij^k d_k``.
    """
    M = total_fusion_matrix(ring).astype(float)
    v = np.ones(ring.n)
    delta = np.inf
    for _ in range(max_iter):
        w = M @ v
        w /= np.abs(w).max()
        delta = np.abs(w - v).max()
        v = w
        if delta < tol:
            break
    else:
        raise NumericalError(f"power iteration on {ring.name!r} did not converge", residual=delta)

    d = v / v[ring.unit_index]
    dv = DimensionVector(ring, d, float(d @ d))
    res = dv.character_residual()
    if res > CHARACTER_TOL:
        raise InvalidCategoryError(
            f"{ring.name!r}: dimension character residual {res:.3g} exceeds {CHARACTER_TOL}; not a fusion ring"
        )
    d.setflags(write=False)
    return dv


def fpdim_class(d: DimensionVector, x: ObjectClass) -> float:
    if x.ring != d.ring:
        raise RingMismatchError(f"class over {x.ring.name!r}, dimensions of {d.ring.name!r}")
    return float(x.mults @ d.dims)


def relative_center_dim(emb: BaseEmbedding, d_C: DimensionVector, d_E: DimensionVector) -> float:
    """FPdim of the relative center ``Z(C, E)``: ``FPdim(C)^2 / FPdim(E)``."""
    _check_dims(emb, d_C, d_E)
    return d_C.category_dim**2 / d_E.category_dim


def regular_algebra_dim(emb: BaseEmbedding, d_C: DimensionVector, d_E: DimensionVector) -> float:
    """FPdim of ``I(1_C)`` in ``Z(C, E)``: ``FPdim(C) / FPdim(E)``."""
    _check_dims(emb, d_C, d_E)
    return d_C.category_dim / d_E.category_dim


def _check_dims(emb, d_C, d_E):
    if d_C.ring != emb.target.ring or d_E.ring != emb.base.ring:
        raise RingMismatchError("dimension vectors do not match the embedding")
