"""Monodromy, centralizers and the Muger center from twists.

Transparency of ``(i, j)`` is detected by Muger's criterion on the
monodromy matrix ``S~_ij = sum_k N_ij^k d_k theta_k / (theta_i theta_j)``:
the pair has trivial double braiding iff ``S~_ij = d_i d_j``. This is only
as good as the ribbon data: two braidings with the same twists are not
distinguished.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .category_data import BaseEmbedding, RibbonData, validate_embedding
from .errors import BraidingError
from .fp_dimension import DimensionVector, fpdims

TRANSPARENCY_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class MonodromyMatrix:
    ribbon: RibbonData
    entries: np.ndarray

    def __getitem__(self, ij) -> complex:
        i, j = ij
        ring = self.ribbon.ring
        return complex(self.entries[ring.index(i), ring.index(j)])


def monodromy(rd: RibbonData, d: DimensionVector) -> MonodromyMatrix:
    ring = rd.ring
    if not ring.is_commutative():
        raise BraidingError(f"{ring.name!r} has non-commutative fusion; it admits no braiding")
    th = rd.twists
    S = np.einsum("ijk,k->ij", ring.tensor, d.dims * th) / np.outer(th, th)
    S.setflags(write=False)
    return MonodromyMatrix(rd, S)


def is_transparent_pair(S: MonodromyMatrix, d: DimensionVector, i, j, tol: float = TRANSPARENCY_TOL) -> bool:
    ring = d.ring
    i, j = ring.index(i), ring.index(j)
    target = d.dims[i] * d.dims[j]
    return bool(abs(S.entries[i, j] - target) <= tol * max(1.0, target))


def transparency_matrix(S: MonodromyMatrix, d: DimensionVector, tol: float = TRANSPARENCY_TOL) -> np.ndarray:
    target = np.outer(d.dims, d.dims)
    return np.abs(S.entries - target) <= tol * np.maximum(1.0, target)


def centralizer(S: MonodromyMatrix, d: DimensionVector, subset: Iterable, tol: float = TRANSPARENCY_TOL) -> frozenset[int]:
    """Simples transparent against every member of ``subset``."""
    ring = d.ring
    idx = sorted({ring.index(a) for a in subset})
    duals = ring.duals
    if any(duals[a] not in idx for a in idx):
        warnings.warn("centralizer subset is not closed under duals", stacklevel=2)
    ok = transparency_matrix(S, d, tol)[:, idx].all(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(ok))


def mueger_center(S: MonodromyMatrix, d: DimensionVector, tol: float = TRANSPARENCY_TOL) -> frozenset[int]:
    return centralizer(S, d, range(d.ring.n), tol)


@dataclass
class Classification:
    """Position of ``C`` relative to a base ``E``.

    ``base_centralizer_equals_base`` compares the centralizer of the image
    of ``E`` with the image itself; ``is_umtc_over_E`` compares the Muger
    center of ``C`` with the image.
    """

    is_symmetric: bool
    is_over_base: bool
    base_centralizer_equals_base: bool
    is_umtc_over_E: bool
    transparent_simples: list[int]
    image: list[int]
    notes: list[str] = field(default_factory=list)

    def failed_flags(self) -> list[str]:
        out = []
        if not self.is_over_base:
            out.append("is_over_base")
        if not self.is_umtc_over_E:
            out.append("is_umtc_over_E")
        return out


def classify(emb: BaseEmbedding, tol: float = TRANSPARENCY_TOL) -> Classification:
    """Classify ``C`` over ``E`` via the image of ``E`` and the Muger center.

    Injectivity, unit and fusion violations of the embedding raise
    :class:`~fuscat.errors.InvalidCategoryError`. A twist mismatch is not
    raised: it means ``T`` is not braided, so ``is_over_base`` is false and
    the mismatch is recorded in ``notes``.
    """
    report = validate_embedding(emb)
    twist_bad = [v.message for v in report.violations if v.kind == "twist"]
    report.violations = [v for v in report.violations if v.kind != "twist"]
    report.raise_if_invalid()

    rd = emb.target
    d = fpdims(rd.ring)
    S = monodromy(rd, d)
    center = mueger_center(S, d, tol)
    image = emb.image

    over = image <= center and not twist_bad
    umtc = over and center == image
    notes = [f"twist mismatch: {m}" for m in twist_bad]
    if not image <= center:
        bad = sorted(image - center)
        notes.append("image simples not transparent: " + ", ".join(rd.ring.simples[b] for b in bad))
    return Classification(
        is_symmetric=len(center) == rd.ring.n,
        is_over_base=over,
        base_centralizer_equals_base=centralizer(S, d, image, tol) == image,
        is_umtc_over_E=umtc,
        transparent_simples=sorted(center),
        image=sorted(image),
        notes=notes,
    )
