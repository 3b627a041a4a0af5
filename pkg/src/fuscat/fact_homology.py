"""Factorization homology of stratified surfaces with anomaly-free coefficients.

Only the configurations with a known closed form are evaluated:

* a closed genus-``g`` surface with point defects ``x_1, ..., x_n`` and a
  UMTC ``C`` over ``E`` on the 2-cell, whose invariant is the class
  ``[1_C, x_1 (x) ... (x) x_n (x) H^g]_E`` in ``E`` (``H`` is the handle
  object), and
* a cylinder carrying a single closed line defect ``M``, checked at the
  level of Frobenius-Perron dimensions.

Ground-state degeneracy is the multiplicity of the unit of ``E`` in the
invariant class.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .braiding import TRANSPARENCY_TOL, Classification, classify
from .category_data import BaseEmbedding, FusionRing, ObjectClass, fuse
from .enriched_hom import internal_hom_over_base
from .errors import (
    AnomalyError,
    InvalidCategoryError,
    RingMismatchError,
    SemanticError,
    UnsupportedConfigurationError,
)
from .fp_dimension import DimensionVector, fpdim_class, fpdims, regular_algebra_dim, relative_center_dim

CLOSED = "closed_surface"
CYLINDER = "cylinder_line_defect"
VARIANTS = (CLOSED, CYLINDER)
DIM_RTOL = 1e-6


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int = 0
    defects: tuple[ObjectClass, ...] = ()
    handle_override: ObjectClass | None = None
    variant: str = CLOSED
    defect_fpdim: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "defects", tuple(self.defects))
        if self.variant not in VARIANTS:
            raise UnsupportedConfigurationError(
                f"unsupported surface variant {self.variant!r}; only {', '.join(VARIANTS)} have closed forms"
            )
        if int(self.genus) != self.genus or self.genus < 0:
            raise SemanticError(f"genus must be a nonnegative integer, got {self.genus!r}", "genus")
        rings = {c.ring for c in self.defects}
        if self.handle_override is not None:
            rings.add(self.handle_override.ring)
        if len(rings) > 1:
            raise RingMismatchError("defect and handle classes must share one ring")
        if self.variant == CYLINDER:
            if self.genus:
                raise SemanticError("a cylinder carries no genus", "genus")
            if self.defects:
                raise SemanticError("a cylinder with a line defect carries no point defects", "defects")
            if self.defect_fpdim is None or not self.defect_fpdim > 0:
                raise SemanticError("cylinder requires a positive defect_fpdim", "defect_fpdim")


@dataclass
class FHResult:
    invariant_class: ObjectClass
    gsd: int
    derivation_log: list[str] = field(default_factory=list)
    classification: Classification | None = None


def merge_defects(defects: Sequence[ObjectClass], ring: FusionRing) -> ObjectClass:
    """Fuse adjacent point defects into one; the empty list gives the unit."""
    out = ObjectClass.unit(ring)
    for x in defects:
        if x.ring != ring:
            raise RingMismatchError(f"defect over {x.ring.name!r}, surface coefficient is {ring.name!r}")
        out = fuse(out, x)
    return out


def handle_object(
    emb: BaseEmbedding, override: ObjectClass | None = None, expected_fpdim: float | None = None
) -> ObjectClass:
    """Class inserted once per handle.

    Over the trivial base this is ``sum_i i* (x) i``. Over a nontrivial base
    it needs algebra data the skeleton does not carry, so ``override`` must
    be given; it is returned unchanged after the optional FPdim check.
    """
    C = emb.target.ring
    if override is not None:
        if override.ring != C:
            raise RingMismatchError(f"handle over {override.ring.name!r}, expected {C.name!r}")
        H = override
    elif emb.base_is_trivial:
        duals = list(C.duals)
        H = ObjectClass(C, C.tensor[duals, np.arange(C.n)].sum(axis=0))
    else:
        raise UnsupportedConfigurationError(
            f"base {emb.base.name!r} is nontrivial: the handle class (eta^-1(A) (x)_T(A) eta^-1(A)) "
            "must be supplied as an override"
        )
    if expected_fpdim is not None:
        got = fpdim_class(fpdims(C), H)
        if abs(got - expected_fpdim) > DIM_RTOL * max(1.0, abs(expected_fpdim)):
            raise InvalidCategoryError(f"handle class {H} has FPdim {got:.10g}, expected {expected_fpdim:.10g}")
    return H


def fh_closed_surface(
    emb: BaseEmbedding,
    spec: SurfaceSpec,
    *,
    force: bool = False,
    tol: float = TRANSPARENCY_TOL,
    handle_fpdim: float | None = None,
) -> FHResult:
    """Evaluate a closed genus-``g`` surface with point defects.

    Raises :class:`AnomalyError` unless ``C`` is a UMTC over ``E``;
    ``force=True`` evaluates anyway and records the bypass in the log.
    """
    if spec.variant != CLOSED:
        raise UnsupportedConfigurationError(f"fh_closed_surface got a {spec.variant!r} spec")
    C = emb.target.ring
    log: list[str] = []

    cls = classify(emb, tol)
    if not cls.is_umtc_over_E:
        msg = (
            f"{C.name!r} over {emb.base.name!r} is not anomaly-free "
            f"(failed: {', '.join(cls.failed_flags())}; is_over_base={cls.is_over_base})"
        )
        if not force:
            raise AnomalyError(msg, classification=cls)
        warnings.warn(f"anomaly-free gate bypassed: {msg}", stacklevel=2)
        log.append(f"WARNING: anomaly-free gate bypassed; {msg}; the closed form is unproven here")
    else:
        log.append(f"coefficient {C.name!r} is a UMTC over {emb.base.name!r}")

    X = merge_defects(spec.defects, C)
    if spec.defects:
        log.append(f"excision: merged {len(spec.defects)} point defect(s) into one 0-cell labelled {X}")
    else:
        log.append("no point defects: 0-cell labelled by the unit")

    if spec.genus:
        H = handle_object(emb, spec.handle_override, handle_fpdim)
        for k in range(spec.genus):
            X = fuse(X, H)
            log.append(
                f"handle {k + 1}/{spec.genus}: cut a cylinder into two disks with defects p, q; "
                f"genus {spec.genus - k} -> {spec.genus - k - 1}, inserted H = {H}"
            )

    inv = internal_hom_over_base(emb, ObjectClass.unit(C), X)
    log.append(f"sphere with one 0-cell {X}: invariant [1_C, {X}]_E = {inv}")
    return FHResult(inv, int(inv.mults[emb.base.ring.unit_index]), log, cls)


def gsd(result: FHResult) -> int:
    return int(result.invariant_class.mults[result.invariant_class.ring.unit_index])


@dataclass
class DimensionCheck:
    name: str
    lhs: float
    rhs: float
    passed: bool

    def __str__(self):
        mark = "ok" if self.passed else "FAIL"
        return f"[{mark}] {self.name}: {self.lhs:.10g} vs {self.rhs:.10g}"


def _close(a, b, rtol=DIM_RTOL):
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


@dataclass
class CylinderReport:
    checks: list[DimensionCheck]
    conclusion: str

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        return "\n".join([*map(str, self.checks), f"conclusion: {self.conclusion}"])


def fh_cylinder_check(
    emb: BaseEmbedding, spec: SurfaceSpec, d_C: DimensionVector, d_E: DimensionVector
) -> CylinderReport:
    """Necessary dimension conditions for a closed line defect on a cylinder.

    A closed label ``M`` has ``Z(M^rev, E) = Z(C, E)``, hence
    ``FPdim(M) = FPdim(C)``. Nothing beyond dimensions is computed.
    """
    if spec.variant != CYLINDER:
        raise UnsupportedConfigurationError(f"fh_cylinder_check got a {spec.variant!r} spec")
    fp_m = float(spec.defect_fpdim)
    fp_c = d_C.category_dim
    checks = [
        DimensionCheck("FPdim(M) = FPdim(C)", fp_m, fp_c, _close(fp_m, fp_c)),
        DimensionCheck(
            "FPdim(Z(M^rev, E)) = FPdim(Z(C, E))",
            fp_m**2 / d_E.category_dim,
            relative_center_dim(emb, d_C, d_E),
            _close(fp_m**2 / d_E.category_dim, relative_center_dim(emb, d_C, d_E)),
        ),
    ]
    C, E = emb.target.name, emb.base.name
    if emb.target.ring.n == 1:
        X = E if emb.base_is_trivial else C
        conclusion = f"invariant = Fun_{E}(X, X) with X = {X}"
    else:
        conclusion = f"invariant = Fun_{E}(X, X) for the {C}-module X with M = Fun_{C}(X, X)"
    if not checks[0].passed:
        conclusion = f"M is not a closed 1-cell label for {C} (dimension mismatch); no conclusion"
    return CylinderReport(checks, conclusion)


@dataclass
class MoritaReport:
    checks: list[DimensionCheck]
    verdict: str

    @property
    def possibly_equivalent(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        return "\n".join([*map(str, self.checks), f"verdict: {self.verdict}"])


def morita_necessary(
    embC: BaseEmbedding,
    embD: BaseEmbedding,
    dims: tuple[DimensionVector, DimensionVector, DimensionVector] | None = None,
) -> MoritaReport:
    """Dimension obstructions to Morita equivalence over a common base.

    Passing every check never certifies equivalence.
    """
    if embC.base != embD.base:
        raise RingMismatchError(f"bases differ: {embC.base.name!r} vs {embD.base.name!r}")
    if dims is None:
        dims = (fpdims(embC.target.ring), fpdims(embD.target.ring), fpdims(embC.base.ring))
    d_C, d_D, d_E = dims
    pairs = [
        ("FPdim(C) = FPdim(D)", d_C.category_dim, d_D.category_dim),
        ("FPdim(Z(C,E)) = FPdim(Z(D,E))", relative_center_dim(embC, d_C, d_E), relative_center_dim(embD, d_D, d_E)),
        ("FPdim(I_C(1)) = FPdim(I_D(1))", regular_algebra_dim(embC, d_C, d_E), regular_algebra_dim(embD, d_D, d_E)),
    ]
    checks = [DimensionCheck(name, a, b, _close(a, b)) for name, a, b in pairs]
    failed = [c for c in checks if not c.passed]
    if failed:
        w = failed[0]
        verdict = f"not Morita equivalent (witness: {w.name} fails, {w.lhs:.10g} != {w.rhs:.10g})"
    else:
        verdict = "possibly Morita equivalent (dimension conditions hold; inconclusive)"
    return MoritaReport(checks, verdict)
