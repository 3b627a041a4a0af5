"""Internal homs of ``C`` viewed as a module over its base ``E``.

``E`` acts on ``C`` by ``e . x = T(e) (x) x``; the internal hom ``[m, n]_E``
is the class in ``E`` with ``dim Hom_E(e, [m, n]_E) = dim Hom_C(T(e) (x) m, n)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .category_data import BaseEmbedding, ObjectClass, fuse
from .errors import RingMismatchError
from .fp_dimension import DimensionVector, fpdim_class


@dataclass
class EnrichedHomResult:
    base_class: ObjectClass
    hom_dim: int

    @property
    def unit_consistent(self) -> bool:
        """Unit multiplicity of ``[m, n]_E`` equals ``dim Hom_C(m, n)``."""
        return self.base_class.mults[self.base_class.ring.unit_index] == self.hom_dim


def _check_over_target(emb: BaseEmbedding, *classes: ObjectClass):
    for c in classes:
        if c.ring != emb.target.ring:
            raise RingMismatchError(f"class over {c.ring.name!r}, expected {emb.target.ring.name!r}")


def hom_dim(m: ObjectClass, n: ObjectClass) -> int:
    """``dim Hom_C(m, n)`` for semisimple classes."""
    if m.ring != n.ring:
        raise RingMismatchError("hom between different rings")
    return int(m.mults @ n.mults)


def internal_hom_over_base(emb: BaseEmbedding, m: ObjectClass, n: ObjectClass) -> ObjectClass:
    _check_over_target(emb, m, n)
    N = emb.target.ring.tensor
    T = list(emb.map)
    mults = np.einsum("i,eij,j->e", m.mults, N[T], n.mults)
    return ObjectClass(emb.base.ring, mults)


def enriched_hom(emb: BaseEmbedding, m: ObjectClass, n: ObjectClass) -> EnrichedHomResult:
    return EnrichedHomResult(internal_hom_over_base(emb, m, n), hom_dim(m, n))


@dataclass
class CheckReport:
    name: str
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self):
        if self.ok:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL\n" + "\n".join(f"  {m}" for m in self.mismatches)


def internal_hom_dual_swap(emb: BaseEmbedding, m: ObjectClass, n: ObjectClass) -> CheckReport:
    """Check ``dual([m, n]_E) == [n, m]_E`` componentwise."""
    fwd = internal_hom_over_base(emb, m, n).dual()
    back = internal_hom_over_base(emb, n, m)
    report = CheckReport(f"[{m}, {n}]^* == [{n}, {m}]")
    E = emb.base.ring
    for e in range(E.n):
        if fwd.mults[e] != back.mults[e]:
            report.mismatches.append(f"{E.simples[e]}: {fwd.mults[e]} != {back.mults[e]}")
    return report


def act(emb: BaseEmbedding, e, m: ObjectClass) -> ObjectClass:
    """``e . m = T(e) (x) m`` for a simple ``e`` of the base."""
    return fuse(ObjectClass.simple(emb.target.ring, emb.map[emb.base.ring.index(e)]), m)


def tensor_shift_check(emb: BaseEmbedding, m: ObjectClass, n: ObjectClass) -> CheckReport:
    """Check ``[e . m, n]_E == e* (x) [m, n]_E`` for every simple ``e`` of ``E``."""
    E = emb.base.ring
    report = CheckReport(f"tensor shift for [{m}, {n}]")
    base = internal_hom_over_base(emb, m, n)
    for e in range(E.n):
        lhs = internal_hom_over_base(emb, act(emb, e, m), n)
        rhs = fuse(ObjectClass.simple(E, E.duals[e]), base)
        if lhs != rhs:
            report.mismatches.append(f"e={E.simples[e]}: {lhs} != {rhs}")
    return report


def fpdim_bound_warnings(
    emb: BaseEmbedding, m: ObjectClass, n: ObjectClass, d_C: DimensionVector, d_E: DimensionVector
) -> list[str]:
    """Heuristic: ``FPdim_E([m, n]_E) <= FPdim(m) FPdim(n)``. Not a theorem."""
    lhs = fpdim_class(d_E, internal_hom_over_base(emb, m, n))
    rhs = fpdim_class(d_C, m) * fpdim_class(d_C, n)
    if lhs > rhs * (1 + 1e-9):
        msg = f"FPdim([{m}, {n}]_E) = {lhs:.6g} exceeds FPdim(m) FPdim(n) = {rhs:.6g}"
        warnings.warn(msg, stacklevel=2)
        return [msg]
    return []
