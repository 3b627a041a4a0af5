"""Skeletal data of fusion categories.

A fusion category is stored only through its fusion ring (labels, unit and
the multiplicity tensor ``N[i, j, k] = N_ij^k``), optionally decorated with
twists. An embedding of a symmetric base ``E`` is a map on simple labels.
Objects are Grothendieck classes: nonnegative integer vectors over simples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InvalidCategoryError, RingMismatchError, StructuralError

TWIST_TOL = 1e-9


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Violation:
    kind: str
    index: tuple
    message: str

    def __str__(self):
        return f"[{self.kind}] {self.message}"


@dataclass
class ValidationReport:
    """Outcome of a validator: violations are fatal, warnings are not."""

    subject: str
    violations: list[Violation] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def add(self, kind, index, message):
        self.violations.append(Violation(kind, tuple(index), message))

    def raise_if_invalid(self):
        if self.violations:
            head = "; ".join(str(v) for v in self.violations[:5])
            more = len(self.violations) - 5
            if more > 0:
                head += f"; ... ({more} more)"
            raise InvalidCategoryError(f"{self.subject}: {head}", report=self)

    def __str__(self):
        lines = [f"{self.subject}: {'valid' if self.ok else 'INVALID'}"]
        lines += [f"  {v}" for v in self.violations]
        lines += [f"  warning: {w}" for w in self.warnings]
        return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Labels, unit and multiplicities of a (candidate) fusion ring.

    ``tensor[i, j, k]`` is the multiplicity of simple ``k`` in ``i (x) j``.
    The array is stored read-only.
    """

    name: str
    simples: tuple[str, ...]
    unit_index: int
    tensor: np.ndarray

    def __post_init__(self):
        simples = tuple(str(s) for s in self.simples)
        n = len(simples)
        if n < 1:
            raise StructuralError(f"{self.name}: at least one simple is required")
        if len(set(simples)) != n:
            raise StructuralError(f"{self.name}: duplicate simple labels")
        if not 0 <= int(self.unit_index) < n:
            raise StructuralError(f"{self.name}: unit_index {self.unit_index} out of range")
        raw = np.asarray(self.tensor)
        if raw.shape != (n, n, n):
            raise StructuralError(f"{self.name}: tensor shape {raw.shape} != {(n, n, n)}")
        tensor = raw.astype(np.int64)
        if not np.array_equal(tensor, raw):
            raise StructuralError(f"{self.name}: multiplicities must be integers")
        if (tensor < 0).any():
            i, j, k = np.argwhere(tensor < 0)[0]
            raise StructuralError(f"{self.name}: negative multiplicity at {(int(i), int(j), int(k))}")
        object.__setattr__(self, "simples", simples)
        object.__setattr__(self, "unit_index", int(self.unit_index))
        object.__setattr__(self, "tensor", _readonly(tensor))

    @classmethod
    def from_entries(cls, name, simples: Sequence[str], unit, entries: Iterable) -> FusionRing:
        """Build from sparse ``(i, j, k, mult)`` entries, by label or index."""
        simples = tuple(simples)
        n = len(simples)
        lookup = {s: a for a, s in enumerate(simples)}

        def resolve(x):
            if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
                if not 0 <= x < n:
                    raise StructuralError(f"{name}: simple index {x} out of range")
                return int(x)
            if x not in lookup:
                raise StructuralError(f"{name}: unknown label {x!r}")
            return lookup[x]

        tensor = np.zeros((n, n, n), dtype=np.int64)
        for entry in entries:
            i, j, k, mult = entry
            tensor[resolve(i), resolve(j), resolve(k)] += int(mult)
        return cls(name, simples, resolve(unit), tensor)

    @property
    def n(self) -> int:
        return len(self.simples)

    @property
    def unit(self) -> str:
        return self.simples[self.unit_index]

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if not 0 <= label < self.n:
                raise StructuralError(f"{self.name}: simple index {label} out of range")
            return int(label)
        try:
            return self.simples.index(label)
        except ValueError:
            raise StructuralError(f"{self.name}: unknown label {label!r}") from None

    def fusion_matrix(self, i) -> np.ndarray:
        """``(N_i)[j, k] = N_ij^k``: left multiplication by simple ``i``."""
        return self.tensor[self.index(i)]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.tensor, self.tensor.transpose(1, 0, 2)))

    @cached_property
    def duals(self) -> tuple[int, ...]:
        u = self.unit_index
        out = []
        for i in range(self.n):
            hits = np.flatnonzero(self.tensor[i, :, u] == 1)
            if len(hits) != 1 or self.tensor[i, :, u].max() > 1:
                raise InvalidCategoryError(f"{self.name}: simple {self.simples[i]!r} has no unique dual")
            out.append(int(hits[0]))
        return tuple(out)

    def permuted(self, perm: Sequence[int]) -> FusionRing:
        """Relabel so that new simple ``a`` is old simple ``perm[a]``."""
        perm = list(perm)
        inv = {old: new for new, old in enumerate(perm)}
        tensor = self.tensor[np.ix_(perm, perm, perm)]
        return FusionRing(self.name, tuple(self.simples[p] for p in perm), inv[self.unit_index], tensor)

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.name == other.name
            and self.simples == other.simples
            and self.unit_index == other.unit_index
            and np.array_equal(self.tensor, other.tensor)
        )

    def __hash__(self):
        return hash((self.name, self.simples, self.unit_index, self.tensor.tobytes()))

    def __repr__(self):
        return f"FusionRing({self.name!r}, simples={list(self.simples)}, unit={self.unit!r})"


def validate_fusion_ring(ring: FusionRing) -> ValidationReport:
    """Check unit law, associativity, rigidity and dual compatibility.

    Every failing index tuple is listed. Non-commutativity is only a warning.
    """
    N = ring.tensor
    n, u = ring.n, ring.unit_index
    report = ValidationReport(f"fusion ring {ring.name!r}")
    eye = np.eye(n, dtype=np.int64)

    for j, k in np.argwhere(N[u] != eye):
        report.add("unit", (u, int(j), int(k)), f"N[unit,{j}]^{k} = {N[u, j, k]}, expected {eye[j, k]}")
    for j, k in np.argwhere(N[:, u, :] != eye):
        report.add("unit", (int(j), u, int(k)), f"N[{j},unit]^{k} = {N[j, u, k]}, expected {eye[j, k]}")

    lhs = np.einsum("ijm,mkl->ijkl", N, N)
    rhs = np.einsum("jkm,iml->ijkl", N, N)
    for idx in np.argwhere(lhs != rhs):
        i, j, k, l = (int(a) for a in idx)
        report.add(
            "associativity",
            (i, j, k, l),
            f"((i j) k)^l = {lhs[i, j, k, l]} != (i (j k))^l = {rhs[i, j, k, l]} at {(i, j, k, l)}",
        )

    rigid = True
    for i in range(n):
        col = N[i, :, u]
        ones = np.flatnonzero(col == 1)
        if col.max() > 1 or len(ones) != 1:
            rigid = False
            report.add("rigidity", (i,), f"simple {ring.simples[i]!r} has {len(ones)} candidate duals")

    if rigid:
        dual = np.array(ring.duals)
        # N_ij^k = N_{j* i*}^{k*}
        swapped = N[np.ix_(dual, dual, dual)].transpose(1, 0, 2)
        for i, j, k in np.argwhere(N != swapped):
            report.add("dual", (int(i), int(j), int(k)), f"N_ij^k != N_(j* i*)^(k*) at {(int(i), int(j), int(k))}")
        # N_ij^k = N_{i* k}^j
        recip = N[dual].transpose(0, 2, 1)
        for i, j, k in np.argwhere(N != recip):
            report.add("dual", (int(i), int(j), int(k)), f"N_ij^k != N_(i* k)^j at {(int(i), int(j), int(k))}")

    if not ring.is_commutative():
        report.warnings.append("fusion is not commutative; no braiding can exist")
    return report


def dual_of(ring: FusionRing, i) -> int:
    """Index of the dual of simple ``i`` (label or index)."""
    return ring.duals[ring.index(i)]


@dataclass(frozen=True, eq=False)
class ObjectClass:
    """A Grothendieck class ``sum_i mults[i] * simple_i``."""

    ring: FusionRing
    mults: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.mults)
        if raw.shape != (self.ring.n,):
            raise StructuralError(f"class has length {raw.shape}, ring {self.ring.name!r} has {self.ring.n} simples")
        mults = raw.astype(np.int64)
        if not np.array_equal(mults, raw) or (mults < 0).any():
            raise StructuralError("class multiplicities must be nonnegative integers")
        object.__setattr__(self, "mults", _readonly(mults))

    @classmethod
    def zero(cls, ring):
        return cls(ring, np.zeros(ring.n, dtype=np.int64))

    @classmethod
    def simple(cls, ring, label, mult=1):
        v = np.zeros(ring.n, dtype=np.int64)
        v[ring.index(label)] = mult
        return cls(ring, v)

    @classmethod
    def unit(cls, ring):
        return cls.simple(ring, ring.unit_index)

    @classmethod
    def from_dict(cls, ring, terms: Mapping):
        v = np.zeros(ring.n, dtype=np.int64)
        for label, mult in terms.items():
            v[ring.index(label)] += int(mult)
        return cls(ring, v)

    def to_dict(self) -> dict[str, int]:
        return {self.ring.simples[i]: int(m) for i, m in enumerate(self.mults) if m}

    def __getitem__(self, label) -> int:
        return int(self.mults[self.ring.index(label)])

    def _check(self, other):
        if not isinstance(other, ObjectClass):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"classes over {self.ring.name!r} and {other.ring.name!r}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ObjectClass(self.ring, self.mults + other.mults)

    def __rmul__(self, k: int):
        if k < 0:
            raise StructuralError("negative scalar")
        return ObjectClass(self.ring, self.mults * int(k))

    def dual(self) -> ObjectClass:
        v = np.zeros_like(self.mults)
        v[list(self.ring.duals)] = self.mults
        return ObjectClass(self.ring, v)

    def total(self) -> int:
        return int(self.mults.sum())

    def __eq__(self, other):
        if not isinstance(other, ObjectClass):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.mults, other.mults)

    def __hash__(self):
        return hash((self.ring, self.mults.tobytes()))

    def __str__(self):
        terms = [lab if m == 1 else f"{m}*{lab}" for lab, m in self.to_dict().items()]
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"ObjectClass({self.ring.name!r}, {self.to_dict()})"


def fuse(a: ObjectClass, b: ObjectClass) -> ObjectClass:
    """Tensor product in the Grothendieck ring."""
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot fuse classes over {a.ring.name!r} and {b.ring.name!r}")
    return ObjectClass(a.ring, np.einsum("i,j,ijk->k", a.mults, b.mults, a.ring.tensor))


def fuse_all(classes: Sequence[ObjectClass], ring: FusionRing) -> ObjectClass:
    out = ObjectClass.unit(ring)
    for c in classes:
        out = fuse(out, c)
    return out


@dataclass(frozen=True, eq=False)
class RibbonData:
    """A fusion ring together with one twist per simple."""

    ring: FusionRing
    twists: np.ndarray

    def __post_init__(self):
        tw = np.asarray(self.twists, dtype=complex)
        if tw.shape != (self.ring.n,):
            raise StructuralError(f"{self.ring.name}: expected {self.ring.n} twists, got {tw.shape}")
        object.__setattr__(self, "twists", _readonly(tw.copy()))

    @property
    def name(self):
        return self.ring.name

    def twist(self, label) -> complex:
        return complex(self.twists[self.ring.index(label)])

    def __eq__(self, other):
        if not isinstance(other, RibbonData):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.twists, other.twists)

    def __hash__(self):
        return hash((self.ring, self.twists.tobytes()))


def validate_ribbon_data(rd: RibbonData, tol: float = TWIST_TOL) -> ValidationReport:
    report = ValidationReport(f"twists of {rd.name!r}")
    tw = rd.twists
    u = rd.ring.unit_index
    if abs(tw[u] - 1) > tol:
        report.add("twist", (u,), f"twist of the unit is {tw[u]}, expected 1")
    for i, t in enumerate(tw):
        if abs(abs(t) - 1) > tol:
            report.add("twist", (i,), f"|theta_{rd.ring.simples[i]}| = {abs(t):.12g}, expected 1")
    try:
        duals = rd.ring.duals
    except InvalidCategoryError:
        return report
    for i, j in enumerate(duals):
        if i < j and abs(tw[i] - tw[j]) > tol:
            report.add("twist", (i, j), f"theta of {rd.ring.simples[i]!r} differs from its dual")
    return report


def trivial_ring(name: str = "Vec") -> FusionRing:
    return FusionRing(name, ("1",), 0, np.ones((1, 1, 1), dtype=np.int64))


def trivial_ribbon(name: str = "Vec") -> RibbonData:
    return RibbonData(trivial_ring(name), np.ones(1, dtype=complex))


@dataclass(frozen=True, eq=False)
class BaseEmbedding:
    """Map ``T`` from simples of the base ``E`` into simples of ``C``.

    ``map[e]`` is the target index of base simple ``e``.
    """

    base: RibbonData
    target: RibbonData
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.map)
        if len(m) != self.base.ring.n:
            raise StructuralError("embedding must assign a target simple to every base simple")
        for x in m:
            if not 0 <= x < self.target.ring.n:
                raise StructuralError(f"embedding target index {x} out of range")
        object.__setattr__(self, "map", m)

    @classmethod
    def from_labels(cls, base: RibbonData, target: RibbonData, mapping: Mapping[str, str]) -> BaseEmbedding:
        missing = [e for e in base.ring.simples if e not in mapping]
        if missing:
            raise StructuralError(f"embedding does not map base simples {missing}")
        extra = [e for e in mapping if e not in base.ring.simples]
        if extra:
            raise StructuralError(f"embedding maps unknown base labels {extra}")
        idx = []
        for e in base.ring.simples:
            c = mapping[e]
            if c not in target.ring.simples:
                raise StructuralError(f"label {c!r} not found in target ring {target.name!r}")
            idx.append(target.ring.index(c))
        return cls(base, target, tuple(idx))

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    @property
    def base_is_trivial(self) -> bool:
        return self.base.ring.n == 1

    def label_map(self) -> dict[str, str]:
        return {e: self.target.ring.simples[c] for e, c in zip(self.base.ring.simples, self.map)}


def identity_embedding(rd: RibbonData) -> BaseEmbedding:
    return BaseEmbedding(rd, rd, tuple(range(rd.ring.n)))


def vec_embedding(target: RibbonData) -> BaseEmbedding:
    """The unit-to-unit embedding of ``Vec``, which always exists."""
    return BaseEmbedding(trivial_ribbon(), target, (target.ring.unit_index,))


def validate_embedding(emb: BaseEmbedding, tol: float = TWIST_TOL) -> ValidationReport:
    """Check injectivity, unit, fusion and twist compatibility of ``T``.

    Transparency of the image is not checked here; see
    :func:`fuscat.braiding.classify`.
    """
    E, C = emb.base.ring, emb.target.ring
    T = np.array(emb.map)
    report = ValidationReport(f"embedding {E.name!r} -> {C.name!r}")

    if len(set(emb.map)) != len(emb.map):
        seen = {}
        for e, c in enumerate(emb.map):
            if c in seen:
                report.add("injective", (seen[c], e), f"{E.simples[seen[c]]!r} and {E.simples[e]!r} both map to {C.simples[c]!r}")
            seen.setdefault(c, e)
    if emb.map[E.unit_index] != C.unit_index:
        report.add("unit", (E.unit_index,), f"unit of {E.name!r} maps to {C.simples[emb.map[E.unit_index]]!r}")

    restricted = C.tensor[np.ix_(T, T, T)]
    for e, f, g in np.argwhere(restricted != E.tensor):
        report.add(
            "fusion",
            (int(e), int(f), int(g)),
            f"N^E[{E.simples[e]},{E.simples[f]}]^{E.simples[g]} = {E.tensor[e, f, g]} "
            f"but N^C on the image = {restricted[e, f, g]}",
        )
    outside = [c for c in range(C.n) if c not in emb.image]
    if outside:
        leak = C.tensor[np.ix_(T, T, outside)]
        for e, f, c in np.argwhere(leak != 0):
            report.add(
                "fusion",
                (int(e), int(f), outside[c]),
                f"T({E.simples[e]}) (x) T({E.simples[f]}) contains {C.simples[outside[c]]!r} outside the image",
            )

    for e, c in enumerate(emb.map):
        if abs(emb.base.twists[e] - emb.target.twists[c]) > tol:
            report.add(
                "twist",
                (e,),
                f"theta_{E.simples[e]} = {emb.base.twists[e]:.6g} but theta_{C.simples[c]} = {emb.target.twists[c]:.6g}",
            )
    return report
