"""Built-in example categories.

Each entry's file ships in ``fuscat/data`` and is loaded through the same
parser as user files. ``expected`` maps a quantity to ``(value, provenance)``;
the test suite re-derives every value rather than trusting it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .category_data import BaseEmbedding, vec_embedding
from .errors import StructuralError
from .io import CategoryFile, parse_category_file, resolve_embedding

PHI = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    category_file: str
    description: str
    expected: dict = field(default_factory=dict)

    def load(self) -> CategoryFile:
        return parse_category_file(self.category_file)


_META = [
    (
        "trivial",
        "Vec: the unit category, one simple object",
        {
            "dims": ([1.0], "TRIVIAL: unit category"),
            "category_dim": (1.0, "TRIVIAL"),
            "mueger_center": (["1"], "TRIVIAL"),
            "modular": (True, "TRIVIAL"),
            "gsd": ({1: 1, 2: 1, 3: 1}, "DERIVED: H = 1"),
        },
    ),
    (
        "rep_z2",
        "Rep(Z/2): bosonic Z/2 symmetric category",
        {
            "dims": ([1.0, 1.0], "DERIVED: pointed"),
            "category_dim": (2.0, "DERIVED"),
            "mueger_center": (["1", "psi"], "DERIVED: all monodromies trivial"),
            "modular": (False, "DERIVED"),
        },
    ),
    (
        "svec",
        "sVec: super vector spaces, fermionic Z/2 symmetric category",
        {
            "dims": ([1.0, 1.0], "DERIVED: pointed"),
            "category_dim": (2.0, "DERIVED"),
            "mueger_center": (["1", "psi"], "DERIVED: S~_psipsi = 1/theta_psi^2 = 1"),
            "modular": (False, "DERIVED"),
        },
    ),
    (
        "fibonacci",
        "Fibonacci: tau x tau = 1 + tau, theta_tau = exp(4 pi i/5)",
        {
            "dims": ([1.0, PHI], "DERIVED: largest root of x^2 = x + 1"),
            "category_dim": (PHI + 2, "DERIVED"),
            "mueger_center": (["1"], "DERIVED: monodromy brute force"),
            "modular": (True, "DERIVED"),
            "gsd": ({1: 2, 2: 5, 3: 15}, "DERIVED: unit multiplicity of (2*1 + tau)^g"),
        },
    ),
    (
        "ising",
        "Ising: sigma x sigma = 1 + eps, theta_sigma = exp(pi i/8)",
        {
            "dims": ([1.0, 1.0, math.sqrt(2)], "DERIVED: sigma^2 = 1 + eps"),
            "category_dim": (4.0, "DERIVED"),
            "mueger_center": (["1"], "DERIVED: S~_sigmasigma = 0"),
            "modular": (True, "DERIVED"),
            "gsd": ({1: 3, 2: 10, 3: 36}, "DERIVED: unit multiplicity of (3*1 + eps)^g"),
        },
    ),
    (
        "toric_code",
        "Toric code Z(Vec_Z/2): Z/2 x Z/2 fusion, theta_f = -1",
        {
            "dims": ([1.0] * 4, "DERIVED: pointed"),
            "category_dim": (4.0, "DERIVED"),
            "mueger_center": (["1"], "DERIVED: e, m braid nontrivially"),
            "modular": (True, "DERIVED"),
            "gsd": ({1: 4, 2: 16, 3: 64}, "DERIVED: H = 4*1"),
        },
    ),
    (
        "rep_z2_over_rep_z2",
        "Rep(Z/2) over itself via the identity: degenerate UMTC over E with C = E",
        {
            "dims": ([1.0, 1.0], "DERIVED"),
            "category_dim": (2.0, "DERIVED"),
            "mueger_center": (["1", "psi"], "DERIVED"),
            "umtc_over_base": (True, "TRIVIAL: C' = C = E"),
        },
    ),
]


@lru_cache(maxsize=None)
def builtin_catalog() -> tuple[CatalogEntry, ...]:
    data = resources.files("fuscat") / "data"
    return tuple(
        CatalogEntry(cid, (data / f"{cid}.json").read_text(encoding="utf-8"), desc, expected)
        for cid, desc, expected in _META
    )


def get_entry(cid: str) -> CatalogEntry:
    for entry in builtin_catalog():
        if entry.id == cid:
            return entry
    raise KeyError(f"no catalog entry {cid!r}; known: {', '.join(e.id for e in builtin_catalog())}")


def load(cid: str) -> CategoryFile:
    return get_entry(cid).load()


def find_by_name(name: str) -> CategoryFile:
    """First catalog category whose ``name`` field matches, base-free entries first."""
    files = [e.load() for e in builtin_catalog()]
    for cat in sorted(files, key=lambda c: c.base is not None):
        if cat.name == name:
            return cat
    raise KeyError(f"no catalog category named {name!r}")


def embedding(cid: str) -> BaseEmbedding:
    """The entry's declared embedding, or ``Vec`` -> C when it declares none."""
    cat = load(cid)
    if cat.ribbon is None:
        raise StructuralError(f"catalog entry {cid!r} has no twists")
    if cat.base is None:
        return vec_embedding(cat.ribbon)
    return resolve_embedding(cat, find_by_name(cat.base.category))
