"""JSON category files, class expressions and surface specs.

Category file::

    {"name": "Ising", "simples": ["1", "eps", "sigma"], "unit": "1",
     "fusion": [["sigma", "sigma", "1", 1], ...],
     "twists": {"1": [1.0, 0.0], ...},
     "base": {"category": "Vec", "embedding": {"1": "1"}}}

Omitted fusion triples are zero. ``serialize_category`` writes the canonical
form: fixed key order, fusion rows sorted by simple index, twists in simple
order, one row per line.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .category_data import BaseEmbedding, FusionRing, ObjectClass, RibbonData, fuse
from .errors import ParseError, SemanticError, StructuralError, UnsupportedConfigurationError
from .fact_homology import CLOSED, CYLINDER, SurfaceSpec

TWIST_MODULUS_TOL = 1e-6
_TOP_KEYS = ("name", "simples", "unit", "fusion", "twists", "base")


@dataclass(frozen=True)
class BaseRef:
    category: str
    embedding: Mapping[str, str]


@dataclass(frozen=True)
class CategoryFile:
    ring: FusionRing
    ribbon: RibbonData | None = None
    base: BaseRef | None = None

    @property
    def name(self):
        return self.ring.name


def _load_json(text):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _is_num(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def parse_category_file(text: str | bytes) -> CategoryFile:
    """Parse a category file.

    Raises
    ------
    ParseError
        Malformed JSON; carries line and column.
    SemanticError
        Valid JSON with a bad value; carries the field path.
    """
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise SemanticError("top level must be an object", "$")
    for key in doc:
        if key not in _TOP_KEYS:
            raise SemanticError(f"unknown field {key!r}", key)
    for key in ("name", "simples", "unit", "fusion"):
        if key not in doc:
            raise SemanticError("missing required field", key)

    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise SemanticError("name must be a nonempty string", "name")
    simples = doc["simples"]
    if not isinstance(simples, list) or not simples or not all(isinstance(s, str) for s in simples):
        raise SemanticError("simples must be a nonempty array of strings", "simples")
    for a, s in enumerate(simples):
        if simples.index(s) != a:
            raise SemanticError(f"duplicate simple {s!r}", f"simples[{a}]")
    lookup = {s: a for a, s in enumerate(simples)}
    unit = doc["unit"]
    if unit not in lookup:
        raise SemanticError(f"unit {unit!r} is not a simple", "unit")

    n = len(simples)
    tensor = np.zeros((n, n, n), dtype=np.int64)
    seen = set()
    if not isinstance(doc["fusion"], list):
        raise SemanticError("fusion must be an array", "fusion")
    for r, row in enumerate(doc["fusion"]):
        path = f"fusion[{r}]"
        if not isinstance(row, list) or len(row) != 4:
            raise SemanticError("fusion entry must be [i, j, k, multiplicity]", path)
        *labels, mult = row
        for c, lab in enumerate(labels):
            if lab not in lookup:
                raise SemanticError(f"unknown label {lab!r}", f"{path}[{c}]")
        if not _is_int(mult):
            raise SemanticError("multiplicity must be an integer", path)
        if mult < 0:
            raise SemanticError("negative multiplicity", path)
        key = tuple(lookup[lab] for lab in labels)
        if key in seen:
            raise SemanticError(f"duplicate fusion tuple {labels}", path)
        seen.add(key)
        tensor[key] = mult
    ring = FusionRing(name, tuple(simples), lookup[unit], tensor)

    ribbon = None
    if "twists" in doc:
        tw = doc["twists"]
        if not isinstance(tw, dict):
            raise SemanticError("twists must be an object", "twists")
        for lab in tw:
            if lab not in lookup:
                raise SemanticError(f"unknown label {lab!r}", f"twists.{lab}")
        values = []
        for lab in simples:
            path = f"twists.{lab}"
            if lab not in tw:
                raise SemanticError("missing twist", path)
            v = tw[lab]
            if not isinstance(v, list) or len(v) != 2 or not all(_is_num(x) for x in v):
                raise SemanticError("twist must be [re, im]", path)
            z = complex(v[0], v[1])
            if abs(abs(z) - 1) > TWIST_MODULUS_TOL:
                raise SemanticError(f"twist modulus {abs(z):.9g} is not 1", path)
            values.append(z)
        ribbon = RibbonData(ring, np.array(values))

    base = None
    if "base" in doc:
        b = doc["base"]
        if not isinstance(b, dict) or set(b) != {"category", "embedding"}:
            raise SemanticError("base must be an object with 'category' and 'embedding'", "base")
        if not isinstance(b["category"], str):
            raise SemanticError("base category must be a string", "base.category")
        emb = b["embedding"]
        if not isinstance(emb, dict) or not all(isinstance(v, str) for v in emb.values()):
            raise SemanticError("embedding must map base labels to target labels", "base.embedding")
        for src, dst in emb.items():
            if dst not in lookup:
                raise SemanticError(f"label {dst!r} not found in target ring", f"base.embedding.{src}")
        base = BaseRef(b["category"], dict(emb))
    return CategoryFile(ring, ribbon, base)


def _dump(x):
    return json.dumps(x, ensure_ascii=False)


def serialize_category(cat: CategoryFile) -> str:
    ring = cat.ring
    S = ring.simples
    lines = ["{"]
    fields = [
        f'  "name": {_dump(ring.name)}',
        f'  "simples": {_dump(list(S))}',
        f'  "unit": {_dump(ring.unit)}',
    ]
    rows = [_dump([S[i], S[j], S[k], int(ring.tensor[i, j, k])]) for i, j, k in np.argwhere(ring.tensor)]
    if rows:
        fields.append('  "fusion": [\n' + ",\n".join(f"    {r}" for r in rows) + "\n  ]")
    else:
        fields.append('  "fusion": []')
    if cat.ribbon is not None:
        tw = [f"    {_dump(s)}: {_dump([float(t.real), float(t.imag)])}" for s, t in zip(S, cat.ribbon.twists)]
        fields.append('  "twists": {\n' + ",\n".join(tw) + "\n  }")
    if cat.base is not None:
        emb = ", ".join(f"{_dump(k)}: {_dump(v)}" for k, v in cat.base.embedding.items())
        fields.append(f'  "base": {{"category": {_dump(cat.base.category)}, "embedding": {{{emb}}}}}')
    lines.append(",\n".join(fields))
    lines.append("}")
    return "\n".join(lines) + "\n"


def resolve_embedding(target: CategoryFile, base: CategoryFile) -> BaseEmbedding:
    """Embedding of ``base`` into ``target`` declared by ``target``'s base block.

    Without a base block only a one-simple base can be embedded (unit to unit).
    """
    if target.ribbon is None or base.ribbon is None:
        raise SemanticError("twists are required for braided computations", "twists")
    if target.base is None:
        if base.ring.n == 1:
            return BaseEmbedding(base.ribbon, target.ribbon, (target.ring.unit_index,))
        raise SemanticError(f"{target.name!r} declares no embedding of {base.name!r}", "base")
    if target.base.category != base.name:
        raise SemanticError(
            f"{target.name!r} is declared over {target.base.category!r}, not {base.name!r}", "base.category"
        )
    try:
        return BaseEmbedding.from_labels(base.ribbon, target.ribbon, target.base.embedding)
    except StructuralError as exc:
        raise SemanticError(str(exc), "base.embedding") from None


_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?(\S+?)$")


def parse_class(ring: FusionRing, expr) -> ObjectClass:
    """Parse a class expression.

    ``,`` separates tensor factors, ``+`` separates summands and ``k*label``
    weights a summand: ``"3*1+eps,sigma"`` is ``(3*1 + eps) (x) sigma``. A
    list of strings is the tensor product of its items; a mapping is read
    as ``{label: multiplicity}``.
    """
    if isinstance(expr, Mapping):
        for lab, k in expr.items():
            if not _is_int(k) or k < 0:
                raise SemanticError(f"multiplicity of {lab!r} must be a nonnegative integer", lab)
        try:
            return ObjectClass.from_dict(ring, expr)
        except StructuralError as exc:
            raise SemanticError(str(exc)) from None
    if isinstance(expr, (list, tuple)):
        factors = list(expr)
    elif isinstance(expr, str):
        factors = expr.split(",")
    else:
        raise SemanticError(f"cannot read a class from {expr!r}")
    if not factors:
        raise SemanticError("empty class expression")
    out = ObjectClass.unit(ring)
    for factor in factors:
        if not isinstance(factor, str):
            raise SemanticError(f"class term must be a string, got {factor!r}")
        out = fuse(out, _parse_sum(ring, factor))
    return out


def _parse_sum(ring, text):
    v = np.zeros(ring.n, dtype=np.int64)
    for term in text.split("+"):
        m = _TERM.match(term.strip())
        if not m:
            raise SemanticError(f"bad term {term.strip()!r}; expected 'k*label' or 'label'")
        k, lab = m.groups()
        k = 1 if k is None else int(k)
        if k < 1:
            raise SemanticError(f"weight in {term.strip()!r} must be a positive integer")
        if lab not in ring.simples:
            raise SemanticError(f"unknown label {lab!r} in {ring.name!r}")
        v[ring.simples.index(lab)] += k
    return ObjectClass(ring, v)


_VARIANT_NAMES = {"closed": CLOSED, CLOSED: CLOSED, "cylinder": CYLINDER, CYLINDER: CYLINDER}
_SURFACE_KEYS = {"variant", "genus", "defects", "handle", "defect_fpdim"}


def parse_surface_spec(text: str | bytes, ring: FusionRing) -> SurfaceSpec:
    """Parse a surface spec; classes are read over ``ring``.

    Only closed surfaces with point defects and a cylinder with one line
    defect are accepted; anything else raises
    :class:`UnsupportedConfigurationError`.
    """
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise SemanticError("surface spec must be an object", "$")
    extra = set(doc) - _SURFACE_KEYS
    if extra:
        raise UnsupportedConfigurationError(
            f"unsupported surface fields {sorted(extra)}: only closed surfaces with point defects "
            "and a cylinder with a single line defect can be evaluated"
        )
    variant = _VARIANT_NAMES.get(doc.get("variant", "closed"))
    if variant is None:
        raise UnsupportedConfigurationError(f"unknown surface variant {doc.get('variant')!r}; use 'closed' or 'cylinder'")

    if variant == CYLINDER:
        if doc.get("defects"):
            raise SemanticError("a cylinder with a line defect takes no point defects", "defects")
        if doc.get("genus", 0) != 0:
            raise SemanticError("a cylinder has no genus", "genus")
        fp = doc.get("defect_fpdim")
        if not _is_num(fp) or fp <= 0:
            raise SemanticError("cylinder requires a positive number", "defect_fpdim")
        return SurfaceSpec(variant=CYLINDER, defect_fpdim=float(fp))

    genus = doc.get("genus", 0)
    if not _is_int(genus):
        raise SemanticError("genus must be an integer", "genus")
    if genus < 0:
        raise SemanticError(f"genus must be nonnegative, got {genus}", "genus")
    raw = doc.get("defects", [])
    if not isinstance(raw, list):
        raise SemanticError("defects must be an array", "defects")
    defects = []
    for a, d in enumerate(raw):
        try:
            defects.append(parse_class(ring, d))
        except SemanticError as exc:
            raise SemanticError(str(exc), f"defects[{a}]") from None
    handle = None
    if doc.get("handle") is not None:
        try:
            handle = parse_class(ring, doc["handle"])
        except SemanticError as exc:
            raise SemanticError(str(exc), "handle") from None
    if doc.get("defect_fpdim") is not None:
        raise SemanticError("defect_fpdim only applies to the cylinder variant", "defect_fpdim")
    return SurfaceSpec(genus=genus, defects=tuple(defects), handle_override=handle, variant=CLOSED)
