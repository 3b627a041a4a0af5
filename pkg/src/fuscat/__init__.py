"""Skeletal fusion categories over a symmetric base: validation, Muger
centers, relative dimensions and factorization-homology ground-state
degeneracies of closed surfaces."""

from .braiding import Classification, MonodromyMatrix, centralizer, classify, is_transparent_pair, monodromy, mueger_center
from .catalog import builtin_catalog
from .category_data import (
    BaseEmbedding,
    FusionRing,
    ObjectClass,
    RibbonData,
    ValidationReport,
    dual_of,
    fuse,
    identity_embedding,
    validate_embedding,
    validate_fusion_ring,
    validate_ribbon_data,
    vec_embedding,
)
from .enriched_hom import EnrichedHomResult, internal_hom_dual_swap, internal_hom_over_base
from .fact_homology import (
    FHResult,
    SurfaceSpec,
    fh_closed_surface,
    fh_cylinder_check,
    gsd,
    handle_object,
    merge_defects,
    morita_necessary,
)
from .fp_dimension import DimensionVector, fpdim_class, fpdims, regular_algebra_dim, relative_center_dim
from .io import parse_category_file, parse_class, parse_surface_spec, serialize_category

__version__ = "0.1.0"
