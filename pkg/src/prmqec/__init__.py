"""Projective Reed-Muller codes, hull engineering, and the quantum
error-correcting codes obtained from them, all in exact arithmetic."""

from .codes import (
    LinearCode,
    WeightCertificate,
    euclidean_hull,
    hermitian_dual,
    hermitian_hull,
    min_weight_certificate,
    relative_hull,
    scale_coordinates,
    star_product,
    subfield_subcode,
    trace_code,
    weight_distribution,
)
from .gf import FieldSpec, field_for_order, field_make, find_rootless_monic
from .hull import (
    full_weight_dual_vector,
    hermitian_hull_dim,
    hermitian_norm_vector,
    relative_hull_dim,
    set_hermitian_hull_dim,
    set_relative_hull_dim,
)
from .prm import (
    prm_code,
    prm_dimension,
    prm_dual_code,
    prm_dual_min_distance,
    prm_min_distance,
    prm_min_weight_vector,
    rm_code,
    rm_dimension,
    rm_min_distance,
)
from .quantum import (
    CssRecord,
    HermRecord,
    construct_css_prm,
    construct_css_subfield,
    construct_hermitian_prm,
    construct_hermitian_subfield,
    css_params,
    gv_asymmetric_exists,
    gv_symmetric_exists,
    hermitian_params,
)
from .tables import KNOWN_TABLE, run_entry

__version__ = "0.1.0"
