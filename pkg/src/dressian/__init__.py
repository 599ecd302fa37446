"""Exact computations with matroids, matroid polytopes and local Dressians."""

from .errors import (
    BudgetExceeded,
    DressianError,
    NotAMatroid,
    NotMatroidal,
    NotValuated,
    ParseError,
)
from .fan import (
    Cone,
    Fan,
    enumerate_fan,
    forced_equalities,
    is_indecomposable,
    parallel_projection,
    phi,
    tensor_weights,
)
from .matroid import (
    Matroid,
    connected_components,
    contract,
    delete,
    direct_sum,
    dual,
    flats,
    from_bases,
    graphic,
    is_binary,
    is_connected,
    minor,
    named,
    parallel_classes,
    uniform,
)
from .polytope import (
    FaceClass,
    OctahedronFace,
    classify_pair_face,
    exchange_graph,
    octahedra,
    polytope_dim,
)
from .subdivision import (
    Classification,
    Subdivision,
    classify_subdivision,
    is_matroidal,
    regular_subdivision,
    skeleton_labels,
)
from .tropical import (
    WeightVector,
    bergman_flag_cones,
    is_valuated,
    lineality_basis,
    lineality_dim,
    linear_space_cells,
    normalize,
    relations,
    selected_matroid,
    sign_vector,
    stiefel,
    tree_metric_weight,
    tropical_basis_size,
)

__version__ = "0.1.0"
