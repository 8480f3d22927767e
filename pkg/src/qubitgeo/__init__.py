"""Geometry of 1-3 qubit pure states.

Spinor algebra with a fixed epsilon convention, Fubini-Study distances,
the Bloch-ball dictionary, two-qubit product quadric and concurrence,
and the three-qubit contact varieties, hyperdeterminant, three-tangle
and SLOCC classifier.  A FastAPI service (qubitgeo.service) and a CLI
(qubitgeo.cli) wrap the same report layer.
"""

from .one_qubit import (
    DensityMatrix2,
    SphericalDirection,
    angles_from_spinor,
    bloch_from_spinor,
    density_eigenvalues,
    spinor_from_angles,
)
from .projective import (
    Hyperplane,
    LineInQuadricError,
    ProjectiveLine,
    fs_distance,
    fs_metric_square,
    hermitian_hyperplane,
    line_quadric_intersect,
    metric_finite_difference_check,
    transition_probability,
)
from .spinor import (
    EPSILON,
    ProjectivePoint,
    as_spinor,
    conjugate_state,
    contract,
    inner_product,
    lower_all,
    lower_index,
    normalized,
    projective_equal,
    raise_index,
    random_state,
    symmetrize,
)
from .statefile import StateFileError, doc_to_state, dumps_state, loads_state, state_to_doc
from .three_qubit import (
    AsymTriple,
    SloccClass,
    SloccResult,
    apply_slocc,
    asym_compose,
    asym_extract,
    covariant_square,
    ghz_state,
    hyperdeterminant,
    local_ranks,
    on_tangent_developable,
    on_twisted_cubic,
    osculating_plane_membership,
    quadratic_covariant,
    quartic_invariant,
    random_slocc,
    singlet_line_point,
    slocc_classify,
    sym_asym_split,
    tangent_line_membership,
    tangent_osculating_intersection,
    tangent_plane_form,
    three_tangle,
    veronese3,
    w_state,
)
from .two_qubit import (
    NotProductStateError,
    concurrence,
    measurement_outcomes,
    on_conic,
    quadric_form,
    quadric_value,
    segre_embed,
    segre_factor,
    singlet,
    triplet,
)

__version__ = "0.1.0"
