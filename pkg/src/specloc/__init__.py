"""specloc: gap certificates, Clifford periodicity reductions, homotopy
certification, and spectral-localizer index pairings for concretely
represented operator systems."""

__version__ = "0.1.0"

from .linalg import (
    DEFAULT_POLICY,
    Inertia,
    TolerancePolicy,
    direct_sum,
    eig_hermitian,
    inertia_signature,
    kron,
    min_singular_value,
    operator_norm,
    verify_similarity,
)
from .gap import (
    GapCertificate,
    OperatorElement,
    bordered,
    delta_singular_check,
    identity_element,
    max_delta,
    operator_element,
    s_gap,
    sigma_spectrum,
)
from .clifford import (
    CliffordRep,
    clifford_rep,
    embed_low,
    graded_part,
    reduce_periodic,
    verify_doubling,
)
from .homotopy import (
    HomotopyPath,
    KClassWitness,
    PathCertificate,
    contract_invertible,
    direct_sum_class,
    distinct_by_index,
    equal_certified,
    make_witness,
    stabilize,
    verify_path,
)
from .localizer import (
    GapBoundReport,
    LocalizerReport,
    RegionDescription,
    SpectralTriple,
    build_generalized,
    build_reduced,
    commutator_norm,
    even_triple,
    gap_bound_check,
    index,
    localizer_gap,
    odd_triple,
    valid_region,
)
from .models import (
    bilateral_shift_truncation,
    circle_dirac,
    circle_unitary_truncation,
    random_gapped,
    winding_demo,
)
