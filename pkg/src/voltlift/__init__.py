"""voltlift: spectra of lifted digraphs from voltage assignments.

Build a voltage digraph over a finite group, then compute the spectrum of
its lift either through the group's irreducible representations, through
character power sums, or by diagonalizing the explicit lift; the three
routes cross-check each other.
"""

from .groups import (
    GroupError,
    GroupTable,
    build_builtin_group,
    conjugacy_classes,
    find_isomorphism,
    make_group_table,
    parse_group_table,
)
from .reps import (
    CharacterTable,
    Irrep,
    IrrepSet,
    RepresentationError,
    builtin_irreps,
    character_table,
    load_character_table,
    load_irreps,
    validate_character_table,
    validate_column_orthogonality,
    validate_irrep_set,
)
from .voltage import (
    GroupAlgebraElement,
    GroupAlgebraMatrix,
    LiftDigraph,
    VoltageDigraph,
    VoltageError,
    algebra_matrix_power,
    algebra_mul,
    algebra_unit,
    algebra_zero,
    associated_matrix,
    build_lift,
    count_walks_lift,
    lift_adjacency_power,
    lift_to_json,
    make_voltage_digraph,
    parse_voltage_digraph,
)
from .spectra import (
    EigenDecomposition,
    LiftEigenvectors,
    MatchReport,
    PowerSums,
    SpectrumError,
    SpectrumMultiset,
    cluster_spectrum,
    default_cluster_tol,
    eig,
    format_eigenvalue,
    lift_eigenvectors,
    lift_spectrum_bruteforce,
    lift_spectrum_charsum,
    lift_spectrum_repr,
    power_sums_by_walk_enumeration,
    power_sums_from_characters,
    rho_matrix,
    roots_from_power_sums,
    spectra_equal,
    spectrum_to_json,
    spectrum_to_text,
)

__version__ = "0.1.0"
