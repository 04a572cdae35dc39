"""Computations in Artin groups: retractions to parabolic subgroups,
dihedral Garside normal forms, parabolic intersections, coherence."""

from artin._core import (
    ArtinError,
    LabeledGraph,
    abelianization_classes,
    admits_ordinary_all,
    admits_retractions_fc,
    amalgam_split,
    classify_irreducible,
    coherence_fc,
    coherence_general,
    conj_generators,
    dihedral_nf,
    droms_raag,
    elementary_ribbon,
    extended_retraction,
    f2_system_search,
    intersect_rewrite,
    is_fc_type,
    is_spherical,
    oc_sets,
    parse_graph,
    print_graph,
    property_c_precondition,
    reduce_free,
    retract,
    run_command,
    triangle_234_search,
    trichotomy,
    verify_retraction,
    words_equal,
    x_perp,
)

__all__ = [
    "ArtinError",
    "LabeledGraph",
    "abelianization_classes",
    "admits_ordinary_all",
    "admits_retractions_fc",
    "amalgam_split",
    "classify_irreducible",
    "coherence_fc",
    "coherence_general",
    "conj_generators",
    "dihedral_nf",
    "droms_raag",
    "elementary_ribbon",
    "extended_retraction",
    "f2_system_search",
    "intersect_rewrite",
    "is_fc_type",
    "is_spherical",
    "oc_sets",
    "parse_graph",
    "print_graph",
    "property_c_precondition",
    "reduce_free",
    "retract",
    "run_command",
    "triangle_234_search",
    "trichotomy",
    "verify_retraction",
    "words_equal",
    "x_perp",
]

__version__ = "0.1.0"
