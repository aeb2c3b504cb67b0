"""Twisted Reidemeister torsion of 3-manifold groups and Thurston norm bounds.

Subpackages: ``algebra`` (exact fields, Laurent polynomials, matrices),
``groups`` (presentations, Fox calculus, homology, covers), ``torsion``
(determinant formulas, bounds, mod-p comparison, good primes), ``io`` (job
files, certificates, search, CLI).  ``representations`` and ``graph`` are
modules.
"""
__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    CyclotomicField,
    FieldScalar,
    LaurentPoly,
    PolyMatrix,
    PrimeField,
    Q,
    RatFn,
    cyclotomic_embed,
    det_poly_matrix,
    parse_field,
    reduce_mod_p,
    width,
)
from .graph import (  # noqa: E402
    GraphStructure,
    Vertex,
    en_norm,
    graph_torsion,
    seifert_nonvanishing,
    validate_graph,
    verify_detection,
)
from .groups import (  # noqa: E402
    Character,
    CohomClass,
    CosetTable,
    Presentation,
    enumerate_characters,
    eval_class,
    fox_derivative,
    free_reduce,
    h1_smith,
    reidemeister_schreier,
)
from .representations import (  # noqa: E402
    Representation,
    TwistedHom,
    augmentation_rep,
    char_rep,
    cyclic_character,
    direct_sum,
    induce,
    is_good,
    restrict,
    trivial_rep,
    twist,
    twist_linear,
)
from .torsion import (  # noqa: E402
    bound_report,
    find_good_prime,
    modp_compare,
    multiplicativity_check,
    torsion,
    torsion_closed,
    torsion_deficiency_one,
)
