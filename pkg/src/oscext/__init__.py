"""oscext: exact rational extensions of the harmonic oscillator, built
from Maya diagrams.

The package constructs Wronskian (and pseudo-Wronskian) polynomials,
extension potentials and Hamiltonians, eigenfunctions, intertwining and
ladder operators, their orders, coefficients and syzygies - all in exact
rational arithmetic.
"""

from .algebra import (
    QQ,
    GaugedRational,
    Polynomial,
    RationalFunction,
    X,
    det_poly,
    det_ratfunc,
    poly_gcd,
    squarefree_part,
    sturm_real_roots,
    wronskian,
)
from .extension import (
    EigenState,
    RationalExtension,
    bound_states,
    eigenfunction,
    exceptional_hermite,
    is_regular,
    potential,
    potential_from_wronskian,
    rational_extension,
    schrodinger_operator,
    vanishing_part,
)
from .wronskians import (
    HermiteCache,
    conjugate_hermite,
    hermite,
    normalized_wronskian,
    pseudo_wronskian,
    seed_function,
    wronskian_polynomial,
)
from .intertwining import (
    Arrow,
    LadderResult,
    Syzygy,
    compose_arrows,
    first_order_factorization,
    intertwiner,
    intertwiner_multiset,
    ladder,
    ladder_coefficient,
    ladder_order,
    syzygy,
    verify_functor,
    verify_intertwining,
)
from .maya import (
    BlockCoordinates,
    FrobeniusSymbol,
    IntegerMultiset,
    MayaDiagram,
    from_index_set,
    multiset_decompose,
)
from .operators import LinearDifferentialOperator

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "X",
    "Arrow",
    "BlockCoordinates",
    "EigenState",
    "FrobeniusSymbol",
    "GaugedRational",
    "HermiteCache",
    "IntegerMultiset",
    "LadderResult",
    "LinearDifferentialOperator",
    "MayaDiagram",
    "Polynomial",
    "RationalExtension",
    "RationalFunction",
    "Syzygy",
    "bound_states",
    "compose_arrows",
    "conjugate_hermite",
    "det_poly",
    "det_ratfunc",
    "eigenfunction",
    "exceptional_hermite",
    "first_order_factorization",
    "from_index_set",
    "hermite",
    "intertwiner",
    "intertwiner_multiset",
    "is_regular",
    "ladder",
    "ladder_coefficient",
    "ladder_order",
    "multiset_decompose",
    "normalized_wronskian",
    "poly_gcd",
    "potential",
    "potential_from_wronskian",
    "pseudo_wronskian",
    "rational_extension",
    "schrodinger_operator",
    "seed_function",
    "squarefree_part",
    "sturm_real_roots",
    "syzygy",
    "vanishing_part",
    "verify_functor",
    "verify_intertwining",
    "wronskian",
    "wronskian_polynomial",
]
