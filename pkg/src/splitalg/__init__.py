"""Splitting algebras of monic polynomials over commutative rings."""

from .decompose import Shuffle, TensorAlgebra, crt_split, shuffle_decomposition, shuffles
from .errors import FatalInconsistency, PreconditionError, SplitAlgError, UsageError
from .galois import (
    galois_group,
    inseparable_demo,
    maximal_ideals,
    primitive_idempotents,
    residue_isomorphism,
    transitivity_check,
)
from .invariants import (
    invariant_module,
    reduce_symmetric_polynomial,
    search_exceptional,
    verify_invariants_theorem,
)
from .poly import MonicPoly, UPoly, are_mutually_prime, factor_over_finite_field, synthetic_divide
from .rings import is_regular, is_unit
from .ringspec import construct_ring
from .splitting import (
    AlgebraHom,
    Permutation,
    SplitAlgebra,
    apply_permutation,
    build_splitting_algebra,
    discriminant,
    eval_hom,
    extend_scalars,
)

__version__ = "0.1.0"
