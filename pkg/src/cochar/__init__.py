"""Exact computations for relatively free algebras of products of commutator T-ideals."""
from .errors import (CocharError, DegreeTooLarge, EmptyList, InsufficientTruncation,
                     NonCharacter, NonSymmetricInput)
from .freealg import (FreeElement, GradedDims, WorkLimits, berele_drensky_crosscheck,
                      drensky_factorization_check, ideal_inclusion_check, long_commutator,
                      multilinear_quotient, proper_dims, relfree_dims, relfree_hilbert,
                      tideal_graded_span)
from .partitions import BoundProfile, HookSpec, Partition, in_hook, satisfies_profile
from .series import HilbertSeries, IdealSpec, boumova_drensky_series, formanek_product_many
from .symfunc import SchurExpansion, SmCharacter, SymPoly, schur_expand, schur_poly, sm_decompose

__version__ = "0.1.0"
