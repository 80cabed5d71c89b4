"""Exact-arithmetic monomial-ideal computations: integral closures via
Newton-polyhedron lattice points, primary decomposition, associated and
embedded primes, and multigraded Betti numbers."""

from .core import (MonomialIdeal, colon_ideal, colon_mon, divides, gcd,
                   ideal_contains, ideal_sum, intersect, lcm, minimalize,
                   radical)
from .closure import (InsideCertificate, OutsideCertificate, bounding_box,
                      closure_generators, is_integrally_closed, np_membership,
                      power_witness, verify_certificate)
from .decompose import (IrreducibleComponent, associated_primes, codim,
                        embedded_primes, irreducible_decomposition,
                        is_primary, is_unmixed, minimal_primes,
                        primary_decomposition)
from .betti import (BettiTable, betti_table, is_cohen_macaulay, lcm_degrees,
                    projective_dimension, upper_koszul)
from .family import (FamilyParams, ResolutionPair, delta_set, family_ideal,
                     is_strongly_generic, reduce_to_delta,
                     resolution_matrices, thm1_check)
from .homology import SimplicialComplex, homology_ranks
from .errors import (AmbientMismatchError, BudgetError, DimensionError,
                     DomainError, ParseError)
from .ioformats import format_ideal_text, parse_ideal, parse_monomial

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
