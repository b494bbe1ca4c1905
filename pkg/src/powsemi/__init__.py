"""Exact composition semigroups of power series over cyclotomic fields.

Decides right amenability of finitely generated subsemigroups of
``z^2 k[[z]]`` under composition and returns checkable certificates.  All
arithmetic is exact: coefficients live in ``Q(zeta_m)`` and series carry an
explicit precision.
"""

from .cyclo import CycloNum, RootOfUnity, as_root_of_unity, crt_split, root_of_unity_order
from .decide import (Amenable, CoefficientNotRootOfUnity, Inconclusive, NonMonomialCoefficient, NotAmenable,
                     RatioNotRootOfUnity, Witness, check_condition_4, decide, simultaneity_ratio, verify_verdict)
from .errors import (CompositionUndefined, IndeterminateOrder, NotInvertible, NotInZU, ParseError, PowsemiError,
                     ResourceLimit, RootUnavailable, SemanticError)
from .explorer import enumerate_words, free_pair_evidence, reversibility_search
from .literals import parse_cyclo, parse_series, parse_series_file, render_cyclo, render_series
from .monomial import (Monomial, MonomialSemigroup, common_left_multiple, congruent, free_pair_relation,
                       indecomposables, mono_compose, phi, profile, quotient, reversibility_witness)
from .normalize import Normalizer, bottcher, branches, monomial_normalizer
from .series import Comparison, Series, comp_inverse, compose, conjugate, equals, order

__version__ = "0.1.0"
