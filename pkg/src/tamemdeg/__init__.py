"""Exact tools for multidegrees of tame automorphisms of affine 3-space."""

from .automorphisms import (PolyMap, build_witness, compose, elementary, multidegree,
                            reduction_search, thm_4i_hypothesis, verify_identity)
from .bracket import BracketValue, alg_independent, bracket, partial
from .classifier import (APTriple, Status, Verdict, classify_ap, classify_triple,
                         corollary_sweep, exceptional_form)
from .degree_analysis import (ExclusionReport, PositionQuery, TypeIIIWitness, exclude_all,
                              exclude_position, feasible_qr, type_iii_possible)
from .pairs import SUQuery, check_su_inequality, star_reduced, su_lower_bound, yu_probe
from .poly import NEG_INF, ParseError, Polynomial, parse, substitute, try_divide
from .semigroup import Representation, lemma31_check, member

__version__ = "0.1.0"
