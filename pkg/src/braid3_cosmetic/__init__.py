"""
Cosmetic-surgery obstructions for knots that close up 3-braids.

Typical use::

    >>> from braid3_cosmetic import analyze
    >>> analyze("s1 s2 s1 s2").verdict.verdict
    'NO_PCS'
"""

__version__ = "0.1.0"

from .braidcore import (ArtinLetter, BandLetter, BandWord, BraidWord, Permutation3,
                        artin_to_band, band_to_artin, closure_permutation, exponent_sum,
                        is_knot, letter_counts, parse_word, render, rotate_band)
from .laurent import LaurentMatrix2, LaurentPoly, render_poly
from .alexander import AlexanderData, a2_from_delta, alexander_poly, burau_reduced
from .kauffman import (STANDARD_GRADINGS, Diagram, GradingTable, KauffmanState,
                       build_diagram, delta_span, enumerate_states, grade_state,
                       state_sum_alexander)
from .wordopt import (MinimizationResult, RewriteBudget, best_rotation, crossing_bound,
                      free_reduce, minimize_band_length, rewrite_neighbors)
from .obstruction import (GenusBounds, ObstructionReport, Reason, Slope, Verdict,
                          hanselman_qmax, hanselman_ratio, thickness_bound_from_genus,
                          verdict)
from .pipeline import Certificate, InvalidInputError, analyze
