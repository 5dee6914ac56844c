"""
Exact supports of Schubert polynomials, key polynomials and dual characters
of flagged Weyl modules, with pattern and configuration lower bounds.
"""

from .permcore import (Composition, Permutation, layered, macdonald_nu,
                       pattern_count, pattern_occurrences, reduced_words)
from .diagram import Diagram, RStats, gale_leq, r_stats, rothe, skyline, weight
from .poly import SparsePoly, key_polynomial, schubert
from .weylchar import ResourceCapExceeded, SupportSet, support_set, theta_D
from .witness import (algorithm1, algorithm2, algorithm3, full_witness,
                      pattern_witnesses)
from .bounds import (BoundReport, coefficient_tables, conjecture_sweep,
                     diagram_lower_bound, extremal_search, key_lower_bound,
                     schubert_lower_bound)

__version__ = "0.1.0"

__all__ = [
    "Composition", "Permutation", "layered", "macdonald_nu", "pattern_count",
    "pattern_occurrences", "reduced_words",
    "Diagram", "RStats", "gale_leq", "r_stats", "rothe", "skyline", "weight",
    "SparsePoly", "key_polynomial", "schubert",
    "ResourceCapExceeded", "SupportSet", "support_set", "theta_D",
    "algorithm1", "algorithm2", "algorithm3", "full_witness", "pattern_witnesses",
    "BoundReport", "coefficient_tables", "conjecture_sweep", "diagram_lower_bound",
    "extremal_search", "key_lower_bound", "schubert_lower_bound",
]
