"""Symmetry and geometry of decorated biscornu.

Subpackages and modules:

* :mod:`biscornu.chart` - stitch charts and hitomezashi generation
* :mod:`biscornu.symmetry_square` - the square's symmetry group acting on charts
* :mod:`biscornu.group_d4d` - the order-16 biscornu group and its subgroups
* :mod:`biscornu.designer` - recipes, search and the bundled sampler
* :mod:`biscornu.geometry` - boundaries, seams and the relaxation solver
* :mod:`biscornu.cli` - the ``biscornu`` command
"""

from .chart import SeedPair, StitchChart, emit_chart, hitomezashi, parse_chart, random_chart
from .errors import BiscornuError, ConstructionError, IsoperimetricError, ParseError
from .group_d4d import (
    BiscornuDecoration, GroupElement, act, all_elements, classify_subgroup, element_inv, element_mul,
    element_type, emit_decoration, parse_decoration, seam_perm, stabilizer,
)
from .symmetry_square import D4Element, apply_d4, classify_square, stabilizer_square

__version__ = "0.1.0"

__all__ = [
    "SeedPair", "StitchChart", "emit_chart", "hitomezashi", "parse_chart", "random_chart",
    "BiscornuError", "ConstructionError", "IsoperimetricError", "ParseError",
    "BiscornuDecoration", "GroupElement", "act", "all_elements", "classify_subgroup", "element_inv",
    "element_mul", "element_type", "emit_decoration", "parse_decoration", "seam_perm", "stabilizer",
    "D4Element", "apply_d4", "classify_square", "stabilizer_square",
]
