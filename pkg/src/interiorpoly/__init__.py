"""Interior polynomial of bipartite graphs.

Three independent routes to the same polynomial:

* lattice points of the dilated root polytope (:mod:`interiorpoly.ehrhart`),
* deletion of non-expanding vertex sets (:func:`interior_nonexpanding`),
* edge deletion along alternating cycles (:func:`interior_altcycle`),

plus the closed form for complete bipartite graphs.
"""

__version__ = "0.1.0"

from .closed_form import binom_identity_lhs, complete_recurrence_rhs, gen_binomial, interior_complete
from .ehrhart import (
    DegreePair,
    EhrhartProfile,
    ehrhart_profile,
    ehrhart_values,
    interior_via_ehrhart,
    lattice_points,
    membership,
)
from .errors import (
    ConsistencyFailure,
    InteriorError,
    InvalidEdge,
    InvalidInput,
    MethodMismatch,
    ParallelEdge,
    ParseError,
    ResourceLimit,
)
from .graph import (
    BipartiteGraph,
    Side,
    VertexSet,
    build,
    components,
    delete_edges,
    delete_vertices,
    is_nonexpanding,
    neighborhood,
    swap_sides,
)
from .matching import Matching, choose_nonexpanding, hall_violator, maximum_matching
from .polynomial import IntPolynomial, one_minus_x_pow, poly_add, poly_mul, poly_sub, series_coeffs
from .recursion import MemoTable, alternating_sum, find_alternating_half, interior_altcycle, interior_nonexpanding
