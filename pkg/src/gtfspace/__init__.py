"""Finite generalized topological spaces with an associating function.

The public surface re-exports the operators; the law suite lives in
:mod:`gtfspace.laws` and the command line in :mod:`gtfspace.cli`.
"""

from .eops import ENeighbourhoods, e_closure, e_interior, e_neighbourhoods, e_open_family
from .errors import DomainError, GtfError, InvalidSpaceError, MalformedInputError, ResourceError
from .fops import (
    ClosednessClass,
    OpennessClass,
    classify_closedness,
    classify_openness,
    enumerate_f_open,
    f_closure,
    f_interior,
    open_hull,
)
from .gnets import (
    FinitePoset,
    Gnet,
    antichain,
    chain,
    constant_gnet,
    converges,
    e_converges,
    e_limit_points,
    e_limits,
    eventually,
    frequently,
    is_directed,
    is_et1,
    is_ft1,
    is_sequence,
    limit_points,
    limits,
    subset_gnet,
    subset_poset,
    witness_gnet,
)
from .io import dump_space, load_gnet, load_space, space_from_dict, space_to_dict
from .sets import PointSet, Universe
from .space import (
    GeneralizedTopology,
    GtfSpace,
    ValidationReport,
    build_topology,
    closure,
    empty_flagged_points,
    example_space,
    interior,
    kernel,
    make_space,
    orphaned_points,
    preimage,
    validate_gtf,
)

__version__ = "0.1.0"
