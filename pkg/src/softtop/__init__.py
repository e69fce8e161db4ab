"""softtop: a verifiable kernel for finite soft topological spaces.

Soft sets over a fixed finite context, validated soft topologies with
interior/closure operators, the alpha/semi/pre/beta open-set hierarchy,
continuity classes of point mappings, homeomorphism groups with verified
Cayley tables, seeded counterexample search, and a CLI workbench that
replays the embedded golden corpus.
"""

from .classes import (
    ALL_CLASSES,
    CLOSED_CLASSES,
    HIERARCHY_IMPLICATIONS,
    OPEN_CLASSES,
    check_beta_closed_characterization,
    classify,
    enumerate_class,
    hierarchy_report,
    is_in_class,
)
from .core import (
    CapExceededError,
    ContextMismatchError,
    SoftContext,
    SoftPoint,
    SoftSet,
    SoftTopError,
    absolute_set,
    complement,
    difference,
    enumerate_all_soft_sets,
    intersection,
    is_subset,
    null_set,
    point_belongs,
    soft_point,
    soft_point_in,
    union,
)
from .groups import (
    GroupLawError,
    GroupTable,
    HomeoCollection,
    build_collection,
    build_group,
    classify_bijection,
    conjugation_iso,
    is_subgroup,
)
from .maps import (
    CONTINUITY_CLASSES,
    SoftMapping,
    classify_map,
    compose,
    image,
    preimage,
    thm45_variant,
)
from .search import (
    ExhaustedReport,
    SearchSpec,
    SplitMix64,
    Witness,
    find_nonclosed_pair,
    find_separating_set,
    random_space,
    search_separation,
)
from .spacefile import (
    SpaceFile,
    SpaceParseError,
    parse_space_file,
    serialize_space_file,
    space_file_for,
)
from .topology import (
    InvalidTopologyError,
    SoftSupratopology,
    SoftTopology,
    TopologyViolation,
    closure,
    discrete,
    indiscrete,
    interior,
    is_closed,
    is_open,
    validate_supratopology,
    validate_topology,
)

__version__ = "0.1.0"
