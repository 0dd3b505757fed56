"""Polynomial-time isomorphism for permissible graphs via canonical vertex UIDs."""

from .census import (
    REFERENCE_COUNTS,
    CensusRow,
    canonical_code,
    census_row,
    enumerate_classes,
)
from .graph import (
    Graph,
    GraphFormatError,
    encode_graph6,
    format_edge_list,
    is_connected,
    is_tree,
    parse_edge_list,
    parse_graph6,
)
from .iso import (
    IsoMapping,
    IsoResult,
    Verdict,
    compare_uid,
    find_isomorphism,
    verify_mapping,
)
from .oracle import oracle_all_isomorphisms, oracle_isomorphism
from .profile import (
    NeighborProfile,
    PermissibilityVerdict,
    Reason,
    check_permissible,
    compute_dsv,
)
from .uid import (
    DisconnectedGraphError,
    Uid,
    generate_all_uids,
    generate_uid,
    uid_degree_signature,
)

__all__ = [
    "REFERENCE_COUNTS",
    "CensusRow",
    "DisconnectedGraphError",
    "Graph",
    "GraphFormatError",
    "IsoMapping",
    "IsoResult",
    "NeighborProfile",
    "PermissibilityVerdict",
    "Reason",
    "Uid",
    "Verdict",
    "canonical_code",
    "census_row",
    "check_permissible",
    "compare_uid",
    "compute_dsv",
    "encode_graph6",
    "enumerate_classes",
    "find_isomorphism",
    "format_edge_list",
    "generate_all_uids",
    "generate_uid",
    "is_connected",
    "is_tree",
    "oracle_all_isomorphisms",
    "oracle_isomorphism",
    "parse_edge_list",
    "parse_graph6",
    "uid_degree_signature",
    "verify_mapping",
]
