"""Exact rational invariants of Legendrian and transverse knots.

Rational linking, self-linking, Thurston-Bennequin and rotation numbers of
rationally null-homologous knots; the Bennequin bound; cabling and integral
resolutions of rational open books; combinatorial characteristic
foliations; and rational unknots in lens spaces.
"""
from .arith import Rational, egcd, format_rational, parse_rational, rat_reduce
from .cabling import (
    AssemblyCount,
    CableParams,
    CablingError,
    assembled_chi,
    assembly_count,
    assembly_oracle,
    cable_chi,
    cable_multiplicity,
    cable_order,
    cable_sl,
    integral_resolution,
    is_positive_cable,
    link_resolution_chi,
    link_resolution_sl,
)
from .foliation import (
    BOUNDARY,
    FoliationError,
    FoliationGraph,
    Node,
    add_canceling_pair,
    cancel_pair,
    counts,
    dump_graph,
    normalize,
    parse_graph,
)
from .invariants import (
    InvariantError,
    LegendrianRecord,
    SeifertData,
    SingularityCounts,
    TransverseRecord,
    bennequin_legendrian,
    bennequin_slack,
    legendrian_stabilize,
    lk_pushoff,
    poincare_hopf_check,
    sl_defect,
    sl_from_counts,
    transverse_pushoff,
    transverse_stabilize,
)
from .lens import DualParams, LensSpace, LensSpaceError, dual_params, ncf_evaluate, ncf_expand
from .unknots import (
    MountainPoint,
    UnknotType,
    UnsupportedError,
    classify_unknots,
    euler_classes,
    max_tb,
    mountain_range,
    sl_spectrum,
)

__version__ = "0.1.0"
