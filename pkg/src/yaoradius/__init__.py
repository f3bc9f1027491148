"""Yao graphs over disk graphs: construction, connectivity radius and lower-bound instances."""

from .counterexamples import (
    ConstructionError,
    ConstructionParams,
    VerificationReport,
    gen_y2_lower,
    gen_y3_lower,
    gen_y4_lower,
    verify_counterexample,
)
from .geometry import ConeIndex, Point, Transform, apply_transform, cone_of, d_rhombus, euclid, l_inf
from .graphs import (
    GeomGraph,
    PointSet,
    YaoParams,
    components,
    disk_graph,
    is_connected,
    is_path_graph,
    yao_directed,
    yao_undirected,
)
from .radius import InstanceConfig, RadiusResult, bound_study, connectivity_radius, random_connected_instance

__version__ = "0.1.0"
