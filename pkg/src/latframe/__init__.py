"""Framing lattices of framed directed acyclic graphs.

Maximal cliques of coherent routes, their lattice, brick labels of covers,
reconstruction from brick cliques and cubical coordinates.
"""
from .bricks import (
    down_bricks,
    phi_L,
    phi_L_all,
    psi_L,
    psi_L_all,
    reconstruct,
    rowmotion,
    rowmotion_orbits,
    sigma_L,
    up_bricks,
    up_reconstruct,
)
from .coherence import (
    GRoute,
    are_coherent,
    coherence,
    enumerate_bricks,
    enumerate_left_cornered_routes,
    enumerate_routes,
    groute,
    parse_groute,
    route,
    weakly_coherent,
)
from .coords import ccl, ccr, cornering_routes, leq_by_coordinates, left_clockwise_bricks, not_leq_witness
from .errors import InvariantError, LatframeError, ParseError, RouteLimitError, ValidationError
from .graph import (
    FramedGraph,
    LeftCorner,
    RightCorner,
    caracol,
    left_corners,
    make_graph,
    oruga,
    parse_framed_graph,
    reflect_lr,
    reflect_ud,
    right_corners,
    serialize_framed_graph,
)
from .lattice import FramingLattice, build_lattice, maximal_cliques

__version__ = "0.1.0"
