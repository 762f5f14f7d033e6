"""Ideal triangulations with exact shapes, Pachner moves and Pachner-graph search."""

from .canon import canonical_signature, find_isomorphisms, isomorphic
from .core import (
    EdgeClass,
    Site23,
    Triangulation,
    edge_classes,
    enumerate_23_sites,
    enumerate_32_sites,
    from_gluing_table,
    orient,
    pachner_23,
    pachner_32,
    relabel,
    vertex_links,
)
from .explorer import ExplorePolicy, explore, generate_tn, verify_lemma_conditions
from .quadext import QuadExt
from .seeds import fig8, fig8_sister, load_seed
from .shapes import (
    Classification,
    ShapeAssignment,
    check_edge_consistency,
    classify,
    propagate_23,
    propagate_32,
    shape_triple,
)
from .volume import bloch_wigner, volume_series_partial, volume_total

__version__ = "0.1.0"
