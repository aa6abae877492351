"""Order types, CC-system closure under Knuth's axioms, and OT-graphs."""
from .closure import (AXIOMS_123, AXIOMS_45, AXIOMS_45D, Axiom, Derivation, Engine, ProofTrace, RuleSet,
                      Status, close, emit_proof, parse_proof, replay)
from .constructions import ConvexInstance, e123, hull_graph, make_convex, small_convex_graph, two_clique_graph
from .database import BatchReport, DatabaseSpec, read_database, run_batch, stats
from .errors import *  # noqa: F401,F403
from .geometry import Point, PointSet, convex_hull, orient, order_type_of, parse_points
from .graph import (AnnotatedGraph, EdgePartition, Graph, annotate, exit_edges, exit_graph, format_annotated,
                    is_minimal, is_ot_graph, parse_annotated, prune_to_minimal, seed_triples)
from .render import render_svg
from .samples import ORDER_TYPE_1874, order_type_1874
from .search import SearchConfig, SearchResult, Strategy, exhaustive_minimum, greedy_ot_graph, multi_run, random_ot_graph
from .triples import Orientation, TripleKey, TripleStore, canonicalize, rank, unrank

__version__ = "0.1.0"
