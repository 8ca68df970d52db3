"""Exact circular coloring of signed graphs."""
from .bounds import (bound_2degenerate, bound_bipartite_planar, maxmin_verify, sg_formula,
                     t2_formula)
from .circle import (Coloring, antipodal, circ_dist, reflect, rotate, transform_4eps,
                     verify_coloring)
from .constructive import color_2degenerate, extend_degree2, lift_fu, lift_fuv
from .generators import complete, cycle, f_u, f_uv, gamma_star, omega, s_of, t2_of
from .graph import (NEG, POS, Sign, SignedGraph, cycle_sign, degeneracy_order, is_bipartite,
                    is_equivalent, simplify, switch)
from .solver import SignedCircularClique, analyze_tightness, candidate_values, chi_c, is_hom_feasible

__version__ = "0.1.0"
