"""Decision/witness algorithms: brute-force oracle and parameterized solvers."""

from .common import SolverConfig
from .brute import solve_brute
from .paths import solve_on_path
from .dist_clique import solve_dist_clique
from .vertex_cover import solve_vertex_cover
from .edge_clique_cover import solve_edge_clique_cover
from .vertex_clique_cover import solve_vertex_clique_cover
from .co_cluster import solve_co_cluster
from .max_leaf import StarWordProblem, solve_max_leaf_xp, solve_star_words

__all__ = [
    "SolverConfig",
    "solve_brute",
    "solve_on_path",
    "solve_dist_clique",
    "solve_vertex_cover",
    "solve_edge_clique_cover",
    "solve_vertex_clique_cover",
    "solve_co_cluster",
    "solve_max_leaf_xp",
    "solve_star_words",
    "StarWordProblem",
]
