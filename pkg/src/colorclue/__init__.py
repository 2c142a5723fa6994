"""colorclue: graph-coloring optimality clues.

Sample legal k-colorings with a memetic solver, count what can be counted
exactly (k-colorings as partitions, independent sets), extrapolate what
cannot, and report whether the sampled colorings show a clue of optimality.
"""

__version__ = "0.1.0"

from .cdsatur import (
    CountResult,
    SearchLimits,
    brute_force_count,
    chromatic_bounds,
    count_colorings,
    dsatur_coloring,
)
from .clue import (
    ClueReport,
    Sample,
    build_sample,
    collision_probability,
    evaluate_clue,
    ub_estimate,
)
from .coloring import (
    UNCOLORED,
    CanonicalKey,
    Coloring,
    canonical_key,
    conflicts,
    partition_distance,
)
from .graph import (
    Graph,
    GraphFormatError,
    RandomGraphSpec,
    complement,
    density,
    generate_random,
    parse_dimacs,
    read_dimacs,
    write_dimacs,
)
from .head import (
    SolverConfig,
    SolverOutcome,
    gpx_crossover,
    head_solve,
    random_coloring,
    tabu_search,
)
from .iscount import (
    ISCount,
    alpha,
    bollobas_estimate,
    brute_force_is_count,
    count_independent_sets,
    pedersen_lower_bound,
)

__all__ = [
    "__version__",
    "CanonicalKey", "Coloring", "UNCOLORED",
    "CountResult", "SearchLimits", "ISCount",
    "Graph", "GraphFormatError", "RandomGraphSpec",
    "SolverConfig", "SolverOutcome",
    "Sample", "ClueReport",
    "alpha", "bollobas_estimate", "brute_force_count", "brute_force_is_count",
    "build_sample", "canonical_key", "chromatic_bounds", "collision_probability",
    "complement", "conflicts", "count_colorings", "count_independent_sets",
    "density", "dsatur_coloring", "evaluate_clue", "generate_random",
    "gpx_crossover", "head_solve", "parse_dimacs", "partition_distance",
    "pedersen_lower_bound", "random_coloring", "read_dimacs", "tabu_search",
    "ub_estimate", "write_dimacs",
]
