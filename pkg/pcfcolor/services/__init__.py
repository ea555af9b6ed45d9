# services/__init__.py - algorithms

from .graph_core import (
    build_graph,
    to_networkx,
    degeneracy_ordering,
    components,
    is_tree,
    is_forest,
    delete_vertices,
)
from .kernel import unique_colors, is_proper, check_pcf, validate_lists
from .greedy import earliest_neighbor, greedy_pcf_color, greedy_witnesses
from .tree_solver import (
    normalize_lists,
    find_reduction,
    select_gamma_case5,
    apply_r1,
    apply_r2,
    extend_v0,
    tree_pcf_color,
    forest_pcf_color,
)
from .oracle import (
    brute_force_pcf,
    count_pcf_colorings,
    pcf_chromatic_number,
    canonical_list_assignments,
    refute_choosability,
    probe_degeneracy_bound,
)
from .instances import (
    gen_star,
    gen_flower,
    gen_c5_uniform,
    random_tree,
    random_degenerate,
    random_list_assignment,
    adversarial_tree,
)

__all__ = [
    'build_graph', 'to_networkx', 'degeneracy_ordering', 'components',
    'is_tree', 'is_forest', 'delete_vertices',
    'unique_colors', 'is_proper', 'check_pcf', 'validate_lists',
    'earliest_neighbor', 'greedy_pcf_color', 'greedy_witnesses',
    'normalize_lists', 'find_reduction', 'select_gamma_case5',
    'apply_r1', 'apply_r2', 'extend_v0', 'tree_pcf_color', 'forest_pcf_color',
    'brute_force_pcf', 'count_pcf_colorings', 'pcf_chromatic_number',
    'canonical_list_assignments', 'refute_choosability', 'probe_degeneracy_bound',
    'gen_star', 'gen_flower', 'gen_c5_uniform', 'random_tree',
    'random_degenerate', 'random_list_assignment', 'adversarial_tree',
]
