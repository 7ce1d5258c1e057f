"""Services package: the operations on automata, transducers, instances and machines."""

from .omega_core import (
    OmegaCore,
    lasso_equal,
    lasso_format,
    lasso_normalize,
    lasso_parse,
    nba_accepts_lasso,
    nba_is_empty,
    nba_product_intersection,
    nba_trim,
    prefix_set,
)
from .transducer_ops import (
    TransducerOps,
    apply_lasso,
    common_witness_search,
    domain_automaton,
    image_automaton,
    nonfunctionality_search,
    restrict_input_prefix,
)
from .pcp_solver import PCPSolver, concatenate_indices, search_lasso_solution, verify_solution
from .turing_search import TuringSearch, tm_recurring_search
from .reductions import (
    ReductionService,
    decode_pcp_solution,
    pcp_to_function_F,
    pcp_to_function_Fprime,
    pcp_to_transducer_pair,
    tm_to_pcpreg,
)
from .continuity import (
    ContinuityService,
    continuity_probe,
    f_discontinuity_witness,
    prefix_distance_exponent,
    xkn_test,
)
from .serializer import ManifestStore
from .hoa import HoaCodec
from .sampling import RandomSampler

__all__ = [
    'OmegaCore', 'TransducerOps', 'PCPSolver', 'TuringSearch', 'ReductionService',
    'ContinuityService', 'ManifestStore', 'HoaCodec', 'RandomSampler',
    'lasso_equal', 'lasso_format', 'lasso_normalize', 'lasso_parse',
    'nba_accepts_lasso', 'nba_is_empty', 'nba_product_intersection', 'nba_trim', 'prefix_set',
    'apply_lasso', 'common_witness_search', 'domain_automaton', 'image_automaton',
    'nonfunctionality_search', 'restrict_input_prefix',
    'concatenate_indices', 'search_lasso_solution', 'verify_solution',
    'tm_recurring_search',
    'decode_pcp_solution', 'pcp_to_function_F', 'pcp_to_function_Fprime',
    'pcp_to_transducer_pair', 'tm_to_pcpreg',
    'continuity_probe', 'f_discontinuity_witness', 'prefix_distance_exponent', 'xkn_test',
]
