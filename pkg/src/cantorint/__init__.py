"""cantorint: expansions in non-integer bases and dimensions of Cantor set
self-intersections.

The library computes digit expansions over {-1,0,1} (and general
consecutive-integer alphabets), decides uniqueness of expansions
lexicographically, and evaluates Hausdorff dimensions of intersections
Gamma_alpha intersect (Gamma_alpha + t) through digit frequencies, expansion
automata with certified Perron eigenvalues, and an independent box-counting
estimator.
"""

from .exactnum import (  # noqa: F401
    AlgebraicReal,
    Comparison,
    QAlphaContext,
    QAlphaElement,
    Rational,
    SeriesReal,
    compare,
    decimal_string,
    eval_poly_in_alpha,
    format_real,
    parse_real,
    refine,
)
from .words import (  # noqa: F401
    TERNARY,
    Alphabet,
    EPSeq,
    FiniteWord,
    FreqReport,
    LazySeq,
    Lex,
    format_seq,
    lex_compare,
    parse_seq,
    reflect,
    strongly_eventually_periodic,
    substitute_alphabet,
    zero_density,
    zero_density_prefix,
)
from .thuemorse import (  # noqa: F401
    alpha_kl_enclosure,
    alpha_kl_real,
    dw,
    find_smallest_sft_n,
    lambda_prefix,
    lambda_seq,
    sft_blocks,
    tau_prefix,
    w_word,
)
from .expansions import (  # noqa: F401
    BaseSystem,
    ExpansionAutomaton,
    GammaStatus,
    UniqStatus,
    admissible_delta,
    build_expansion_automaton,
    delta,
    delta_seq,
    forbidden_zero_run,
    gamma_membership,
    golden_threshold,
    greedy_expansion,
    is_unique_expansion,
    quasi_greedy_expansion,
    seq_value,
    try_ep_form,
)
from .dimension import (  # noqa: F401
    BoxCountReport,
    CountMatrix,
    DimensionValue,
    DSetDescription,
    DSetKind,
    IntersectionGraph,
    LiouvilleWitness,
    PerronInfo,
    SelfSimilarResult,
    SelfSimilarStatus,
    box_count_oracle,
    build_intersection_graph,
    d_set,
    dense_selfsimilar_targets,
    dim_from_frequency,
    freq_upper_bound_over_expansions,
    full_dimension,
    liouville_witness,
    perron_dimension,
    self_similar_check,
)

__version__ = "0.1.0"
