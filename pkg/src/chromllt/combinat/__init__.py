from .partitions import (
    Composition,
    Partition,
    as_partition,
    coarsenings,
    composition_descents,
    compositions_of,
    conjugate,
    descents_to_composition,
    dominates,
    hook,
    is_hook,
    is_partition,
    partitions_of,
    refinements,
)
from .rimhooks import is_flat, k_star, shuffle_words_Dk, special_rim_hook_count
from .tableaux import (
    SkewShape,
    Tableau,
    cocharge,
    column_tableau,
    content,
    descent_set,
    hook_length_count,
    inner_corners,
    inverse_descents,
    jdt_rectify,
    knuth_equivalent,
    kostka,
    lr_coefficient,
    row_tableau,
    rsk,
    slide,
    ssyt_enumerate,
    standardize,
    syt_enumerate,
    tableau_switch,
    word_descents,
)
