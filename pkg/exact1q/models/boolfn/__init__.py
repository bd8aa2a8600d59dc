from .objects import TruthTable, Transform, MAX_N, ENUMERATION_MAX_N, \
    input_bits, input_index, variable_bit

from .truthtable import parse_truth_table, parse_input, format_input, \
    depends_on, dependent_set, differing_mask, restrict, negate_output, \
    variable_half, require_total, require_nonempty, check_variable, \
    xor_shift

from .npn import apply_transform, inverse_transform, npn_canonical, \
    npn_classes, enumerate_all, random_transform, random_function, \
    all_transforms, orbit
