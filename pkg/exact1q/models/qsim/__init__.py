from .scalar import Field, Scalar, TOLERANCE, SQRT2, ROOT2, qsqrt2, \
    coefficients, exact_scalar, field_sqrt, sign, as_matrix, identity, \
    zeros, dagger, inner, abs2, inv_sqrt2, to_complex, expand_matrix

from .objects import Circuit, Measurement, AmplitudeTable, basis_index, \
    is_unitary

from .simulator import oracle_permutation, apply_oracle, run_circuit, \
    outcome_probability, success_probabilities, is_exact, max_error, \
    computes_with_bounded_error, amplitude_table, differing_bits, \
    lemma1_sum, phi_inner_product, phi_inner_product_closed_form, \
    random_unitary, random_circuit, initial_state

from .circuit_io import circuit_to_json, circuit_from_json, dumps_circuit, \
    save_circuit, load_circuit
