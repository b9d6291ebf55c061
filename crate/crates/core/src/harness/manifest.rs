//! Check ids and their suites, in registry order. The registry test keeps
//! the two in step.

pub const MANIFEST: &[(&str, &str)] = &[
    ("gamma.products", "gamma_calculus"),
    ("gamma.derivative", "gamma_calculus"),
    ("gamma.multipliers", "gamma_calculus"),
    ("gamma.round_trip", "gamma_calculus"),
    ("gamma.odd_split", "gamma_calculus"),
    ("a.eulerian_insertion", "typeA"),
    ("a.published_values", "typeA"),
    ("a.step_recurrence", "typeA"),
    ("a.half_sum", "typeA"),
    ("a.palindromic_iff_odd", "typeA"),
    ("a.derivative_identity", "typeA"),
    ("a.coefficient_tables", "typeA"),
    ("a.jump4", "typeA"),
    ("a.gamma_odd", "typeA"),
    ("a.split_even", "typeA"),
    ("sgn.a_exc", "signed_sums"),
    ("sgn.b_exc", "signed_sums"),
    ("sgn.b_des_u", "signed_sums"),
    ("sgn.b_partial_zero", "signed_sums"),
    ("sgn.d_exc", "signed_sums"),
    ("sgn.d_jump", "signed_sums"),
    ("b.eulerian_insertion", "typeB"),
    ("b.exc_des", "typeB"),
    ("b.equidistribution", "typeB"),
    ("b.step_recurrence", "typeB"),
    ("b.half_sum", "typeB"),
    ("b.length_parity", "typeB"),
    ("b.gamma_even", "typeB"),
    ("b.split_odd", "typeB"),
    ("d.bridge", "typeD"),
    ("d.step_recurrence", "typeD"),
    ("d.published_values", "typeD"),
    ("d.length_parity", "typeD"),
    ("d.jump4", "typeD"),
    ("d.gamma_even", "typeD"),
    ("d.split_odd", "typeD"),
    ("der.cycle_class", "derangements"),
    ("der.two_cycles", "derangements"),
    ("der.set_partition_count", "derangements"),
    ("der.conjugacy_formula", "derangements"),
    ("der.derangements", "derangements"),
    ("der.fixed_points", "derangements"),
    ("bij.fft", "bijections"),
    ("bij.move_n_to_front", "bijections"),
    ("bij.swap_tail", "bijections"),
    ("bij.cycle_map", "bijections"),
    ("bij.order_preserving", "bijections"),
    ("q.inv", "q_refined"),
    ("q.cyc", "q_refined"),
    ("q.collapse", "q_refined"),
];
