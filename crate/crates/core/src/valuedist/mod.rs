//! Nevanlinna and Wiman–Valiron quantities for 1F1 evaluated on circles,
//! growth-order estimates and zero counts.

mod circle;
mod growth;
mod zeros;

pub use circle::{
    proximity_m, sample_circle, CircleSamples, CircleSpec, Sample, DEFAULT_SAMPLES,
    DEFAULT_ZERO_GUARD, MAX_PERTURBATIONS, PERTURBATION,
};
pub use growth::{
    central_index_slope, characteristic_t, characteristic_table, circle_log_abs, geometric_grid,
    jensen_counting, log_derivative_proximity, log_max_modulus, ls_slope, max_term_central_index,
    order_estimate, zero_counting_function, CharacteristicRow, MaxTerm,
};
pub use zeros::{
    default_x_max, find_negative_real_zeros, find_real_zeros, real_zero_count,
    zero_count_argument_principle, zero_report, RealZeroCount, ZeroReport, MAX_WINDING_SAMPLES,
};
