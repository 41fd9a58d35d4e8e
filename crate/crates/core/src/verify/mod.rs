//! Closed-form solution descriptors and their exact certification.
//!
//! A Kovacic case-1 candidate is `psi = P exp(int omega)`. It solves
//! `psi'' = r psi` exactly when `P'' + 2 omega P' + (omega' + omega^2 - r) P`
//! vanishes, so every certificate here is a polynomial identity over the
//! rationals (or over `Q[m, alpha]` for the symbolic checks). Roots that are
//! only known as isolating boxes are certified by an interval bound instead.

mod case1;
mod descriptor;
mod kovacic;
mod residual;

pub use case1::{boxed_residual_bound, boxed_root, build_case1_solution, default_box_width, RootPoint};
pub use descriptor::{
    e_zero_solution, formal_integral, reduction_of_order, Certificate, Family, FormalIntegral, Residual, RootLocation,
    SolutionDescriptor,
};
pub use kovacic::{kovacic_exclusions, Case2Candidate, Case2Trace, Case3Trace, KovacicReport};
pub use residual::{
    case1_omega, heun_potential_symbolic, heun_r_symbolic, measured_residual_constant, one_pole_ansatz,
    residual_constant, residual_identity, residual_laurent, riccati_rhs, sequence_ansatz, sequence_residual,
    SymbolicAnsatz,
};
