//! Potential families and their integrability data.
//!
//! * [`HeunPotential`]: `V = alpha/z + m + lambda z`, normalized to
//!   `lambda = +-1`, with the `m = 0` Laguerre reduction.
//! * [`PoleConfig`]: potentials with simple poles of residue one whose
//!   `r = V^2 + V' - E^2` stays polynomial, and the integrable one-pole family.
//! * [`WhittakerCase`]: `V = m + alpha/z + P'/P` with a Laguerre `P`, its
//!   Liouvillian levels and the table of solution bases.

mod heun;
mod reconstruct;
mod whittaker;

pub use heun::{heun_normalize, laguerre_special_case, HeunPotential};
pub use reconstruct::{one_pole_integrable, solve_r1, OnePole, PoleConfig};
pub use whittaker::{
    bessel_degenerate, build_whittaker_case, enumerate_levels, table_dispatch, whittaker_descriptor,
    whittaker_identity_defect, whittaker_liouvillian, whittaker_prefactor_symbolic, Branch, Level, LevelClass,
    Spectrum, TableCell, WhittakerCase, WhittakerClass,
};
