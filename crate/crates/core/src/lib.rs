//! Exact integrability analysis for the one-dimensional Dirac equation with
//! rational potentials.
//!
//! The Dirac equation in scalar coupling reduces to `psi'' = (V^2 + V' - E^2) psi`.
//! This crate works entirely over the rationals:
//!
//! * [`poly`]: rationals, dense univariate polynomials, sparse bivariate
//!   polynomials in `(m, alpha)`, rational functions and Laurent polynomials.
//! * [`recurrence`]: the four Kovacic case-1 polynomial sequences for
//!   `V = alpha/z + m + lambda z`, their closed forms at `m = 0` and their
//!   rescaled limits.
//! * [`roots`]: Sturm-sequence isolation, refinement, interlacing checks and
//!   the root-count certifications built on them.
//! * [`potential`]: potential families (Heun, pole-free reconstruction,
//!   Whittaker/Laguerre) and their Liouvillian classification.
//! * [`verify`]: solution descriptors, exact residual certification and the
//!   Kovacic case 2/3 exclusions.

pub mod error;
pub mod poly;
pub mod potential;
pub mod recurrence;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{BiPoly, Degree, Laurent, Rational, RationalFunction, UniPoly, Var, ZPoly};
pub use recurrence::{PolySequence, Subcase};
