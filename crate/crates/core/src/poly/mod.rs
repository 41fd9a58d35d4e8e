//! Exact coefficient arithmetic.
//!
//! The working tower is fixed: rationals, polynomials in one variable over a
//! coefficient ring ([`Coeff`]), and [`BiPoly`] in two symbolic parameters.
//! A [`ZPoly`] (polynomial in `z` with `BiPoly` coefficients) is what the
//! recurrence and the symbolic residual checks operate on.

mod bipoly;
mod laguerre;
mod laurent;
mod ratfunc;
mod rational;
mod unipoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use bipoly::{BiPoly, Parity};
pub use laguerre::laguerre_assoc;
pub use laurent::Laurent;
pub use ratfunc::RationalFunction;
pub use rational::{
    floor, from_f64_exact, Frac, OptFrac, int, is_integer, parse_rational, rat, rational_sqrt, to_decimal,
    to_f64, Rational, RationalStr,
};
pub use unipoly::{Degree, Poly, UniPoly, ZPoly};

/// Symbol tag carried by polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Z,
    M,
    Alpha,
    U,
    W,
    X,
    R0,
    R1,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Z => "z",
            Var::M => "m",
            Var::Alpha => "alpha",
            Var::U => "u",
            Var::W => "w",
            Var::X => "x",
            Var::R0 => "r0",
            Var::R1 => "r1",
        };
        f.write_str(s)
    }
}

/// Coefficient ring for [`Poly`] and [`Laurent`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn scale(&self, q: &Rational) -> Self;
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Coeff for Rational {
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }

    fn from_rational(q: Rational) -> Self {
        q
    }
}
