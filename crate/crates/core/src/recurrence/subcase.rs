use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{int, rat, BiPoly, Rational};

/// The four case-1 candidates `omega = residue/z + sign * (m + lambda z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subcase {
    S1,
    S2,
    S3,
    S4,
}

/// `E^2` for a given degree; `physical` is false when `E^2 <= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Energy {
    pub e2: Rational,
    pub physical: bool,
}

/// Open interval in alpha for a fixed sign of lambda. `None` is unbounded.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaRegion {
    pub lambda: i32,
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl AlphaRegion {
    pub fn contains(&self, lambda: i32, alpha: &Rational) -> bool {
        lambda == self.lambda
            && self.lo.as_ref().map_or(true, |lo| alpha > lo)
            && self.hi.as_ref().map_or(true, |hi| alpha < hi)
    }

    /// Finite endpoints, where the count is not asserted.
    pub fn boundaries(&self) -> Vec<Rational> {
        self.lo.iter().chain(self.hi.iter()).cloned().collect()
    }
}

impl Subcase {
    pub const ALL: [Subcase; 4] = [Subcase::S1, Subcase::S2, Subcase::S3, Subcase::S4];

    pub fn index(self) -> u8 {
        match self {
            Subcase::S1 => 1,
            Subcase::S2 => 2,
            Subcase::S3 => 3,
            Subcase::S4 => 4,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Subcase::S1),
            2 => Ok(Subcase::S2),
            3 => Ok(Subcase::S3),
            4 => Ok(Subcase::S4),
            _ => Err(Error::Domain(format!("subcase must be 1..4, got {i}"))),
        }
    }

    /// Residue of omega at `z = 0`, as a polynomial in alpha.
    pub fn residue(self) -> BiPoly {
        match self {
            Subcase::S1 | Subcase::S2 => BiPoly::alpha(),
            Subcase::S3 | Subcase::S4 => BiPoly::alpha_affine(int(1), int(-1)),
        }
    }

    /// Sign in front of the polynomial part `m + lambda z`.
    pub fn polynomial_sign(self) -> i32 {
        match self {
            Subcase::S1 | Subcase::S4 => 1,
            Subcase::S2 | Subcase::S3 => -1,
        }
    }

    /// Sign of lambda used when a statement needs a single choice.
    pub fn default_lambda(self) -> i32 {
        match self {
            Subcase::S1 => -1,
            _ => 1,
        }
    }

    /// `(coef_l, mid_l, rhs_l)` of `coef_l p_l + mid_l p_{l-1} = rhs_l p_{l-2}`.
    pub fn coefficients(self, l: i64, d: u32, lambda: i32) -> (BiPoly, BiPoly, Rational) {
        let d = d as i64;
        let lam = int(lambda as i64);
        let m = BiPoly::m();
        let (coef, mid, rhs) = match self {
            Subcase::S1 => (
                BiPoly::alpha_affine(int(l * (l - 1)), int(2 * l)),
                BiPoly::monomial(int(2 * (l - 1)), 1, 0),
                int(2) * &lam * int(d - l + 2),
            ),
            Subcase::S2 => (
                BiPoly::alpha_affine(int(l * (l - 1)), int(2 * l)),
                &m * &BiPoly::alpha_affine(int(-2 * (l - 1)), int(-4)),
                int(2) * &lam * int(l - d - 2),
            ),
            Subcase::S3 => (
                BiPoly::alpha_affine(int(l * (l + 1)), int(-2 * l)),
                BiPoly::monomial(int(-2 * l), 1, 0),
                int(2) * &lam * int(l - d - 2),
            ),
            Subcase::S4 => (
                BiPoly::alpha_affine(int(l * (l + 1)), int(-2 * l)),
                &m * &BiPoly::alpha_affine(int(2 * l), int(-4)),
                int(2) * &lam * int(d - l + 2),
            ),
        };
        (coef, mid, rhs)
    }

    /// `E^2` as a polynomial in alpha.
    pub fn energy_e2(self, d: i64, lambda: i32) -> BiPoly {
        let two_lam = int(2 * lambda as i64);
        match self {
            Subcase::S1 => BiPoly::constant(-two_lam * int(d)),
            Subcase::S2 => BiPoly::alpha_affine(two_lam.clone() * int(d + 1), two_lam * int(2)),
            Subcase::S3 => BiPoly::constant(two_lam * int(d + 2)),
            Subcase::S4 => BiPoly::alpha_affine(-two_lam.clone() * int(d + 1), two_lam * int(2)),
        }
    }

    /// `E^2` at a numeric alpha (ignored by subcases 1 and 3).
    pub fn energy_from_degree(self, d: i64, lambda: i32, alpha: &Rational) -> Energy {
        let e2 = self.energy_e2(d, lambda).eval_at(&Rational::zero(), alpha);
        Energy { physical: e2.is_positive(), e2 }
    }

    /// Degree implied by an energy, or `None` if it is not a nonnegative integer.
    pub fn degree_from_energy(self, e2: &Rational, lambda: i32, alpha: &Rational) -> Option<u32> {
        let x = e2 / int(2 * lambda as i64);
        let d = match self {
            Subcase::S1 => -x,
            Subcase::S2 => x - int(2) * alpha - int(1),
            Subcase::S3 => x - int(2),
            Subcase::S4 => -x + int(2) * alpha - int(1),
        };
        if d.is_integer() && !d.is_negative() {
            d.to_integer().try_into().ok()
        } else {
            None
        }
    }

    /// Regions where every real root in `m > 0` is simple and the count is
    /// [`Subcase::positive_root_count`].
    pub fn root_count_regions(self, d: u32) -> Vec<AlphaRegion> {
        let half = rat(d as i64, 2);
        let r = |lambda, lo: Option<Rational>, hi: Option<Rational>| AlphaRegion { lambda, lo, hi };
        match self {
            Subcase::S1 => vec![r(-1, Some(int(-1)), None)],
            Subcase::S2 => vec![r(1, Some(rat(-1, 2)), None), r(-1, None, Some(-half))],
            Subcase::S3 => vec![r(1, None, Some(int(1)))],
            Subcase::S4 => vec![r(1, Some(half), None), r(-1, None, Some(rat(1, 2)))],
        }
    }

    /// The competing reading for subcase 3 (`alpha > 1`); empty elsewhere.
    pub fn alternative_regions(self) -> Vec<AlphaRegion> {
        match self {
            Subcase::S3 => vec![AlphaRegion { lambda: 1, lo: Some(int(1)), hi: None }],
            _ => Vec::new(),
        }
    }

    pub fn positive_root_count(self, d: u32) -> usize {
        let d = d as usize;
        match self {
            Subcase::S1 => d.saturating_sub(1) / 2,
            _ => d.div_ceil(2),
        }
    }
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.index())
    }
}

impl Serialize for Subcase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

impl<'de> Deserialize<'de> for Subcase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Subcase::from_index(u8::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_lambda(lambda: i32) -> Result<()> {
    if lambda == 1 || lambda == -1 {
        Ok(())
    } else {
        Err(Error::Domain(format!("lambda must be +1 or -1, got {lambda}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn energies_invert_degrees() {
        let e = Subcase::S1.energy_from_degree(4, -1, &int(0));
        assert_eq!(e, Energy { e2: int(8), physical: true });
        let e = Subcase::S1.energy_from_degree(0, -1, &int(0));
        assert!(!e.physical);
        assert_eq!(Subcase::S3.energy_from_degree(2, 1, &int(0)).e2, int(8));
        for s in Subcase::ALL {
            for lambda in [1, -1] {
                let a = rat(3, 7);
                let e = s.energy_from_degree(5, lambda, &a).e2;
                assert_eq!(s.degree_from_energy(&e, lambda, &a), Some(5));
            }
        }
    }

    #[test]
    fn counts_match_floor_and_ceiling() {
        assert_eq!(Subcase::S1.positive_root_count(7), 3);
        assert_eq!(Subcase::S1.positive_root_count(1), 0);
        assert_eq!(Subcase::S3.positive_root_count(6), 3);
        assert_eq!(Subcase::S2.positive_root_count(5), 3);
    }

    #[test]
    fn regions() {
        let r = Subcase::S2.root_count_regions(4);
        assert!(r.iter().any(|g| g.contains(-1, &rat(-5, 2))));
        assert!(!r.iter().any(|g| g.contains(-1, &int(-2))));
        assert!(Subcase::S3.root_count_regions(3)[0].contains(1, &rat(1, 2)));
    }
}
