use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::subcase::{check_lambda, Subcase};
use crate::error::{Error, Result};
use crate::poly::{int, BiPoly, Coeff, Parity, Rational, UniPoly, Var, ZPoly};

/// `p_{d+1}, p_d, ..., p_0, p_{-1}` for one subcase, degree and sign of lambda.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySequence {
    subcase: Subcase,
    d: u32,
    lambda: i32,
    polys: Vec<BiPoly>,
}

impl PolySequence {
    pub fn generate(subcase: Subcase, d: u32, lambda: i32) -> Result<Self> {
        if d < 1 {
            return Err(Error::Domain(format!("degree must be at least 1, got {d}")));
        }
        check_lambda(lambda)?;
        let mut polys = Vec::with_capacity(d as usize + 3);
        polys.push(BiPoly::zero());
        polys.push(BiPoly::one());
        for l in (1..=d as i64 + 1).rev() {
            let (coef, mid, rhs) = subcase.coefficients(l, d, lambda);
            let n = polys.len();
            let next = &(&coef * &polys[n - 2]) + &(&mid * &polys[n - 1]);
            polys.push(next.scale(&rhs.recip()));
        }
        let seq = PolySequence { subcase, d, lambda, polys };
        for l in -1..=d as i64 {
            let p = seq.p(l);
            assert!(
                p.is_zero() || p.parity_in_first() == Some(seq.expected_parity(l)),
                "p_{l} lost its parity in m"
            );
        }
        Ok(seq)
    }

    /// Generate several sequences in parallel.
    pub fn generate_many(specs: &[(Subcase, u32, i32)]) -> Result<Vec<Self>> {
        specs.par_iter().map(|&(s, d, l)| Self::generate(s, d, l)).collect()
    }

    /// Wrap arbitrary polynomials, listed from `p_{d+1}` down to `p_{-1}`,
    /// without checking the recurrence. Used for negative controls and when
    /// reading serialized data.
    pub fn from_raw(subcase: Subcase, d: u32, lambda: i32, polys: Vec<BiPoly>) -> Result<Self> {
        check_lambda(lambda)?;
        if polys.len() != d as usize + 3 {
            return Err(Error::Domain(format!(
                "expected {} polynomials for degree {d}, got {}",
                d + 3,
                polys.len()
            )));
        }
        Ok(PolySequence { subcase, d, lambda, polys })
    }

    pub fn subcase(&self) -> Subcase {
        self.subcase
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn lambda(&self) -> i32 {
        self.lambda
    }

    fn index(&self, l: i64) -> usize {
        assert!((-1..=self.d as i64 + 1).contains(&l), "index {l} outside -1..={}", self.d + 1);
        (self.d as i64 + 1 - l) as usize
    }

    pub fn p(&self, l: i64) -> &BiPoly {
        &self.polys[self.index(l)]
    }

    pub fn p_minus_one(&self) -> &BiPoly {
        self.p(-1)
    }

    /// Polynomial whose zeros are used for counting. In subcase 1 the last
    /// relation reads `2 alpha p_1 = 2 lambda (d+1) p_{-1}`, so `p_1` is used
    /// and the factor `alpha` is carried by [`PolySequence::condition_cofactor`];
    /// elsewhere it is `p_{-1}` itself.
    pub fn condition(&self) -> &BiPoly {
        match self.subcase {
            Subcase::S1 => self.p(1),
            _ => self.p(-1),
        }
    }

    /// `c` with `p_{-1} = c * condition()`.
    pub fn condition_cofactor(&self) -> BiPoly {
        match self.subcase {
            Subcase::S1 => BiPoly::monomial(int(1) / int(self.lambda as i64 * (self.d as i64 + 1)), 0, 1),
            _ => BiPoly::one(),
        }
    }

    /// Polynomials from `p_{d+1}` down to `p_{-1}`.
    pub fn polys(&self) -> &[BiPoly] {
        &self.polys
    }

    /// `p_l(m, alpha)` with `alpha` fixed: a polynomial in `m`.
    pub fn slice_alpha(&self, l: i64, alpha: &Rational) -> UniPoly {
        self.p(l).partial_eval(Var::Alpha, alpha).expect("default variables")
    }

    /// `p_l(m, alpha)` with `m` fixed: a polynomial in `alpha`.
    pub fn slice_m(&self, l: i64, m: &Rational) -> UniPoly {
        self.p(l).partial_eval(Var::M, m).expect("default variables")
    }

    /// The sum `P(z) = sum_{l=0}^{d} p_l z^l`.
    pub fn prefactor(&self) -> ZPoly {
        ZPoly::new(Var::Z, (0..=self.d as i64).map(|l| self.p(l).clone()).collect())
    }

    pub fn parity(&self, l: i64) -> Option<Parity> {
        self.p(l).parity_in_first()
    }

    pub fn expected_parity(&self, l: i64) -> Parity {
        if (self.d as i64 - l).rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// First `l` (from the top) where the three-term relation fails, if any.
    pub fn first_broken_relation(&self) -> Option<i64> {
        if !self.p(self.d as i64 + 1).is_zero() || !self.p(self.d as i64).is_one() {
            return Some(self.d as i64 + 1);
        }
        (1..=self.d as i64 + 1).rev().find(|&l| {
            let (coef, mid, rhs) = self.subcase.coefficients(l, self.d, self.lambda);
            let lhs = &(&coef * self.p(l)) + &(&mid * self.p(l - 1));
            lhs != self.p(l - 2).scale(&rhs)
        })
    }

    /// Replace `p_l`, for building corrupted controls.
    pub fn with_replaced(&self, l: i64, p: BiPoly) -> Self {
        let mut out = self.clone();
        let i = out.index(l);
        out.polys[i] = p;
        out
    }
}

impl Serialize for PolySequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Ps<'a>(&'a PolySequence);
        impl Serialize for Ps<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.polys.len()))?;
                for l in (-1..=self.0.d as i64 + 1).rev() {
                    map.serialize_entry(&l.to_string(), self.0.p(l))?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("subcase", &self.subcase)?;
        map.serialize_entry("d", &self.d)?;
        map.serialize_entry("lambda", &self.lambda)?;
        map.serialize_entry("p", &Ps(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for PolySequence {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            subcase: Subcase,
            d: u32,
            lambda: i32,
            p: HashMap<String, BiPoly>,
        }
        let r = Repr::deserialize(de)?;
        let polys = (-1..=r.d as i64 + 1)
            .rev()
            .map(|l| {
                r.p.get(&l.to_string())
                    .cloned()
                    .ok_or_else(|| serde::de::Error::custom(format!("missing p_{l}")))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        PolySequence::from_raw(r.subcase, r.d, r.lambda, polys).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn m() -> BiPoly {
        BiPoly::m()
    }

    #[test]
    fn anchors_below_the_top() {
        for d in 3..=8u32 {
            let s = PolySequence::generate(Subcase::S1, d, -1).unwrap();
            let d_ = d as i64;
            assert_eq!(s.p(d_ - 1), &m().scale(&int(-d_)));
            // d (2(d-1) m^2 + 1 - 2 alpha - d) / 4
            let expected = BiPoly::from_terms(
                BiPoly::DEFAULT_VARS,
                [
                    ((2, 0), rat(d_ * 2 * (d_ - 1), 4)),
                    ((0, 1), rat(-2 * d_, 4)),
                    ((0, 0), rat(d_ * (1 - d_), 4)),
                ],
            );
            assert_eq!(s.p(d_ - 2), &expected);
        }
    }

    #[test]
    fn degree_two_condition() {
        let s = PolySequence::generate(Subcase::S1, 2, -1).unwrap();
        assert_eq!(s.condition(), &m().scale(&int(-2)));
        assert_eq!(s.p_minus_one(), &(&s.condition_cofactor() * s.condition()));
        assert_eq!(s.p_minus_one(), &BiPoly::monomial(rat(2, 3), 1, 1));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(PolySequence::generate(Subcase::S2, 0, 1).is_err());
        assert!(PolySequence::generate(Subcase::S2, 3, 2).is_err());
    }

    #[test]
    fn whole_line_in_subcase_two() {
        let s = PolySequence::generate(Subcase::S2, 4, 1).unwrap();
        assert!(s.slice_alpha(-1, &int(0)).is_zero());
    }

    #[test]
    fn json_round_trip_keeps_order() {
        let s = PolySequence::generate(Subcase::S3, 2, 1).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.starts_with(r#"{"subcase":3,"d":2,"lambda":1,"p":{"3":"#));
        let back: PolySequence = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.first_broken_relation(), None);
    }

    #[test]
    fn corrupted_sequence_is_detected() {
        let s = PolySequence::generate(Subcase::S4, 4, 1).unwrap();
        let bad = s.with_replaced(1, -s.p(1).clone());
        assert!(bad.first_broken_relation().is_some());
    }
}
