use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Quotient of two polynomials in one variable, kept in lowest terms with a
/// monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let var = if den.is_constant() { num.var() } else { den.var() };
        if num.var() != den.var() && !num.is_constant() && !den.is_constant() {
            return Err(Error::VariableMismatch {
                left: num.var().to_string(),
                right: den.var().to_string(),
            });
        }
        if num.is_zero() {
            return Ok(Self::zero(var));
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g)?.with_var(var);
        let mut den = den.div_exact(&g)?.with_var(var);
        let lc = den.leading().expect("nonzero").recip();
        num = num.scale(&lc);
        den = den.scale(&lc);
        Ok(RationalFunction { num, den })
    }

    pub fn zero(var: Var) -> Self {
        RationalFunction { num: UniPoly::zero(var), den: UniPoly::one(var) }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        RationalFunction { num: p, den: UniPoly::one(var) }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(var, c))
    }

    /// `c / (var - pole)^order`.
    pub fn pole_term(var: Var, c: Rational, pole: &Rational, order: usize) -> Self {
        let lin = UniPoly::linear_root(var, pole);
        let den = (0..order).fold(UniPoly::one(var), |acc, _| &acc * &lin);
        Self::new(UniPoly::constant(var, c), den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.den.is_constant() {
            self.num.var()
        } else {
            self.den.var()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Polynomial value if the denominator is constant.
    pub fn as_polynomial(&self) -> Option<UniPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.num.scale(q), self.den.clone()).expect("nonzero denominator")
    }

    /// Order at infinity: `deg(den) - deg(num)`; `None` for zero.
    pub fn order_at_infinity(&self) -> Option<i64> {
        let n = self.num.deg()? as i64;
        Some(self.den.deg().unwrap_or(0) as i64 - n)
    }

    /// Polynomial part (quotient) and proper remainder numerator.
    pub fn polynomial_part(&self) -> (UniPoly, UniPoly) {
        self.num.div_rem(&self.den).expect("nonzero denominator")
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        Self::new(
            self.num.checked_mul(&o.den)?.checked_add(&o.num.checked_mul(&self.den)?)?,
            self.den.checked_mul(&o.den)?,
        )
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        Self::new(
            self.num.checked_mul(&o.den)?.checked_sub(&o.num.checked_mul(&self.den)?)?,
            self.den.checked_mul(&o.den)?,
        )
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.checked_mul(&o.den)?, self.den.checked_mul(&o.num)?)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        self.checked_add(rhs).expect("rational function addition")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self.checked_sub(rhs).expect("rational function subtraction")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        self.checked_mul(rhs).expect("rational function multiplication")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        self.checked_div(rhs).expect("rational function division")
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionRepr {
    num: UniPoly,
    den: UniPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFunctionRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RationalFunctionRepr::deserialize(d)?;
        RationalFunction::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn z(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::Z, c)
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        // (2z^2 - 2) / (4z - 4) = (z + 1) / 2
        let f = RationalFunction::new(z(&[-2, 0, 2]), z(&[-4, 4])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &UniPoly::new(Var::Z, vec![rat(1, 2), rat(1, 2)]));
        assert!(RationalFunction::new(z(&[1]), UniPoly::zero(Var::Z)).is_err());
    }

    #[test]
    fn derivative_of_simple_pole() {
        // d/dz (a / z) = -a / z^2 for a = 5/3
        let f = RationalFunction::new(UniPoly::constant(Var::Z, rat(5, 3)), z(&[0, 1])).unwrap();
        let expected = RationalFunction::new(UniPoly::constant(Var::Z, rat(-5, 3)), z(&[0, 0, 1])).unwrap();
        assert_eq!(f.derivative(), expected);
        assert!(RationalFunction::constant(Var::Z, int(4)).derivative().is_zero());
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::pole_term(Var::Z, int(1), &int(1), 1);
        let b = RationalFunction::pole_term(Var::Z, int(1), &int(-1), 1);
        // 1/(z-1) + 1/(z+1) = 2z / (z^2 - 1)
        let s = &a + &b;
        assert_eq!(s.numerator(), &z(&[0, 2]));
        assert_eq!(s.denominator(), &z(&[-1, 0, 1]));
        assert_eq!(&(&s / &a) * &a, s);
        assert_eq!(s.order_at_infinity(), Some(1));
        assert_eq!(s.eval(&int(1)), None);
    }
}
