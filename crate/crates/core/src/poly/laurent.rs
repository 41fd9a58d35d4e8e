use std::ops::{Add, Mul, Neg, Sub};

use super::{int, Coeff, Poly, Rational, RationalFunction, UniPoly, Var};

/// Finite Laurent polynomial `sum_k c_k var^(low + k)`.
///
/// Used for the symbolic residual checks: the Heun-family potentials and
/// their `omega` candidates only have a pole at the origin, so no gcd over
/// `Q[m, alpha]` is ever needed.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C: Coeff> {
    var: Var,
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> Laurent<C> {
    pub fn new(var: Var, low: i64, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        let low = if coeffs.is_empty() { 0 } else { low + lead as i64 };
        Laurent { var, low, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Laurent { var, low: 0, coeffs: Vec::new() }
    }

    /// `c * var^k`.
    pub fn monomial(var: Var, c: C, k: i64) -> Self {
        Self::new(var, k, vec![c])
    }

    pub fn from_poly(p: &Poly<C>) -> Self {
        Self::new(p.var(), 0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest powers present, `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.coeffs.is_empty()).then(|| (self.low, self.low + self.coeffs.len() as i64 - 1))
    }

    pub fn coeff(&self, k: i64) -> C {
        let i = k - self.low;
        if i < 0 {
            return C::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero `(power, coefficient)` pairs.
    pub fn nonzero_terms(&self) -> Vec<(i64, C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c.clone()))
            .collect()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&int(self.low + i as i64)))
            .collect();
        Self::new(self.var, self.low - 1, coeffs)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.var, self.low, self.coeffs.iter().map(|c| c.scale(q)).collect())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::new(self.var, self.low, self.coeffs.iter().map(f).collect())
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        if self.is_zero() {
            return if sign { other.clone() } else { -other.clone() };
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let coeffs = (low..high)
            .map(|k| {
                let b = other.coeff(k);
                self.coeff(k) + if sign { b } else { -b }
            })
            .collect();
        Self::new(self.var, low, coeffs)
    }
}

impl Laurent<Rational> {
    pub fn to_rational_function(&self) -> RationalFunction {
        let num = UniPoly::new(self.var, self.coeffs.clone());
        if self.low >= 0 {
            RationalFunction::from_poly(num.shift_up(self.low as usize))
        } else {
            let den = UniPoly::monomial(self.var, Rational::from_integer(1.into()), (-self.low) as usize);
            RationalFunction::new(num, den).expect("nonzero monomial denominator")
        }
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero(self.var);
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + a.clone() * b.clone();
            }
        }
        Laurent::new(self.var, self.low + rhs.low, out)
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent::new(self.var, self.low, self.coeffs.into_iter().map(|c| -c).collect())
    }
}
