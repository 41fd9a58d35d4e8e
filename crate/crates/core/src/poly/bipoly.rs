use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{int, Coeff, Rational, RationalStr, UniPoly, Var};
use crate::error::{Error, Result};

/// Parity of a polynomial in its first variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Sparse polynomial in two variables, by default `(m, alpha)`.
///
/// Keys are `(power of first, power of second)`; zero coefficients are never
/// stored. Constants are compatible with any variable pair.
#[derive(Clone, Debug)]
pub struct BiPoly {
    vars: (Var, Var),
    terms: BTreeMap<(u32, u32), Rational>,
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.vars == other.vars || self.is_constant())
    }
}

impl BiPoly {
    pub const DEFAULT_VARS: (Var, Var) = (Var::M, Var::Alpha);

    pub fn new_in(vars: (Var, Var)) -> Self {
        BiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * m^i * alpha^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        Self::monomial_in(Self::DEFAULT_VARS, c, i, j)
    }

    pub fn monomial_in(vars: (Var, Var), c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::new_in(vars);
        if !c.is_zero() {
            p.terms.insert((i, j), c);
        }
        p
    }

    /// The variable `m`.
    pub fn m() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The variable `alpha`.
    pub fn alpha() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `a + b*alpha`, handy for recurrence coefficients.
    pub fn alpha_affine(a: Rational, b: Rational) -> Self {
        Self::constant(a) + Self::monomial(b, 0, 1)
    }

    pub fn from_terms(
        vars: (Var, Var),
        terms: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Self {
        let mut p = Self::new_in(vars);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Lift a univariate polynomial into the first (`first = true`) or second slot.
    pub fn from_uni(p: &UniPoly, vars: (Var, Var), first: bool) -> Self {
        Self::from_terms(
            vars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let k = k as u32;
                (if first { (k, 0) } else { (0, k) }, c.clone())
            }),
        )
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn with_vars(mut self, vars: (Var, Var)) -> Self {
        self.vars = vars;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Degree in the first variable, `None` for zero.
    pub fn degree_first(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Degree in the second variable, `None` for zero.
    pub fn degree_second(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    fn compatible(&self, other: &Self) -> Result<(Var, Var)> {
        if self.vars == other.vars || other.is_constant() {
            Ok(self.vars)
        } else if self.is_constant() {
            Ok(other.vars)
        } else {
            Err(Error::VariableMismatch {
                left: format!("({}, {})", self.vars.0, self.vars.1),
                right: format!("({}, {})", other.vars.0, other.vars.1),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.vars = self.compatible(other)?;
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.vars = self.compatible(other)?;
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::new_in(self.compatible(other)?);
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one().with_vars(self.vars), |acc, _| &acc * self)
    }

    /// Exact value at `(first, second) = (x, y)`.
    pub fn eval_at(&self, x: &Rational, y: &Rational) -> Rational {
        let mut total = Rational::zero();
        for ((i, j), c) in &self.terms {
            total += c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize);
        }
        total
    }

    /// Substitute `var = value`; the result is univariate in the other variable.
    pub fn partial_eval(&self, var: Var, value: &Rational) -> Result<UniPoly> {
        let first = if var == self.vars.0 {
            true
        } else if var == self.vars.1 {
            false
        } else if self.is_constant() {
            // constants carry no real variables; treat the default slot
            return Ok(UniPoly::constant(var, self.constant_term()));
        } else {
            return Err(Error::VariableMismatch {
                left: var.to_string(),
                right: format!("({}, {})", self.vars.0, self.vars.1),
            });
        };
        let remaining = if first { self.vars.1 } else { self.vars.0 };
        let mut coeffs: Vec<Rational> = Vec::new();
        for ((i, j), c) in &self.terms {
            let (sub_pow, keep_pow) = if first { (*i, *j) } else { (*j, *i) };
            let k = keep_pow as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c * num_traits::pow(value.clone(), sub_pow as usize);
        }
        Ok(UniPoly::new(remaining, coeffs))
    }

    /// Coefficient of `first^k`, as a polynomial in the second variable.
    pub fn coeff_of_first(&self, k: u32) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for ((i, j), c) in &self.terms {
            if *i == k {
                let j = *j as usize;
                if coeffs.len() <= j {
                    coeffs.resize(j + 1, Rational::zero());
                }
                coeffs[j] = c.clone();
            }
        }
        UniPoly::new(self.vars.1, coeffs)
    }

    /// Coefficient of `second^k`, as a polynomial in the first variable.
    pub fn coeff_of_second(&self, k: u32) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for ((i, j), c) in &self.terms {
            if *j == k {
                let i = *i as usize;
                if coeffs.len() <= i {
                    coeffs.resize(i + 1, Rational::zero());
                }
                coeffs[i] = c.clone();
            }
        }
        UniPoly::new(self.vars.0, coeffs)
    }

    /// `Some(Even)` / `Some(Odd)` if all stored first-variable powers share a
    /// parity, `None` if mixed. The zero polynomial is both; reported as even.
    pub fn parity_in_first(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|k| k.0 % 2);
        let Some(p) = it.next() else {
            return Some(Parity::Even);
        };
        if it.all(|q| q == p) {
            Some(if p == 0 { Parity::Even } else { Parity::Odd })
        } else {
            None
        }
    }

    /// Divide by `(second - c)`, returning quotient and remainder; the
    /// remainder is a polynomial in the first variable (it is `self` at
    /// `second = c`).
    pub fn div_linear_second(&self, c: &Rational) -> (BiPoly, UniPoly) {
        let Some(top) = self.degree_second() else {
            return (self.clone(), UniPoly::zero(self.vars.0));
        };
        // synthetic division with coefficients in Q[first]
        let mut quotient = Self::new_in(self.vars);
        let mut carry = UniPoly::zero(self.vars.0);
        for j in (0..=top).rev() {
            let cur = &self.coeff_of_second(j) + &carry;
            if j == 0 {
                return (quotient, cur);
            }
            for (i, q) in cur.coeffs().iter().enumerate() {
                quotient.add_term((i as u32, j - 1), q.clone());
            }
            carry = cur.scale(c);
        }
        unreachable!()
    }

    /// Divide by `second`; errors unless it divides exactly.
    pub fn div_by_second(&self) -> Result<BiPoly> {
        let (q, r) = self.div_linear_second(&Rational::zero());
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("polynomial is not divisible by its second variable".into()))
        }
    }

    /// `sum c * (a * first)^i * second^j`: rescale the first variable.
    pub fn scale_first(&self, a: &Rational) -> Self {
        Self::from_terms(
            self.vars,
            self.terms.iter().map(|(&(i, j), c)| ((i, j), c * num_traits::pow(a.clone(), i as usize))),
        )
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        Self::new_in(Self::DEFAULT_VARS)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for BiPoly {
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::new_in(self.vars);
        }
        BiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    fn from_rational(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: Self) -> BiPoly {
        self.checked_add(&rhs).expect("BiPoly addition")
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: Self) -> BiPoly {
        self.checked_sub(&rhs).expect("BiPoly subtraction")
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: Self) -> BiPoly {
        self.checked_mul(&rhs).expect("BiPoly multiplication")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: Self) -> BiPoly {
        self.checked_add(rhs).expect("BiPoly addition")
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: Self) -> BiPoly {
        self.checked_sub(rhs).expect("BiPoly subtraction")
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: Self) -> BiPoly {
        self.checked_mul(rhs).expect("BiPoly multiplication")
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&int(-1))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                parts.push(if a.is_integer() { a.to_string() } else { format!("({a})") });
            }
            for (v, p) in [(self.vars.0, *i), (self.vars.1, *j)] {
                match p {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{p}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BiPolyRepr {
    vars: [Var; 2],
    terms: Vec<(u32, u32, [String; 2])>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiPolyRepr {
            vars: [self.vars.0, self.vars.1],
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| (i, j, RationalStr::to_pair(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BiPolyRepr::deserialize(d)?;
        let mut p = BiPoly::new_in((r.vars[0], r.vars[1]));
        for (i, j, c) in &r.terms {
            let c = RationalStr::from_pair(c).map_err(serde::de::Error::custom)?;
            p.add_term((*i, *j), c);
        }
        Ok(p)
    }
}
