use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::poly::{BiPoly, Rational, UniPoly};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn min(a: Rational, b: Rational) -> Rational {
    if a < b {
        a
    } else {
        b
    }
}

fn max(a: Rational, b: Rational) -> Rational {
    if a > b {
        a
    } else {
        b
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// `max |x|` over the interval.
    pub fn magnitude(&self) -> Rational {
        max(self.lo.abs(), self.hi.abs())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Interval::point(Rational::from_integer(1.into())), |acc, _| &acc * self)
    }

    /// Enclosure of `p` over the interval (Horner form).
    pub fn eval(&self, p: &UniPoly) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Interval::point(c.clone());
        }
        acc
    }

    /// Enclosure of a bivariate polynomial over a box.
    pub fn eval_bi(p: &BiPoly, first: &Interval, second: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for (&(i, j), c) in p.terms() {
            let t = &(&first.pow(i) * &second.pow(j)) * &Interval::point(c.clone());
            acc = &acc + &t;
        }
        acc
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().cloned().reduce(min).expect("four products");
        let hi = p.into_iter().reduce(max).expect("four products");
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat, Var};

    #[test]
    fn encloses_polynomial_range() {
        let p = UniPoly::from_ints(Var::Z, &[-2, 0, 1]);
        let x = Interval::new(rat(14, 10), rat(15, 10));
        let v = x.eval(&p);
        assert!(v.contains(&int(0)));
        assert!(v.contains(&p.eval(&rat(29, 20))));
        let y = Interval::new(int(-1), int(2));
        assert_eq!(&y * &y, Interval::new(int(-2), int(4)));
        assert_eq!((-&y).lo, int(-2));
        assert_eq!((&y - &y).width(), int(6));
    }
}
