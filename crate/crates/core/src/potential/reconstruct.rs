use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, Frac, Rational, RationalFunction, UniPoly, Var};
use crate::verify::{reduction_of_order, riccati_rhs, Family, SolutionDescriptor};

/// `V = sum 1/(z - c_k) + R1 + R2 prod (z - c_k)`.
///
/// The double poles of `V^2 + V'` cancel for residue one; the simple poles
/// cancel exactly when `R1(c_k) = -sum_{l != k} 1/(c_k - c_l)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoleConfig {
    #[serde(with = "frac_vec")]
    pub poles: Vec<Rational>,
    pub r1: UniPoly,
    pub r2: UniPoly,
}

mod frac_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly::{parse_rational, Frac, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(Frac::render).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

fn check_distinct(poles: &[Rational]) -> Result<()> {
    for (i, a) in poles.iter().enumerate() {
        if poles[..i].contains(a) {
            return Err(Error::RepeatedPole(a.to_string()));
        }
    }
    Ok(())
}

/// Solve `A x = b` over the rationals by Gaussian elimination.
fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Domain("singular interpolation system".into()))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// The unique `R1` of degree at most `N - 1` with
/// `R1(c_k) = -sum_{l != k} 1/(c_k - c_l)`.
pub fn solve_r1(poles: &[Rational]) -> Result<UniPoly> {
    if poles.is_empty() {
        return Err(Error::Domain("at least one pole is required".into()));
    }
    check_distinct(poles)?;
    let n = poles.len();
    let rows = poles
        .iter()
        .map(|c| {
            let mut pow = Rational::one();
            (0..n)
                .map(|_| {
                    let v = pow.clone();
                    pow *= c;
                    v
                })
                .collect()
        })
        .collect();
    let rhs = poles
        .iter()
        .enumerate()
        .map(|(k, ck)| {
            -poles
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, cl)| (ck - cl).recip())
                .fold(Rational::zero(), |acc, x| acc + x)
        })
        .collect();
    Ok(UniPoly::new(Var::Z, solve_linear(rows, rhs)?))
}

impl PoleConfig {
    pub fn new(poles: Vec<Rational>, r2: UniPoly) -> Result<Self> {
        let r1 = solve_r1(&poles)?;
        Ok(PoleConfig { poles, r1, r2: r2.with_var(Var::Z) })
    }

    /// `prod (z - c_k)`.
    pub fn pole_product(&self) -> UniPoly {
        self.poles
            .iter()
            .fold(UniPoly::one(Var::Z), |acc, c| &acc * &UniPoly::linear_root(Var::Z, c))
    }

    pub fn potential(&self) -> RationalFunction {
        let poles = self
            .poles
            .iter()
            .fold(RationalFunction::zero(Var::Z), |acc, c| &acc + &RationalFunction::pole_term(Var::Z, int(1), c, 1));
        let poly = &self.r1 + &(&self.r2 * &self.pole_product());
        &poles + &RationalFunction::from_poly(poly)
    }

    /// `r = V^2 + V' - E^2`.
    pub fn equation(&self, e2: &Rational) -> RationalFunction {
        riccati_rhs(&self.potential(), e2)
    }

    /// Coefficients of `(z - c)^-2` and `(z - c)^-1` in `r` at `c`.
    pub fn principal_part(&self, c: &Rational, e2: &Rational) -> Result<(Rational, Rational)> {
        let sq = UniPoly::linear_root(Var::Z, c);
        let g = &self.equation(e2) * &RationalFunction::from_poly(&sq * &sq);
        let a2 = g
            .eval(c)
            .ok_or_else(|| Error::InvalidCase(format!("r has a pole of order above two at {c}")))?;
        let a1 = g.derivative().eval(c).expect("pole order checked");
        Ok((a2, a1))
    }

    /// `r` as a polynomial, when every principal part vanishes.
    pub fn polynomial_equation(&self, e2: &Rational) -> Option<UniPoly> {
        self.equation(e2).as_polynomial()
    }
}

/// The integrable one-pole family `V = 1/z + z (r0 + r1 z)` at `E^2 = 2 r0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OnePole {
    #[serde(with = "Frac")]
    pub r0: Rational,
    #[serde(with = "Frac")]
    pub r1: Rational,
    pub potential: RationalFunction,
    #[serde(rename = "E2", with = "Frac")]
    pub e2: Rational,
    /// `E^2 > 0`; the `E = 0` edge is kept but flagged.
    pub physical: bool,
    pub psi1: SolutionDescriptor,
    pub psi2: SolutionDescriptor,
}

/// `psi1 = (r1 z + r0) exp(z^2 (3 r0 + 2 r1 z) / 6)`, certified, and
/// `psi2 = psi1 int psi1^-2`.
pub fn one_pole_integrable(r0: &Rational, r1: &Rational) -> Result<OnePole> {
    if r1.is_zero() {
        return Err(Error::InvalidCase("r1 = 0 degenerates to E = 0".into()));
    }
    let cfg = PoleConfig::new(vec![Rational::zero()], UniPoly::new(Var::Z, vec![r0.clone(), r1.clone()]))?;
    let potential = cfg.potential();
    let e2 = int(2) * r0;
    let omega = RationalFunction::from_poly(UniPoly::new(Var::Z, vec![int(0), r0.clone(), r1.clone()]));
    let p = UniPoly::new(Var::Z, vec![r0.clone(), r1.clone()]);
    let psi1 = SolutionDescriptor::exponential(Family::KovacicCase1, p, omega, cfg.equation(&e2))
        .certify(Some(e2.clone()))?;
    let psi1 = match psi1.formal_solution() {
        Some(f) => psi1.with_param("psi", f),
        None => psi1,
    };
    let psi2 = reduction_of_order(&psi1);
    Ok(OnePole {
        r0: r0.clone(),
        r1: r1.clone(),
        potential,
        physical: e2 > Rational::zero(),
        e2,
        psi1,
        psi2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn two_poles_by_hand() {
        // R1(1) = -1/2, R1(-1) = 1/2
        let r1 = solve_r1(&[int(1), int(-1)]).unwrap();
        assert_eq!(r1, UniPoly::new(Var::Z, vec![int(0), rat(-1, 2)]));
        assert!(solve_r1(&[int(0)]).unwrap().is_zero());
        assert_eq!(solve_r1(&[int(2), rat(4, 2)]), Err(Error::RepeatedPole("2".into())));
    }

    #[test]
    fn three_poles_leave_a_polynomial() {
        let cfg = PoleConfig::new(vec![int(0), int(1), int(2)], UniPoly::zero(Var::Z)).unwrap();
        for c in &cfg.poles {
            assert_eq!(cfg.principal_part(c, &int(3)).unwrap(), (int(0), int(0)));
        }
        assert!(cfg.polynomial_equation(&int(3)).is_some());
    }

    #[test]
    fn one_pole_edge_cases() {
        let op = one_pole_integrable(&int(2), &int(1)).unwrap();
        assert_eq!(op.e2, int(4));
        assert!(op.physical);
        let edge = one_pole_integrable(&int(0), &int(1)).unwrap();
        assert!(!edge.physical);
        assert!(matches!(one_pole_integrable(&int(2), &int(0)), Err(Error::InvalidCase(_))));
    }
}
