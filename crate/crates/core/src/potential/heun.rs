use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, is_integer, laguerre_assoc, rat, rational_sqrt, Frac, Rational, RationalFunction, UniPoly, Var};
use crate::verify::{e_zero_solution, riccati_rhs, Family, SolutionDescriptor};

/// `V = alpha/z + m + lambda z` with `lambda = +-1`; `m` is the mass plus
/// the constant term of the potential.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeunPotential {
    #[serde(with = "Frac")]
    pub alpha: Rational,
    #[serde(with = "Frac")]
    pub m: Rational,
    pub lambda: i32,
}

impl HeunPotential {
    pub fn new(alpha: Rational, m: Rational, lambda: i32) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidCase("alpha = 0 leaves a polynomial potential".into()));
        }
        if lambda != 1 && lambda != -1 {
            return Err(Error::Domain(format!("lambda must be +1 or -1, got {lambda}")));
        }
        Ok(HeunPotential { alpha, m, lambda })
    }

    pub fn potential(&self) -> RationalFunction {
        heun_like(&self.alpha, &self.m, &int(self.lambda as i64))
    }

    /// `r = V^2 + V' - E^2`.
    pub fn equation(&self, e2: &Rational) -> RationalFunction {
        riccati_rhs(&self.potential(), e2)
    }
}

fn heun_like(alpha: &Rational, m: &Rational, lambda: &Rational) -> RationalFunction {
    let poly = RationalFunction::from_poly(UniPoly::new(Var::Z, vec![m.clone(), lambda.clone()]));
    &RationalFunction::pole_term(Var::Z, alpha.clone(), &Rational::zero(), 1) + &poly
}

/// Rescale `z -> z / sqrt|lambda|` so that `lambda` becomes its sign:
/// `m -> m / sqrt|lambda|`, `E -> E / sqrt|lambda|`, `alpha` unchanged.
///
/// Needs `|lambda|` to be a rational square; `lambda = 0` belongs to the
/// Whittaker family.
pub fn heun_normalize(alpha: &Rational, m: &Rational, lambda: &Rational, e: &Rational) -> Result<(HeunPotential, Rational)> {
    if lambda.is_zero() {
        return Err(Error::Redirect(
            "lambda = 0 is the Whittaker family; use the Whittaker construction".into(),
        ));
    }
    let s = rational_sqrt(&lambda.abs())
        .ok_or_else(|| Error::Domain(format!("|lambda| = {} is not a rational square", lambda.abs())))?;
    let sign = if lambda.is_positive() { 1 } else { -1 };
    let pot = HeunPotential::new(alpha.clone(), m / &s, sign)?;
    Ok((pot, e / &s))
}

/// `m = 0`: `z^-alpha psi = exp(-u/2) g(u)` with `u = -lambda z^2` turns the
/// equation into the Laguerre equation with `n = -E^2 / (4 lambda)` and
/// parameter `alpha - 1/2`. Liouvillian iff `n` or `n + alpha - 1/2` is an
/// integer; then one of four polynomial solutions exists and is certified.
pub fn laguerre_special_case(alpha: &Rational, lambda: &Rational, e2: &Rational) -> Result<SolutionDescriptor> {
    if lambda.is_zero() {
        return Err(Error::Redirect("lambda = 0 is the Whittaker family".into()));
    }
    let v = heun_like(alpha, &Rational::zero(), lambda);
    if e2.is_zero() {
        return e_zero_solution(&v);
    }
    let n = -e2 / (int(4) * lambda);
    let j = &n + alpha - rat(1, 2);
    let half = rat(1, 2);
    // (index, Laguerre parameter, residue of omega, sign of lambda z in omega and in the argument)
    let branch = if is_integer(&n) && !n.is_negative() {
        Some((n.clone(), alpha - &half, alpha.clone(), 1))
    } else if is_integer(&j) && !j.is_negative() {
        Some((j.clone(), &half - alpha, int(1) - alpha, 1))
    } else if is_integer(&j) {
        Some((-&j - int(1), alpha - &half, alpha.clone(), -1))
    } else if is_integer(&n) {
        Some((-&n - int(1), &half - alpha, int(1) - alpha, -1))
    } else {
        None
    };
    let base = SolutionDescriptor::recipe(Family::LaguerreFamily, branch.is_some())
        .with_param("n", &n)
        .with_param("laguerre_parameter", alpha - &half)
        .with_param("substitution", "z^(-alpha) psi = exp(-u/2) g(u), u = -lambda z^2");
    let Some((k, a, res, s)) = branch else {
        return Ok(base);
    };
    let kk: usize = k.to_integer().try_into().map_err(|_| Error::Domain(format!("Laguerre index {k} too large")))?;
    let sl = int(s) * lambda;
    // P(z) = L_k^(a)(-s lambda z^2)
    let arg = UniPoly::new(Var::Z, vec![int(0), int(0), -sl.clone()]);
    let p = laguerre_assoc(kk, &a, Var::X).with_var(Var::Z).compose(&arg);
    let omega = heun_like(&res, &Rational::zero(), &sl);
    let r = riccati_rhs(&v, e2);
    let mut desc = SolutionDescriptor::exponential(Family::LaguerreFamily, p, omega, r).certify(Some(e2.clone()))?;
    desc.special_params = base.special_params;
    let desc = desc.with_param("laguerre_index", &k).with_param("polynomial_parameter", &a);
    Ok(match desc.formal_solution() {
        Some(f) => desc.with_param("psi", f),
        None => desc,
    })
}
