use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::residual::{residual_identity, riccati_rhs};
use crate::error::{Error, Result};
use crate::poly::{int, Frac, OptFrac, Rational, RationalFunction, UniPoly};
use crate::recurrence::Subcase;
use crate::roots::rational_roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    KovacicCase1,
    LaguerreFamily,
    WhittakerFamily,
    BesselFamily,
    Elementary,
    E0Universal,
    ReductionOfOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Residual {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "bounded")]
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub residual: Residual,
    #[serde(with = "OptFrac")]
    pub bound: Option<Rational>,
    #[serde(rename = "energy_E2", with = "OptFrac")]
    pub energy_e2: Option<Rational>,
}

/// A case-1 root on the condition curve; exact coordinates have `lo == hi`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootLocation {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    #[serde(with = "Frac")]
    pub m_lo: Rational,
    #[serde(with = "Frac")]
    pub m_hi: Rational,
    #[serde(with = "Frac")]
    pub alpha_lo: Rational,
    #[serde(with = "Frac")]
    pub alpha_hi: Rational,
}

impl RootLocation {
    pub fn is_exact(&self) -> bool {
        self.m_lo == self.m_hi && self.alpha_lo == self.alpha_hi
    }
}

/// `psi = P exp(int omega)` for the exponential families, or a tagged recipe
/// (`special_params`) for the special-function families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDescriptor {
    pub family: Family,
    pub prefactor: UniPoly,
    /// `omega`; absent for special-function bases.
    pub exponent: Option<RationalFunction>,
    /// `r` of `psi'' = r psi`.
    pub equation: Option<RationalFunction>,
    pub special_params: BTreeMap<String, String>,
    pub liouvillian: bool,
    pub certificate: Option<Certificate>,
    pub root: Option<RootLocation>,
    /// The known solution behind a reduction of order.
    pub base: Option<Box<SolutionDescriptor>>,
}

impl SolutionDescriptor {
    /// Uncertified `P exp(int omega)` descriptor.
    pub fn exponential(family: Family, prefactor: UniPoly, omega: RationalFunction, r: RationalFunction) -> Self {
        SolutionDescriptor {
            family,
            prefactor,
            exponent: Some(omega),
            equation: Some(r),
            special_params: BTreeMap::new(),
            liouvillian: true,
            certificate: None,
            root: None,
            base: None,
        }
    }

    /// Descriptor that only names its functions.
    pub fn recipe(family: Family, liouvillian: bool) -> Self {
        SolutionDescriptor {
            family,
            prefactor: UniPoly::one(crate::poly::Var::Z),
            exponent: None,
            equation: None,
            special_params: BTreeMap::new(),
            liouvillian,
            certificate: None,
            root: None,
            base: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.special_params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.special_params.get(key).map(String::as_str)
    }

    /// Exact residual; `None` without an exponent and an equation.
    pub fn residual(&self) -> Option<RationalFunction> {
        Some(residual_identity(&self.prefactor, self.exponent.as_ref()?, self.equation.as_ref()?))
    }

    /// Attach a zero-residual certificate, or fail if the residual is not zero.
    pub fn certify(mut self, energy_e2: Option<Rational>) -> Result<Self> {
        let res = self
            .residual()
            .ok_or_else(|| Error::InvalidCase("descriptor has no exponent/equation to certify".into()))?;
        if !res.is_zero() {
            return Err(Error::NotARoot(format!("residual {res} does not vanish")));
        }
        self.certificate = Some(Certificate { residual: Residual::Zero, bound: None, energy_e2 });
        Ok(self)
    }

    /// `P * prod (z - c)^a * exp(Q)` when the exponent integrates to logs
    /// at rational simple poles plus a polynomial.
    pub fn formal_solution(&self) -> Option<String> {
        let fi = formal_integral(self.exponent.as_ref()?)?;
        let mut s = format!("({})", self.prefactor);
        for (c, a) in &fi.logs {
            if c.is_zero() {
                write!(s, " * z^({a})").ok()?;
            } else {
                write!(s, " * (z - {c})^({a})").ok()?;
            }
        }
        if !fi.poly.is_zero() {
            write!(s, " * exp({})", fi.poly).ok()?;
        }
        Some(s)
    }
}

/// `int omega = Q + sum a_k log(z - c_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalIntegral {
    pub poly: UniPoly,
    /// `(pole, residue)`.
    pub logs: Vec<(Rational, Rational)>,
}

/// Antiderivative of `omega` when its poles are simple and rational; the
/// log terms are what becomes `(z - c)^a` in `exp(int omega)`.
pub fn formal_integral(omega: &RationalFunction) -> Option<FormalIntegral> {
    let (q, rem) = omega.polynomial_part();
    let poly = antiderivative(&q);
    let den = omega.denominator();
    if den.is_constant() {
        return Some(FormalIntegral { poly, logs: Vec::new() });
    }
    let poles = rational_roots(den).ok()?;
    if poles.len() != den.deg()? {
        return None;
    }
    let dden = den.derivative();
    let logs = poles
        .into_iter()
        .map(|c| {
            let a = rem.eval(&c) / dden.eval(&c);
            (c, a)
        })
        .collect();
    Some(FormalIntegral { poly, logs })
}

fn antiderivative(p: &UniPoly) -> UniPoly {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(p.coeffs().iter().enumerate().map(|(k, c)| c / int(k as i64 + 1)));
    UniPoly::new(p.var(), coeffs)
}

/// For `E = 0`, `psi = exp(int V)` solves `psi'' = (V^2 + V') psi` for any
/// rational `V`.
pub fn e_zero_solution(v: &RationalFunction) -> Result<SolutionDescriptor> {
    let r = riccati_rhs(v, &Rational::zero());
    let mut desc = SolutionDescriptor::exponential(Family::E0Universal, UniPoly::one(v.var()), v.clone(), r)
        .certify(Some(Rational::zero()))?;
    if let Some(s) = desc.formal_solution() {
        desc = desc.with_param("psi", s);
    }
    Ok(desc)
}

/// Second solution `psi2 = psi1 int psi1^-2`, kept as an unevaluated
/// quadrature. The pair has Wronskian `psi1 psi2' - psi1' psi2 = 1`.
pub fn reduction_of_order(psi1: &SolutionDescriptor) -> SolutionDescriptor {
    let mut d = psi1.clone();
    d.family = Family::ReductionOfOrder;
    d.special_params.clear();
    d.certificate = None;
    d.base = Some(Box::new(psi1.clone()));
    d.with_param("psi2", "psi1 * Integral(psi1^(-2), z)").with_param("wronskian", Rational::one())
}
