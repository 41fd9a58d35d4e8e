use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{
    int, is_integer, laguerre_assoc, rat, rational_sqrt, BiPoly, Coeff, Frac, OptFrac, Poly, Rational, RationalFunction,
    UniPoly, Var, ZPoly,
};
use crate::verify::{riccati_rhs, Family, SolutionDescriptor};

/// `V = m + alpha/z + P'/P` with `P = L_d^(2 alpha - 1)(-2 m z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhittakerCase {
    #[serde(with = "Frac")]
    pub m: Rational,
    #[serde(with = "Frac")]
    pub alpha: Rational,
    pub d: u32,
    /// Laguerre normalization.
    pub p: UniPoly,
    /// `P / monic_factor` is monic.
    #[serde(with = "Frac")]
    pub monic_factor: Rational,
    /// `-(alpha - 1/2)`.
    #[serde(with = "Frac")]
    pub mu: Rational,
    /// `(a, b, c)` of `z P'' + 2 (alpha + m z) P' = (a z + b + c/z) P`.
    #[serde(with = "frac3")]
    pub p_equation: [Rational; 3],
    pub potential: RationalFunction,
}

mod frac3 {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly::{parse_rational, Frac, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational; 3], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(Frac::render).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 3], D::Error> {
        let v = <[String; 3]>::deserialize(d)?;
        let p = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok([p(&v[0])?, p(&v[1])?, p(&v[2])?])
    }
}

impl WhittakerCase {
    /// `V^2 + V' - E^2`, assembled from the potential.
    pub fn equation(&self, e2: &Rational) -> RationalFunction {
        riccati_rhs(&self.potential, e2)
    }

    /// `m^2 - E^2 + alpha (alpha - 1)/z^2 + 2 m (alpha + d)/z`.
    pub fn reduced_equation(&self, e2: &Rational) -> RationalFunction {
        let a = &self.alpha;
        let num = UniPoly::new(
            Var::Z,
            vec![a * (a - int(1)), int(2) * &self.m * (a + int(self.d as i64)), &self.m * &self.m - e2],
        );
        RationalFunction::new(num, UniPoly::monomial(Var::Z, int(1), 2)).expect("nonzero denominator")
    }

    pub fn is_always_liouvillian(&self) -> bool {
        self.alpha == -int(self.d as i64)
    }

    pub fn e2_is_bessel(&self, e2: &Rational) -> bool {
        e2 == &(&self.m * &self.m)
    }
}

/// `L_d^(2 alpha - 1)(-2 m z)` over `Q[m, alpha]`.
pub fn whittaker_prefactor_symbolic(d: u32) -> ZPoly {
    let a = BiPoly::alpha_affine(int(-1), int(2));
    laguerre_assoc(d as usize, &a, Var::Z).scale_argument(&BiPoly::monomial(int(-2), 1, 0))
}

/// `A^2 + A' z P - A (P + z P') - (m^2 z^2 + 2 m (alpha + d) z + alpha (alpha - 1)) P^2`
/// with `A = (m z + alpha) P + z P'`, i.e. `z^2 P^2` times the difference
/// between `V^2 + V'` and the reduced form. Zero when the identity holds.
pub fn whittaker_identity_defect(d: u32) -> ZPoly {
    let p = whittaker_prefactor_symbolic(d);
    let z = Poly::identity(Var::Z);
    let dp = p.derivative();
    let lin = Poly::new(Var::Z, vec![BiPoly::alpha(), BiPoly::m()]);
    let a = &(&lin * &p) + &(&z * &dp);
    let lhs = &(&(&a * &a) + &(&(&a.derivative() * &z) * &p)) - &(&a * &(&p + &(&z * &dp)));
    let q = Poly::new(
        Var::Z,
        vec![
            &BiPoly::alpha() * &BiPoly::alpha_affine(int(-1), int(1)),
            &BiPoly::m() * &BiPoly::alpha_affine(int(d as i64), int(1)).scale(&int(2)),
            BiPoly::monomial(int(1), 2, 0),
        ],
    );
    &lhs - &(&q * &(&p * &p))
}

/// Assemble the potential and check it reproduces the reduced equation.
pub fn build_whittaker_case(m: &Rational, alpha: &Rational, d: u32) -> Result<WhittakerCase> {
    if m.is_zero() {
        return Err(Error::Domain("m must be nonzero".into()));
    }
    if alpha == &int(1) {
        return Err(Error::Domain("the residue alpha must differ from 1".into()));
    }
    let a = int(2) * alpha - int(1);
    let p = laguerre_assoc(d as usize, &a, Var::Z).scale_argument(&(int(-2) * m));
    if p.coeff(0).is_zero() {
        return Err(Error::InvalidCase(format!("P(0) = 0 for m = {m}, alpha = {alpha}, d = {d}")));
    }
    let monic_factor = p.leading().expect("nonzero").clone();
    let pf = RationalFunction::from_poly(p.clone());
    let potential = &(&RationalFunction::from_poly(UniPoly::constant(Var::Z, m.clone()))
        + &RationalFunction::pole_term(Var::Z, alpha.clone(), &Rational::zero(), 1))
        + &(&RationalFunction::from_poly(p.derivative()) / &pf);

    // z (z P'' + 2 (alpha + m z) P') = (a z^2 + b z + c) P
    let z = UniPoly::identity(Var::Z);
    let lin = UniPoly::new(Var::Z, vec![int(2) * alpha, int(2) * m]);
    let lhs = &z * &(&(&z * &p.derivative().derivative()) + &(&lin * &p.derivative()));
    let (q, rem) = lhs.div_rem(&p)?;
    if !rem.is_zero() || q.deg().unwrap_or(0) > 2 {
        return Err(Error::InvalidCase("P does not satisfy the Laguerre equation".into()));
    }
    let case = WhittakerCase {
        m: m.clone(),
        alpha: alpha.clone(),
        d,
        p,
        monic_factor,
        mu: rat(1, 2) - alpha,
        p_equation: [q.coeff(2), q.coeff(1), q.coeff(0)],
        potential,
    };
    if case.equation(&Rational::zero()) != case.reduced_equation(&Rational::zero()) {
        return Err(Error::InvalidCase("assembled r(z) differs from the reduced form".into()));
    }
    Ok(case)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevelClass {
    /// `alpha = -d`.
    AlwaysLiouvillian,
    /// `m / sqrt(m^2 - E^2) = (l +- alpha) / (d + alpha)`.
    Level { l: i64, branch: Branch },
    NotLiouvillian,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhittakerClass {
    pub class: LevelClass,
    /// `kappa` when `sqrt(m^2 - E^2)` is rational.
    #[serde(with = "OptFrac")]
    pub kappa: Option<Rational>,
    #[serde(with = "Frac")]
    pub kappa_squared: Rational,
    #[serde(with = "Frac")]
    pub mu: Rational,
    /// `m^2 < E^2`: `u` is imaginary and numerical evaluation is out of scope.
    pub complex_argument: bool,
}

impl WhittakerClass {
    pub fn liouvillian(&self) -> bool {
        !matches!(self.class, LevelClass::NotLiouvillian)
    }
}

fn as_i64(q: &Rational) -> Option<i64> {
    is_integer(q).then(|| i64::try_from(q.to_integer()).ok()).flatten()
}

/// Liouvillian test `mu + kappa - 1/2 in Z` or `mu - kappa - 1/2 in Z` for
/// `m^2 != E^2`, with `sqrt(m^2 - E^2) > 0`.
pub fn whittaker_liouvillian(case: &WhittakerCase, e2: &Rational) -> Result<WhittakerClass> {
    if case.e2_is_bessel(e2) {
        return Err(Error::Redirect("E^2 = m^2 is the Bessel case".into()));
    }
    let m2 = &case.m * &case.m;
    let gap = &m2 - e2;
    let s = &case.alpha + int(case.d as i64);
    // x = m / sqrt(m^2 - E^2), kappa = -x (alpha + d)
    let x2 = &m2 / &gap;
    let kappa_squared = &x2 * &s * &s;
    let complex_argument = gap.is_negative();
    let x = if complex_argument {
        None
    } else {
        rational_sqrt(&x2).map(|r| if case.m.is_negative() { -r } else { r })
    };
    let kappa = x.as_ref().map(|x| -(x * &s));
    let class = if case.is_always_liouvillian() {
        LevelClass::AlwaysLiouvillian
    } else if let Some(x) = &x {
        let xs = x * &s;
        if let Some(l) = as_i64(&(&xs - &case.alpha)) {
            LevelClass::Level { l, branch: Branch::Plus }
        } else if let Some(l) = as_i64(&(&xs + &case.alpha)) {
            LevelClass::Level { l, branch: Branch::Minus }
        } else {
            LevelClass::NotLiouvillian
        }
    } else {
        LevelClass::NotLiouvillian
    };
    Ok(WhittakerClass { class, kappa, kappa_squared, mu: case.mu.clone(), complex_argument })
}

/// One Liouvillian level of the spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub l: i64,
    pub branch: Branch,
    #[serde(rename = "E2_over_m2", with = "Frac")]
    pub e2_over_m2: Rational,
    pub liouvillian: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cell: Option<TableCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    #[serde(with = "Frac")]
    pub m: Rational,
    #[serde(with = "Frac")]
    pub alpha: Rational,
    pub d: u32,
    #[serde(default)]
    pub always_liouvillian: bool,
    pub levels: Vec<Level>,
}

/// Levels `E^2/m^2 = 1 - ((d + alpha)/(l +- alpha))^2` for `l` in
/// `[l_lo, l_hi]`, both branches, `l +- alpha = 0` excluded, negative `E^2`
/// dropped. Duplicates by `E^2` keep the representative whose
/// `(l +- alpha)/(d + alpha)` has the sign of `m`.
/// For `alpha = -d` every energy is Liouvillian and no levels are listed.
pub fn enumerate_levels(case: &WhittakerCase, l_lo: i64, l_hi: i64) -> Spectrum {
    let mut spec = Spectrum {
        m: case.m.clone(),
        alpha: case.alpha.clone(),
        d: case.d,
        always_liouvillian: case.is_always_liouvillian(),
        levels: Vec::new(),
    };
    if spec.always_liouvillian || l_lo > l_hi {
        return spec;
    }
    let s = &case.alpha + int(case.d as i64);
    let candidates: Vec<Level> = (l_lo..=l_hi)
        .into_par_iter()
        .flat_map_iter(|l| {
            let s = s.clone();
            [Branch::Plus, Branch::Minus].into_iter().filter_map(move |b| {
                let den = int(l) + int(b.sign()) * &case.alpha;
                if den.is_zero() {
                    return None;
                }
                let ratio = &s / &den;
                let v = int(1) - &ratio * &ratio;
                (!v.is_negative()).then(|| Level { l, branch: b, e2_over_m2: v, liouvillian: true, cell: None })
            })
        })
        .collect();
    // (l +- alpha)/(d + alpha) is m / sqrt(m^2 - E^2), so its sign should be that of m
    let consistent = |lev: &Level| {
        let x = (int(lev.l) + int(lev.branch.sign()) * &case.alpha) / &s;
        x.is_positive() == case.m.is_positive()
    };
    for lev in candidates {
        match spec.levels.iter().position(|x| x.e2_over_m2 == lev.e2_over_m2) {
            None => spec.levels.push(lev),
            Some(i) if !consistent(&spec.levels[i]) && consistent(&lev) => spec.levels[i] = lev,
            Some(_) => {}
        }
    }
    spec.levels.sort_by_key(|x| (x.l, x.branch.sign() < 0));
    spec
}

/// Bessel case `E^2 = m^2`: `psi = sqrt(z) J_nu(w)` with `nu = 1 - 2 alpha`,
/// `w^2 = -8 m (alpha + d) z`; elementary `z^alpha, z^(1 - alpha)` for
/// `alpha = -d`.
pub fn bessel_degenerate(case: &WhittakerCase) -> Result<SolutionDescriptor> {
    let e2 = &case.m * &case.m;
    let alpha = &case.alpha;
    if case.is_always_liouvillian() {
        let omega = RationalFunction::pole_term(Var::Z, alpha.clone(), &Rational::zero(), 1);
        let desc = SolutionDescriptor::exponential(
            Family::Elementary,
            UniPoly::one(Var::Z),
            omega,
            case.reduced_equation(&e2),
        )
        .certify(Some(e2))?;
        return Ok(desc
            .with_param("exponents", format!("{}, {}", alpha, int(1) - alpha))
            .with_param("basis", format!("z^({alpha}), z^({})", int(1) - alpha)));
    }
    let nu = int(1) - int(2) * alpha;
    let two_nu = int(2) * &nu;
    let liouvillian = is_integer(&two_nu) && two_nu.to_integer().is_odd();
    let w2 = int(-8) * &case.m * (alpha + int(case.d as i64));
    Ok(SolutionDescriptor::recipe(Family::BesselFamily, liouvillian)
        .with_param("nu", &nu)
        .with_param("w^2", format!("{w2} z"))
        .with_param("basis", format!("sqrt(z) J_({nu})(w), sqrt(z) Y_({nu})(w)"))
        .with_param("energy_E2", &e2))
}

/// Whittaker basis for `m^2 != E^2`.
pub fn whittaker_descriptor(case: &WhittakerCase, e2: &Rational) -> Result<SolutionDescriptor> {
    let cls = whittaker_liouvillian(case, e2)?;
    let cell = table_dispatch(&case.alpha, case.d, &case.m, e2);
    let mut desc = SolutionDescriptor::recipe(Family::WhittakerFamily, cell.liouvillian)
        .with_param("mu", &cls.mu)
        .with_param("kappa^2", &cls.kappa_squared)
        .with_param("u", format!("2 sqrt({}) z", &case.m * &case.m - e2))
        .with_param("basis", cell.basis.join(", "))
        .with_param("energy_E2", e2);
    if let Some(k) = &cls.kappa {
        desc = desc.with_param("kappa", k);
    }
    if cls.complex_argument {
        desc = desc.with_param("complex_argument", true);
    }
    Ok(desc)
}

/// A cell of the table of solution bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    /// 1: generic alpha, 2: `2 alpha - 1/2` integer, 3: `alpha = -d`.
    pub row: u8,
    /// 1: generic E, 2: Liouvillian level, 3: `E^2 = m^2`.
    pub col: u8,
    pub basis: [String; 2],
    pub liouvillian: bool,
}

/// Select the table cell for `(alpha, d, m, E^2)`.
///
/// The level column needs `alpha != -d` (the level formula divides by
/// `d + alpha`) and `m != 0`.
pub fn table_dispatch(alpha: &Rational, d: u32, m: &Rational, e2: &Rational) -> TableCell {
    let dd = int(d as i64);
    let row = if alpha == &-dd.clone() {
        3
    } else if is_integer(&(int(2) * alpha - rat(1, 2))) {
        2
    } else {
        1
    };
    let bessel = e2 == &(m * m);
    let col = if bessel {
        3
    } else if row != 3 && !m.is_zero() && is_level(alpha, d, m, e2) {
        2
    } else {
        1
    };
    let nu = int(1) - int(2) * alpha;
    let half = alpha - rat(1, 2);
    let basis = match (row, col) {
        (3, 3) => [format!("z^({alpha})"), format!("z^({})", int(1) - alpha)],
        (3, _) => [format!("sqrt(z) J_({half})(u/(2i))"), format!("sqrt(z) Y_({half})(u/(2i))")],
        (_, 3) => [format!("sqrt(z) J_({nu})(w)"), format!("sqrt(z) Y_({nu})(w)")],
        _ => ["W_(kappa,mu)(u)".to_string(), "W_(-kappa,mu)(-u)".to_string()],
    };
    let liouvillian = matches!((row, col), (3, _) | (_, 2) | (2, 3));
    TableCell { row, col, basis, liouvillian }
}

fn is_level(alpha: &Rational, d: u32, m: &Rational, e2: &Rational) -> bool {
    let gap = m * m - e2;
    if !gap.is_positive() {
        return false;
    }
    let Some(x) = rational_sqrt(&(m * m / gap)) else {
        return false;
    };
    let x = if m.is_negative() { -x } else { x };
    let xs = x * (alpha + int(d as i64));
    is_integer(&(&xs - alpha)) || is_integer(&(&xs + alpha))
}
