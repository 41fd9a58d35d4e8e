use std::fmt::Write as _;

use rdirac::poly::{int, to_decimal, Frac, OptFrac};
use rdirac::potential::{
    bessel_degenerate, build_whittaker_case, enumerate_levels, laguerre_special_case, one_pole_integrable,
    table_dispatch, whittaker_descriptor, whittaker_liouvillian, OnePole, PoleConfig, Spectrum, TableCell,
    WhittakerClass,
};
use rdirac::recurrence::PolySequence;
use rdirac::roots::{
    check_root_count, preset, refine, scan_curve, sturm_isolate, to_csv, to_json, Interval, RootCount, ScanParams, Slice,
};
use rdirac::verify::{
    boxed_residual_bound, boxed_root, build_case1_solution, e_zero_solution, kovacic_exclusions, KovacicReport, Residual,
    RootPoint, SolutionDescriptor,
};
use rdirac::{Rational, RationalFunction, Subcase, UniPoly, Var};
use serde::{Deserialize, Serialize};

use crate::cli::{
    Case1Args, ClassifyArgs, Command, CurveArgs, EzeroArgs, Format, KovacicArgs, LaguerreArgs, Range, ReconstructArgs,
    VerifyArgs, WhittakerArgs,
};

pub const EXIT_FINDING: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) => m,
        }
    }
}

impl From<rdirac::Error> for Failure {
    fn from(e: rdirac::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

/// Rendered output plus exit code and stderr warnings.
pub struct Outcome {
    pub body: String,
    pub code: u8,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: 0, warnings: Vec::new() }
    }
}

type Res<T> = Result<T, Failure>;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Usage(format!("{cmd} has no CSV output"))
}

pub fn format_of(cmd: &Command) -> (Option<Format>, Format) {
    match cmd {
        Command::Classify(a) => (a.out.format, Format::Text),
        Command::Curve(a) => (a.out.format, Format::Csv),
        Command::Whittaker(a) => (a.out.format, Format::Text),
        Command::Reconstruct(a) => (a.out.format, Format::Text),
        Command::Verify(a) => (a.out.format, Format::Text),
        Command::Ezero(a) => (a.out.format, Format::Json),
        Command::Case1(a) => (a.out.format, Format::Json),
        Command::Laguerre(a) => (a.out.format, Format::Json),
        Command::Kovacic(a) => (a.out.format, Format::Text),
    }
}

pub fn run(cmd: &Command) -> Res<Outcome> {
    let (f, default) = format_of(cmd);
    let f = f.unwrap_or(default);
    match cmd {
        Command::Classify(a) => classify(a, f),
        Command::Curve(a) => curve(a, f),
        Command::Whittaker(a) => whittaker(a, f),
        Command::Reconstruct(a) => reconstruct(a, f),
        Command::Verify(a) => verify(a, f),
        Command::Ezero(a) => ezero(a, f),
        Command::Case1(a) => case1(a, f),
        Command::Laguerre(a) => laguerre(a, f),
        Command::Kovacic(a) => kovacic(a, f),
    }
}

/// `d.ddde-k` rendering of a rational, computed exactly.
pub fn sci(q: &Rational) -> String {
    if q == &int(0) {
        return "0".into();
    }
    let neg = q < &int(0);
    let mut x = if neg { -q.clone() } else { q.clone() };
    let mut e = 0i64;
    while x >= int(10) {
        x /= int(10);
        e += 1;
    }
    while x < int(1) {
        x *= int(10);
        e -= 1;
    }
    format!("{}{}e{e}", if neg { "-" } else { "" }, to_decimal(&x, 3))
}

/// Digits needed to resolve a box of width `eps`.
fn digits_for(eps: &Rational) -> usize {
    let mut k = 0;
    let mut p = int(1);
    while &p > eps && k < 80 {
        p /= int(10);
        k += 1;
    }
    k + 2
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MBox {
    #[serde(with = "Frac")]
    pub lo: Rational,
    #[serde(with = "Frac")]
    pub hi: Rational,
    #[serde(with = "Frac")]
    pub width: Rational,
    pub lo_decimal: String,
    pub hi_decimal: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Agree,
    Disagree,
    /// Outside the regions where a count is asserted.
    NotAsserted,
    /// The condition vanishes for every m.
    WholeLine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    #[serde(with = "Frac")]
    pub alpha: Rational,
    pub condition: String,
    #[serde(rename = "energy_E2", with = "Frac")]
    pub energy_e2: Rational,
    pub physical: bool,
    pub expected: usize,
    pub in_region: bool,
    pub on_boundary: bool,
    pub count: Option<usize>,
    pub all_simple: bool,
    pub roots: Vec<MBox>,
    pub verdict: Verdict,
}

impl ClassifyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "subcase {} d = {} lambda = {} alpha = {}", self.subcase, self.d, self.lambda, self.alpha).ok();
        writeln!(s, "condition polynomial: {}", self.condition).ok();
        match self.count {
            Some(n) => writeln!(s, "positive m-roots: {n} (expected {})", self.expected).ok(),
            None => writeln!(s, "condition vanishes for every m").ok(),
        };
        for b in &self.roots {
            writeln!(s, "  m in [{}, {}]  width {}  multiplicity {}", b.lo_decimal, b.hi_decimal, sci(&b.width), b.multiplicity)
                .ok();
        }
        writeln!(s, "E^2 = {}{}", self.energy_e2, if self.physical { "" } else { " (not physical)" }).ok();
        let v = match self.verdict {
            Verdict::Agree => "agrees with the predicted count",
            Verdict::Disagree => "DISAGREES with the predicted count",
            Verdict::NotAsserted => "no count asserted for this alpha",
            Verdict::WholeLine => "degenerate: whole line",
        };
        writeln!(s, "verdict: {v}").ok();
        s
    }
}

fn classify(a: &ClassifyArgs, f: Format) -> Res<Outcome> {
    let seq = PolySequence::generate(a.subcase, a.degree, a.lambda)?;
    let check = check_root_count(&seq, &a.alpha)?;
    let digits = digits_for(&a.eps);
    let roots = match &check.found {
        RootCount::Count { boxes, .. } => boxes
            .iter()
            .map(|b| {
                let r = refine(b, &a.eps);
                MBox {
                    lo_decimal: to_decimal(&r.lo, digits),
                    hi_decimal: to_decimal(&r.hi, digits),
                    width: r.width(),
                    lo: r.lo,
                    hi: r.hi,
                    multiplicity: r.multiplicity,
                }
            })
            .collect(),
        RootCount::WholeLine => Vec::new(),
    };
    let energy = a.subcase.energy_from_degree(a.degree as i64, a.lambda, &a.alpha);
    let whole = matches!(check.found, RootCount::WholeLine);
    let verdict = if whole {
        Verdict::WholeLine
    } else if !check.in_region {
        Verdict::NotAsserted
    } else if check.agrees() {
        Verdict::Agree
    } else {
        Verdict::Disagree
    };
    let mut warnings = Vec::new();
    if !check.in_region {
        warnings.push(format!(
            "warning: alpha = {} with lambda = {} is outside the region where subcase {} has a predicted count",
            a.alpha, a.lambda, a.subcase
        ));
    }
    let report = ClassifyReport {
        subcase: a.subcase,
        d: a.degree,
        lambda: a.lambda,
        alpha: a.alpha.clone(),
        condition: if a.subcase == Subcase::S1 { "p_1" } else { "p_-1" }.into(),
        energy_e2: energy.e2,
        physical: energy.physical,
        expected: check.expected,
        in_region: check.in_region,
        on_boundary: check.on_boundary,
        count: check.found.count(),
        all_simple: check.all_simple,
        roots,
        verdict,
    };
    let body = match f {
        Format::Text => report.text(),
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("classify")),
    };
    let code = if verdict == Verdict::Disagree { EXIT_FINDING } else { 0 };
    Ok(Outcome { body, code, warnings })
}

fn curve(a: &CurveArgs, f: Format) -> Res<Outcome> {
    let p = match &a.preset {
        Some(name) => Some(preset(name).ok_or_else(|| Failure::Usage(format!("unknown preset {name:?}")))?),
        None => None,
    };
    let need = |what: &str| Failure::Usage(format!("curve needs --{what} or --preset"));
    let subcase = a.subcase.or(p.map(|x| x.0)).ok_or_else(|| need("subcase"))?;
    let d = a.degree.or(p.map(|x| x.1)).ok_or_else(|| need("degree"))?;
    let lambda = a.lambda.or(p.map(|x| x.2)).ok_or_else(|| need("lambda"))?;
    let m = match (&a.m, p) {
        (Some(r), _) => r.clone(),
        (None, Some(_)) => Range { lo: int(-4), hi: int(4), step: Rational::new(1.into(), 25.into()) },
        (None, None) => return Err(need("m")),
    };
    let params = ScanParams {
        subcase,
        d,
        lambda,
        m_lo: m.lo,
        m_hi: m.hi,
        m_step: m.step,
        eps: a.eps.clone(),
        alpha_window: a.alpha_window.clone(),
    };
    let points = scan_curve(&params)?;
    let body = match f {
        Format::Csv | Format::Text => to_csv(&points),
        Format::Json => {
            let mut s = to_json(&points);
            s.push('\n');
            s
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyQuery {
    #[serde(rename = "E2", with = "Frac")]
    pub e2: Rational,
    pub cell: TableCell,
    pub class: Option<WhittakerClass>,
    pub descriptor: SolutionDescriptor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhittakerReport {
    pub spectrum: Spectrum,
    pub query: Option<EnergyQuery>,
}

impl WhittakerReport {
    fn text(&self) -> String {
        let sp = &self.spectrum;
        let mut s = String::new();
        writeln!(s, "m = {} alpha = {} d = {}", sp.m, sp.alpha, sp.d).ok();
        if sp.always_liouvillian {
            writeln!(s, "alpha = -d: Liouvillian for every E").ok();
        }
        for lev in &sp.levels {
            let cell = lev.cell.as_ref().map(|c| format!("  cell ({}, {})", c.row, c.col)).unwrap_or_default();
            writeln!(s, "l = {:>4} {}  E^2/m^2 = {}{}", lev.l, lev.branch.symbol(), lev.e2_over_m2, cell).ok();
        }
        if let Some(q) = &self.query {
            writeln!(
                s,
                "E^2 = {}: cell ({}, {}) {} basis {}, {}",
                q.e2,
                q.cell.row,
                q.cell.col,
                if q.cell.liouvillian { "Liouvillian" } else { "not Liouvillian" },
                q.cell.basis[0],
                q.cell.basis[1]
            )
            .ok();
        }
        s
    }

    fn csv(&self) -> String {
        let mut s = String::from("l,branch,E2_over_m2,row,col,liouvillian\n");
        for lev in &self.spectrum.levels {
            let (r, c) = lev.cell.as_ref().map_or((0, 0), |c| (c.row, c.col));
            writeln!(s, "{},{},{},{},{},{}", lev.l, lev.branch.symbol(), Frac::render(&lev.e2_over_m2), r, c, lev.liouvillian)
                .ok();
        }
        s
    }
}

fn whittaker(a: &WhittakerArgs, f: Format) -> Res<Outcome> {
    let case = build_whittaker_case(&a.m, &a.alpha, a.degree)?;
    let mut spectrum = enumerate_levels(&case, a.levels.0, a.levels.1);
    let m2 = &a.m * &a.m;
    for lev in &mut spectrum.levels {
        lev.cell = Some(table_dispatch(&a.alpha, a.degree, &a.m, &(&lev.e2_over_m2 * &m2)));
    }
    let query = match &a.e2 {
        None => None,
        Some(e2) => {
            let cell = table_dispatch(&a.alpha, a.degree, &a.m, e2);
            let (class, descriptor) = if case.e2_is_bessel(e2) {
                (None, bessel_degenerate(&case)?)
            } else {
                (Some(whittaker_liouvillian(&case, e2)?), whittaker_descriptor(&case, e2)?)
            };
            Some(EnergyQuery { e2: e2.clone(), cell, class, descriptor })
        }
    };
    let report = WhittakerReport { spectrum, query };
    Ok(Outcome::ok(match f {
        Format::Text => report.text(),
        Format::Json => json(&report),
        Format::Csv => report.csv(),
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrincipalPart {
    #[serde(with = "Frac")]
    pub pole: Rational,
    /// Coefficient of `(z - c)^-2`.
    #[serde(with = "Frac")]
    pub a2: Rational,
    /// Coefficient of `(z - c)^-1`.
    #[serde(with = "Frac")]
    pub a1: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftedOnePole {
    /// The pole; the family is written in `w = z - shift`.
    #[serde(with = "Frac")]
    pub shift: Rational,
    pub family: OnePole,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconstructReport {
    pub config: PoleConfig,
    pub potential: RationalFunction,
    #[serde(rename = "E2", with = "Frac")]
    pub e2: Rational,
    pub equation: RationalFunction,
    pub principal_parts: Vec<PrincipalPart>,
    pub polynomial: Option<UniPoly>,
    pub one_pole: Option<ShiftedOnePole>,
}

impl ReconstructReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "R1(z) = {}", self.config.r1).ok();
        writeln!(s, "V(z) = {}", self.potential).ok();
        match &self.polynomial {
            Some(p) => writeln!(s, "r(z) = {p}  (E^2 = {}, pole-free)", self.e2).ok(),
            None => writeln!(s, "r(z) = {}  (E^2 = {}, has poles)", self.equation, self.e2).ok(),
        };
        if let Some(op) = &self.one_pole {
            let f = &op.family;
            writeln!(s, "integrable: r0 = {} r1 = {} E^2 = {}", f.r0, f.r1, f.e2).ok();
            if let Some(psi) = f.psi1.param("psi") {
                let w = if op.shift == int(0) { String::new() } else { format!("  with z -> z - {}", op.shift) };
                writeln!(s, "psi1 = {psi}{w}").ok();
            }
        }
        s
    }
}

fn reconstruct(a: &ReconstructArgs, f: Format) -> Res<Outcome> {
    let r2 = UniPoly::new(Var::Z, a.r2.clone());
    let config = PoleConfig::new(a.poles.clone(), r2.clone()).map_err(|e| Failure::Data(e.to_string()))?;
    let principal_parts = config
        .poles
        .iter()
        .map(|c| {
            let (a2, a1) = config.principal_part(c, &a.e2)?;
            Ok(PrincipalPart { pole: c.clone(), a2, a1 })
        })
        .collect::<Res<Vec<_>>>()?;
    // R2 = a + b z around the pole c is (a + b c) + b (z - c)
    let one_pole = match (config.poles.as_slice(), r2.deg()) {
        ([c], Some(1)) => {
            let (a0, b) = (r2.coeff(0), r2.coeff(1));
            let r0 = &a0 + &(&b * c);
            Some(ShiftedOnePole { shift: c.clone(), family: one_pole_integrable(&r0, &b)? })
        }
        _ => None,
    };
    let report = ReconstructReport {
        potential: config.potential(),
        e2: a.e2.clone(),
        equation: config.equation(&a.e2),
        polynomial: config.polynomial_equation(&a.e2),
        principal_parts,
        one_pole,
        config,
    };
    Ok(Outcome::ok(match f {
        Format::Text => report.text(),
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("reconstruct")),
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// "0", "bounded", "nonzero" or "unchecked".
    pub residual: String,
    #[serde(with = "OptFrac")]
    pub bound: Option<Rational>,
    pub detail: String,
    pub passed: bool,
}

fn check_descriptor(desc: &SolutionDescriptor, eps: &Rational) -> Res<VerifyReport> {
    let report = |residual: &str, bound: Option<Rational>, detail: String, passed| VerifyReport {
        residual: residual.into(),
        bound,
        detail,
        passed,
    };
    let Some(res) = desc.residual() else {
        return Ok(report("unchecked", None, "descriptor has no exponent and equation".into(), false));
    };
    if res.is_zero() {
        return Ok(report("0", None, "residual: 0".into(), true));
    }
    let boxed = desc.root.as_ref().filter(|r| !r.is_exact());
    let claims_bound = desc.certificate.as_ref().is_some_and(|c| c.residual == Residual::Bounded);
    if let (Some(loc), true) = (boxed, claims_bound) {
        let seq = PolySequence::generate(loc.subcase, loc.d, loc.lambda)?;
        let m = Interval::new(loc.m_lo.clone(), loc.m_hi.clone());
        let alpha = Interval::new(loc.alpha_lo.clone(), loc.alpha_hi.clone());
        let rebuilt = build_case1_solution(&seq, &RootPoint::Boxed { m: m.clone(), alpha: alpha.clone() });
        let same = rebuilt.as_ref().is_ok_and(|r| {
            r.prefactor == desc.prefactor && r.exponent == desc.exponent && r.equation == desc.equation
        });
        if !same {
            return Ok(report("nonzero", None, "descriptor does not match its root box".into(), false));
        }
        return Ok(match boxed_residual_bound(&seq, &m, &alpha) {
            Ok(b) if &b <= eps => report("bounded", Some(b.clone()), format!("residual bounded by {}", sci(&b)), true),
            Ok(b) => report("bounded", Some(b.clone()), format!("residual bound {} exceeds eps {}", sci(&b), sci(eps)), false),
            Err(e) => report("nonzero", None, e.to_string(), false),
        });
    }
    Ok(report("nonzero", None, format!("residual: {res}"), false))
}

fn verify(a: &VerifyArgs, f: Format) -> Res<Outcome> {
    let text = std::fs::read_to_string(&a.descriptor)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", a.descriptor.display())))?;
    let desc: SolutionDescriptor = serde_json::from_str(&text)
        .map_err(|e| Failure::Data(format!("{}: not a solution descriptor: {e}", a.descriptor.display())))?;
    let report = check_descriptor(&desc, &a.eps)?;
    let body = match f {
        Format::Text => format!("{}\n", report.detail),
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("verify")),
    };
    Ok(Outcome { body, code: if report.passed { 0 } else { EXIT_FINDING }, warnings: Vec::new() })
}

fn descriptor_out(d: &SolutionDescriptor, f: Format, cmd: &str) -> Res<Outcome> {
    Ok(Outcome::ok(match f {
        Format::Json => json(d),
        Format::Text => {
            let mut s = format!("family: {:?}\nliouvillian: {}\n", d.family, d.liouvillian);
            if let Some(c) = &d.certificate {
                let r = match c.residual {
                    Residual::Zero => "0".to_string(),
                    Residual::Bounded => format!("bounded by {}", c.bound.as_ref().map(sci).unwrap_or_default()),
                };
                writeln!(s, "residual: {r}").ok();
            }
            for (k, v) in &d.special_params {
                writeln!(s, "{k}: {v}").ok();
            }
            s
        }
        Format::Csv => return Err(no_csv(cmd)),
    }))
}

fn ezero(a: &EzeroArgs, f: Format) -> Res<Outcome> {
    let v = &RationalFunction::pole_term(Var::Z, a.alpha.clone(), &int(0), 1)
        + &RationalFunction::from_poly(UniPoly::new(Var::Z, vec![a.m.clone(), a.lambda.clone()]));
    descriptor_out(&e_zero_solution(&v)?, f, "ezero")
}

fn case1(a: &Case1Args, f: Format) -> Res<Outcome> {
    let seq = PolySequence::generate(a.subcase, a.degree, a.lambda)?;
    let point = match (&a.m, &a.alpha) {
        (Some(m), Some(alpha)) => RootPoint::Exact { m: m.clone(), alpha: alpha.clone() },
        (None, None) => return Err(Failure::Usage("case1 needs --alpha, --m or both".into())),
        (m, alpha) => {
            let slice = match (m, alpha) {
                (_, Some(alpha)) => Slice::Alpha(alpha.clone()),
                (Some(m), None) => Slice::M(m.clone()),
                (None, None) => unreachable!(),
            };
            let poly = match &slice {
                Slice::Alpha(x) => seq.condition().partial_eval(Var::Alpha, x)?,
                Slice::M(x) => seq.condition().partial_eval(Var::M, x)?,
            };
            if poly.is_zero() {
                return Err(Failure::Data("the condition vanishes on this whole slice; give both --m and --alpha".into()));
            }
            let boxes = sturm_isolate(&poly, None)?;
            let b = boxes.get(a.index).ok_or_else(|| {
                Failure::Data(format!("root index {} out of range: the slice has {} real roots", a.index, boxes.len()))
            })?;
            boxed_root(&seq, &slice, b, Some(&a.eps))?
        }
    };
    descriptor_out(&build_case1_solution(&seq, &point)?, f, "case1")
}

fn laguerre(a: &LaguerreArgs, f: Format) -> Res<Outcome> {
    descriptor_out(&laguerre_special_case(&a.alpha, &a.lambda, &a.e2)?, f, "laguerre")
}

fn kovacic_text(r: &KovacicReport) -> String {
    let mut s = format!("alpha = {}\n", r.alpha);
    writeln!(s, "case 2: E0 = {{{}}}, Einf = {{{}}}", r.case2.e_zero.join(", "), r.case2.e_infinity.join(", ")).ok();
    for c in &r.case2.candidates {
        writeln!(
            s,
            "  e0 = {}: d = {} {}",
            c.e0,
            c.d,
            if c.survives {
                "survives"
            } else if !c.d_admissible {
                "not a nonnegative integer"
            } else {
                "all even"
            }
        )
        .ok();
    }
    writeln!(s, "case 2 excluded: {}", r.case2.excluded).ok();
    writeln!(s, "case 3: order at infinity {} < 2, excluded: {}", r.case3.order_at_infinity, r.case3.excluded).ok();
    s
}

fn kovacic(a: &KovacicArgs, f: Format) -> Res<Outcome> {
    let r = kovacic_exclusions(&a.alpha);
    let body = match f {
        Format::Text => kovacic_text(&r),
        Format::Json => json(&r),
        Format::Csv => return Err(no_csv("kovacic")),
    };
    Ok(Outcome { body, code: if r.excluded() { 0 } else { EXIT_FINDING }, warnings: Vec::new() })
}

#[cfg(test)]
mod tests {
    use clap::Parser;
    use serde::de::DeserializeOwned;

    use super::*;
    use crate::cli::Cli;

    fn body(args: &[&str]) -> String {
        let mut argv = vec!["rdirac"];
        argv.extend_from_slice(args);
        argv.extend_from_slice(&["--format", "json"]);
        run(&Cli::try_parse_from(argv).unwrap().command).map_err(|f| f.message().to_string()).unwrap().body
    }

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) {
        let v: T = serde_json::from_str(text).unwrap();
        assert_eq!(json(&v), text);
        assert_eq!(serde_json::from_str::<T>(&json(&v)).unwrap(), v);
    }

    #[test]
    fn reports_round_trip() {
        round_trip::<ClassifyReport>(&body(&["classify", "--subcase", "3", "-d", "3", "--lambda", "1", "--alpha", "1/2"]));
        round_trip::<WhittakerReport>(&body(&["whittaker", "--m", "-2", "--alpha", "1/3", "-d", "2", "--e2", "3"]));
        round_trip::<ReconstructReport>(&body(&["reconstruct", "--poles", "1/2", "--r2", "1,-3"]));
        round_trip::<SolutionDescriptor>(&body(&["case1", "--subcase", "1", "-d", "3", "--lambda", "-1", "--m", "0"]));
        round_trip::<KovacicReport>(&body(&["kovacic", "--alpha", "-7/4"]));
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(sci(&Rational::new(1.into(), 8.into())), "1.250e-1");
        assert_eq!(sci(&int(-1234)), "-1.234e3");
        assert_eq!(sci(&int(0)), "0");
    }

    #[test]
    fn shifted_one_pole() {
        let v: ReconstructReport = serde_json::from_str(&body(&["reconstruct", "--poles", "1/2", "--r2", "1,-3"])).unwrap();
        let op = v.one_pole.unwrap();
        // 1 - 3z = (1 - 3/2) - 3 (z - 1/2)
        assert_eq!(op.family.r0, Rational::new((-1).into(), 2.into()));
        assert_eq!(op.family.r1, int(-3));
        assert!(v.polynomial.is_some());
    }
}
