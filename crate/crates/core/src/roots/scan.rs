use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sturm::{refine, sturm_isolate, RootBox};
use crate::error::{Error, Result};
use crate::poly::{parse_rational, Rational, RationalStr};
use crate::recurrence::{PolySequence, Subcase};

/// Root boxes in alpha of the condition polynomial at one `m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    #[serde(with = "RationalStr")]
    pub m: Rational,
    pub alpha_roots: Vec<RootBox>,
    /// The slice vanishes for every alpha.
    pub whole_line: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanParams {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    pub m_lo: Rational,
    pub m_hi: Rational,
    pub m_step: Rational,
    /// Box width after refinement.
    pub eps: Rational,
    /// Only roots in `(lo, hi]`; `None` is the whole line.
    pub alpha_window: Option<(Rational, Rational)>,
}

/// Named figure parameters: subcase, degree and lambda.
pub fn preset(name: &str) -> Option<(Subcase, u32, i32)> {
    match name {
        "fig1-left" => Some((Subcase::S1, 7, -1)),
        "fig1-right" => Some((Subcase::S3, 7, 1)),
        "fig2-left" => Some((Subcase::S2, 5, 1)),
        "fig2-right" => Some((Subcase::S4, 5, 1)),
        _ => None,
    }
}

pub const PRESETS: [&str; 4] = ["fig1-left", "fig1-right", "fig2-left", "fig2-right"];

/// `lo, lo + step, ...` up to and including `hi`; empty when `lo > hi`.
pub fn grid(lo: &Rational, hi: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if *step <= Rational::zero() {
        return Err(Error::Domain("step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        out.push(x.clone());
        x += step;
    }
    Ok(out)
}

/// Scan the zero set of the condition polynomial (`p_1` in subcase 1,
/// `p_{-1}` otherwise) across vertical lines `m = const`. Slices run in
/// parallel; the output is ordered by `m`.
pub fn scan_curve(params: &ScanParams) -> Result<Vec<CurvePoint>> {
    let seq = PolySequence::generate(params.subcase, params.d, params.lambda)?;
    let ms = grid(&params.m_lo, &params.m_hi, &params.m_step)?;
    ms.into_par_iter()
        .map(|m| {
            let slice = seq.condition().partial_eval(crate::poly::Var::M, &m)?;
            if slice.is_zero() {
                return Ok(CurvePoint { m, alpha_roots: Vec::new(), whole_line: true });
            }
            let window = params.alpha_window.as_ref().map(|(a, b)| (a, b));
            let alpha_roots = sturm_isolate(&slice, window)?.iter().map(|b| refine(b, &params.eps)).collect();
            Ok(CurvePoint { m, alpha_roots, whole_line: false })
        })
        .collect()
}

pub fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// One CSV/JSON row per root box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRow {
    pub m: String,
    pub alpha_lo: String,
    pub alpha_hi: String,
    pub exact_flag: bool,
}

impl CurveRow {
    pub fn values(&self) -> Result<(Rational, Rational, Rational)> {
        Ok((parse_rational(&self.m)?, parse_rational(&self.alpha_lo)?, parse_rational(&self.alpha_hi)?))
    }
}

pub fn curve_rows(points: &[CurvePoint]) -> Vec<CurveRow> {
    points
        .iter()
        .flat_map(|p| {
            p.alpha_roots.iter().map(move |b| CurveRow {
                m: fraction(&p.m),
                alpha_lo: fraction(&b.lo),
                alpha_hi: fraction(&b.hi),
                exact_flag: b.is_exact(),
            })
        })
        .collect()
}

pub const CSV_HEADER: &str = "m,alpha_lo,alpha_hi,exact_flag";

pub fn to_csv(points: &[CurvePoint]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in curve_rows(points) {
        writeln!(s, "{},{},{},{}", r.m, r.alpha_lo, r.alpha_hi, r.exact_flag).expect("string write");
    }
    s
}

pub fn to_json(points: &[CurvePoint]) -> String {
    serde_json::to_string_pretty(&curve_rows(points)).expect("rows serialize")
}

pub fn parse_csv(text: &str) -> Result<Vec<CurveRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        other => return Err(Error::Parse(format!("bad curve header: {other:?}"))),
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            if f.len() != 4 {
                return Err(Error::Parse(format!("bad curve row: {l}")));
            }
            let exact_flag = f[3]
                .trim()
                .parse::<bool>()
                .map_err(|_| Error::Parse(format!("bad exact flag: {}", f[3])))?;
            Ok(CurveRow { m: f[0].into(), alpha_lo: f[1].into(), alpha_hi: f[2].into(), exact_flag })
        })
        .collect()
}
