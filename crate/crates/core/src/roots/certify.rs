use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::sturm::{compare_roots, distance_bound, refine, root_bound, sturm_isolate, RootBox};
use crate::error::Result;
use crate::poly::{int, rat, Rational, RationalStr, UniPoly, Var};
use crate::recurrence::{even_ladder, odd_ladder, PolySequence, Subcase};

/// Positive roots in `m` of a condition slice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RootCount {
    Count { n: usize, boxes: Vec<RootBox> },
    /// The slice vanishes identically.
    WholeLine,
}

impl RootCount {
    pub fn count(&self) -> Option<usize> {
        match self {
            RootCount::Count { n, .. } => Some(*n),
            RootCount::WholeLine => None,
        }
    }
}

/// Roots in `(0, bound]`.
pub fn positive_roots(p: &UniPoly) -> Result<Vec<RootBox>> {
    let b = root_bound(p);
    sturm_isolate(p, Some((&Rational::zero(), &b)))
}

/// Count the distinct positive roots in `m` of the condition polynomial at
/// `alpha = alpha0`.
pub fn count_positive_roots_in_m(seq: &PolySequence, alpha0: &Rational) -> Result<RootCount> {
    let slice = seq.condition().partial_eval(Var::Alpha, alpha0)?;
    if slice.is_zero() {
        return Ok(RootCount::WholeLine);
    }
    let boxes = positive_roots(&slice)?;
    Ok(RootCount::Count { n: boxes.len(), boxes })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootCountCheck {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    #[serde(with = "RationalStr")]
    pub alpha: Rational,
    pub expected: usize,
    pub found: RootCount,
    /// Inside one of the open regions where the count is asserted.
    pub in_region: bool,
    /// On a region endpoint; reported without asserting a count.
    pub on_boundary: bool,
    pub all_simple: bool,
}

impl RootCountCheck {
    pub fn agrees(&self) -> bool {
        self.found.count() == Some(self.expected) && self.all_simple
    }
}

pub fn check_root_count(seq: &PolySequence, alpha0: &Rational) -> Result<RootCountCheck> {
    let s = seq.subcase();
    let regions = s.root_count_regions(seq.degree());
    let found = count_positive_roots_in_m(seq, alpha0)?;
    let all_simple = match &found {
        RootCount::Count { boxes, .. } => boxes.iter().all(|b| b.multiplicity == 1),
        RootCount::WholeLine => false,
    };
    Ok(RootCountCheck {
        subcase: s,
        d: seq.degree(),
        lambda: seq.lambda(),
        alpha: alpha0.clone(),
        expected: s.positive_root_count(seq.degree()),
        in_region: regions.iter().any(|r| r.contains(seq.lambda(), alpha0)),
        on_boundary: regions
            .iter()
            .any(|r| r.lambda == seq.lambda() && r.boundaries().contains(alpha0)),
        all_simple,
        found,
    })
}

/// Which parameter a slice fixes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slice {
    /// `alpha` fixed, roots in `m`.
    Alpha(#[serde(with = "RationalStr")] Rational),
    /// `m` fixed, roots in `alpha`.
    M(#[serde(with = "RationalStr")] Rational),
}

impl Slice {
    pub fn apply(&self, seq: &PolySequence, l: i64) -> UniPoly {
        match self {
            Slice::Alpha(a) => seq.slice_alpha(l, a),
            Slice::M(m) => seq.slice_m(l, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub l: i64,
    pub reason: String,
    pub upper: Vec<RootBox>,
    pub lower: Vec<RootBox>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub pairs_checked: usize,
    pub violation: Option<Violation>,
}

impl InterlacingReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

fn isolate_or_empty(p: &UniPoly) -> Result<Option<Vec<RootBox>>> {
    if p.is_zero() {
        return Ok(None);
    }
    sturm_isolate(p, None).map(Some)
}

/// Strict alternation of two sorted root lists: merged, no two neighbors
/// come from the same list and no root is shared. Sizes may differ by one.
pub fn strictly_alternate(a: &[RootBox], b: &[RootBox]) -> std::result::Result<(), String> {
    if a.len().abs_diff(b.len()) > 1 {
        return Err(format!("{} roots against {}", a.len(), b.len()));
    }
    let (mut i, mut j) = (0, 0);
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let take_a = if i == a.len() {
            false
        } else if j == b.len() {
            true
        } else {
            match compare_roots(&a[i], &b[j]) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => return Err(format!("shared root near {}", a[i].midpoint())),
            }
        };
        if last == Some(take_a) {
            let at = if take_a { &a[i] } else { &b[j] };
            return Err(format!("two consecutive roots from the same list near {}", at.midpoint()));
        }
        last = Some(take_a);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    Ok(())
}

/// Check that the real roots of `p_{l-1}` separate those of `p_l` on a slice,
/// for `l` from `l_top` down to `l_bottom + 1`.
pub fn check_interlacing(seq: &PolySequence, slice: &Slice, l_top: i64, l_bottom: i64) -> Result<InterlacingReport> {
    let mut pairs = 0;
    let mut upper = isolate_or_empty(&slice.apply(seq, l_top))?;
    for l in ((l_bottom + 1)..=l_top).rev() {
        let lower = isolate_or_empty(&slice.apply(seq, l - 1))?;
        pairs += 1;
        let violation = |reason: String, up: &Option<Vec<RootBox>>, lo: &Option<Vec<RootBox>>| Violation {
            l,
            reason,
            upper: up.clone().unwrap_or_default(),
            lower: lo.clone().unwrap_or_default(),
        };
        let (Some(a), Some(b)) = (&upper, &lower) else {
            return Ok(InterlacingReport {
                pairs_checked: pairs,
                violation: Some(violation("slice vanishes identically".into(), &upper, &lower)),
            });
        };
        let problem = if b.len() != a.len() + 1 {
            Some(format!("p_{} has {} real roots, p_{} has {}", l, a.len(), l - 1, b.len()))
        } else if a.iter().chain(b.iter()).any(|r| r.multiplicity > 1) {
            Some("multiple root".to_string())
        } else {
            strictly_alternate(a, b).err()
        };
        if let Some(reason) = problem {
            return Ok(InterlacingReport {
                pairs_checked: pairs,
                violation: Some(violation(reason, &upper, &lower)),
            });
        }
        upper = lower;
    }
    Ok(InterlacingReport { pairs_checked: pairs, violation: None })
}

/// The root every sequence of the subcase carries for all `m`, if any.
pub fn distinguished_root(subcase: Subcase, d: u32) -> Option<Rational> {
    match subcase {
        Subcase::S2 => Some(Rational::zero()),
        Subcase::S4 => Some(rat(d as i64 + 1, 2)),
        _ => None,
    }
}

/// Exact point box for a known rational root.
pub fn point_box(x: &Rational) -> RootBox {
    RootBox::exact(UniPoly::linear_root(Var::Alpha, x), x.clone(), 1)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearZeroSlice {
    #[serde(with = "RationalStr")]
    pub m: Rational,
    /// Roots in the window other than the distinguished one.
    pub roots: Vec<RootBox>,
    pub distinguished: Option<RootBox>,
    pub expected: usize,
    /// Largest distance from a root to the nearest `m = 0` ladder value (odd d).
    #[serde(with = "crate::roots::opt_rational")]
    pub ladder_distance: Option<Rational>,
    /// Alternation with the even-degree ladder (even d).
    pub interlacing: Option<std::result::Result<(), String>>,
}

impl NearZeroSlice {
    pub fn count_ok(&self) -> bool {
        self.roots.len() == self.expected && self.roots.iter().all(|r| r.multiplicity == 1)
    }

    pub fn passes(&self) -> bool {
        self.count_ok() && !matches!(self.interlacing, Some(Err(_)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearZeroReport {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    pub window: [String; 2],
    pub slices: Vec<NearZeroSlice>,
}

impl NearZeroReport {
    pub fn passes(&self) -> bool {
        self.slices.iter().all(NearZeroSlice::passes)
    }
}

/// Roots in alpha of `p_{-1}` at `m = +delta` and `m = -delta`, inside the
/// window `|alpha| <= d + 2` (other roots run off to infinity as `m -> 0`).
pub fn near_zero_m_roots(subcase: Subcase, d: u32, delta: &Rational) -> Result<NearZeroReport> {
    let lambda = subcase.default_lambda();
    let seq = PolySequence::generate(subcase, d, lambda)?;
    let w = int(d as i64 + 2);
    let lo = -w.clone();
    let dist = distinguished_root(subcase, d);
    let mut slices = Vec::new();
    for m in [delta.clone(), -delta.clone()] {
        let mut p = seq.slice_m(-1, &m);
        let mut distinguished = None;
        if let Some(x) = &dist {
            let lin = UniPoly::linear_root(Var::Alpha, x);
            if let Ok(q) = p.div_exact(&lin) {
                p = q;
                distinguished = Some(point_box(x));
            }
        }
        let roots = sturm_isolate(&p, Some((&lo, &w)))?;
        let (expected, ladder_distance, interlacing) = if d % 2 == 1 {
            let ladder = odd_ladder(subcase, d);
            let eps = rat(1, 1_000_000_000_000);
            let worst = roots
                .iter()
                .map(|r| {
                    let r = refine(r, &eps);
                    ladder.iter().map(|x| distance_bound(&r, x)).min().expect("nonempty ladder")
                })
                .max();
            let expected = (d as usize + 1) / 2 - usize::from(distinguished.is_some());
            (expected, worst, None)
        } else {
            let ladder: Vec<RootBox> = even_ladder(subcase, d, 0).iter().map(point_box).collect();
            (d as usize / 2, None, Some(strictly_alternate(&roots, &ladder)))
        };
        slices.push(NearZeroSlice { m, roots, distinguished, expected, ladder_distance, interlacing });
    }
    Ok(NearZeroReport { subcase, d, lambda, window: [lo.to_string(), w.to_string()], slices })
}

/// Horizontal asymptotes of the `m`-rescaled condition for subcases 2 and 4.
pub fn predicted_asymptotes(subcase: Subcase, d: u32) -> Vec<Rational> {
    let d = d as i64;
    match subcase {
        Subcase::S2 => (2..=d + 1).map(|l| rat(1 - l, 2)).collect(),
        Subcase::S4 => (1..=d).map(|l| rat(l, 2)).collect(),
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pairing {
    #[serde(with = "RationalStr")]
    pub asymptote: Rational,
    pub root: RootBox,
    #[serde(with = "RationalStr")]
    pub distance: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoteAttempt {
    #[serde(with = "RationalStr")]
    pub m: Rational,
    pub pairs: Vec<Pairing>,
    #[serde(with = "crate::roots::opt_rational")]
    pub max_distance: Option<Rational>,
    pub unpaired_roots: Vec<RootBox>,
    pub unpaired_asymptotes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoteReport {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    #[serde(with = "RationalStr")]
    pub tolerance: Rational,
    pub attempts: Vec<AsymptoteAttempt>,
    /// The distinguished linear factor divides the symbolic condition.
    pub exact_factor_divides: bool,
    pub conclusive: bool,
}

/// Root boxes at `m = big`, each asymptote paired with the nearest unused
/// root. Distances are exact upper bounds over the refined boxes.
pub fn asymptote_pairing(seq: &PolySequence, big: &Rational) -> Result<AsymptoteAttempt> {
    let s = seq.subcase();
    let mut p = seq.slice_m(-1, big);
    if let Some(x) = distinguished_root(s, seq.degree()) {
        p = p.div_exact(&UniPoly::linear_root(Var::Alpha, &x))?;
    }
    let eps = rat(1, 1_000_000_000_000);
    let mut roots: Vec<RootBox> = sturm_isolate(&p, None)?.iter().map(|b| refine(b, &eps)).collect();
    let mut pairs = Vec::new();
    let mut unpaired_asymptotes = Vec::new();
    for a in predicted_asymptotes(s, seq.degree()) {
        let best = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, distance_bound(r, &a)))
            .min_by(|x, y| x.1.cmp(&y.1));
        match best {
            Some((i, distance)) => {
                let root = roots.remove(i);
                pairs.push(Pairing { asymptote: a, root, distance });
            }
            None => unpaired_asymptotes.push(a.to_string()),
        }
    }
    let max_distance = pairs.iter().map(|p| p.distance.clone()).max();
    Ok(AsymptoteAttempt { m: big.clone(), pairs, max_distance, unpaired_roots: roots, unpaired_asymptotes })
}

/// Pair roots with asymptotes at `m = start`, doubling `m` up to 400 until
/// every pairing distance is below `tol`.
pub fn large_m_asymptotes(subcase: Subcase, d: u32, lambda: i32, start: &Rational, tol: &Rational) -> Result<AsymptoteReport> {
    let seq = PolySequence::generate(subcase, d, lambda)?;
    let exact_factor_divides = match distinguished_root(subcase, d) {
        Some(x) => seq.p_minus_one().div_linear_second(&x).1.is_zero(),
        None => false,
    };
    let limit = int(400);
    let mut m = start.clone();
    let mut attempts = Vec::new();
    let mut conclusive = false;
    loop {
        let att = asymptote_pairing(&seq, &m)?;
        let ok = att.unpaired_asymptotes.is_empty()
            && att.max_distance.as_ref().map_or(true, |x| x < tol);
        attempts.push(att);
        if ok {
            conclusive = true;
            break;
        }
        m = &m * int(2);
        if m.abs() > limit {
            break;
        }
    }
    Ok(AsymptoteReport {
        subcase,
        d,
        lambda,
        tolerance: tol.clone(),
        attempts,
        exact_factor_divides,
        conclusive,
    })
}
