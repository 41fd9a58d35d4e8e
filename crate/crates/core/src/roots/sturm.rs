use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, Rational, RationalStr, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultiplicityCertificate {
    SimpleBySturm,
    Unknown,
}

/// Isolating interval `(lo, hi]` for one real root of `poly`, or the exact
/// root `lo = hi`. `poly` is squarefree, so the root is simple in it;
/// `multiplicity` is the multiplicity in the polynomial that was isolated.
///
/// `sign_lo` is the sign of `poly` just right of `lo`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootBox {
    #[serde(with = "RationalStr")]
    pub lo: Rational,
    #[serde(with = "RationalStr")]
    pub hi: Rational,
    pub sign_lo: i8,
    pub sign_hi: i8,
    pub certificate: MultiplicityCertificate,
    pub multiplicity: usize,
    pub poly: UniPoly,
}

impl RootBox {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    /// Exact root value, if the box is degenerate.
    pub fn exact_value(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    /// Whether `x` is in the closed hull `[lo, hi]`.
    pub fn encloses(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Degenerate box at a known root `x` of `poly`.
    pub fn exact(poly: UniPoly, x: Rational, multiplicity: usize) -> Self {
        RootBox {
            lo: x.clone(),
            hi: x,
            sign_lo: 0,
            sign_hi: 0,
            certificate: MultiplicityCertificate::SimpleBySturm,
            multiplicity,
            poly,
        }
    }
}

/// Sturm chain `f, f', -rem(f, f'), ...`, each term scaled by a positive
/// constant to keep coefficients small.
pub fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let normalize = |p: UniPoly| match p.leading() {
        Some(lc) => {
            let s = lc.abs().recip();
            p.scale(&s)
        }
        None => p,
    };
    let mut chain = vec![normalize(f.clone())];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(normalize(d));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(normalize(-r));
    }
    chain
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(chain: &[UniPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of a squarefree `f` in `(lo, hi]`.
pub fn count_in(chain: &[UniPoly], lo: &Rational, hi: &Rational) -> usize {
    variations(chain, lo) - variations(chain, hi)
}

/// Smallest power of two strictly above the Cauchy bound.
pub fn root_bound(f: &UniPoly) -> Rational {
    let b = f.cauchy_bound();
    let mut p = Rational::one();
    while p <= b {
        p *= int(2);
    }
    p
}

/// Isolate the real roots of `p` in `(lo, hi]`, or in all of the real line
/// when `interval` is `None`. Boxes are sorted and pairwise disjoint.
pub fn sturm_isolate(p: &UniPoly, interval: Option<(&Rational, &Rational)>) -> Result<Vec<RootBox>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_factors() {
        isolate_squarefree(&factor, mult, interval, &mut out);
    }
    separate(&mut out);
    Ok(out)
}

/// Isolation of a squarefree polynomial; every box has multiplicity 1.
pub fn isolate_squarefree(f: &UniPoly, mult: usize, interval: Option<(&Rational, &Rational)>, out: &mut Vec<RootBox>) {
    if f.deg().unwrap_or(0) == 0 {
        return;
    }
    let chain = sturm_chain(f);
    let (lo, hi) = match interval {
        Some((a, b)) => (a.clone(), b.clone()),
        None => {
            let b = root_bound(f);
            (-b.clone(), b)
        }
    };
    if lo >= hi {
        return;
    }
    let mut stack = vec![(lo, hi)];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let n = count_in(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        let sb = f.sign_at(&b);
        if n == 1 {
            if sb == 0 {
                found.push(RootBox::exact(f.clone(), b, mult));
            } else {
                found.push(RootBox {
                    lo: a,
                    hi: b,
                    sign_lo: -sb,
                    sign_hi: sb,
                    certificate: MultiplicityCertificate::SimpleBySturm,
                    multiplicity: mult,
                    poly: f.clone(),
                });
            }
            continue;
        }
        let mid = (&a + &b) / int(2);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.extend(found);
}

/// Sort boxes and refine until their closed hulls are disjoint.
fn separate(boxes: &mut Vec<RootBox>) {
    boxes.sort_by(|a, b| compare_roots(a, b));
    for i in 1..boxes.len() {
        let (left, right) = boxes.split_at_mut(i);
        let a = left.last_mut().expect("i >= 1");
        let b = &mut right[0];
        while a.hi >= b.lo {
            bisect(a);
            bisect(b);
        }
    }
}

/// One bisection step; a midpoint hit makes the box exact.
pub fn bisect(b: &mut RootBox) {
    if b.is_exact() {
        return;
    }
    let mid = b.midpoint();
    let s = b.poly.sign_at(&mid);
    if s == 0 {
        b.lo = mid.clone();
        b.hi = mid;
        b.sign_lo = 0;
        b.sign_hi = 0;
    } else if s == b.sign_hi {
        b.hi = mid;
    } else {
        b.lo = mid;
    }
}

/// Bisect until `hi - lo <= eps`.
pub fn refine(b: &RootBox, eps: &Rational) -> RootBox {
    let mut out = b.clone();
    while out.width() > *eps {
        bisect(&mut out);
    }
    out
}

/// Order of the roots in two boxes, which may belong to different
/// polynomials. Equal roots are detected through the gcd.
pub fn compare_roots(a: &RootBox, b: &RootBox) -> Ordering {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut gcd_checked = false;
    loop {
        if a.is_exact() && b.is_exact() {
            return a.lo.cmp(&b.lo);
        }
        // the root of a non-exact box is > lo and <= hi
        if a.hi < b.lo || (a.hi == b.lo && !b.is_exact()) {
            return Ordering::Less;
        }
        if b.hi < a.lo || (b.hi == a.lo && !a.is_exact()) {
            return Ordering::Greater;
        }
        if !gcd_checked {
            gcd_checked = true;
            if shares_root(&a, &b) {
                return Ordering::Equal;
            }
        }
        if a.is_exact() {
            if b.poly.sign_at(&a.lo) == 0 {
                return Ordering::Equal;
            }
        } else {
            bisect(&mut a);
        }
        if b.is_exact() {
            if a.poly.sign_at(&b.lo) == 0 {
                return Ordering::Equal;
            }
        } else {
            bisect(&mut b);
        }
    }
}

fn in_box(b: &RootBox, x: &Rational) -> bool {
    if b.is_exact() {
        &b.lo == x
    } else {
        &b.lo < x && x <= &b.hi
    }
}

/// Each box holds exactly one root of its polynomial, so a root of the gcd
/// inside both boxes is that common root.
fn shares_root(a: &RootBox, b: &RootBox) -> bool {
    let g = a.poly.gcd(&b.poly.clone().with_var(a.poly.var()));
    if g.deg().unwrap_or(0) == 0 {
        return false;
    }
    if a.is_exact() {
        return in_box(b, &a.lo) && g.sign_at(&a.lo) == 0;
    }
    if b.is_exact() {
        return in_box(a, &b.lo) && g.sign_at(&b.lo) == 0;
    }
    let lo = if a.lo > b.lo { &a.lo } else { &b.lo };
    let hi = if a.hi < b.hi { &a.hi } else { &b.hi };
    lo < hi && count_in(&sturm_chain(&g), lo, hi) > 0
}

/// Every point of the box is within the returned
/// value of `x`.
pub fn distance_bound(b: &RootBox, x: &Rational) -> Rational {
    let d1 = (&b.lo - x).abs();
    let d2 = (&b.hi - x).abs();
    if d1 > d2 {
        d1
    } else {
        d2
    }
}

/// The distinct rational roots of `p`, ascending.
///
/// A rational root of an integer polynomial has a denominator dividing the
/// leading coefficient `a`, so once a box is narrower than `1 / (2|a|)` the
/// only candidate is `round(a * mid) / a`.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for b in sturm_isolate(p, None)? {
        if let Some(x) = b.exact_value() {
            out.push(x.clone());
            continue;
        }
        let den_lcm = b.poly.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lead = (b.poly.leading().expect("nonzero factor") * Rational::from_integer(den_lcm)).abs();
        let r = refine(&b, &(Rational::one() / (&lead * Rational::from_integer(2.into()))));
        if let Some(x) = r.exact_value() {
            out.push(x.clone());
            continue;
        }
        let cand = (r.midpoint() * &lead).round() / &lead;
        if b.poly.sign_at(&cand) == 0 {
            out.push(cand);
        }
    }
    Ok(out)
}
