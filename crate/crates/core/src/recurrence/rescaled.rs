use serde::{Deserialize, Serialize};

use super::sequence::PolySequence;
use super::subcase::{check_lambda, Subcase};
use crate::error::{Error, Result};
use crate::poly::{int, rat, Rational, UniPoly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Limit {
    /// `p_l = m^(d-l) r_l(alpha)`, `m -> infinity`.
    MInfinity,
    /// `p_l = alpha^(e_l) r_l(m)`, `alpha -> infinity`.
    AlphaInfinity,
}

/// Leading-order sequences `r_{d+1}, ..., r_{-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RescaledSequence {
    pub subcase: Subcase,
    pub d: u32,
    pub lambda: i32,
    pub which: Limit,
    pub polys: Vec<UniPoly>,
}

impl RescaledSequence {
    pub fn r(&self, l: i64) -> &UniPoly {
        &self.polys[(self.d as i64 + 1 - l) as usize]
    }

    /// Zeros of `r_{-1}` introduced by the limit, from the product of its
    /// linear factors (`m`-limit of subcases 2 and 4 only).
    pub fn limit_roots(&self) -> Vec<Rational> {
        if self.which != Limit::MInfinity {
            return Vec::new();
        }
        let top = self.d as i64 + 1;
        let mut roots: Vec<Rational> = (1..=top)
            .map(|l| match self.subcase {
                Subcase::S2 => rat(1 - l, 2),
                _ => rat(l, 2),
            })
            .collect();
        roots.sort();
        roots
    }
}

/// Power of the rescaling variable carried by `p_l`.
pub fn rescale_exponent(subcase: Subcase, d: u32, l: i64, which: Limit) -> u32 {
    let gap = (d as i64 - l) as u32;
    match (which, subcase) {
        (Limit::AlphaInfinity, Subcase::S1 | Subcase::S3) => gap / 2,
        _ => gap,
    }
}

/// Limit sequence. For subcases 2 and 4 it is built from the two-term
/// relations; the alpha-limit of subcases 1 and 3 is read off the exact
/// sequence.
pub fn rescaled_limit(subcase: Subcase, d: u32, lambda: i32, which: Limit) -> Result<RescaledSequence> {
    check_lambda(lambda)?;
    if d < 1 {
        return Err(Error::Domain(format!("degree must be at least 1, got {d}")));
    }
    let var = match which {
        Limit::MInfinity => Var::Alpha,
        Limit::AlphaInfinity => Var::M,
    };
    let di = d as i64;
    let lam = int(lambda as i64);
    let polys = match (subcase, which) {
        (Subcase::S1 | Subcase::S3, Limit::MInfinity) => {
            return Err(Error::InvalidCase(format!("m-limit is only defined for subcases 2 and 4, got {subcase}")));
        }
        (Subcase::S1 | Subcase::S3, Limit::AlphaInfinity) => {
            let seq = PolySequence::generate(subcase, d, lambda)?;
            (-1..=di + 1)
                .rev()
                .map(|l| {
                    let e = rescale_exponent(subcase, d, l, which);
                    seq.p(l).coeff_of_second(e).with_var(Var::M)
                })
                .collect()
        }
        _ => {
            let mut polys = vec![UniPoly::zero(var), UniPoly::one(var)];
            for l in (1..=di + 1).rev() {
                let rhs = match subcase {
                    Subcase::S2 => int(2) * &lam * int(l - di - 2),
                    _ => int(2) * &lam * int(di - l + 2),
                };
                // factor multiplying r_{l-1}
                let factor = match (subcase, which) {
                    (Subcase::S2, Limit::MInfinity) => UniPoly::new(var, vec![int(-2 * (l - 1)), int(-4)]),
                    (_, Limit::MInfinity) => UniPoly::new(var, vec![int(2 * l), int(-4)]),
                    (_, Limit::AlphaInfinity) => UniPoly::new(var, vec![int(0), int(-4)]),
                };
                let prev = polys.last().expect("seeded");
                polys.push((&factor * prev).scale(&rhs.recip()));
            }
            polys
        }
    };
    Ok(RescaledSequence { subcase, d, lambda, which, polys })
}
