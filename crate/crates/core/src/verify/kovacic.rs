use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::residual::heun_r_symbolic;
use crate::poly::{int, is_integer, BiPoly, Frac, Rational};

/// One `e_0` of case 2 and the degree it would force.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case2Candidate {
    #[serde(with = "Frac")]
    pub e0: Rational,
    /// `(e_inf - e_0) / 2`.
    #[serde(with = "Frac")]
    pub d: Rational,
    /// Kovacic keeps only integer `e_c`.
    pub e0_integer: bool,
    pub d_admissible: bool,
    /// Every `e` in the family is even, which case 2 forbids.
    pub all_even: bool,
    pub survives: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case2Trace {
    /// `{4(1 - alpha), 2, 4 alpha}`.
    pub e_zero: Vec<String>,
    /// `{-2}`.
    pub e_infinity: Vec<String>,
    pub candidates: Vec<Case2Candidate>,
    /// Some candidate has an integer degree, which forces `2 alpha` integral.
    pub integer_degree_forces_half_integer: bool,
    pub excluded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case3Trace {
    /// `deg(den) - deg(num)` of `r`; negative means a pole at infinity.
    pub order_at_infinity: i64,
    pub excluded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KovacicReport {
    #[serde(with = "Frac")]
    pub alpha: Rational,
    pub case2: Case2Trace,
    pub case3: Case3Trace,
}

impl KovacicReport {
    pub fn excluded(&self) -> bool {
        self.case2.excluded && self.case3.excluded
    }
}

fn is_even(q: &Rational) -> bool {
    is_integer(q) && q.numer().is_even()
}

/// Check that cases 2 and 3 of Kovacic's algorithm cannot apply to
/// `psi'' = (V^2 + V' - E^2) psi` with `V = alpha/z + m + lambda z`.
pub fn kovacic_exclusions(alpha: &Rational) -> KovacicReport {
    let e_inf = int(-2);
    let e_zero = [int(4) * (int(1) - alpha), int(2), int(4) * alpha];
    let candidates: Vec<Case2Candidate> = e_zero
        .iter()
        .map(|e0| {
            let d = (&e_inf - e0) / int(2);
            let e0_integer = is_integer(e0);
            let d_admissible = e0_integer && is_integer(&d) && d >= int(0);
            let all_even = is_even(e0) && is_even(&e_inf);
            Case2Candidate {
                e0: e0.clone(),
                d: d.clone(),
                e0_integer,
                d_admissible,
                all_even,
                survives: d_admissible && !all_even,
            }
        })
        .collect();
    // only the alpha-dependent entries can constrain alpha
    let integer_degree_forces_half_integer = [&candidates[0], &candidates[2]]
        .iter()
        .filter(|c| is_integer(&c.d))
        .all(|_| is_integer(&(int(2) * alpha)));
    let excluded = candidates.iter().all(|c| !c.survives);

    // r grows like lambda^2 z^2 for either sign of lambda and any E^2
    let order_at_infinity = [-1, 1]
        .iter()
        .map(|&lambda| {
            let r = heun_r_symbolic(lambda, &BiPoly::monomial(int(1), 2, 0));
            -r.support().expect("nonzero r").1
        })
        .max()
        .expect("two signs");

    KovacicReport {
        alpha: alpha.clone(),
        case2: Case2Trace {
            e_zero: e_zero.iter().map(Frac::render).collect(),
            e_infinity: vec![Frac::render(&e_inf)],
            candidates,
            integer_degree_forces_half_integer,
            excluded,
        },
        case3: Case3Trace { order_at_infinity, excluded: order_at_infinity < 2 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn half_integer_is_excluded_by_parity() {
        let rep = kovacic_exclusions(&rat(-3, 2));
        // e0 = 4 alpha = -6 gives d = 2, a genuine integer degree
        let c = &rep.case2.candidates[2];
        assert_eq!(c.d, int(2));
        assert!(c.d_admissible && c.all_even && !c.survives);
        assert!(rep.excluded());
    }

    #[test]
    fn third_case_sees_the_quadratic_growth() {
        assert_eq!(kovacic_exclusions(&rat(1, 3)).case3.order_at_infinity, -2);
    }
}
