use num_traits::{One, Zero};

use crate::poly::{int, BiPoly, Coeff, Laurent, Poly, Rational, RationalFunction, UniPoly, Var, ZPoly};
use crate::recurrence::{PolySequence, Subcase};

/// `P'' + 2 omega P' + (omega' + omega^2 - r) P` for Laurent data.
pub fn residual_laurent<C: Coeff>(p: &Poly<C>, omega: &Laurent<C>, r: &Laurent<C>) -> Laurent<C> {
    let p = Laurent::from_poly(p);
    let dp = p.derivative();
    let ddp = dp.derivative();
    let two_omega = omega.scale(&int(2));
    let pot = &(&omega.derivative() + &(omega * omega)) - r;
    &(&ddp + &(&two_omega * &dp)) + &(&pot * &p)
}

/// `P'' + 2 omega P' + (omega' + omega^2 - r) P` as a reduced rational function.
pub fn residual_identity(p: &UniPoly, omega: &RationalFunction, r: &RationalFunction) -> RationalFunction {
    let p = RationalFunction::from_poly(p.clone());
    let dp = p.derivative();
    let ddp = dp.derivative();
    let pot = &(&omega.derivative() + &(omega * omega)) - r;
    &(&ddp + &(&omega.scale(&int(2)) * &dp)) + &(&pot * &p)
}

/// `V^2 + V' - E^2`.
pub fn riccati_rhs(v: &RationalFunction, e2: &Rational) -> RationalFunction {
    &(&(v * v) + &v.derivative()) - &RationalFunction::constant(v.var(), e2.clone())
}

/// Prefactor, exponent and equation coefficient with symbolic coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicAnsatz {
    pub prefactor: ZPoly,
    pub omega: Laurent<BiPoly>,
    pub r: Laurent<BiPoly>,
}

impl SymbolicAnsatz {
    pub fn residual(&self) -> Laurent<BiPoly> {
        residual_laurent(&self.prefactor, &self.omega, &self.r)
    }

    /// All coefficients evaluated at `(first, second)`.
    pub fn instantiate(&self, first: &Rational, second: &Rational) -> (UniPoly, RationalFunction, RationalFunction) {
        let eval = |l: &Laurent<BiPoly>| l.map_coeffs(|c| c.eval_at(first, second)).to_rational_function();
        (self.prefactor.eval_params(first, second), eval(&self.omega), eval(&self.r))
    }
}

/// `alpha/z + m + lambda z` over `Q[m, alpha]`.
pub fn heun_potential_symbolic(lambda: i32) -> Laurent<BiPoly> {
    Laurent::new(Var::Z, -1, vec![BiPoly::alpha(), BiPoly::m(), BiPoly::constant(int(lambda as i64))])
}

/// `V^2 + V' - E^2` for the Heun family.
pub fn heun_r_symbolic(lambda: i32, e2: &BiPoly) -> Laurent<BiPoly> {
    let v = heun_potential_symbolic(lambda);
    &(&(&v * &v) + &v.derivative()) - &Laurent::monomial(Var::Z, e2.clone(), 0)
}

/// `omega = a/z + s (m + lambda z)` with the residue `a` and sign `s` of the subcase.
pub fn case1_omega(subcase: Subcase, lambda: i32) -> Laurent<BiPoly> {
    let s = int(subcase.polynomial_sign() as i64);
    Laurent::new(
        Var::Z,
        -1,
        vec![subcase.residue(), BiPoly::m().scale(&s), BiPoly::constant(s * int(lambda as i64))],
    )
}

/// The case-1 ansatz built from a recurrence sequence, with `E^2` set by
/// the degree.
pub fn sequence_ansatz(seq: &PolySequence) -> SymbolicAnsatz {
    let (s, d, lambda) = (seq.subcase(), seq.degree(), seq.lambda());
    SymbolicAnsatz {
        prefactor: seq.prefactor(),
        omega: case1_omega(s, lambda),
        r: heun_r_symbolic(lambda, &s.energy_e2(d as i64, lambda)),
    }
}

pub fn sequence_residual(seq: &PolySequence) -> Laurent<BiPoly> {
    sequence_ansatz(seq).residual()
}

/// `c` in `residual = c p_{-1} / z`.
pub fn residual_constant(subcase: Subcase, d: u32, lambda: i32) -> Rational {
    let c = int(2 * lambda as i64 * (d as i64 + 1));
    match subcase {
        Subcase::S1 | Subcase::S4 => c,
        Subcase::S2 | Subcase::S3 => -c,
    }
}

/// Ratio of the leading terms of `z * residual` and `p_{-1}`; `None` when
/// the residual has more than the `1/z` term or the ratio is not constant.
pub fn measured_residual_constant(seq: &PolySequence) -> Option<Rational> {
    let res = sequence_residual(seq);
    let terms = res.nonzero_terms();
    if terms.len() != 1 || terms[0].0 != -1 {
        return None;
    }
    let lhs = &terms[0].1;
    let p = seq.p_minus_one();
    let (key, lead) = p.terms().last()?;
    let c = lhs.coeff(key.0, key.1) / lead;
    (lhs == &p.scale(&c)).then_some(c)
}

/// The one-pole family over `Q[r0, r1]`: `V = 1/z + r0 z + r1 z^2`,
/// `E^2 = 2 r0`, `omega = r0 z + r1 z^2`, `P = r1 z + r0`.
pub fn one_pole_ansatz() -> SymbolicAnsatz {
    let vars = (Var::R0, Var::R1);
    let r0 = BiPoly::monomial_in(vars, int(1), 1, 0);
    let r1 = BiPoly::monomial_in(vars, int(1), 0, 1);
    let v = Laurent::new(Var::Z, -1, vec![BiPoly::one(), BiPoly::zero(), r0.clone(), r1.clone()]);
    let r = &(&(&v * &v) + &v.derivative()) - &Laurent::monomial(Var::Z, r0.scale(&int(2)), 0);
    SymbolicAnsatz {
        prefactor: Poly::new(Var::Z, vec![r0.clone(), r1.clone()]),
        omega: Laurent::new(Var::Z, 1, vec![r0, r1]),
        r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn one_pole_family_closes() {
        assert!(one_pole_ansatz().residual().is_zero());
    }

    #[test]
    fn degree_two_leftover_is_the_mass() {
        // S1, d = 2, lambda = -1: p_{-1} = -2m up to the constant
        let seq = PolySequence::generate(Subcase::S1, 2, -1).unwrap();
        let res = sequence_residual(&seq);
        assert_eq!(res.support(), Some((-1, -1)));
        assert_eq!(measured_residual_constant(&seq), Some(residual_constant(Subcase::S1, 2, -1)));
    }

    #[test]
    fn numeric_and_laurent_residuals_agree() {
        let seq = PolySequence::generate(Subcase::S4, 3, 1).unwrap();
        let ans = sequence_ansatz(&seq);
        let (m, a) = (rat(2, 3), rat(-5, 4));
        let (p, w, r) = ans.instantiate(&m, &a);
        let direct = residual_identity(&p, &w, &r);
        let via = ans.residual().map_coeffs(|c| c.eval_at(&m, &a)).to_rational_function();
        assert_eq!(direct, via);
        assert!(!direct.is_zero());
    }

    #[test]
    fn riccati_of_a_pole() {
        let v = RationalFunction::pole_term(Var::Z, int(1), &int(0), 1);
        assert!(riccati_rhs(&v, &Rational::zero()).is_zero());
    }
}
