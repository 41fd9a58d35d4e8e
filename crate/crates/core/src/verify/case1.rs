use num_traits::Zero;

use super::descriptor::{Certificate, Family, Residual, RootLocation, SolutionDescriptor};
use super::residual::sequence_ansatz;
use crate::error::{Error, Result};
use crate::poly::{int, Rational};
use crate::recurrence::PolySequence;
use crate::roots::{count_in, refine, sturm_chain, Interval, RootBox, Slice};

/// `(m, alpha)` on the condition curve, exactly or as a box.
#[derive(Debug, Clone, PartialEq)]
pub enum RootPoint {
    Exact { m: Rational, alpha: Rational },
    Boxed { m: Interval, alpha: Interval },
}

/// `10^-30`.
pub fn default_box_width() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 30))
}

/// Turn a root box of a slice into a [`RootPoint`], after checking that the
/// box really contains a zero of the condition slice.
///
/// `b` may come from any polynomial; only the part shared with the
/// condition slice is used.
pub fn boxed_root(seq: &PolySequence, slice: &Slice, b: &RootBox, eps: Option<&Rational>) -> Result<RootPoint> {
    let cond = match slice {
        Slice::Alpha(a) => seq.condition().partial_eval(crate::poly::Var::Alpha, a)?,
        Slice::M(m) => seq.condition().partial_eval(crate::poly::Var::M, m)?,
    };
    let fixed = match slice {
        Slice::Alpha(a) | Slice::M(a) => a.clone(),
    };
    let point = |x: Rational| match slice {
        Slice::Alpha(_) => RootPoint::Exact { m: x, alpha: fixed.clone() },
        Slice::M(_) => RootPoint::Exact { m: fixed.clone(), alpha: x },
    };
    if let Some(x) = b.exact_value() {
        if cond.is_zero() || cond.sign_at(x) == 0 {
            return Ok(point(x.clone()));
        }
        return Err(Error::NotARoot(format!("{x} is not a zero of the condition slice")));
    }
    let g = if cond.is_zero() { b.poly.clone() } else { cond.gcd(&b.poly) };
    if g.is_constant() || count_in(&sturm_chain(&g), &b.lo, &b.hi) != 1 {
        return Err(Error::NotARoot(format!(
            "box ({}, {}] holds no zero of the condition slice",
            b.lo, b.hi
        )));
    }
    let mut shared = b.clone();
    shared.poly = g;
    shared.sign_hi = shared.poly.sign_at(&shared.hi);
    shared.sign_lo = -shared.sign_hi;
    let width = eps.cloned().unwrap_or_else(default_box_width);
    let r = refine(&shared, &width);
    if let Some(x) = r.exact_value() {
        return Ok(point(x.clone()));
    }
    let iv = Interval::new(r.lo, r.hi);
    let pt = Interval::point(fixed);
    Ok(match slice {
        Slice::Alpha(_) => RootPoint::Boxed { m: iv, alpha: pt },
        Slice::M(_) => RootPoint::Boxed { m: pt, alpha: iv },
    })
}

/// Largest enclosure magnitude of the residual coefficients over the box.
/// Fails if some enclosure excludes zero, i.e. the box holds no solution.
pub fn boxed_residual_bound(seq: &PolySequence, m: &Interval, alpha: &Interval) -> Result<Rational> {
    let res = sequence_ansatz(seq).residual();
    let mut bound = Rational::zero();
    for (k, c) in res.nonzero_terms() {
        let e = Interval::eval_bi(&c, m, alpha);
        if !e.contains(&Rational::zero()) {
            return Err(Error::NotARoot(format!("coefficient of z^{k} is bounded away from zero")));
        }
        let mag = e.magnitude();
        if mag > bound {
            bound = mag;
        }
    }
    Ok(bound)
}

/// Case-1 solution `P exp(int omega)` at a point of the condition curve.
///
/// Exact points must give a residual that vanishes identically; boxes get
/// an interval bound on the residual coefficients.
pub fn build_case1_solution(seq: &PolySequence, root: &RootPoint) -> Result<SolutionDescriptor> {
    let (s, d, lambda) = (seq.subcase(), seq.degree(), seq.lambda());
    let ans = sequence_ansatz(seq);
    let e2 = s.energy_e2(d as i64, lambda);
    let (m_iv, a_iv) = match root {
        RootPoint::Exact { m, alpha } => (Interval::point(m.clone()), Interval::point(alpha.clone())),
        RootPoint::Boxed { m, alpha } => (m.clone(), alpha.clone()),
    };
    let (m_mid, a_mid) = (midpoint(&m_iv), midpoint(&a_iv));
    let (p, omega, r) = ans.instantiate(&m_mid, &a_mid);
    let loc = RootLocation {
        subcase: s,
        d,
        lambda,
        m_lo: m_iv.lo.clone(),
        m_hi: m_iv.hi.clone(),
        alpha_lo: a_iv.lo.clone(),
        alpha_hi: a_iv.hi.clone(),
    };
    let mut desc = SolutionDescriptor::exponential(Family::KovacicCase1, p, omega, r)
        .with_param("subcase", s.index())
        .with_param("d", d)
        .with_param("lambda", lambda)
        .with_param("residue", s.residue().eval_at(&m_mid, &a_mid));
    let energy = Interval::eval_bi(&e2, &m_iv, &a_iv);
    let exact_energy = (energy.width().is_zero()).then(|| energy.lo.clone());
    desc = match root {
        RootPoint::Exact { .. } => desc.certify(exact_energy)?,
        RootPoint::Boxed { m, alpha } => {
            let bound = boxed_residual_bound(seq, m, alpha)?;
            let mut desc = desc.with_param("representative", "coefficients at the box midpoint");
            if exact_energy.is_none() {
                desc = desc.with_param("energy_E2_interval", format!("[{}, {}]", energy.lo, energy.hi));
            }
            desc.certificate = Some(Certificate { residual: Residual::Bounded, bound: Some(bound), energy_e2: exact_energy });
            desc
        }
    };
    if let Some(f) = desc.formal_solution() {
        desc = desc.with_param("psi", f);
    }
    desc.root = Some(loc);
    Ok(desc)
}

fn midpoint(iv: &Interval) -> Rational {
    (&iv.lo + &iv.hi) / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::recurrence::Subcase;
    use crate::roots::sturm_isolate;

    #[test]
    fn exact_odd_root_certifies() {
        let seq = PolySequence::generate(Subcase::S1, 3, -1).unwrap();
        let d = build_case1_solution(&seq, &RootPoint::Exact { m: int(0), alpha: int(-1) }).unwrap();
        let c = d.certificate.unwrap();
        assert_eq!(c.residual, Residual::Zero);
        assert_eq!(c.energy_e2, Some(int(6)));
    }

    #[test]
    fn non_root_is_rejected() {
        let seq = PolySequence::generate(Subcase::S1, 3, -1).unwrap();
        let e = build_case1_solution(&seq, &RootPoint::Exact { m: int(1), alpha: rat(1, 3) });
        assert!(matches!(e, Err(Error::NotARoot(_))));
    }

    #[test]
    fn boxed_irrational_root() {
        let seq = PolySequence::generate(Subcase::S3, 3, 1).unwrap();
        let slice = seq.condition().partial_eval(crate::poly::Var::Alpha, &rat(1, 2)).unwrap();
        let boxes = sturm_isolate(&slice, None).unwrap();
        let b = boxes.iter().find(|b| !b.is_exact()).unwrap();
        let pt = boxed_root(&seq, &Slice::Alpha(rat(1, 2)), b, None).unwrap();
        let desc = build_case1_solution(&seq, &pt).unwrap();
        let c = desc.certificate.unwrap();
        assert_eq!(c.residual, Residual::Bounded);
        assert!(c.bound.unwrap() < rat(1, 1_000_000_000));
    }
}
