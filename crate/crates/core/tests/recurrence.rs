use num_traits::Zero;
use proptest::prelude::*;
use rdirac::poly::{int, rat, Parity, Rational, Var};
use rdirac::recurrence::{
    even_product_formulas, odd_product_condition, rescale_exponent, rescaled_limit, Limit,
};
use rdirac::{PolySequence, Subcase};

/// Relation coefficients written out by hand, evaluated at a point.
fn relation_at(s: Subcase, l: i64, d: i64, lam: i64, m: &Rational, a: &Rational) -> (Rational, Rational, Rational) {
    let l_ = int(l);
    let two = int(2);
    match s {
        Subcase::S1 => (
            &l_ * (&l_ + &two * a - int(1)),
            &two * m * (&l_ - int(1)),
            &two * int(lam) * int(d - l + 2),
        ),
        Subcase::S2 => (
            &l_ * (&l_ + &two * a - int(1)),
            -&two * m * (&l_ + &two * a - int(1)),
            &two * int(lam) * int(l - d - 2),
        ),
        Subcase::S3 => (
            &l_ * (&l_ + int(1) - &two * a),
            -&two * m * &l_,
            &two * int(lam) * int(l - d - 2),
        ),
        Subcase::S4 => (
            &l_ * (&l_ + int(1) - &two * a),
            &two * m * (&l_ - &two * a),
            &two * int(lam) * int(d - l + 2),
        ),
    }
}

#[test]
fn relations_hold_pointwise() {
    let points = [(rat(1, 3), rat(-2, 5)), (int(2), rat(7, 4)), (rat(-5, 2), int(0))];
    for s in Subcase::ALL {
        for d in 1..=8u32 {
            for lam in [1, -1] {
                let seq = PolySequence::generate(s, d, lam).unwrap();
                assert_eq!(seq.first_broken_relation(), None);
                for (m, a) in &points {
                    let val = |l: i64| seq.p(l).eval_at(m, a);
                    assert!(val(d as i64 + 1).is_zero());
                    assert_eq!(val(d as i64), int(1));
                    for l in 1..=d as i64 + 1 {
                        let (c, mid, rhs) = relation_at(s, l, d as i64, lam as i64, m, a);
                        assert_eq!(c * val(l) + mid * val(l - 1), rhs * val(l - 2), "{s} d={d} l={l}");
                    }
                }
            }
        }
    }
}

#[test]
fn condition_parity_alternates_with_degree() {
    for s in Subcase::ALL {
        for d in 1..=10u32 {
            let seq = PolySequence::generate(s, d, s.default_lambda()).unwrap();
            let expected = if d % 2 == 0 { Parity::Odd } else { Parity::Even };
            let p = seq.p_minus_one();
            assert!(p.is_zero() || p.parity_in_first() == Some(expected), "{s} d={d}");
        }
    }
}

#[test]
fn odd_products_match_recurrence_at_zero_mass() {
    for s in Subcase::ALL {
        for d in (1..=9u32).step_by(2) {
            for lam in [1, -1] {
                let seq = PolySequence::generate(s, d, lam).unwrap();
                let at_zero = seq.slice_m(-1, &int(0));
                assert_eq!(at_zero, odd_product_condition(s, d, lam).unwrap(), "{s} d={d}");
            }
        }
    }
}

#[test]
fn even_products_match_recurrence_at_zero_mass() {
    for s in Subcase::ALL {
        for d in (2..=8u32).step_by(2) {
            for lam in [1, -1] {
                let seq = PolySequence::generate(s, d, lam).unwrap();
                for (l, p) in even_product_formulas(s, d, lam).unwrap() {
                    assert_eq!(seq.slice_m(l, &int(0)), p, "{s} d={d} l={l}");
                }
            }
        }
    }
}

#[test]
fn degree_in_mass() {
    for d in 1..=8u32 {
        for s in [Subcase::S2, Subcase::S3, Subcase::S4] {
            let seq = PolySequence::generate(s, d, 1).unwrap();
            assert_eq!(seq.p_minus_one().degree_first(), Some(d + 1), "{s} d={d}");
        }
        // the middle term vanishes at l = 1 in subcase 1
        let seq = PolySequence::generate(Subcase::S1, d, -1).unwrap();
        assert_eq!(seq.p_minus_one().degree_first(), Some(d - 1));
    }
}

#[test]
fn rescaled_limits_are_leading_coefficients() {
    for s in [Subcase::S2, Subcase::S4] {
        for d in 1..=8u32 {
            for lam in [1, -1] {
                let seq = PolySequence::generate(s, d, lam).unwrap();
                let mr = rescaled_limit(s, d, lam, Limit::MInfinity).unwrap();
                let ar = rescaled_limit(s, d, lam, Limit::AlphaInfinity).unwrap();
                for l in -1..=d as i64 {
                    let e = rescale_exponent(s, d, l, Limit::MInfinity);
                    assert_eq!(seq.p(l).coeff_of_first(e), *mr.r(l), "{s} d={d} l={l}");
                    let e = rescale_exponent(s, d, l, Limit::AlphaInfinity);
                    assert_eq!(seq.p(l).coeff_of_second(e).with_var(Var::M), *ar.r(l), "{s} d={d} l={l}");
                    assert!(seq.p(l).degree_first().map_or(true, |k| k <= (d as i64 - l) as u32));
                }
            }
        }
    }
}

#[test]
fn anchors_for_degree_two() {
    let seq = PolySequence::generate(Subcase::S1, 2, -1).unwrap();
    assert_eq!(seq.slice_alpha(1, &rat(9, 4)), rdirac::UniPoly::new(Var::M, vec![int(0), int(-2)]));
}

proptest! {
    #[test]
    fn condition_times_cofactor_is_last_polynomial(si in 0usize..4, d in 1u32..8, neg in any::<bool>()) {
        let s = Subcase::ALL[si];
        let lam = if neg { -1 } else { 1 };
        let seq = PolySequence::generate(s, d, lam).unwrap();
        prop_assert_eq!(&(&seq.condition_cofactor() * seq.condition()), seq.p_minus_one());
    }

    #[test]
    fn json_round_trip(si in 0usize..4, d in 1u32..6, neg in any::<bool>()) {
        let s = Subcase::ALL[si];
        let seq = PolySequence::generate(s, d, if neg { -1 } else { 1 }).unwrap();
        let back: PolySequence = serde_json::from_str(&serde_json::to_string(&seq).unwrap()).unwrap();
        prop_assert_eq!(back, seq);
    }
}
