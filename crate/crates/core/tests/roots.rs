use num_traits::Zero;
use proptest::prelude::*;
use rdirac::poly::{int, rat, BiPoly, Rational, Var};
use rdirac::recurrence::odd_ladder;
use rdirac::roots::{
    check_interlacing, count_positive_roots_in_m, large_m_asymptotes, near_zero_m_roots, refine, scan_curve,
    sturm_isolate, to_csv, parse_csv, Interval, RootCount, ScanParams, Slice, CSV_HEADER,
};
use rdirac::{PolySequence, Subcase, UniPoly};

fn seq(s: Subcase, d: u32, lambda: i32) -> PolySequence {
    PolySequence::generate(s, d, lambda).unwrap()
}

#[test]
fn positive_root_counts() {
    let c = count_positive_roots_in_m(&seq(Subcase::S1, 7, -1), &rat(1, 2)).unwrap();
    assert_eq!(c.count(), Some(3));
    let c = count_positive_roots_in_m(&seq(Subcase::S3, 6, 1), &rat(1, 2)).unwrap();
    assert_eq!(c.count(), Some(3));
    let c = count_positive_roots_in_m(&seq(Subcase::S2, 4, 1), &int(0)).unwrap();
    assert_eq!(c, RootCount::WholeLine);
}

#[test]
fn interlacing_in_mass() {
    let s = seq(Subcase::S1, 6, -1);
    let r = check_interlacing(&s, &Slice::Alpha(int(1)), 6, 1).unwrap();
    assert!(r.holds(), "{:?}", r.violation);
    assert_eq!(r.pairs_checked, 5);

    let s2 = seq(Subcase::S1, 2, -1);
    assert!(check_interlacing(&s2, &Slice::Alpha(int(1)), 2, 1).unwrap().holds());

    // flip the sign of the m^2 term of p_4: the roots become imaginary
    let p4 = s.p(4);
    let flipped = BiPoly::from_terms(
        BiPoly::DEFAULT_VARS,
        p4.terms().map(|(&(i, j), c)| ((i, j), if i == 2 { -c.clone() } else { c.clone() })),
    );
    let bad = s.with_replaced(4, flipped);
    let r = check_interlacing(&bad, &Slice::Alpha(int(1)), 6, 1).unwrap();
    let v = r.violation.expect("corruption must be detected");
    assert!(v.l == 5 || v.l == 4);
}

#[test]
fn near_zero_odd_degree() {
    let rep = near_zero_m_roots(Subcase::S1, 7, &rat(1, 100)).unwrap();
    assert!(rep.passes());
    for sl in &rep.slices {
        assert_eq!(sl.roots.len(), 4);
        assert!(sl.ladder_distance.as_ref().unwrap() < &rat(1, 10));
    }
    let rep = near_zero_m_roots(Subcase::S4, 5, &rat(1, 100)).unwrap();
    assert!(rep.passes());
    assert_eq!(rep.slices[0].distinguished.as_ref().unwrap().exact_value(), Some(&int(3)));
}

#[test]
fn near_zero_even_degree_interleaves() {
    let rep = near_zero_m_roots(Subcase::S1, 4, &rat(1, 100)).unwrap();
    assert!(rep.passes());
    assert_eq!(rep.slices[0].roots.len(), 2);
    assert_eq!(rep.slices[0].interlacing, Some(Ok(())));
}

#[test]
fn large_mass_pairs_with_asymptotes() {
    let tol = rat(1, 10);
    let rep = large_m_asymptotes(Subcase::S2, 5, 1, &int(50), &tol).unwrap();
    assert!(rep.conclusive);
    assert_eq!(rep.attempts[0].pairs.len(), 5);
    assert!(rep.exact_factor_divides);
    let rep = large_m_asymptotes(Subcase::S4, 5, 1, &int(50), &tol).unwrap();
    assert!(rep.exact_factor_divides && rep.conclusive);
    let rep = large_m_asymptotes(Subcase::S2, 1, 1, &int(50), &tol).unwrap();
    assert_eq!(rep.attempts[0].pairs.len(), 1);
    assert_eq!(rep.attempts[0].pairs[0].asymptote, rat(-1, 2));
}

fn params(s: Subcase, d: u32, lambda: i32, lo: Rational, hi: Rational) -> ScanParams {
    ScanParams {
        subcase: s,
        d,
        lambda,
        m_lo: lo,
        m_hi: hi,
        m_step: rat(1, 2),
        eps: rat(1, 1 << 20),
        alpha_window: None,
    }
}

#[test]
fn scan_columns() {
    let pts = scan_curve(&params(Subcase::S1, 7, -1, int(-1), int(1))).unwrap();
    assert_eq!(pts.len(), 5);
    let zero = &pts[2];
    assert!(zero.m.is_zero());
    let ladder: Vec<Rational> = odd_ladder(Subcase::S1, 7).into_iter().filter(|x| !x.is_zero()).collect();
    assert_eq!(zero.alpha_roots.len(), ladder.len());
    for x in &ladder {
        assert!(zero.alpha_roots.iter().any(|b| b.encloses(x)));
    }
    let pts = scan_curve(&params(Subcase::S4, 5, 1, int(-2), int(2))).unwrap();
    for p in &pts {
        assert!(p.alpha_roots.iter().any(|b| b.encloses(&int(3))), "m = {}", p.m);
    }
    let empty = scan_curve(&params(Subcase::S4, 5, 1, int(1), int(0))).unwrap();
    assert!(empty.is_empty());
    assert_eq!(to_csv(&empty), format!("{CSV_HEADER}\n"));
}

#[test]
fn csv_round_trip() {
    let pts = scan_curve(&params(Subcase::S3, 3, 1, int(0), int(1))).unwrap();
    let text = to_csv(&pts);
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows, rdirac::roots::curve_rows(&pts));
    assert!(!text.contains('\r'));
}

#[test]
fn boxes_bracket_a_sign_change() {
    let s = seq(Subcase::S2, 6, 1);
    let p = s.slice_m(-1, &rat(3, 2));
    for b in sturm_isolate(&p, None).unwrap() {
        if b.is_exact() {
            assert_eq!(p.sign_at(&b.lo), 0);
            continue;
        }
        assert_eq!(b.poly.sign_at(&b.hi), b.sign_hi);
        let r = refine(&b, &(b.width() / int(1024)));
        let lo_side = r.poly.sign_at(&r.lo);
        assert!(r.is_exact() || lo_side == 0 || lo_side == -r.sign_hi);
        assert!(r.is_exact() || r.poly.sign_at(&r.hi) == r.sign_hi);
    }
}

#[test]
fn interval_bound_of_condition_at_a_box() {
    let s = seq(Subcase::S3, 3, 1);
    let p = s.slice_m(-1, &int(1));
    let b = refine(&sturm_isolate(&p, None).unwrap()[0], &rat(1, 1 << 30));
    let v = Interval::new(b.lo.clone(), b.hi.clone()).eval(&p);
    assert!(v.contains(&int(0)));
    assert!(v.magnitude() < rat(1, 1000));
}

fn distinct(mut v: Vec<(i64, i64)>) -> Vec<Rational> {
    let mut out: Vec<Rational> = v.drain(..).map(|(n, d)| rat(n, d)).collect();
    out.sort();
    out.dedup();
    out
}

proptest! {
    #[test]
    fn finds_every_planted_root(roots in prop::collection::vec((-40i64..40, 1i64..9), 1..7), extra in 0i64..3) {
        let rs = distinct(roots);
        let mut p = UniPoly::one(Var::Z);
        for r in &rs {
            p = &p * &UniPoly::linear_root(Var::Z, r);
        }
        // an irreducible quadratic factor adds no real roots
        p = &p * &UniPoly::from_ints(Var::Z, &[1 + extra, 0, 1]);
        let boxes = sturm_isolate(&p, None).unwrap();
        prop_assert_eq!(boxes.len(), rs.len());
        for (b, r) in boxes.iter().zip(&rs) {
            prop_assert!(b.encloses(r));
            prop_assert_eq!(b.multiplicity, 1);
        }
    }

    #[test]
    fn repeated_roots_report_multiplicity(n in -20i64..20, k in 1usize..4) {
        let r = rat(n, 3);
        let mut p = UniPoly::from_ints(Var::Z, &[-7, 0, 1]);
        for _ in 0..k {
            p = &p * &UniPoly::linear_root(Var::Z, &r);
        }
        let boxes = sturm_isolate(&p, None).unwrap();
        prop_assert_eq!(boxes.len(), 3);
        let hit = boxes.iter().find(|b| b.encloses(&r)).unwrap();
        prop_assert_eq!(hit.multiplicity, k);
    }
}
