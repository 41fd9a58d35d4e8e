use super::{int, Coeff, Poly, Var};

/// Associated Laguerre polynomial `L_d^(a)(x)` in the variable `var`, built
/// from `(k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}`.
///
/// The parameter may be symbolic (e.g. `2 alpha - 1` as a [`super::BiPoly`]).
pub fn laguerre_assoc<C: Coeff>(d: usize, a: &C, var: Var) -> Poly<C> {
    let one = Poly::one(var);
    if d == 0 {
        return one;
    }
    let x = Poly::identity(var);
    let mut prev = one;
    let mut cur = &Poly::constant(var, C::one() + a.clone()) - &x;
    for k in 1..d {
        let kk = C::from_int(k as i64);
        let lin = &Poly::constant(var, C::from_int(2 * k as i64 + 1) + a.clone()) - &x;
        let next = &(&lin * &cur) - &prev.mul_coeff(&(kk + a.clone()));
        let next = next.scale(&int(k as i64 + 1).recip());
        prev = cur;
        cur = next;
    }
    cur
}
