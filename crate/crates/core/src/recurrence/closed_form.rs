//! Products for the `m = 0` slices. With `m = 0` the middle term drops out and
//! the recurrence links only indices of equal parity.

use super::subcase::{check_lambda, Subcase};
use crate::error::{Error, Result};
use crate::poly::{int, rat, Rational, UniPoly, Var};

fn alpha_linear(c0: Rational, c1: Rational) -> UniPoly {
    UniPoly::new(Var::Alpha, vec![c0, c1])
}

/// `p_{-1}` at `m = 0` for odd `d`, as a product over `n = 0..=(d-1)/2`.
pub fn odd_product_condition(subcase: Subcase, d: u32, lambda: i32) -> Result<UniPoly> {
    check_lambda(lambda)?;
    if d % 2 == 0 {
        return Err(Error::Domain(format!("odd product needs odd d, got {d}")));
    }
    let d = d as i64;
    let lam = lambda as i64;
    let mut out = UniPoly::one(Var::Alpha);
    for n in 0..=(d - 1) / 2 {
        let (root_factor, den) = match subcase {
            Subcase::S1 => (alpha_linear(int(n), int(1)), lam * (d - 2 * n + 1)),
            Subcase::S2 => (alpha_linear(int(n), int(1)), lam * (2 * n - d - 1)),
            Subcase::S3 => (alpha_linear(int(n + 1), int(-1)), lam * (2 * n - d - 1)),
            Subcase::S4 => (alpha_linear(int(n + 1), int(-1)), lam * (d - 2 * n + 1)),
        };
        out = &out * &root_factor.scale(&rat(2 * n + 1, den));
    }
    Ok(out)
}

/// Roots of [`odd_product_condition`]: `-n` in subcases 1-2, `n+1` in 3-4.
pub fn odd_ladder(subcase: Subcase, d: u32) -> Vec<Rational> {
    let top = (d as i64 - 1) / 2;
    (0..=top)
        .map(|n| match subcase {
            Subcase::S1 | Subcase::S2 => int(-n),
            Subcase::S3 | Subcase::S4 => int(n + 1),
        })
        .collect()
}

fn even_factor(subcase: Subcase, k: i64, d: i64, lam: i64) -> UniPoly {
    match subcase {
        // -2k (alpha + k - 1/2) / (d - 2k + 2) for lambda = -1
        Subcase::S1 => alpha_linear(rat(2 * k - 1, 2), int(1)).scale(&rat(2 * k, lam * (d - 2 * k + 2))),
        Subcase::S2 => alpha_linear(int(2 * k - 1), int(2)).scale(&rat(k, lam * (2 * k - d - 2))),
        // k (2 alpha - 2k - 1) / (d - 2k + 2) for lambda = +1
        Subcase::S3 => alpha_linear(int(-2 * k - 1), int(2)).scale(&rat(k, lam * (d - 2 * k + 2))),
        Subcase::S4 => alpha_linear(int(2 * k + 1), int(-2)).scale(&rat(k, lam * (d - 2 * k + 2))),
    }
}

/// Even-indexed `p_l` at `m = 0` for even `d`, as `(l, p_l)` from `l = d`
/// down to `l = 0`. Each is a product over `k = l/2 + 1 ..= d/2`.
pub fn even_product_formulas(subcase: Subcase, d: u32, lambda: i32) -> Result<Vec<(i64, UniPoly)>> {
    check_lambda(lambda)?;
    if d % 2 == 1 || d == 0 {
        return Err(Error::Domain(format!("even products need even d >= 2, got {d}")));
    }
    let d = d as i64;
    let mut out = Vec::new();
    let mut acc = UniPoly::one(Var::Alpha);
    out.push((d, acc.clone()));
    for k in (1..=d / 2).rev() {
        acc = &acc * &even_factor(subcase, k, d, lambda as i64);
        out.push((2 * k - 2, acc.clone()));
    }
    Ok(out)
}

/// Roots of the even-indexed `p_l` at `m = 0`, in increasing order.
pub fn even_ladder(subcase: Subcase, d: u32, l: i64) -> Vec<Rational> {
    let mut roots: Vec<Rational> = (l / 2 + 1..=d as i64 / 2)
        .map(|k| match subcase {
            Subcase::S1 | Subcase::S2 => rat(1 - 2 * k, 2),
            Subcase::S3 | Subcase::S4 => rat(2 * k + 1, 2),
        })
        .collect();
    roots.sort();
    roots
}
