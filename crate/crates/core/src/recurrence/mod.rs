//! Polynomial sequences of the four case-1 subcases for
//! `V = alpha/z + m + lambda z`, with `lambda = +1` or `-1`.
//!
//! The relation at index `l` reads `coef_l p_l + mid_l p_{l-1} = rhs_l p_{l-2}`
//! and is iterated from `l = d+1` (with `p_{d+1} = 0`, `p_d = 1`) down to
//! `l = 1`, which defines `p_{-1}`. `rhs_l` is a nonzero integer for every
//! such `l`, so each `p_l` is an exact polynomial in `(m, alpha)`.

mod closed_form;
mod rescaled;
mod sequence;
mod subcase;

pub use closed_form::{even_ladder, even_product_formulas, odd_ladder, odd_product_condition};
pub use rescaled::{rescale_exponent, rescaled_limit, Limit, RescaledSequence};
pub use sequence::PolySequence;
pub use subcase::{AlphaRegion, Energy, Subcase};
