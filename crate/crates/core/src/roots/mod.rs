//! Exact real-root isolation and the root-count certificates built on it.
//!
//! All counting goes through Sturm chains over the rationals; boxes are
//! half-open `(lo, hi]` and become degenerate when a bisection point hits a
//! rational root.

mod certify;
mod interval;
mod scan;
mod sturm;

pub use certify::{
    asymptote_pairing, check_interlacing, check_root_count, count_positive_roots_in_m, distinguished_root,
    large_m_asymptotes, near_zero_m_roots, point_box, positive_roots, predicted_asymptotes, strictly_alternate,
    AsymptoteAttempt, AsymptoteReport, InterlacingReport, NearZeroReport, NearZeroSlice, Pairing, RootCount,
    RootCountCheck, Slice, Violation,
};
pub use interval::Interval;
pub use scan::{
    curve_rows, fraction, grid, parse_csv, preset, scan_curve, to_csv, to_json, CurvePoint, CurveRow,
    ScanParams, CSV_HEADER, PRESETS,
};
pub use sturm::{
    bisect, compare_roots, count_in, distance_bound, isolate_squarefree, rational_roots, refine, root_bound, sturm_chain,
    sturm_isolate, MultiplicityCertificate, RootBox,
};

/// Serde adapter for `Option<Rational>` as `null` or `["num", "den"]`.
pub(crate) mod opt_rational {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly::{Rational, RationalStr};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        q.as_ref().map(RationalStr::to_pair).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<[String; 2]>::deserialize(d)?
            .map(|p| RationalStr::from_pair(&p).map_err(serde::de::Error::custom))
            .transpose()
    }
}
