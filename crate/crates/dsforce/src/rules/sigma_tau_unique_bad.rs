//! σ/τ saturation rules pivoting on unique vertices of bad degree.

use super::Catalog;
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;

/// Runs the σ/τ saturation rules with unique bad-degree pivots.
pub fn rule_sigma_tau_unique_bad(seq: &DegreeSequence) -> ForcingVerdict {
    if !seq.is_graphic() {
        return ForcingVerdict::Unknown;
    }
    let mut cat = Catalog::new(seq);
    match fire(&mut cat) {
        Some(rule) => ForcingVerdict::ProvedForcing { rule },
        None => ForcingVerdict::Unknown,
    }
}

pub(crate) fn fire(cat: &mut Catalog) -> Option<String> {
    if !cat.engine_ok() {
        return None;
    }
    None
}
