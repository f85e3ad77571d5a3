//! General bound propagation: assume no completable card, tighten, look for
//! a contradiction.
//!
//! No special structure is required: the engine's no-completable layer
//! (forced bad neighbours, forced witness misses, neighbourly-set caps) plus
//! guaranteed-edge floors over the candidate mask pairs either collapses
//! some interval or it does not. Two strengths are reported separately:
//!
//! * `G.1` — contradiction without neighbourly-set floors;
//! * `G.2` — contradiction once those floors are added;
//! * `G.3` — contradiction after refutation shaving of the interval
//!   endpoints (assume an endpoint value, propagate, discard it if that
//!   collapses).

use super::Catalog;
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;

/// Runs bound propagation under the no-completable-card hypothesis.
pub fn rule_general(seq: &DegreeSequence) -> ForcingVerdict {
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
    if cat.g1().is_contradictory() {
        return Some("G.1".into());
    }
    if cat.g2().is_contradictory() {
        return Some("G.2".into());
    }
    if cat.g3().is_contradictory() {
        return Some("G.3".into());
    }
    None
}

/// Baseline variant: propagation without neighbourly-set floors.
pub(crate) fn fire_baseline(cat: &mut Catalog) -> Option<String> {
    if !cat.engine_ok() {
        return None;
    }
    if cat.g1().is_contradictory() {
        return Some("G.1".into());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(text: &str) -> ForcingVerdict {
        rule_general(&DegreeSequence::parse(text).unwrap())
    }

    #[test]
    fn contradiction_on_saturated_low_half() {
        assert!(matches!(
            verdict("2,2,2,2,4,4,5,5"),
            ForcingVerdict::ProvedForcing { .. }
        ));
    }

    #[test]
    fn contradiction_with_middle_classes() {
        assert!(matches!(
            verdict("1,2,2,2,3,3,5,6"),
            ForcingVerdict::ProvedForcing { .. }
        ));
    }

    #[test]
    fn regular_sequence_stays_unknown_here() {
        // No bad vertices: this family does not engage (the multiset tests
        // cover such sequences).
        assert!(matches!(verdict("3,3,3,3"), ForcingVerdict::Unknown));
    }
}
