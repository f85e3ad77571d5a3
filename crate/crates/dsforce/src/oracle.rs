//! Exhaustive forcing decisions.
//!
//! A degree sequence is *forcing* when every one of its realizations has a
//! uniquely completable card. The oracle settles the question by streaming
//! the realizations and testing each: the first realization without a
//! completable vertex is a witness against forcing, and exhausting all
//! realizations proves it.

use crate::cards::completable_vertices;
use crate::degseq::DegreeSequence;
use crate::enumerate::{visit_realizations, EnumerationError};
use crate::graph::Graph;

/// Answer to a forcing question, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcingVerdict {
    /// Every realization has a uniquely completable card; `rule` names the
    /// sufficient condition that fired, or `"oracle"` after exhaustion.
    ProvedForcing {
        /// Identifier of the justification.
        rule: String,
    },
    /// A realization without a completable vertex exists.
    ProvedNotForcing {
        /// One such realization.
        witness: Graph,
    },
    /// No applicable condition decided the question.
    Unknown,
}

impl ForcingVerdict {
    /// Convenience constructor for a catalogue decision.
    #[must_use]
    pub fn forced_by(rule: &str) -> Self {
        ForcingVerdict::ProvedForcing { rule: rule.to_owned() }
    }

    /// True for either proved outcome.
    #[must_use]
    pub fn is_decided(&self) -> bool {
        !matches!(self, ForcingVerdict::Unknown)
    }
}

/// Decides forcing by exhausting all realizations, stopping at the first
/// counterexample.
pub fn is_forcing_oracle(seq: &DegreeSequence) -> Result<ForcingVerdict, EnumerationError> {
    let mut witness: Option<Graph> = None;
    visit_realizations(seq, |g| {
        if completable_vertices(g).is_empty() {
            witness = Some(g.clone());
            false
        } else {
            true
        }
    })?;
    Ok(match witness {
        Some(graph) => ForcingVerdict::ProvedNotForcing { witness: graph },
        None => ForcingVerdict::forced_by("oracle"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> DegreeSequence {
        DegreeSequence::parse(text).unwrap()
    }

    #[test]
    fn forcing_and_non_forcing_examples() {
        assert!(matches!(
            is_forcing_oracle(&seq("3,3,3,3,3,3,4")).unwrap(),
            ForcingVerdict::ProvedForcing { rule } if rule == "oracle"
        ));
        match is_forcing_oracle(&seq("1,1,2,2,3,3")).unwrap() {
            ForcingVerdict::ProvedNotForcing { witness } => {
                assert_eq!(witness.degree_sequence(), seq("1,1,2,2,3,3"));
                assert!(completable_vertices(&witness).is_empty());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn regular_sequences_force_trivially() {
        // All degrees equal: no degree differs by one from another, so every
        // vertex completes its card; the oracle confirms by exhaustion.
        for text in ["2,2,2,2,2", "3,3,3,3,3,3", "2,2,2,2,2,2"] {
            assert!(matches!(
                is_forcing_oracle(&seq(text)).unwrap(),
                ForcingVerdict::ProvedForcing { .. }
            ));
        }
    }

    #[test]
    fn non_graphic_input_is_an_error() {
        assert!(is_forcing_oracle(&seq("1,1,1")).is_err());
    }
}
