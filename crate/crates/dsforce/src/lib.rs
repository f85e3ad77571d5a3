//! Forcing degree sequences.
//!
//! A degree sequence is *forcing* when every graph realizing it has a vertex
//! whose deletion leaves a card completable in only one way up to the degrees
//! of the re-attached neighbourhood. This crate decides that property two
//! ways — an exhaustive oracle over all realizations, and a catalogue of
//! sufficient conditions built on stub-count bounds — and exploits it to
//! generate realization lists without isomorph duplicates.

#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![warn(clippy::all)]

pub mod canon;
pub mod cards;
pub mod census;
pub mod degseq;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod partition;
pub mod rules;
pub mod walk;

pub use canon::{
    are_isomorphic, canonical_form, canonical_form_coloured, rooted_certificate, CanonicalForm,
};
pub use cards::{
    complete_card, completable_vertices, is_ds_reconstructible, is_weakly_ds_reconstructible,
    Card, CardError, CompletionOutcome, CompletionStatus, DegreeGroup,
};
pub use census::{census, graphic_sequences, CensusRow};
pub use degseq::{DegreeClass, DegreeSequence, SequenceError, MAX_VERTICES};
pub use enumerate::{
    enumerate_realizations, enumerate_realizations_reference, realization_count,
    visit_realizations, EnumerationError,
};
pub use graph::{Graph, GraphError};
pub use graph6::{read_graph6, write_graph6, Graph6Error};
pub use oracle::{is_forcing_oracle, ForcingVerdict};
pub use partition::{ClassSet, PartitionView, RoleError};
pub use rules::{
    apply_baseline_rules, apply_catalog, rule_bad_stubs, rule_easy, rule_general, rule_pendants,
    rule_sigma_tau, rule_sigma_tau_unique, rule_sigma_tau_unique_bad, rule_unique, CatalogError,
    RuleReport, UniqueVertexContext,
};
pub use walk::{switching_walk, WalkOutcome};
