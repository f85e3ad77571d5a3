//! Catalogue of sufficient conditions for a degree sequence to be forcing.
//!
//! A sequence is forcing when every realization contains a completable card.
//! Each rule family here works with the contrapositive: assume some
//! realization has **no** completable card, derive stub-count bounds with the
//! shared [`engine::BoundState`], and fire when the bounds contradict. The
//! families range from direct multiset tests ([`rule_easy`]) through general
//! bound propagation ([`rule_general`]) to specialised arguments around bad
//! stubs, unique-degree vertices, pendant vertices, and σ/τ saturation.
//!
//! [`apply_catalog`] runs every family in a fixed order on the sequence and
//! its complement (forcing is preserved by complementation) and reports the
//! first rule that fires. A verdict of `Unknown` is always legal: the
//! catalogue proves forcing but never disproves it.

pub mod engine;

mod bad_stubs;
mod easy;
mod general;
mod pendants;
mod sigma_tau;
mod sigma_tau_unique;
mod sigma_tau_unique_bad;
mod unique;

pub use bad_stubs::rule_bad_stubs;
pub use easy::rule_easy;
pub use general::rule_general;
pub use pendants::rule_pendants;
pub use sigma_tau::rule_sigma_tau;
pub use sigma_tau_unique::rule_sigma_tau_unique;
pub use sigma_tau_unique_bad::rule_sigma_tau_unique_bad;
pub use unique::{rule_unique, UniqueVertexContext};

use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;
use crate::partition::{ClassSet, PartitionView};
use engine::BoundState;
use std::fmt;

/// Outcome of running the catalogue on one sequence.
#[derive(Debug, Clone)]
pub struct RuleReport {
    /// The sequence the catalogue was asked about.
    pub sequence: DegreeSequence,
    /// `ProvedForcing` when a rule fired, otherwise `Unknown`.
    pub verdict: ForcingVerdict,
    /// Identifier of the fired sub-rule; present exactly when the verdict is
    /// `ProvedForcing`. A `(complement)` suffix marks a rule that fired on
    /// the complementary sequence.
    pub fired_rule: Option<String>,
    /// Degree-class view in effect when the rule fired (the complement's
    /// view for complement firings).
    pub partition_used: Option<PartitionView>,
}

/// Errors from the catalogue entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// The input is not the degree sequence of any graph.
    NotGraphic,
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::NotGraphic => write!(f, "sequence is not graphic"),
        }
    }
}

impl std::error::Error for CatalogError {}

/// Shared per-sequence context: the degree-class view, the candidate mask
/// pairs the engine refines over, and lazily built prepared bound states.
pub(crate) struct Catalog {
    pub seq: DegreeSequence,
    pub view: PartitionView,
    pub pairs: Vec<(ClassSet, ClassSet)>,
    q: Option<BoundState>,
    g1: Option<BoundState>,
    g2: Option<BoundState>,
    g3: Option<BoundState>,
}

impl Catalog {
    pub fn new(seq: &DegreeSequence) -> Self {
        let view = PartitionView::from_sequence(seq);
        let pairs = candidate_pairs(&view);
        Catalog { seq: seq.clone(), view, pairs, q: None, g1: None, g2: None, g3: None }
    }

    /// Whether the engine can handle this partition at all.
    pub fn engine_ok(&self) -> bool {
        !self.view.bad_classes().is_empty() && self.view.classes().len() <= engine::MAX_CLASSES
    }

    /// Query state: the no-completable-card hypothesis propagated to a fixed
    /// point with no pair-specific floors. Named rules read their σ/τ inputs
    /// here; the values stay meaningful even when propagation alone has
    /// already found a contradiction, since every tightening is individually
    /// justified.
    pub fn q(&mut self) -> &BoundState {
        if self.q.is_none() {
            let mut bs = BoundState::new(self.view.clone());
            bs.assume_no_completable_card();
            bs.run(&[]);
            self.q = Some(bs);
        }
        self.q.as_ref().expect("just built")
    }

    /// Bound state under the no-completable-card hypothesis with guaranteed
    /// -edge floors and dynamic refinement, but without neighbourly-set
    /// floors.
    pub fn g1(&mut self) -> &BoundState {
        if self.g1.is_none() {
            let mut bs = BoundState::new(self.view.clone());
            bs.assume_no_completable_card();
            for &(i, j) in &self.pairs {
                bs.post_pair_floors(i, j, false);
            }
            bs.run(&self.pairs);
            self.g1 = Some(bs);
        }
        self.g1.as_ref().expect("just built")
    }

    /// [`Catalog::g1`] plus the neighbourly-set floors.
    pub fn g2(&mut self) -> &BoundState {
        if self.g2.is_none() {
            let mut bs = self.g1().clone();
            if !bs.is_contradictory() {
                for &(i, j) in &self.pairs.clone() {
                    bs.post_pair_floors(i, j, true);
                }
                bs.run(&self.pairs);
            }
            self.g2 = Some(bs);
        }
        self.g2.as_ref().expect("just built")
    }

    /// [`Catalog::g2`] sharpened by refutation shaving of every interval
    /// endpoint. Much slower to build, so cached; rules that hinge on exact
    /// saturation of a stub count read their σ/τ from this state.
    pub fn g3(&mut self) -> &BoundState {
        if self.g3.is_none() {
            let mut bs = self.g2().clone();
            if !bs.is_contradictory() {
                bs.shave(&self.pairs, 3);
            }
            self.g3 = Some(bs);
        }
        self.g3.as_ref().expect("just built")
    }

    /// Fresh working copy of the strongest prepared state, for rule-specific
    /// postings.
    pub fn prepared(&mut self) -> BoundState {
        self.g2();
        self.g2.clone().expect("just built")
    }

    /// Fresh working copy of the shaved state.
    pub fn prepared_sharp(&mut self) -> BoundState {
        self.g3();
        self.g3.clone().expect("just built")
    }

    /// Runs a working copy back to a fixed point after rule postings.
    pub fn settle(&self, bs: &mut BoundState) {
        bs.run(&self.pairs);
    }
}

/// Disjoint mask pairs the engine refines and scans: every suffix of the
/// degree-ascending class list against its complement, with variants that
/// drop dull classes from the low side and bad classes from the high side.
fn candidate_pairs(view: &PartitionView) -> Vec<(ClassSet, ClassSet)> {
    let nclasses = view.classes().len();
    let dull = view.dull_classes();
    let bad = view.bad_classes();
    let mut out: Vec<(ClassSet, ClassSet)> = Vec::new();
    let push = |out: &mut Vec<(ClassSet, ClassSet)>, i: ClassSet, j: ClassSet| {
        if !i.is_empty() && !j.is_empty() && i.is_disjoint(j) && !out.contains(&(i, j)) {
            out.push((i, j));
        }
    };
    for split in 1..nclasses {
        let mut j = ClassSet::EMPTY;
        for a in split..nclasses {
            j = j.union(ClassSet::single(a));
        }
        let i = view.complement_of(j);
        push(&mut out, i, j);
        push(&mut out, i.minus(dull), j);
        push(&mut out, i, j.minus(bad));
        push(&mut out, i.minus(dull), j.minus(bad));
        push(&mut out, j, i);
        push(&mut out, j.minus(dull), i);
    }
    out
}

/// Signed guaranteed-edge count χ(i,j) as an `i64`.
pub(crate) fn chi64(view: &PartitionView, i: ClassSet, j: ClassSet) -> i64 {
    view.chi(i, j) as i64
}

/// Closed-form refined guaranteed-edge floor for disjoint `i`, `j` under the
/// no-completable-card hypothesis, mirroring the dynamic engine floor but
/// reading inner τ values from the given state. Returns at least χ(i,j).
pub(crate) fn guarded_floor(view: &PartitionView, q: &BoundState, i: ClassSet, j: ClassSet) -> i64 {
    let chi = chi64(view, i, j);
    if i.is_empty() || j.is_empty() || !i.is_disjoint(j) {
        return chi;
    }
    let dmask = view.dull_classes();
    let nj = view.n_of(j) as i64;
    if i.is_disjoint(dmask) {
        let s = view.complement_of(i.union(j)).minus(dmask);
        let ns = view.n_of(s) as i64;
        chi + nj + (nj * ns - q.tau(s, j)).max(0)
    } else if view.is_complement_neighbourly(i) {
        let xi = view.xi(i);
        if xi < 0 {
            return chi;
        }
        let c = i.intersect(view.bad_classes());
        let singles = view.kappa(j, xi as usize) as i64;
        let doubles = view.kappa(j, view.n() - view.n_of(i)) as i64;
        chi + singles + (doubles - q.tau(c, j)).max(0)
    } else {
        chi
    }
}

/// Closed-form neighbourly-set floor for disjoint `i`, `j` under the
/// no-completable-card hypothesis: outsiders of degree |j| must each be
/// missed by a `j`-member, and degree-(|j|−1) members of `j` must each miss
/// inside `j`, so that many `j`-stubs cannot escape past `i`'s guarantee.
pub(crate) fn neighbourly_floor(view: &PartitionView, i: ClassSet, j: ClassSet) -> i64 {
    let chi = chi64(view, i, j);
    if i.is_empty() || j.is_empty() || !i.is_disjoint(j) || !view.is_neighbourly_set(j) {
        return chi;
    }
    let nj = view.n_of(j);
    let s = view.complement_of(i.union(j));
    let missed_outsiders = view.kappa(s, nj) as i64;
    let missing_members = if nj >= 1 { view.kappa(j, nj - 1) as i64 } else { 0 };
    chi + missed_outsiders + missing_members
}

/// Closed-form-only lower bound on ε(i,j): the maximum of the printed
/// floors, with propagated values used solely for their inner τ terms.
pub(crate) fn sigma_closed(cat: &mut Catalog, i: ClassSet, j: ClassSet) -> i64 {
    if i.is_empty() || j.is_empty() || !i.is_disjoint(j) {
        return 0;
    }
    let view = cat.view.clone();
    let q = cat.q();
    chi64(&view, i, j)
        .max(guarded_floor(&view, q, i, j))
        .max(neighbourly_floor(&view, i, j))
        .max(0)
}

/// Best provable lower bound on ε(i,j): the maximum of the propagated query
/// value and the closed-form floors. Zero when either side is empty.
pub(crate) fn sigma_best(cat: &mut Catalog, i: ClassSet, j: ClassSet) -> i64 {
    if i.is_empty() || j.is_empty() {
        return 0;
    }
    let view = cat.view.clone();
    let q = cat.q();
    let mut best = q.sigma(i, j);
    if i.is_disjoint(j) {
        best = best
            .max(chi64(&view, i, j))
            .max(guarded_floor(&view, q, i, j))
            .max(neighbourly_floor(&view, i, j));
    }
    best.max(0)
}

/// Best provable upper bound on ε(i,j): the propagated query value, plus the
/// closed-form caps that hold whenever every vertex needs a bad neighbour.
pub(crate) fn tau_best(cat: &mut Catalog, i: ClassSet, j: ClassSet) -> i64 {
    if i.is_empty() || j.is_empty() {
        return 0;
    }
    let view = cat.view.clone();
    let q = cat.q();
    let mut best = q.tau(i, j);
    if i.is_disjoint(j) {
        let m_i = view.m_of(i) as i64;
        let n_i = view.n_of(i) as i64;
        if j.is_disjoint(view.bad_classes()) {
            // Every `i`-vertex needs a bad edge, and none lands in `j`.
            best = best.min(m_i - n_i);
        }
        if view.is_neighbourly_set(j) {
            // Degree-|j| members of `i` must each miss somebody in `j`.
            best = best.min(m_i - view.kappa(i, view.n_of(j)) as i64);
        }
    }
    best.max(0)
}

/// Unions of good classes taken from the top of the degree order down:
/// `{highest good}`, `{two highest goods}`, … plus any extra sets supplied.
pub(crate) fn good_suffix_sets(view: &PartitionView) -> Vec<ClassSet> {
    let bad = view.bad_classes();
    let mut out = Vec::new();
    let mut acc = ClassSet::EMPTY;
    for a in (0..view.classes().len()).rev() {
        if bad.contains(a) {
            continue;
        }
        acc = acc.union(ClassSet::single(a));
        out.push(acc);
    }
    out
}

/// Unions of the lowest `t` classes for every `t` short of everything.
pub(crate) fn prefix_sets(view: &PartitionView) -> Vec<ClassSet> {
    let mut out = Vec::new();
    let mut acc = ClassSet::EMPTY;
    for a in 0..view.classes().len().saturating_sub(1) {
        acc = acc.union(ClassSet::single(a));
        out.push(acc);
    }
    out
}

type Family = fn(&mut Catalog) -> Option<String>;

/// Family order for the full catalogue.
const FULL_FAMILIES: &[Family] = &[
    easy::fire,
    general::fire,
    bad_stubs::fire,
    unique::fire,
    pendants::fire,
    sigma_tau::fire,
    sigma_tau_unique::fire,
    sigma_tau_unique_bad::fire,
];

/// Families for the baseline measurement: multiset tests plus plain bound
/// propagation, without the specialised families or neighbourly floors.
const BASELINE_FAMILIES: &[Family] = &[easy::fire, general::fire_baseline];

/// Runs the full catalogue on `seq` and its complement; first firing rule
/// wins. `Unknown` means no rule applied — it never asserts non-forcing.
pub fn apply_catalog(seq: &DegreeSequence) -> Result<RuleReport, CatalogError> {
    run_families(seq, FULL_FAMILIES)
}

/// Runs only the baseline rules (see [`apply_catalog`] for the full set).
pub fn apply_baseline_rules(seq: &DegreeSequence) -> Result<RuleReport, CatalogError> {
    run_families(seq, BASELINE_FAMILIES)
}

fn run_families(seq: &DegreeSequence, families: &[Family]) -> Result<RuleReport, CatalogError> {
    if !seq.is_graphic() {
        return Err(CatalogError::NotGraphic);
    }
    let complement = seq.complement();
    let mut straight = Catalog::new(seq);
    let mut reflected = Catalog::new(&complement);
    for family in families {
        if let Some(rule) = family(&mut straight) {
            return Ok(RuleReport {
                sequence: seq.clone(),
                verdict: ForcingVerdict::ProvedForcing { rule: rule.clone() },
                fired_rule: Some(rule),
                partition_used: Some(straight.view.clone()),
            });
        }
        if let Some(rule) = family(&mut reflected) {
            let tagged = format!("{rule} (complement)");
            return Ok(RuleReport {
                sequence: seq.clone(),
                verdict: ForcingVerdict::ProvedForcing { rule: tagged.clone() },
                fired_rule: Some(tagged),
                partition_used: Some(reflected.view.clone()),
            });
        }
    }
    Ok(RuleReport {
        sequence: seq.clone(),
        verdict: ForcingVerdict::Unknown,
        fired_rule: None,
        partition_used: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(text: &str) -> RuleReport {
        apply_catalog(&DegreeSequence::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn catalog_picks_first_firing_family() {
        let r = report("2,3,3,3,5,5,5,5,5,6");
        assert_eq!(r.fired_rule.as_deref(), Some("L6.1"));
        assert!(matches!(r.verdict, ForcingVerdict::ProvedForcing { .. }));
        assert!(r.partition_used.is_some());
    }

    #[test]
    fn catalog_all_good_sequence_fires_early() {
        let r = report("2,2,2,2,2");
        assert_eq!(r.fired_rule.as_deref(), Some("L1.3"));
    }

    #[test]
    fn catalog_unknown_is_legal() {
        let r = report("1,1,2,2,3,3");
        assert!(matches!(r.verdict, ForcingVerdict::Unknown));
        assert!(r.fired_rule.is_none());
        assert!(r.partition_used.is_none());
    }

    #[test]
    fn catalog_rejects_non_graphic() {
        let err = apply_catalog(&DegreeSequence::parse("1,1,1").unwrap());
        assert_eq!(err.unwrap_err(), CatalogError::NotGraphic);
    }
}
