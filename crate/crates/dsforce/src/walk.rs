//! Randomized counterexample search by degree-preserving switches.
//!
//! A switch removes two disjoint edges and reconnects their endpoints
//! crosswise, preserving all degrees. Starting from one realization, the walk
//! repeatedly perturbs the neighbourhood of the first completable vertex with
//! a random admitted switch, hoping to reach a realization with no
//! completable vertex at all. Finding one disproves forcing; running out of
//! budget proves nothing.

use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cards::completable_vertices;
use crate::degseq::DegreeSequence;
use crate::enumerate::{visit_realizations, EnumerationError};
use crate::graph::Graph;

/// Result of a switching walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkOutcome {
    /// A realization without a completable vertex, reached after `steps`
    /// switches.
    Witness {
        /// The counterexample realization.
        graph: Graph,
        /// Number of switches applied before finding it.
        steps: usize,
    },
    /// The budget ran out; nothing is proved.
    Exhausted {
        /// Number of switches applied.
        steps: usize,
    },
}

/// All admitted switches `(a, c, b, d)` with `a < b` and endpoints covering
/// `focus` when given, in lexicographic order.
fn admitted_switches(g: &Graph, focus: Option<usize>) -> Vec<(usize, usize, usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for c in 0..n {
            if !g.has_edge(a, c) {
                continue;
            }
            for b in a + 1..n {
                for d in 0..n {
                    if g.has_edge(b, d) && g.admits_switch(a, c, b, d) {
                        if let Some(v) = focus {
                            if v != a && v != b && v != c && v != d {
                                continue;
                            }
                        }
                        out.push((a, c, b, d));
                    }
                }
            }
        }
    }
    out
}

/// Walks through realizations of `seq` by random switches, starting from the
/// enumeration's first realization. The same seed always reproduces the same
/// trajectory. At each step the first completable vertex is targeted: one
/// admitted switch touching it is chosen uniformly at random. The walk can
/// only ever disprove forcing.
pub fn switching_walk(
    seq: &DegreeSequence,
    seed: u64,
    budget: usize,
) -> Result<WalkOutcome, EnumerationError> {
    let mut start: Option<Graph> = None;
    visit_realizations(seq, |g| {
        start = Some(g.clone());
        false
    })?;
    let mut g = start.expect("a graphic sequence has a realization");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for steps in 0..=budget {
        let completable = completable_vertices(&g);
        let Some(&v) = completable.first() else {
            return Ok(WalkOutcome::Witness { graph: g, steps });
        };
        if steps == budget {
            break;
        }
        let mut moves = admitted_switches(&g, Some(v));
        if moves.is_empty() {
            moves = admitted_switches(&g, None);
        }
        let Some(&(a, c, b, d)) = moves.choose(&mut rng) else {
            return Ok(WalkOutcome::Exhausted { steps });
        };
        g = g.apply_switch(a, c, b, d).expect("chosen switch is admitted");
    }
    Ok(WalkOutcome::Exhausted { steps: budget })
}
