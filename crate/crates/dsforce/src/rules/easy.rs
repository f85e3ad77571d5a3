//! Forcing tests that read the degree multiset directly.
//!
//! These need no bound propagation. A card obtained by deleting `v` is
//! completable whenever its candidate-degree set D_v is empty or sits inside
//! N[v]; each test below exhibits, for every realization, a vertex whose
//! candidate set collapses.

use super::Catalog;
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;

/// Runs the direct multiset tests; names the first that applies.
///
/// Returns `ProvedForcing` with the sub-rule identifier, or `Unknown`.
pub fn rule_easy(seq: &DegreeSequence) -> ForcingVerdict {
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
    let seq = &cat.seq;
    let view = &cat.view;
    let n = seq.n();
    let mut count = vec![0usize; n + 1];
    for &d in seq.degrees() {
        count[d] += 1;
    }

    // L1.1 / L1.2: an isolated or a universal vertex has an empty or fully
    // covered candidate set, so its own card always completes.
    if count[0] > 0 {
        return Some("L1.1".into());
    }
    if n >= 1 && count[n - 1] > 0 {
        return Some("L1.2".into());
    }
    // L1.3: no two degrees differ by one, so no candidate set is ever
    // occupied.
    let adjacent_pair_after = |count: &[usize]| -> bool {
        (0..n).any(|d| count[d] >= 1 && count[d + 1] >= 1)
    };
    if !adjacent_pair_after(&count) {
        return Some("L1.3".into());
    }
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    let n_bad = view.n_of(bad);
    let n_dull = view.n_of(dull);
    let m_bad = view.m_of(bad);

    // L5.1 / L5.2: with at most one bad vertex, that vertex's own card has no
    // occupied candidate degrees; dually for at most one dull vertex. These
    // one-vertex cases read more directly than the removal scan below, so
    // they report first.
    if n_bad <= 1 {
        return Some("L5.1".into());
    }
    if n_dull <= 1 {
        return Some("L5.2".into());
    }
    // L1.4: some degree d occupied such that removing one copy leaves no two
    // degrees differing by one; deleting a degree-d vertex then leaves a
    // card whose candidate set is empty.
    for d in 0..n {
        if count[d] == 0 {
            continue;
        }
        count[d] -= 1;
        let pair = adjacent_pair_after(&count);
        count[d] += 1;
        if !pair {
            return Some("L1.4".into());
        }
    }
    // L5.3: exactly one vertex both bad and dull, and only two bad degrees.
    let bad_and_dull = view.collect(|c| c.is_bad && c.is_dull);
    if view.n_of(bad_and_dull) == 1 && bad.len() == 2 {
        return Some("L5.3".into());
    }
    // L5.4: too few bad stubs to give every vertex a bad neighbour (an odd
    // number of bad vertices wastes one stub on parity).
    let parity = (n_bad % 2) as usize;
    if m_bad < n + parity {
        return Some("L5.4".into());
    }

    // L6.1: two bad degrees, a unique bad vertex u and a unique dull vertex
    // v in different classes with d_u ≠ d_v + 1.
    if bad.len() == 2 {
        for bu in bad.iter() {
            if view.classes()[bu].count != 1 {
                continue;
            }
            for dv in dull.iter() {
                if view.classes()[dv].count != 1 || bu == dv {
                    continue;
                }
                if view.classes()[bu].degree != view.classes()[dv].degree + 1 {
                    return Some("L6.1".into());
                }
            }
        }
    }
    // L6.2: three bad degrees and at least two distinct unique bad-and-dull
    // vertices.
    if bad.len() == 3 {
        let special = view
            .classes()
            .iter()
            .filter(|c| c.is_bad && c.is_dull && c.count == 1)
            .count();
        if special >= 2 {
            return Some("L6.2".into());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fired(text: &str) -> Option<String> {
        match rule_easy(&DegreeSequence::parse(text).unwrap()) {
            ForcingVerdict::ProvedForcing { rule } => Some(rule),
            _ => None,
        }
    }

    #[test]
    fn single_bad_vertex() {
        assert_eq!(fired("3,3,3,3,3,3,4").as_deref(), Some("L5.1"));
    }

    #[test]
    fn too_few_bad_stubs() {
        assert_eq!(fired("1,1,1,1,2,2,3,5").as_deref(), Some("L5.4"));
    }

    #[test]
    fn unique_bad_against_unique_dull() {
        assert_eq!(fired("2,3,3,3,3,4").as_deref(), Some("L6.1"));
    }

    #[test]
    fn two_unique_bad_dull_vertices() {
        assert_eq!(fired("2,2,3,4,5,5,5").as_deref(), Some("L6.2"));
    }

    #[test]
    fn isolated_and_universal() {
        assert_eq!(fired("0,1,1,2,2").as_deref(), Some("L1.1"));
        assert_eq!(fired("1,1,1,1,4").as_deref(), Some("L1.2"));
    }

    #[test]
    fn no_adjacent_degrees() {
        assert_eq!(fired("1,1,3,3,3,3").as_deref(), Some("L1.3"));
    }

    #[test]
    fn one_removal_clears_adjacent_degrees() {
        // Removing the unique 5 leaves {1,4,6} occupied: no adjacent pair.
        assert_eq!(fired("1,1,1,4,4,4,5,6,6").as_deref(), Some("L1.4"));
    }

    #[test]
    fn passes_when_nothing_applies() {
        assert_eq!(fired("1,1,2,2,3,3"), None);
    }
}
