//! Rules built around pendant vertices.
//!
//! A pendant has a single edge, so whoever receives it gains a completable
//! card unless the pendant's neighbour is bad with a missable witness. That
//! starves high-degree good vertices of room: they cannot touch pendants,
//! and with few middle degrees available their closed neighbourhoods become
//! forced into completable shape.

use super::Catalog;
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;

/// Runs the pendant rules.
pub fn rule_pendants(seq: &DegreeSequence) -> ForcingVerdict {
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
    if p1(cat) {
        return Some("P.1".into());
    }
    if p2(cat) {
        return Some("P.2".into());
    }
    if p3(cat) {
        return Some("P.3".into());
    }
    if p4(cat) {
        return Some("P.4".into());
    }
    None
}

/// A good vertex of very high degree must either touch a pendant, handing it
/// a completable card, or (when there are no degree-2 vertices) be adjacent
/// to everything except the pendants, which makes its own card completable.
fn p1(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let n = view.n() as i64;
    let pendants = view.kappa(view.all(), 1) as i64;
    let x = if view.kappa(view.all(), 2) == 0 { 1 } else { 0 };
    let good = view.complement_of(view.bad_classes());
    let Some(dmax_good) = good.iter().map(|a| view.classes()[a].degree).max() else {
        return false;
    };
    dmax_good as i64 > n - 1 - pendants - x
}

/// Half the vertices are pendants, a unique vertex `v` of degree `n/2` sits
/// just above a dull band occupying exactly the two degrees below it, and
/// nothing else exists: the band's lower class cannot send stubs to
/// pendants, so it saturates `v`, forcing `v` adjacent to all of it, which
/// the unique-vertex contact requirement forbids.
fn p2(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let n = view.n();
    let pendants = view.kappa(view.all(), 1);
    if 2 * pendants != n {
        return false;
    }
    let dv = n - pendants;
    if dv < 2 {
        return false;
    }
    let Some(vc) = view.class_of_degree(dv) else {
        return false;
    };
    if view.classes()[vc].count != 1 {
        return false;
    }
    let window = view.collect(|c| c.degree >= dv - 2 && c.degree < dv);
    let dulls = view.dull_classes();
    if dulls != window || window.is_empty() {
        return false;
    }
    // Everything besides the pendants and v must lie in the dull band, and
    // the band's lower class must be present to produce the saturating stubs.
    let n_dull: usize = dulls.iter().map(|a| view.classes()[a].count).sum();
    n_dull + pendants + 1 == n && view.kappa(view.all(), dv - 2) > 0
}

/// Exactly three bad degrees `2`, `d+1`, `d+2` with the degree-2, degree-`d`
/// and degree-`d+1` vertices unique and every other non-pendant degree above
/// `d+1`: the degree-`d` and degree-`d+1` vertices are pushed entirely into
/// the high part, and if `2d` exceeds its size by more than one they share a
/// neighbour with no bad edge to the degree-2 vertex, which is completable.
fn p3(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let n = view.n() as i64;
    let bad = view.bad_classes();
    let mut bad_degrees: Vec<usize> = bad.iter().map(|a| view.classes()[a].degree).collect();
    bad_degrees.sort_unstable();
    if bad_degrees.len() != 3 || bad_degrees[0] != 2 {
        return false;
    }
    if bad_degrees[2] != bad_degrees[1] + 1 {
        return false;
    }
    let d = bad_degrees[1] - 1;
    if d < 3 {
        return false;
    }
    if view.kappa(view.all(), 2) != 1
        || view.kappa(view.all(), d) != 1
        || view.kappa(view.all(), d + 1) != 1
    {
        return false;
    }
    let stray = view.collect(|c| {
        c.degree != 1 && c.degree != 2 && c.degree != d && c.degree != d + 1 && c.degree <= d + 1
    });
    if !stray.is_empty() {
        return false;
    }
    let pendants = view.kappa(view.all(), 1) as i64;
    2 * (d as i64) > n - 2 - pendants
}

/// One pendant, one degree-2, unique degrees `d` and `d+1`, some degree-3
/// vertices, and bad degrees exactly `2`, `3`, `d+1`: the pendant must
/// attach to a degree-3 vertex, but with `d >= n-3` both high vertices are
/// adjacent to every degree-3 vertex, so one of them completes the pendant's
/// card.
fn p4(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let n = view.n();
    let bad = view.bad_classes();
    let mut bad_degrees: Vec<usize> = bad.iter().map(|a| view.classes()[a].degree).collect();
    bad_degrees.sort_unstable();
    if bad_degrees.len() != 3 || bad_degrees[0] != 2 || bad_degrees[1] != 3 {
        return false;
    }
    let d = bad_degrees[2] - 1;
    if d < 4 {
        return false;
    }
    if view.kappa(view.all(), 1) != 1
        || view.kappa(view.all(), 2) != 1
        || view.kappa(view.all(), d) != 1
        || view.kappa(view.all(), d + 1) != 1
        || view.kappa(view.all(), 3) == 0
    {
        return false;
    }
    d + 3 >= n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::DegreeSequence;

    fn label(seq: &[usize]) -> Option<String> {
        let seq = DegreeSequence::new(seq.to_vec()).expect("valid sequence");
        match rule_pendants(&seq) {
            ForcingVerdict::ProvedForcing { rule } => Some(rule),
            _ => None,
        }
    }

    #[test]
    fn high_good_degree_fires() {
        assert_eq!(label(&[1, 1, 3, 3, 4, 4]).as_deref(), Some("P.1"));
    }

    #[test]
    fn half_pendants_with_dull_band_fires() {
        assert_eq!(
            label(&[1, 1, 1, 1, 1, 3, 3, 4, 4, 5]).as_deref(),
            Some("P.2")
        );
    }

    #[test]
    fn shared_high_neighbour_fires() {
        assert_eq!(
            label(&[1, 2, 4, 5, 6, 6, 6, 6, 6, 8]).as_deref(),
            Some("P.3")
        );
    }

    #[test]
    fn all_good_sequence_is_out_of_scope() {
        assert_eq!(label(&[3, 3, 3, 3]), None);
    }
}
