//! Rules that exploit saturation: when the guaranteed edges out of a
//! low-degree set already use up every stub it has, the remaining structure
//! is rigid — middle-degree vertices get exactly one free edge each, and
//! that edge's destination is tightly constrained.

use super::unique::all_class_unions;
use super::{chi64, prefix_sets, sigma_best, Catalog};
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;
use crate::partition::{ClassSet, PartitionView};

/// Runs the saturation rules.
pub fn rule_sigma_tau(seq: &DegreeSequence) -> ForcingVerdict {
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
    // Closed-form rules run before the ones that read propagated state, so
    // that attribution on already-contradictory states stays stable.
    if st1(cat) {
        return Some("ST.1".into());
    }
    if st3(cat) {
        return Some("ST.3".into());
    }
    if st4(cat) {
        return Some("ST.4".into());
    }
    if st5(cat) {
        return Some("ST.5".into());
    }
    if st6(cat) {
        return Some("ST.6".into());
    }
    if st7(cat) {
        return Some("ST.7".into());
    }
    if st8(cat) {
        return Some("ST.8".into());
    }
    None
}

/// When all of `i`'s stubs are guaranteed to leave `i` and its complement is
/// neighbourly, no `i`-vertex may cover the complement's dull part entirely,
/// which caps contacts below the guaranteed minimum.
fn st1(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let dull = view.dull_classes();
    for &i in &all_class_unions(view) {
        if i.is_empty() || i == view.all() || !view.is_complement_neighbourly(i) {
            continue;
        }
        let comp = view.complement_of(i);
        if chi64(view, i, comp) != view.m_of(i) as i64 {
            continue;
        }
        let p = comp.intersect(dull);
        if p.is_empty() {
            continue;
        }
        let np = view.n_of(p) as i64;
        let cap: i64 = i
            .iter()
            .map(|a| {
                let c = &view.classes()[a];
                c.count as i64 * (c.degree as i64).min(np - 1)
            })
            .sum();
        if chi64(view, i, p) > cap {
            return true;
        }
    }
    false
}

/// Exact-budget hypothesis for a low set `i`: its stubs are consumed
/// entirely by the vertices of degree above `xi_i` (which must each reach
/// past the complement into `i`) plus one reserved stub for every
/// complement vertex of degree exactly `xi_i` (which would otherwise cover
/// the whole complement and be completable). Returns the high set and
/// `xi_i` when the budget balances.
pub(crate) fn exact_budget(view: &PartitionView, i: ClassSet) -> Option<(ClassSet, usize)> {
    if i.is_empty() || i == view.all() {
        return None;
    }
    let xi = view.xi(i);
    if xi < 1 {
        return None;
    }
    let xiu = xi as usize;
    let dmax_i = i.iter().map(|a| view.classes()[a].degree).max()?;
    if dmax_i >= xiu {
        return None;
    }
    if !view.is_complement_neighbourly(i) {
        return None;
    }
    let comp = view.complement_of(i);
    let h = view.collect(|c| c.degree > xiu);
    if chi64(view, i, h) + view.kappa(comp, xiu) as i64 != view.m_of(i) as i64 {
        return None;
    }
    Some((h, xiu))
}

/// Floor on the edges the bad part `c` of an exactly-budgeted low set must
/// send to the high set `h`: one per high vertex, plus the surplus forced
/// on high vertices whose degree leaves no room to miss `c`.
pub(crate) fn high_serving_floor(view: &PartitionView, c: ClassSet, h: ClassSet) -> i64 {
    let n = view.n() as i64;
    let nc = view.n_of(c) as i64;
    let dcd = view.delta(c, view.dull_classes()) as i64;
    let surplus: i64 = h
        .iter()
        .map(|a| {
            let cl = &view.classes()[a];
            cl.count as i64 * (cl.degree as i64 - n + nc + 1 - dcd).max(0)
        })
        .sum();
    (view.n_of(h) as i64 + surplus).max(chi64(view, c, h)).max(0)
}

/// Under the exact budget, the bad part of `i` must serve one edge to every
/// high vertex plus the unavoidable surplus, and nearly every stub of the
/// degree-`xi` band; together these can exceed its capacity.
fn st3(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    for &i in &all_class_unions(view) {
        let Some((h, xi)) = exact_budget(view, i) else {
            continue;
        };
        let c = i.intersect(bad);
        if !h.is_empty() && c.is_empty() {
            // Every high vertex needs a bad neighbour inside `i`, but `i`
            // has none.
            return true;
        }
        let s = view.collect(|cl| cl.degree == xi);
        let g = i.minus(c);
        let sigma_ch = high_serving_floor(view, c, h);
        let dsb = view.delta(s, bad) as i64;
        let need = sigma_ch + view.n_of(s) as i64 - view.m_of(g) as i64
            + (1 - dsb) * view.n_of(g) as i64;
        if (view.m_of(c) as i64) < need {
            return true;
        }
    }
    false
}

/// Under the exact budget, if the complement's dull part sits one degree
/// below `xi` and the only bad degree elsewhere in the complement is `xi`
/// itself, the degree-`xi` vertices end up with their single free edge
/// forced onto good `i`-vertices, making them completable.
fn st4(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    for &i in &all_class_unions(view) {
        let Some((_h, xi)) = exact_budget(view, i) else {
            continue;
        };
        let comp = view.complement_of(i);
        let p = comp.intersect(dull);
        if p.is_empty() || p.iter().any(|a| view.classes()[a].degree != xi - 1) {
            continue;
        }
        let q = comp.minus(p);
        let bad_in_q = q.intersect(bad);
        if !bad_in_q.is_empty() && bad_in_q.iter().all(|a| view.classes()[a].degree == xi) {
            return true;
        }
    }
    false
}

/// All of `i`'s stubs go to a high set `j`, so each high vertex covers the
/// whole complement of `i`; it must then miss somebody in `i`'s dull part,
/// which lives in `i`'s good part `g` — but `g`'s stubs all point at the
/// high set, leaving too few misses to go around.
fn st5(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    for &i in &all_class_unions(view) {
        if i.is_empty() || i == view.all() || !view.is_complement_neighbourly(i) {
            continue;
        }
        if i.intersect(bad).intersect(dull) != ClassSet::EMPTY {
            continue;
        }
        if i.intersect(dull).is_empty() {
            continue;
        }
        let xi = view.xi(i);
        if xi < 0 {
            continue;
        }
        let xiu = xi as usize;
        let above = view.collect(|c| c.degree > xiu);
        let at_or_above = view.collect(|c| c.degree >= xiu);
        for j in [above, at_or_above] {
            if j.is_empty() || !i.is_disjoint(j) {
                continue;
            }
            if chi64(view, i, j) != view.m_of(i) as i64 {
                continue;
            }
            let g = i.minus(bad);
            let s = j.minus(view.collect(|c| c.degree == view.n() - view.n_of(i)));
            let ns = view.n_of(s) as i64;
            let ng = view.n_of(g) as i64;
            if (view.m_of(g) as i64) > ns * (ng - 1) {
                return true;
            }
        }
    }
    false
}

/// All of `i`'s stubs go to the non-dull part `q` of its complement, so the
/// dull part `p` is served only from inside the complement; every
/// `q`-vertex covering all of `p` needs a bad edge into `i`, and counting
/// `p`'s stubs against these caps runs out of room.
fn st6(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    for &i in &all_class_unions(&view) {
        if i.is_empty() || i == view.all() || !view.is_complement_neighbourly(i) {
            continue;
        }
        let comp = view.complement_of(i);
        let p = comp.intersect(dull);
        let q = comp.minus(p);
        if p.is_empty() || q.is_empty() {
            continue;
        }
        let c = i.intersect(bad);
        let n_q = view.n_of(q) as i64;
        let m_c = view.m_of(c) as i64;
        if n_q < m_c {
            continue;
        }
        if sigma_best(cat, i, q) < view.m_of(i) as i64 {
            continue;
        }
        let n_p = view.n_of(p) as i64;
        let m_p = view.m_of(p) as i64;
        if n_p * (n_p + n_q - 2) < m_p + n_q - m_c {
            return true;
        }
    }
    false
}

/// After a good set `j` absorbs all but one stub from each `i`-vertex, the
/// vertices of degree `|j|+1` cover `j` entirely and spend their last edge
/// outside; that edge cannot reach the degree just above `j`'s top without
/// creating a completable vertex, yet the guaranteed edge count demands it.
fn st7(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let prefixes = prefix_sets(view);
    for &j in &all_class_unions(view) {
        if j.is_empty() || !j.is_disjoint(bad) {
            continue;
        }
        let dmax_j = j.iter().map(|a| view.classes()[a].degree).max().unwrap();
        let k = view.collect(|c| c.degree == dmax_j + 1);
        if k.is_empty() {
            continue;
        }
        let n_j = view.n_of(j);
        for &i in &prefixes {
            if !i.is_disjoint(j) || i.is_empty() {
                continue;
            }
            if chi64(view, i, j) != view.m_of(i) as i64 - view.n_of(i) as i64 {
                continue;
            }
            let slack = view.n_of(i) as i64 - view.kappa(i, n_j + 1) as i64;
            if chi64(view, i, k) > slack {
                return true;
            }
        }
    }
    false
}

/// Same one-stub-left setting as above, but detected through the engine:
/// the vertices one degree above `|j|` sit inside `i` and their forced
/// contact with the degree just above `j`'s top is itself the
/// contradiction.
fn st8(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let prefixes = prefix_sets(&view);
    for &j in &all_class_unions(&view) {
        if j.is_empty() || !j.is_disjoint(bad) {
            continue;
        }
        let dmax_j = j.iter().map(|a| view.classes()[a].degree).max().unwrap();
        let k = view.collect(|c| c.degree == dmax_j + 1);
        let n_j = view.n_of(j);
        let s = view.collect(|c| c.degree == n_j + 1);
        if k.is_empty() || s.is_empty() || !s.is_disjoint(j) || !s.is_disjoint(k) {
            continue;
        }
        for &i in &prefixes {
            if !i.is_disjoint(j) || !s.is_subset(i) {
                continue;
            }
            if sigma_best(cat, i, j) < view.m_of(i) as i64 - view.n_of(i) as i64 {
                continue;
            }
            if sigma_best(cat, s, k) > 0 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::DegreeSequence;

    fn label(seq: &[usize]) -> Option<String> {
        let seq = DegreeSequence::new(seq.to_vec()).expect("valid sequence");
        match rule_sigma_tau(&seq) {
            ForcingVerdict::ProvedForcing { rule } => Some(rule),
            _ => None,
        }
    }

    #[test]
    fn exhausted_low_set_fires() {
        assert_eq!(
            label(&[1, 2, 2, 2, 3, 3, 5, 6, 6, 8]).as_deref(),
            Some("ST.1")
        );
    }

    #[test]
    fn bad_capacity_overrun_fires() {
        assert_eq!(label(&[1, 2, 2, 4, 4, 5, 5, 5]).as_deref(), Some("ST.3"));
    }

    #[test]
    fn dull_band_stub_count_fires() {
        assert_eq!(
            label(&[1, 1, 2, 4, 5, 5, 6, 6, 6, 6]).as_deref(),
            Some("ST.6")
        );
    }

    #[test]
    fn forced_last_edge_fires() {
        assert_eq!(
            label(&[1, 2, 4, 4, 4, 4, 5, 5, 7, 8]).as_deref(),
            Some("ST.8")
        );
    }

    #[test]
    fn all_good_sequence_is_out_of_scope() {
        assert_eq!(label(&[3, 3, 3, 3]), None);
    }
}
