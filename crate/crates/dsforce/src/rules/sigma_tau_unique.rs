//! Saturation rules sharpened by unique-degree vertices.
//!
//! When a low set's stubs are exhausted, any vertex of unique degree nearby
//! has its remaining edges pinned almost completely, and the single free
//! choice it keeps can be shown to create a completable vertex either way.

use super::sigma_tau::{exact_budget, high_serving_floor};
use super::unique::{all_class_unions, UniqueVertexContext};
use super::{chi64, prefix_sets, sigma_best, Catalog};
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;
use crate::partition::{ClassSet, PartitionView};

/// Runs the unique-vertex saturation rules.
pub fn rule_sigma_tau_unique(seq: &DegreeSequence) -> ForcingVerdict {
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
    if stu1(cat) {
        return Some("STU.1".into());
    }
    if stu2(cat) {
        return Some("STU.2".into());
    }
    if stu3(cat) {
        return Some("STU.3".into());
    }
    if stu4(cat) {
        return Some("STU.4".into());
    }
    if stu5(cat) {
        return Some("STU.5".into());
    }
    if stu6(cat) {
        return Some("STU.6".into());
    }
    if stu7(cat) {
        return Some("STU.7".into());
    }
    if stu8(cat) {
        return Some("STU.8".into());
    }
    if stu9(cat) {
        return Some("STU.9".into());
    }
    None
}

/// A good unique vertex of degree exactly `xi_i` sitting at the bottom of
/// the complement needs an edge into `i` to avoid covering the whole
/// neighbourly complement; that steals a stub from the guaranteed flow,
/// contradicting full saturation of `i` into the complement.
fn stu1(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    for &i in &all_class_unions(&view) {
        if i.is_empty() || i == view.all() || !view.is_complement_neighbourly(i) {
            continue;
        }
        let xi = view.xi(i);
        if xi < 1 {
            continue;
        }
        let xiu = xi as usize;
        let comp = view.complement_of(i);
        if comp != view.collect(|c| c.degree >= xiu) {
            continue;
        }
        let Some(vc) = view.class_of_degree(xiu) else {
            continue;
        };
        if view.classes()[vc].count != 1 || bad.contains(vc) {
            continue;
        }
        let stray = view
            .collect(|c| c.degree > xiu && c.degree != xiu + 1)
            .intersect(bad);
        if !stray.is_empty() {
            continue;
        }
        if sigma_best(cat, i, comp) >= view.m_of(i) as i64 {
            return true;
        }
    }
    false
}

/// With the exact budget and a single vertex `v` of degree `xi_i`, `v`
/// covers the whole high set and its one edge into `i` must land on a bad
/// vertex; the bad part must fund that edge on top of serving the high set.
fn stu2(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    for &i in &all_class_unions(view) {
        let Some((h, xi)) = exact_budget(view, i) else {
            continue;
        };
        if h.is_empty() || view.kappa(view.all(), xi) != 1 {
            continue;
        }
        let comp = view.complement_of(i);
        let n_h = view.n_of(h);
        if comp.iter().any(|a| view.classes()[a].degree < n_h) {
            continue;
        }
        let vc = view.class_of_degree(xi).expect("xi class present");
        if !view.is_d_neighbourly_set(ClassSet::single(vc).union(h), xi) {
            continue;
        }
        let c = i.intersect(bad);
        if (view.m_of(c) as i64) < high_serving_floor(view, c, h) + 1 {
            return true;
        }
    }
    false
}

/// Exact budget with unique vertices at degrees `xi_i` and `xi_i - 1` and a
/// fully committed bad part: the degree-`xi` vertex's forced bad edge can
/// only reach the degree-`(xi-1)` vertex, which then covers everything it
/// would need to miss.
fn stu3(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    for &i in &all_class_unions(view) {
        let Some((h, xi)) = exact_budget(view, i) else {
            continue;
        };
        if h.is_empty() || xi < 1 {
            continue;
        }
        let comp = view.complement_of(i);
        if view.kappa(view.all(), xi) != 1 || view.kappa(comp, xi - 1) != 1 {
            continue;
        }
        if comp
            .intersect(bad)
            .iter()
            .any(|a| view.classes()[a].degree < xi - 1)
        {
            continue;
        }
        let vc = view.class_of_degree(xi).expect("xi class present");
        if !view.is_d_neighbourly_set(ClassSet::single(vc).union(h), xi) {
            continue;
        }
        let c = i.intersect(bad);
        if high_serving_floor(view, c, h) >= view.m_of(c) as i64 {
            return true;
        }
    }
    false
}

/// A good set absorbs all but one stub per low vertex, its members cover
/// the rest of the graph, and a good unique vertex outside it ends up
/// adjacent to every dull vertex it could afford to miss.
fn stu4(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    let prefixes = prefix_sets(view);
    let uniques: Vec<usize> = view
        .classes()
        .iter()
        .enumerate()
        .filter(|(idx, c)| c.count == 1 && !bad.contains(*idx))
        .map(|(idx, _)| idx)
        .collect();
    for &j in &all_class_unions(view) {
        if j.is_empty() || !j.is_disjoint(bad) {
            continue;
        }
        for &i in &prefixes {
            if !i.is_disjoint(j) {
                continue;
            }
            if chi64(view, i, j) != view.m_of(i) as i64 - view.n_of(i) as i64 {
                continue;
            }
            for &vc in &uniques {
                let vcl = ClassSet::single(vc);
                if i.contains(vc) || j.contains(vc) {
                    continue;
                }
                if dull.minus(vcl).minus(i).is_subset(j) {
                    return true;
                }
            }
        }
    }
    false
}

/// One lowest vertex, a good degree two short of the complement size, and a
/// bad-degree pattern confined to the steps above the bottom and above that
/// good degree: once the low set's spare stubs are all captured by the high
/// good vertices, the lowest vertex's bad edge lands on a vertex covering
/// every dull vertex.
fn stu5(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let n = view.n();
    let dmin = view.classes()[0].degree;
    if view.kappa(view.all(), dmin) != 1 {
        return false;
    }
    let i = view.collect(|c| c.degree <= dmin + 1);
    let n_i = view.n_of(i);
    if n < 2 + n_i {
        return false;
    }
    let dj = n - 2 - n_i;
    if dj <= dmin + 1 {
        return false;
    }
    let Some(jc) = view.class_of_degree(dj) else {
        return false;
    };
    if bad.contains(jc) {
        return false;
    }
    let mut bad_degrees: Vec<usize> = bad.iter().map(|a| view.classes()[a].degree).collect();
    bad_degrees.sort_unstable();
    let two_pattern = bad_degrees == [dmin + 1, dj + 1];
    let three_pattern = bad_degrees == [dmin + 1, dj + 1, dj + 2]
        && view.kappa(view.all(), dj + 1) == 1
        && view.kappa(view.all(), dj + 2) == 1;
    if !two_pattern && !three_pattern {
        return false;
    }
    let s = view.collect(|c| c.degree > dj).minus(bad);
    if s.is_empty() {
        return false;
    }
    sigma_best(cat, i, s) >= view.m_of(i) as i64 - view.n_of(i) as i64
}

/// The bad part of the low set is too big to fill from the good set without
/// taking every good vertex's edge, so those bad vertices cover the good
/// set entirely; the unique vertex one degree above the good set then finds
/// its required bad contact only there, and that contact is completable.
fn stu6(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let prefixes = prefix_sets(view);
    for &j in &all_class_unions(view) {
        if j.is_empty() || !j.is_disjoint(bad) {
            continue;
        }
        let dmax_j = j.iter().map(|a| view.classes()[a].degree).max().unwrap();
        let d = dmax_j + 1;
        let Some(vc) = view.class_of_degree(d) else {
            continue;
        };
        if view.classes()[vc].count != 1 {
            continue;
        }
        let n_j = view.n_of(j);
        for &i in &prefixes {
            if !i.is_disjoint(j) || i.contains(vc) {
                continue;
            }
            if chi64(view, i, j) != view.m_of(i) as i64 - view.n_of(i) as i64 {
                continue;
            }
            let c = i.intersect(bad);
            if let Some(dmin_c) = c.iter().map(|a| view.classes()[a].degree).min() {
                if dmin_c <= n_j {
                    continue;
                }
            }
            let comp_bads = view.complement_of(i).intersect(bad);
            if comp_bads
                .iter()
                .all(|a| matches!(view.classes()[a].degree, x if x == d || x == d + 1))
            {
                return true;
            }
        }
    }
    false
}

/// Two unique vertices two degrees apart, both flanked by the only bad
/// classes, with a non-dull low set whose stubs are exactly consumed by the
/// top band plus one edge per band member: every candidate for the lower
/// vertex's forced bad contact is then adjacent to all dull vertices.
fn stu7(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    if bad.len() != 3 {
        return false;
    }
    let ctxs = UniqueVertexContext::all(view);
    for cu in &ctxs {
        let ucl = ClassSet::single(cu.class);
        if !dull.contains(cu.class) || bad.contains(cu.class) {
            continue;
        }
        for cv in &ctxs {
            let vcl = ClassSet::single(cv.class);
            if cv.class == cu.class
                || cv.degree != cu.degree + 2
                || !dull.contains(cv.class)
                || !bad.contains(cv.class)
            {
                continue;
            }
            if cv.beta == ucl || cu.beta == vcl || cu.beta.is_empty() || cv.beta.is_empty() {
                continue;
            }
            if cu.beta.union(vcl).union(cv.beta) != bad {
                continue;
            }
            if view.n() < 1 + cv.degree {
                continue;
            }
            let target = view.n() - 1 - cv.degree;
            let j = view.collect(|c| c.degree >= cv.degree);
            for &i in &all_class_unions(view) {
                if view.n_of(i) != target || !i.is_disjoint(dull) || !i.is_disjoint(j) {
                    continue;
                }
                if chi64(view, i, j) + view.n_of(j) as i64 == view.m_of(i) as i64 {
                    return true;
                }
            }
        }
    }
    false
}

/// Triples of unique vertices with exactly three bad classes: consecutive
/// degrees force the middle vertex's edges outward and upward, the top bad
/// vertex must take one of them, and the low good vertex must reach the
/// middle one's shadow class instead.
fn unique3_triples(view: &PartitionView) -> Vec<(UniqueVertexContext, UniqueVertexContext, UniqueVertexContext)> {
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    let mut out = Vec::new();
    if bad.len() != 3 {
        return out;
    }
    let ctxs = UniqueVertexContext::all(view);
    for cu in &ctxs {
        if bad.contains(cu.class) {
            continue;
        }
        for cv in &ctxs {
            if cv.class == cu.class || cv.degree != cu.degree + 1 || !dull.contains(cv.class) {
                continue;
            }
            for cw in &ctxs {
                if cw.class == cu.class
                    || cw.class == cv.class
                    || !bad.contains(cw.class)
                    || dull.contains(cw.class)
                {
                    continue;
                }
                out.push((*cu, *cv, *cw));
            }
        }
    }
    out
}

/// With a unique triple below the saturated band, the middle vertex's edges
/// all go high, it must miss the low good vertex, and its neighbourhood
/// becomes the band itself — which is completable for it.
fn stu8(cat: &mut Catalog) -> bool {
    let view = &cat.view;
    for (cu, cv, cw) in unique3_triples(view) {
        if cw.degree <= cv.degree {
            continue;
        }
        let xi = cv.degree + 1;
        if view.n() < 1 + xi {
            continue;
        }
        let target = view.n() - 1 - xi;
        let j = view.collect(|c| c.degree >= xi);
        for &i in &all_class_unions(view) {
            if view.n_of(i) != target
                || !i.is_disjoint(j)
                || i.contains(cu.class)
                || i.contains(cv.class)
                || i.contains(cw.class)
            {
                continue;
            }
            if chi64(view, i, j) + view.n_of(j) as i64 == view.m_of(i) as i64 {
                return true;
            }
        }
    }
    false
}

/// With a unique triple and the top vertex's witness class absorbing all
/// but one stub from a set holding the other bad vertices and the low good
/// vertex, every spare stub must serve a bad vertex other than the low good
/// one — leaving it without the bad contact it needs.
fn stu9(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    for (cu, _cv, cw) in unique3_triples(&view) {
        let j = cw.alpha;
        if j.is_empty() || !j.is_disjoint(bad) {
            continue;
        }
        let base = bad.minus(ClassSet::single(cw.class)).union(ClassSet::single(cu.class));
        if !base.is_disjoint(j) {
            continue;
        }
        for &i in &all_class_unions(&view) {
            if !base.is_subset(i) || i.contains(cw.class) || !i.is_disjoint(j) {
                continue;
            }
            if sigma_best(cat, i, j) >= view.m_of(i) as i64 - view.n_of(i) as i64 {
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
        match rule_sigma_tau_unique(&seq) {
            ForcingVerdict::ProvedForcing { rule } => Some(rule),
            _ => None,
        }
    }

    #[test]
    fn saturated_complement_with_unique_bottom_fires() {
        assert_eq!(
            label(&[1, 2, 3, 3, 5, 6, 6, 6, 6, 8]).as_deref(),
            Some("STU.1")
        );
    }

    #[test]
    fn covered_good_set_forces_bad_contact_fires() {
        assert_eq!(
            label(&[1, 1, 1, 1, 1, 2, 2, 4, 5, 6]).as_deref(),
            Some("STU.6")
        );
    }

    #[test]
    fn unique_triple_saturated_band_fires() {
        assert_eq!(
            label(&[2, 2, 2, 4, 5, 6, 6, 6, 6, 7]).as_deref(),
            Some("STU.8")
        );
    }

    #[test]
    fn all_good_sequence_is_out_of_scope() {
        assert_eq!(label(&[3, 3, 3, 3]), None);
    }
}
