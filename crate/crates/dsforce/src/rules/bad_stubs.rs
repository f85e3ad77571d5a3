//! Counting arguments on bad stubs (stubs at bad-degree vertices).
//!
//! When no card is completable, every vertex needs at least one bad
//! neighbour, and the witness of that neighbour must avoid the vertex. The
//! rules here turn this into a budget on `m_B`, the number of stubs held by
//! bad vertices: each rule accumulates provable demands on those stubs
//! (edges forced into a high-degree good set, internal bad–bad edges,
//! service for every remaining vertex) and fires when the demands exceed
//! `m_B`. They differ in how the demand on each block is certified.

use super::{chi64, good_suffix_sets, prefix_sets, sigma_closed, tau_best, Catalog};
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;
use crate::partition::ClassSet;

/// Runs the bad-stub counting rules.
pub fn rule_bad_stubs(seq: &DegreeSequence) -> ForcingVerdict {
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
    if bs1(cat) {
        return Some("BS.1".into());
    }
    if bs2(cat) {
        return Some("BS.2".into());
    }
    if bs3(cat) {
        return Some("BS.3".into());
    }
    if bs4(cat) {
        return Some("BS.4".into());
    }
    if bs5(cat) {
        return Some("BS.5".into());
    }
    None
}

/// Stubs of `B` must serve every vertex outside a good set `j` and still
/// meet the provable demand into `j`: fires when
/// `m_B < σ(B,j) + n − n_j + δ_B`.
fn bs1(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let b = view.bad_classes();
    let m_b = view.m_of(b) as i64;
    let delta_b = (m_b % 2 != 0) as i64;
    let n = view.n() as i64;
    for j in good_set_candidates(cat) {
        let n_j = view.n_of(j) as i64;
        let need = sigma_closed(cat, b, j) + n - n_j + delta_b;
        if m_b < need {
            return true;
        }
    }
    false
}

/// Like BS.1 but accounts internal bad–bad edges separately: a helper set
/// `i` forces edges from its bad part `c` to the bads `k` outside `i`, and
/// each such edge is internal to `B`; the demand into `j` is certified via
/// the larger set `g∪B` minus what the goods `g` can absorb.
fn bs2(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let b = view.bad_classes();
    let m_b = view.m_of(b) as i64;
    let n = view.n() as i64;
    let n_b = view.n_of(b) as i64;
    for j in good_set_candidates(cat) {
        for i in prefix_sets(&view) {
            if !i.is_disjoint(j) {
                continue;
            }
            let c = i.intersect(b);
            let g = i.minus(c);
            let k = b.minus(i);
            let m_g = view.m_of(g) as i64;
            let n_g = view.n_of(g) as i64;
            let n_c = view.n_of(c) as i64;
            let gb = g.union(b);
            let s_gb_j = if gb.is_disjoint(j) { sigma_closed(cat, gb, j) } else { 0 };
            let s_b_j = sigma_closed(cat, b, j).max(s_gb_j - (m_g - n_g));
            let s_c_k = sigma_closed(cat, c, k);
            let s_b_b = 2 * s_c_k + (n_c - s_c_k).max(0);
            if m_b < s_b_j + s_b_b + n - view.n_of(j) as i64 - n_b {
                return true;
            }
        }
    }
    false
}

/// Four-block budget when no degree is both bad and dull: goods split into a
/// low part `g` and a high part `j`; `j`'s stubs overflow onto `B` after the
/// dulls and `g` take their caps, the dulls' stubs overflow onto `B` the
/// same way, and `B` must additionally hold internal service edges and one
/// edge per `g`-vertex.
fn bs3(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let b = view.bad_classes();
    let d = view.dull_classes();
    if !b.is_disjoint(d) || d.is_empty() || b.is_empty() {
        return false;
    }
    let n_d = view.n_of(d) as i64;
    if n_d < 2 {
        return false;
    }
    let m_b = view.m_of(b) as i64;
    let m_d = view.m_of(d) as i64;
    let n_b = view.n_of(b) as i64;
    let delta_b = (m_b % 2 != 0) as i64;
    let free_goods: Vec<usize> = (0..view.classes().len())
        .filter(|&a| !b.contains(a) && !d.contains(a))
        .collect();
    // Split the remaining goods by degree: low classes form g, high form j.
    for cut in 0..free_goods.len() {
        let mut g = ClassSet::EMPTY;
        let mut j = ClassSet::EMPTY;
        for (pos, &a) in free_goods.iter().enumerate() {
            if pos < cut {
                g = g.union(ClassSet::single(a));
            } else {
                j = j.union(ClassSet::single(a));
            }
        }
        if j.is_empty() {
            continue;
        }
        let m_j = view.m_of(j) as i64;
        let n_j = view.n_of(j) as i64;
        let m_g = view.m_of(g) as i64;
        let n_g = view.n_of(g) as i64;
        let per_vertex_dj: i64 = j
            .iter()
            .map(|a| {
                let cls = &view.classes()[a];
                cls.count as i64 * (cls.degree as i64).min(n_d - 1)
            })
            .sum();
        let t_d_j = tau_best(cat, d, j).min(per_vertex_dj);
        let good_cap = (m_g - n_g).max(0);
        let t_g_j = tau_best(cat, g, j).min(good_cap);
        let t_g_d = tau_best(cat, g, d).min(good_cap);
        let s_b_j = sigma_closed(cat, b, j).max(m_j - n_j * (n_j - 1) - t_d_j - t_g_j);
        let s_d_b = sigma_closed(cat, d, b).max(m_d - n_d * (n_d - 2) - t_d_j - t_g_d);
        if m_b < n_b + delta_b + s_d_b + s_b_j + n_g {
            return true;
        }
    }
    false
}

/// Five alternating degree classes `g < c < p < k < h` with `c`, `k` bad and
/// `p` the only dull classes outside `i = g∪c`: chases `j`-stubs through the
/// chain σ(c,h) → τ(i,p) → τ(p,p) → σ(p,k) → σ(c,k) and fires when the bad
/// class `c` cannot pay for its forced edges to `h` and `k`.
fn bs4(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    if view.classes().len() != 5 {
        return false;
    }
    let b = view.bad_classes();
    let d = view.dull_classes();
    let (g, c, p, k, h) = (
        ClassSet::single(0),
        ClassSet::single(1),
        ClassSet::single(2),
        ClassSet::single(3),
        ClassSet::single(4),
    );
    if b != c.union(k) || !b.is_disjoint(d) || !p.is_subset(d) || !h.is_disjoint(d) {
        return false;
    }
    let i = g.union(c);
    if !view.is_complement_neighbourly(i) {
        return false;
    }
    let (m_i, n_i) = (view.m_of(i) as i64, view.n_of(i) as i64);
    let (m_g, n_g) = (view.m_of(g) as i64, view.n_of(g) as i64);
    let (m_p, n_p) = (view.m_of(p) as i64, view.n_of(p) as i64);
    let n_k = view.n_of(k) as i64;
    let n_h = view.n_of(h) as i64;
    let m_c = view.m_of(c) as i64;
    let s_i_h = sigma_closed(cat, i, h);
    let s_c_h = (chi64(&view, i, h) - (m_g - n_g)).max(sigma_closed(cat, c, h)).max(0);
    let t_i_p = tau_best(cat, i, p).min((m_i - n_i - s_i_h).max(0));
    let mut t_p_p = tau_best(cat, p, p).min(n_p * (n_p - 2) + t_i_p);
    if t_p_p % 2 != 0 {
        t_p_p -= 1;
    }
    t_p_p = t_p_p.max(0);
    let s_p_k = sigma_closed(cat, p, k).max(m_p - (t_i_p + t_p_p + n_p * n_h));
    let s_c_k = sigma_closed(cat, c, k).max(s_p_k - n_k * (n_p - 1)).max(0);
    m_c < s_c_h + s_c_k
}

/// Every vertex needs a bad edge (`m_B ≥ n + δ_B`), and each `j`-vertex
/// forced adjacent to all of `ī` must additionally reach every bad vertex
/// outside `i`; fires when those demands exceed `m_B`.
fn bs5(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let b = view.bad_classes();
    let m_b = view.m_of(b) as i64;
    let delta_b = (m_b % 2 != 0) as i64;
    let n = view.n() as i64;
    for j in good_set_candidates(cat) {
        let n_j = view.n_of(j) as i64;
        for i in prefix_sets(&view) {
            if !i.is_disjoint(j) || !view.is_complement_neighbourly(i) {
                continue;
            }
            let k = b.minus(i);
            let n_k = view.n_of(k) as i64;
            let full_cover = (n_j - tau_best(cat, i, j) + chi64(&view, i, j)).max(0);
            if m_b < n + delta_b + full_cover * n_k {
                return true;
            }
        }
    }
    false
}

/// Good-set candidates shared by the rules: suffix unions of the good
/// classes plus the degree-threshold set suggested by the stub budget.
fn good_set_candidates(cat: &Catalog) -> Vec<ClassSet> {
    let view = &cat.view;
    let b = view.bad_classes();
    let d = view.dull_classes();
    let mut out = good_suffix_sets(view);
    let n_b = view.n_of(b) as i64;
    let delta_bd = i64::from(!b.is_disjoint(d));
    let threshold = view.n() as i64 - 1 - n_b - (1 - delta_bd);
    let heuristic = view.collect(|cls| !cls.is_bad && (cls.degree as i64) > threshold);
    if !heuristic.is_empty() && !out.contains(&heuristic) {
        out.push(heuristic);
    }
    out
}
