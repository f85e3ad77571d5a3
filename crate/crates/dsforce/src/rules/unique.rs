//! Rules built around vertices of unique degree.
//!
//! A vertex `v` whose degree appears exactly once is visible to class-level
//! reasoning as a singleton class, so facts about `v` itself become linear
//! facts the engine can use. Under the no-completable-card hypothesis such a
//! vertex is tightly constrained: it must miss a dull vertex outside its own
//! class and the class below it, and it must have a bad neighbour outside its
//! own class and the class above it. The rules here turn those constraints,
//! and several consequences of them, into firing tests.

use super::{
    chi64, guarded_floor, prefix_sets, sigma_best, sigma_closed, tau_best, Catalog,
};
use crate::degseq::DegreeSequence;
use crate::oracle::ForcingVerdict;
use crate::partition::{ClassSet, PartitionView};

/// The class structure around one vertex `v` of unique degree.
///
/// With `v` the only vertex of its degree, every statement about `v` is a
/// statement about its class, which makes vertex-level reasoning available
/// to the class-level engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniqueVertexContext {
    /// Index of the singleton class holding `v`.
    pub class: usize,
    /// Degree of `v`.
    pub degree: usize,
    /// Class of degree `d_v - 1` (witnesses for `v` as a bad neighbour), or
    /// empty.
    pub alpha: ClassSet,
    /// Class of degree `d_v + 1` (vertices for which `v` is the witness), or
    /// empty.
    pub beta: ClassSet,
    /// Dull classes other than `v`'s own and `alpha`: `v` must miss one of
    /// these if its card is not to complete.
    pub s: ClassSet,
    /// Bad classes other than `v`'s own and `beta`: `v` needs a neighbour
    /// here.
    pub t: ClassSet,
}

impl UniqueVertexContext {
    /// Contexts for every unique-degree vertex, in ascending degree order.
    pub fn all(view: &PartitionView) -> Vec<UniqueVertexContext> {
        let dull = view.dull_classes();
        let bad = view.bad_classes();
        view.classes()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count == 1)
            .map(|(idx, c)| {
                let own = ClassSet::single(idx);
                let alpha = if c.degree > 0 {
                    view.class_of_degree(c.degree - 1)
                        .map_or(ClassSet::EMPTY, ClassSet::single)
                } else {
                    ClassSet::EMPTY
                };
                let beta = view
                    .class_of_degree(c.degree + 1)
                    .map_or(ClassSet::EMPTY, ClassSet::single);
                UniqueVertexContext {
                    class: idx,
                    degree: c.degree,
                    alpha,
                    beta,
                    s: dull.minus(own).minus(alpha),
                    t: bad.minus(own).minus(beta),
                }
            })
            .collect()
    }
}

/// Runs the unique-degree-vertex rules.
pub fn rule_unique(seq: &DegreeSequence) -> ForcingVerdict {
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
    // The stub-counting rules are evaluated first: their tests are plain
    // arithmetic over the degree partition, so they attribute a firing to the
    // sharpest closed-form argument before the propagated-state rules, whose
    // query values subsume many weaker reasons, get a chance to claim it.
    if u3(cat) {
        return Some("U.3".into());
    }
    if u4(cat) {
        return Some("U.4".into());
    }
    if u1(cat) {
        return Some("U.1".into());
    }
    if u2(cat) {
        return Some("U.2".into());
    }
    if u5(cat) {
        return Some("U.5".into());
    }
    if u6(cat) {
        return Some("U.6".into());
    }
    if u7(cat) {
        return Some("U.7".into());
    }
    if u8(cat) {
        return Some("U.8".into());
    }
    if u9(cat) {
        return Some("U.9".into());
    }
    if u10(cat) {
        return Some("U.10".into());
    }
    if u11(cat) {
        return Some("U.11".into());
    }
    if u11b(cat) {
        return Some("U.11b".into());
    }
    if u12(cat) {
        return Some("U.12".into());
    }
    None
}

/// Every class union when the class count is small, otherwise a cheap
/// representative family (singles, prefixes, suffixes).
pub(crate) fn all_class_unions(view: &PartitionView) -> Vec<ClassSet> {
    let nc = view.classes().len();
    let mut out = Vec::new();
    if nc <= 12 {
        for mask in 1u32..(1 << nc) {
            let mut set = ClassSet::EMPTY;
            for a in 0..nc {
                if mask & (1 << a) != 0 {
                    set = set.union(ClassSet::single(a));
                }
            }
            out.push(set);
        }
    } else {
        let mut lo = ClassSet::EMPTY;
        let mut hi = ClassSet::EMPTY;
        for a in 0..nc {
            out.push(ClassSet::single(a));
            lo = lo.union(ClassSet::single(a));
            hi = hi.union(ClassSet::single(nc - 1 - a));
            out.push(lo);
            out.push(hi);
        }
        out.dedup();
    }
    out
}

/// Stub-counting cap on ε(i,j) for disjoint nonempty sets, built purely from
/// degrees and counts: pairwise stub limits, total stubs on either side, the
/// pair count, the everyone-needs-a-bad-edge cap when `j` has no bad vertex,
/// and the must-miss cap when either side is a neighbourly set.
fn tau_closed_flat(view: &PartitionView, i: ClassSet, j: ClassSet) -> i64 {
    let n_i = view.n_of(i) as i64;
    let n_j = view.n_of(j) as i64;
    let m_i = view.m_of(i) as i64;
    let m_j = view.m_of(j) as i64;
    let mut pairwise = 0i64;
    for a in i.iter() {
        let ca = &view.classes()[a];
        let (na, da) = (ca.count as i64, ca.degree as i64);
        for b in j.iter() {
            let cb = &view.classes()[b];
            let (nb, db) = (cb.count as i64, cb.degree as i64);
            pairwise += (na * da.min(nb)).min(nb * db.min(na));
        }
    }
    let mut best = pairwise.min(m_i).min(m_j).min(n_i * n_j);
    let bad = view.bad_classes();
    if j.is_disjoint(bad) {
        best = best.min(m_i - n_i);
    }
    if i.is_disjoint(bad) {
        best = best.min(m_j - n_j);
    }
    if view.is_neighbourly_set(j) {
        best = best.min(m_i - view.kappa(i, view.n_of(j)) as i64);
    }
    if view.is_neighbourly_set(i) {
        best = best.min(m_j - view.kappa(j, view.n_of(i)) as i64);
    }
    best.max(0)
}

/// Lowest degree appearing in `set`, or `None` when empty.
fn min_degree(view: &PartitionView, set: ClassSet) -> Option<usize> {
    set.iter().map(|a| view.classes()[a].degree).min()
}

/// The direct miss/need tests for a unique vertex `v` against dull classes
/// `s` and bad classes `t`: `v` must miss somebody in `s` and reach somebody
/// in `t`, so an empty `t`, a saturated guarantee onto `s`, or a zero cap
/// onto `t` all refute the no-completable-card hypothesis. The `s` side is
/// only consulted when `s_tests` is set.
fn unique_contact_tests(
    view: &PartitionView,
    q: &crate::rules::engine::BoundState,
    vcl: ClassSet,
    s: ClassSet,
    t: ClassSet,
    s_tests: bool,
) -> bool {
    if t.is_empty() {
        return true;
    }
    if s_tests {
        if s.is_empty() {
            return true;
        }
        let ns = view.n_of(s) as i64;
        if ns >= 1 && q.sigma(vcl, s) >= ns {
            return true;
        }
    }
    q.tau(vcl, t) == 0
}

/// Direct contact constraints on each unique vertex, with a refinement: once
/// some neighbourly set provably has no edge to `v`, the needed bad
/// neighbour must be found outside it, and — provided no witness class sits
/// inside the set, so a missed vertex there could never serve as the witness
/// `v` needs — so must the missed vertex.
fn u1(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let ctxs = UniqueVertexContext::all(&view);
    let unions = all_class_unions(&view);
    let mut witness_classes = ClassSet::EMPTY;
    for b in view.bad_classes().iter() {
        let d = view.classes()[b].degree;
        if d >= 1 {
            if let Some(w) = view.class_of_degree(d - 1) {
                witness_classes = witness_classes.union(ClassSet::single(w));
            }
        }
    }
    let q = cat.q();
    for ctx in &ctxs {
        let vcl = ClassSet::single(ctx.class);
        if unique_contact_tests(&view, q, vcl, ctx.s, ctx.t, true) {
            return true;
        }
        for &i in &unions {
            if i.contains(ctx.class) || !view.is_neighbourly_set(i) {
                continue;
            }
            if q.tau(i, vcl) == 0
                && unique_contact_tests(
                    &view,
                    q,
                    vcl,
                    ctx.s.minus(i),
                    ctx.t.minus(i),
                    i.is_disjoint(witness_classes),
                )
            {
                return true;
            }
        }
    }
    false
}

/// A unique vertex `v` needs a bad neighbour outside the class above it, so
/// stubs from a low prefix `i` that the guarantee forces onto that class can
/// exceed what `i` has left after serving `v`.
fn u2(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let ctxs = UniqueVertexContext::all(&view);
    let prefixes = prefix_sets(&view);
    let q = cat.q();
    for ctx in &ctxs {
        if ctx.beta.is_empty() {
            continue;
        }
        let vcl = ClassSet::single(ctx.class);
        let j = ctx.beta;
        for &i in &prefixes {
            if i.is_empty() || i.contains(ctx.class) || !i.is_disjoint(j) {
                continue;
            }
            let floor = guarded_floor(&view, q, i, j);
            let m_i = view.m_of(i) as i64;
            let cap = q.tau(i, j).min(m_i - q.sigma(i, vcl));
            if floor > cap {
                return true;
            }
        }
    }
    false
}

/// A set `j` that is neighbourly except for one exempt member of degree
/// `|j| - 1` still forces one extra edge beyond the guarantee from any
/// distinct set, which can exceed the stub-counting cap.
fn u3(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let dull = view.dull_classes();
    let bad = view.bad_classes();
    let prefixes = prefix_sets(&view);
    for j in all_class_unions(&view) {
        let nj = view.n_of(j);
        if nj < 2 {
            continue;
        }
        let d = nj - 1;
        let exempt_is_unique = j
            .iter()
            .any(|a| view.classes()[a].degree == d && view.classes()[a].count == 1);
        if !exempt_is_unique || view.kappa(j, d) != 1 || !view.is_d_neighbourly_set(j, d) {
            continue;
        }
        let comp = view.complement_of(j);
        let mut cands = vec![comp, comp.minus(dull), comp.minus(bad)];
        cands.extend(prefixes.iter().copied().filter(|&i| i.is_disjoint(j)));
        for i in cands {
            if i.is_empty() {
                continue;
            }
            let need = chi64(&view, i, j) + 1;
            if need > tau_closed_flat(&view, i, j) {
                return true;
            }
        }
    }
    false
}

/// A unique vertex `v` misses some dull vertex `w` outside its own and the
/// class below; when every candidate `w` has high enough degree, `w` is
/// forced to spend an extra edge inside any large set `i` avoiding `v`,
/// beating the stub-counting cap on ε(i,j) for any `j` containing the
/// candidates.
fn u4(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let dull = view.dull_classes();
    let bad = view.bad_classes();
    let prefixes = prefix_sets(&view);
    let n = view.n() as i64;
    let ctxs = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if ctx.s.is_empty() {
            continue;
        }
        let Some(dmin) = min_degree(&view, ctx.s) else {
            continue;
        };
        for j in all_class_unions(&view) {
            if !ctx.s.is_subset(j) || j.contains(ctx.class) {
                continue;
            }
            let comp = view.complement_of(j).minus(ClassSet::single(ctx.class));
            let mut cands = vec![comp, comp.minus(dull), comp.minus(bad)];
            cands.extend(
                prefixes
                    .iter()
                    .copied()
                    .filter(|&i| i.is_disjoint(j) && !i.contains(ctx.class)),
            );
            for i in cands {
                if i.is_empty() || (dmin as i64) < n - view.n_of(i) as i64 {
                    continue;
                }
                let need = chi64(&view, i, j) + 1;
                if need > tau_closed_flat(&view, i, j) {
                    return true;
                }
            }
        }
    }
    false
}

/// With the three bad degrees being exactly `d_u + 1`, `d_v`, `d_v + 1` for
/// dull unique vertices `u` (good) and `v` (bad) of non-consecutive degree,
/// `v` can only be served from the class above `u` and must then miss `u`
/// itself, which in turn forces `u` to be served from the class above `v`.
/// Posting those forced contacts and settling detects any conflict.
fn u5(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    if bad.len() != 3 {
        return false;
    }
    let ctxs = UniqueVertexContext::all(&view);
    let dull = view.dull_classes();
    for cu in &ctxs {
        let ucl = ClassSet::single(cu.class);
        if !dull.contains(cu.class) || bad.contains(cu.class) {
            continue;
        }
        for cv in &ctxs {
            let vcl = ClassSet::single(cv.class);
            if cv.class == cu.class || !dull.contains(cv.class) || !bad.contains(cv.class) {
                continue;
            }
            if cv.degree == cu.degree + 1 {
                continue;
            }
            if cv.beta == ucl || cu.beta == vcl || cu.beta.is_empty() || cv.beta.is_empty() {
                continue;
            }
            if cu.beta.union(vcl).union(cv.beta) != bad {
                continue;
            }
            let mut bs = cat.prepared();
            bs.post_sigma(vcl, cu.beta, 1);
            bs.post_tau(ucl, vcl, 0);
            bs.post_sigma(ucl, cv.beta, 1);
            cat.settle(&mut bs);
            if bs.is_contradictory() {
                return true;
            }
        }
    }
    false
}

/// A good unique vertex `v` caps any set's edges into the good part of its
/// complement together with the class above and `v` itself: each edge spent
/// on `v` removes a stub that could otherwise reach that target. A floor
/// exceeding the cap fires.
fn u6(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let prefixes = prefix_sets(&view);
    let ctxs = UniqueVertexContext::all(&view);
    let q = cat.q();
    for ctx in &ctxs {
        if bad.contains(ctx.class) {
            continue;
        }
        let vcl = ClassSet::single(ctx.class);
        for &i in &prefixes {
            if i.is_empty() || i.contains(ctx.class) || !i.is_disjoint(ctx.beta) {
                continue;
            }
            let target = view
                .complement_of(i)
                .minus(bad)
                .union(ctx.beta)
                .union(vcl)
                .minus(i);
            if target.is_empty() {
                continue;
            }
            let floor = chi64(&view, i, target)
                .max(guarded_floor(&view, q, i, target))
                .max(q.sigma(i, target));
            let cap = view.m_of(i) as i64 - q.sigma(i, vcl);
            if floor > cap {
                return true;
            }
        }
    }
    false
}

/// A set `j` whose one degree-(|j|-1) member is a unique vertex, and whose
/// bad members all have degree |j|, locks nearly all outside stubs onto `j`;
/// if the guarantee from the complement already reaches all but two of its
/// stubs, the sequence is forcing.
fn u7(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    for j in all_class_unions(&view) {
        let nj = view.n_of(j);
        if nj < 2 {
            continue;
        }
        let has_unique_core = j
            .iter()
            .any(|a| view.classes()[a].degree == nj - 1 && view.classes()[a].count == 1);
        if !has_unique_core {
            continue;
        }
        let bads_saturated = j
            .iter()
            .filter(|&a| bad.contains(a))
            .all(|a| view.classes()[a].degree == nj);
        if !bads_saturated {
            continue;
        }
        let i = view.complement_of(j);
        if i.is_empty() {
            continue;
        }
        let m_i = view.m_of(i) as i64;
        if chi64(&view, i, j) >= m_i - 2 {
            return true;
        }
    }
    false
}

/// When the only bad degree above a good unique vertex `v` is the one just
/// above it, the bad vertices below `v` must place nearly all their stubs
/// above `v`; a guarantee within two stubs of everything they have fires.
fn u8(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let ctxs = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if bad.contains(ctx.class) {
            continue;
        }
        let higher_bads = view.collect(|c| c.is_bad && c.degree > ctx.degree);
        if higher_bads.is_empty() || higher_bads != ctx.beta {
            continue;
        }
        let i = bad.minus(ctx.beta);
        if i.is_empty() {
            continue;
        }
        let j = view.collect(|c| c.degree > ctx.degree);
        if j.is_empty() || !i.is_disjoint(j) {
            continue;
        }
        let m_i = view.m_of(i) as i64;
        if sigma_best(cat, i, j) >= m_i - 2 {
            return true;
        }
    }
    false
}

/// Counting bound on the edges a non-dull unique vertex must receive from
/// the dull classes it can miss: when the rest of the graph cannot absorb
/// their stubs, `v` would have to reach all of them, which it cannot.
fn u9(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let dull = view.dull_classes();
    let bad = view.bad_classes();
    let nd = view.n_of(dull) as i64;
    let ctxs = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if dull.contains(ctx.class) {
            continue;
        }
        let s = dull.minus(ctx.alpha);
        if s.is_empty() {
            continue;
        }
        let i = view
            .all()
            .minus(ClassSet::single(ctx.class))
            .minus(dull);
        let ns = view.n_of(s) as i64;
        let ms = view.m_of(s) as i64;
        let mi = view.m_of(i) as i64;
        let ni = view.n_of(i) as i64;
        let delta_sb = if s.is_disjoint(bad) { 0 } else { 1 };
        let floor = ms - (mi - (1 - delta_sb) * ni) - ns * (nd - 2);
        if ns >= 1 && floor >= ns {
            return true;
        }
    }
    false
}

/// Budget tests around a good dull unique vertex of degree at least three:
/// either the bad stub supply cannot cover the class above plus `v`, or the
/// degree is too large for the low-degree part to absorb what must be
/// missed.
fn u10(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    let n = view.n() as i64;
    let m_b = view.m_of(bad) as i64;
    let ctxs = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if bad.contains(ctx.class) || !dull.contains(ctx.class) || ctx.degree < 3 {
            continue;
        }
        let j = ctx.beta.union(ClassSet::single(ctx.class));
        let m_j = view.m_of(j) as i64;
        if m_b < m_j + 1 {
            return true;
        }
        let i = view.collect(|c| c.degree < 3);
        let ni = view.n_of(i) as i64;
        let mu = if view.is_complement_neighbourly(i) { 1 } else { 0 };
        if 2 * (ctx.degree as i64) > 2 * n - (ni + 3 + mu) {
            return true;
        }
    }
    false
}

/// Stub budget for the bad classes at or below a good dull unique vertex
/// `v` when no dull vertex outranks it: they must serve the higher classes,
/// reach `v` twice over (with parity), and still cover everyone else.
fn u11(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let dull = view.dull_classes();
    let n = view.n() as i64;
    let pendants = view.kappa(view.all(), 1) as i64;
    let ctxs: Vec<UniqueVertexContext> = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if bad.contains(ctx.class) || !dull.contains(ctx.class) {
            continue;
        }
        let higher_dull = view.collect(|c| c.is_dull && c.degree > ctx.degree);
        if !higher_dull.is_empty() {
            continue;
        }
        let vcl = ClassSet::single(ctx.class);
        let h = view.collect(|c| c.degree > ctx.degree);
        let k = bad.minus(h);
        if k.is_empty() || h.is_empty() {
            continue;
        }
        let m_k = view.m_of(k) as i64;
        let n_k = view.n_of(k) as i64;
        let n_h = view.n_of(h) as i64;
        let s_kh = sigma_best(cat, k, h);
        let s_kv = sigma_best(cat, k, vcl);
        let delta_kd = if k.is_disjoint(dull) { 0 } else { 1 };
        let x = n - (n_k + n_h) - 2 + delta_kd - pendants;
        if m_k < s_kh + 2 * s_kv + (s_kv & 1) + x {
            return true;
        }
    }
    false
}

/// The two highest bad degrees with the top one unique and a good class
/// just below it: everything at or above that good class must absorb nearly
/// all stubs from the low part, so a guarantee within two stubs of the low
/// part's total fires.
fn u11b(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let mut bad_degrees: Vec<usize> = bad.iter().map(|a| view.classes()[a].degree).collect();
    bad_degrees.sort_unstable();
    if bad_degrees.len() < 2 {
        return false;
    }
    let dv = bad_degrees[bad_degrees.len() - 1];
    let du = bad_degrees[bad_degrees.len() - 2];
    let Some(vc) = view.class_of_degree(dv) else {
        return false;
    };
    if view.classes()[vc].count != 1 || dv == 0 {
        return false;
    }
    match view.class_of_degree(dv - 1) {
        Some(ac) if !view.classes()[ac].is_bad => {}
        _ => return false,
    }
    let i = view.collect(|c| c.degree <= du);
    let h = view.collect(|c| c.degree >= dv - 1);
    if i.is_empty() || h.is_empty() || !i.is_disjoint(h) {
        return false;
    }
    if i.union(h) == view.all() {
        return false;
    }
    let m_i = view.m_of(i) as i64;
    chi64(&view, i, h) >= m_i - 2
}

/// A bad unique vertex `v` whose witness class `j` is good: `v`'s class
/// companions spend all but two of the bad stubs elsewhere, capping the
/// edges inside `j` and so forcing bad stubs onto `j` beyond the total
/// supply.
fn u12(cat: &mut Catalog) -> bool {
    let view = cat.view.clone();
    let bad = view.bad_classes();
    let n = view.n() as i64;
    let m_b = view.m_of(bad) as i64;
    let delta_b = m_b & 1;
    let ctxs: Vec<UniqueVertexContext> = UniqueVertexContext::all(&view);
    for ctx in &ctxs {
        if !bad.contains(ctx.class) || ctx.alpha.is_empty() {
            continue;
        }
        let j = ctx.alpha;
        if !j.is_disjoint(bad) {
            continue;
        }
        let n_j = view.n_of(j) as i64;
        let m_j = view.m_of(j) as i64;
        let g = view.complement_of(bad).minus(j);
        let m_g = view.m_of(g) as i64;
        let n_g = view.n_of(g) as i64;
        let companion_cap = n_j * (n_j - 2) + m_b - ctx.degree as i64 - 2;
        let t_jj = tau_best(cat, j, j).min(companion_cap).max(0);
        let s_bj = sigma_closed(cat, bad, j).max(m_j - (t_jj + m_g - n_g));
        if m_b < s_bj + n - n_j + delta_b {
            return true;
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
        match rule_unique(&seq) {
            ForcingVerdict::ProvedForcing { rule } => Some(rule),
            _ => None,
        }
    }

    #[test]
    fn direct_contact_tests_fire() {
        assert_eq!(label(&[1, 1, 1, 1, 2, 3, 3, 3, 5, 6]).as_deref(), Some("U.1"));
    }

    #[test]
    fn nearly_neighbourly_set_fires() {
        assert_eq!(label(&[1, 1, 1, 2, 3, 4, 5, 5]).as_deref(), Some("U.3"));
    }

    #[test]
    fn forced_miss_extra_edge_fires() {
        assert_eq!(
            label(&[1, 3, 3, 3, 4, 5, 5, 7, 7, 8]).as_deref(),
            Some("U.4")
        );
    }

    #[test]
    fn witness_class_budget_fires() {
        assert_eq!(
            label(&[3, 3, 3, 4, 6, 6, 6, 6, 6, 7]).as_deref(),
            Some("U.12")
        );
    }

    #[test]
    fn capacity_after_serving_unique_vertex_fires() {
        assert_eq!(
            label(&[1, 1, 1, 2, 4, 4, 5, 6, 6, 6]).as_deref(),
            Some("U.2")
        );
    }

    #[test]
    fn all_good_sequence_is_out_of_scope() {
        assert_eq!(label(&[3, 3, 3, 3]), None);
    }
}
