//! Bound-tightening engine shared by every rule family.
//!
//! # Model
//!
//! Fix the finest degree-class partition of a sequence. For classes `a`, `b`
//! the unknowns of a realization are its edge counts inside and between
//! classes:
//!
//! * `w(a)` — number of edges with both ends in class `a`;
//! * `x(a,b)` — number of edges with one end in `a`, one in `b`.
//!
//! Any stub count ε(i,j) over unions of classes expands to a linear form in
//! these variables with coefficients 1 and 2 (2 for internal contributions),
//! so facts of the shape `L ≤ ε(i,j) ≤ U` are interval constraints on a small
//! integer linear system. [`BoundState`] keeps one interval per variable plus
//! all posted constraints and tightens the intervals to a fixed point
//! (bounds consistency). An empty interval, or a constraint that cannot be
//! met, marks the state contradictory.
//!
//! Constraints come in two layers:
//!
//! * facts true of **every** graph with the given degree sequence: degree
//!   conservation per class, capacity maximums, forced-adjacency minimums
//!   coming from high degrees;
//! * facts true of every realization **in which no card is completable**,
//!   posted by [`BoundState::assume_no_completable_card`]. Chief among them:
//!   every vertex needs a neighbour whose degree sits one above an occupied
//!   degree (otherwise its card completes uniquely), and that neighbour must
//!   come with a "witness" vertex the original vertex can fail to be adjacent
//!   to; both requirements aggregate into per-class stub bounds.
//!
//! A contradiction under the second layer proves the sequence forcing.
//!
//! σ/τ queries combine the variable intervals with every posted constraint
//! (via residual slack), apply the natural caps min{m_i, m_j}, and respect
//! two parity facts: ε(i,i) is even, and ε(i, V∖i) has the parity of m_i.

use crate::partition::{ClassSet, PartitionView};

/// Sentinel for "no finite upper bound" that leaves headroom for sums.
const INF: i64 = i64::MAX / 4;

/// Largest number of degree classes the engine accepts (keeps the variable
/// index set within a `u128` occupancy mask).
pub const MAX_CLASSES: usize = 15;

/// One posted linear fact: `lo ≤ Σ coef·var ≤ hi`.
#[derive(Clone)]
struct LinearFact {
    terms: Vec<(usize, i64)>,
    occupancy: u128,
    lo: i64,
    hi: i64,
}

/// Interval state over per-class edge-count variables, with σ/τ queries.
///
/// σ(i,j) is a proven lower bound and τ(i,j) a proven upper bound on the
/// number of stubs in `i` lying on edges to `j` (internal edges contribute
/// two stubs). Bounds only ever tighten; [`BoundState::is_contradictory`]
/// reports when the posted facts admit no realization.
#[derive(Clone)]
pub struct BoundState {
    view: PartitionView,
    nclasses: usize,
    class_n: Vec<i64>,
    class_d: Vec<i64>,
    class_m: Vec<i64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    facts: Vec<LinearFact>,
    fact_slot: std::collections::HashMap<(u64, u64, bool), usize>,
    contradiction: bool,
    no_completable: bool,
}

impl BoundState {
    /// Builds the graph-level state: conservation, capacities and forced
    /// adjacency that hold for every realization of the sequence.
    #[must_use]
    pub fn new(view: PartitionView) -> Self {
        let classes = view.classes().to_vec();
        let nclasses = classes.len();
        assert!(nclasses <= MAX_CLASSES, "too many degree classes");
        let n = view.n() as i64;
        let class_n: Vec<i64> = classes.iter().map(|c| c.count as i64).collect();
        let class_d: Vec<i64> = classes.iter().map(|c| c.degree as i64).collect();
        let class_m: Vec<i64> = classes.iter().map(|c| (c.count * c.degree) as i64).collect();

        let nvars = nclasses + nclasses * (nclasses - 1) / 2;
        let mut lo = vec![0i64; nvars];
        let mut hi = vec![0i64; nvars];
        let mut state = BoundState {
            view,
            nclasses,
            class_n: class_n.clone(),
            class_d: class_d.clone(),
            class_m: class_m.clone(),
            lo: Vec::new(),
            hi: Vec::new(),
            facts: Vec::new(),
            fact_slot: std::collections::HashMap::new(),
            contradiction: false,
            no_completable: false,
        };

        for a in 0..nclasses {
            // Internal edges: capacity and the adjacency forced on a vertex
            // whose degree exceeds the room outside its own class.
            let spare = n - 1 - class_d[a];
            let forced_per_vertex = (class_n[a] - 1 - spare).max(0);
            let forced_stubs = class_n[a] * forced_per_vertex;
            lo[state.var_w(a)] = (forced_stubs + 1) / 2;
            hi[state.var_w(a)] = (class_n[a] * (class_n[a] - 1) / 2)
                .min(class_n[a] * class_d[a].min(class_n[a] - 1) / 2);
            for b in a + 1..nclasses {
                let v = state.var_x(a, b);
                let from_a = class_n[b] * (class_n[a] - (n - 1 - class_d[b])).max(0);
                let from_b = class_n[a] * (class_n[b] - (n - 1 - class_d[a])).max(0);
                lo[v] = from_a.max(from_b);
                hi[v] = (class_n[a] * class_n[b])
                    .min(class_n[a] * class_d[a].min(class_n[b]))
                    .min(class_n[b] * class_d[b].min(class_n[a]));
            }
        }
        state.lo = lo;
        state.hi = hi;

        // Degree conservation: every stub of class a lies on some edge.
        for a in 0..nclasses {
            let mut terms = vec![(state.var_w(a), 2)];
            for b in 0..nclasses {
                if b != a {
                    terms.push((state.var_x(a.min(b), a.max(b)), 1));
                }
            }
            state.push_fact(terms, class_m[a], class_m[a]);
        }
        state.propagate();
        state
    }

    /// The degree-class view this state reasons over.
    #[must_use]
    pub fn view(&self) -> &PartitionView {
        &self.view
    }

    /// Whether the posted facts admit no realization.
    #[must_use]
    pub fn is_contradictory(&self) -> bool {
        self.contradiction
    }

    /// Marks the state contradictory (used when a rule derives an
    /// impossibility outside the linear system).
    pub fn flag_contradiction(&mut self) {
        self.contradiction = true;
    }

    fn var_w(&self, a: usize) -> usize {
        a
    }

    fn var_x(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        self.nclasses + a * (2 * self.nclasses - a - 1) / 2 + (b - a - 1)
    }

    fn push_fact(&mut self, terms: Vec<(usize, i64)>, lo: i64, hi: i64) {
        let mut occupancy = 0u128;
        for &(v, _) in &terms {
            occupancy |= 1u128 << v;
        }
        self.facts.push(LinearFact { terms, occupancy, lo, hi });
    }

    /// Expands ε(i,j) into variable terms. Internal contributions (class in
    /// both masks) count twice, matching the stub convention.
    fn eps_terms(&self, i: ClassSet, j: ClassSet) -> Vec<(usize, i64)> {
        let mut coef = vec![0i64; self.lo.len()];
        for a in i.iter() {
            for b in j.iter() {
                if a == b {
                    coef[self.var_w(a)] += 2;
                } else {
                    coef[self.var_x(a.min(b), a.max(b))] += 1;
                }
            }
        }
        coef.iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(v, &c)| (v, c))
            .collect()
    }

    fn terms_occupancy(terms: &[(usize, i64)]) -> u128 {
        terms.iter().fold(0u128, |acc, &(v, _)| acc | 1u128 << v)
    }

    /// Lower bound on a linear form from intervals plus residual slack
    /// against each overlapping posted fact.
    fn form_lower(&self, terms: &[(usize, i64)]) -> i64 {
        let occupancy = Self::terms_occupancy(terms);
        let mut coef = vec![0i64; self.lo.len()];
        for &(v, c) in terms {
            coef[v] = c;
        }
        let mut best: i64 = terms
            .iter()
            .map(|&(v, c)| c * if c >= 0 { self.lo[v] } else { self.hi[v] })
            .sum();
        for fact in &self.facts {
            if fact.occupancy & occupancy == 0 || fact.lo <= -INF {
                continue;
            }
            // terms = fact + residual; bound the residual by intervals.
            let mut cand = fact.lo;
            let mut feasible = true;
            for &(v, c) in terms {
                let r = c - fact.terms.iter().find(|&&(fv, _)| fv == v).map_or(0, |&(_, fc)| fc);
                cand += r * if r >= 0 { self.lo[v] } else { self.hi[v] };
            }
            for &(fv, fc) in &fact.terms {
                if coef[fv] == 0 {
                    let r = -fc;
                    let b = if r >= 0 { self.lo[fv] } else { self.hi[fv] };
                    if b >= INF {
                        feasible = false;
                        break;
                    }
                    cand += r * b;
                }
            }
            if feasible && cand > best {
                best = cand;
            }
        }
        best
    }

    /// Upper bound counterpart of [`Self::form_lower`].
    fn form_upper(&self, terms: &[(usize, i64)]) -> i64 {
        let occupancy = Self::terms_occupancy(terms);
        let mut coef = vec![0i64; self.lo.len()];
        for &(v, c) in terms {
            coef[v] = c;
        }
        let mut best: i64 = terms
            .iter()
            .map(|&(v, c)| c * if c >= 0 { self.hi[v] } else { self.lo[v] })
            .sum();
        for fact in &self.facts {
            if fact.occupancy & occupancy == 0 || fact.hi >= INF {
                continue;
            }
            let mut cand = fact.hi;
            let mut feasible = true;
            for &(v, c) in terms {
                let r = c - fact.terms.iter().find(|&&(fv, _)| fv == v).map_or(0, |&(_, fc)| fc);
                let b = if r >= 0 { self.hi[v] } else { self.lo[v] };
                if b >= INF && r > 0 {
                    feasible = false;
                    break;
                }
                cand += r * b;
            }
            if feasible {
                for &(fv, fc) in &fact.terms {
                    if coef[fv] == 0 {
                        let r = -fc;
                        let b = if r >= 0 { self.hi[fv] } else { self.lo[fv] };
                        if b >= INF && r > 0 {
                            feasible = false;
                            break;
                        }
                        cand += r * b;
                    }
                }
            }
            if feasible && cand < best {
                best = cand;
            }
        }
        best
    }

    /// Proven lower bound on ε(i,j).
    #[must_use]
    pub fn sigma(&self, i: ClassSet, j: ClassSet) -> i64 {
        if i.is_empty() || j.is_empty() {
            return 0;
        }
        let terms = self.eps_terms(i, j);
        let mut bound = self.form_lower(&terms).max(0);
        // Conservation route: everything j does not send elsewhere lands in i,
        // bounded piecewise so that distinct posted facts each get a say.
        if i.is_disjoint(j) {
            let outside = self.view.complement_of(i.union(j));
            bound = bound
                .max(self.class_sum_m(j) - self.spread_upper(j, outside))
                .max(self.class_sum_m(i) - self.spread_upper(i, outside));
        } else if i == j {
            let outside = self.view.complement_of(i);
            let mut leak = 0i64;
            for c in outside.iter() {
                leak += self.piece_upper(i, ClassSet::single(c));
            }
            bound = bound.max(self.class_sum_m(i) - leak);
        }
        if i == j && bound % 2 == 1 {
            bound += 1;
        }
        if j == self.view.complement_of(i) && bound % 2 != self.class_sum_m(i) % 2 {
            bound += 1;
        }
        bound
    }

    /// Proven upper bound on ε(i,j).
    #[must_use]
    pub fn tau(&self, i: ClassSet, j: ClassSet) -> i64 {
        if i.is_empty() || j.is_empty() {
            return 0;
        }
        let terms = self.eps_terms(i, j);
        let mut bound = self
            .form_upper(&terms)
            .min(self.class_sum_m(i))
            .min(self.class_sum_m(j));
        if i.is_disjoint(j) {
            let outside = self.view.complement_of(i.union(j));
            bound = bound
                .min(self.class_sum_m(j) - self.spread_lower(j, outside))
                .min(self.class_sum_m(i) - self.spread_lower(i, outside));
        } else if i == j {
            let outside = self.view.complement_of(i);
            let mut kept = 0i64;
            for c in outside.iter() {
                kept += self.form_lower(&self.eps_terms(i, ClassSet::single(c)));
            }
            bound = bound.min(self.class_sum_m(i) - kept);
        }
        if i == j && bound % 2 == 1 {
            bound -= 1;
        }
        if j == self.view.complement_of(i) && bound % 2 != self.class_sum_m(i) % 2 {
            bound -= 1;
        }
        bound.max(0)
    }

    /// Upper bound on the stubs of `src` kept inside `src` or sent to
    /// `outside`, summed piece by piece (internal block, then one piece per
    /// outside class) so each posted fact can cap its own piece.
    fn spread_upper(&self, src: ClassSet, outside: ClassSet) -> i64 {
        let mut internal = self.form_upper(&self.eps_terms(src, src));
        if internal % 2 == 1 {
            internal -= 1;
        }
        let mut total = internal.max(0).min(self.class_sum_m(src));
        for c in outside.iter() {
            total += self.piece_upper(src, ClassSet::single(c));
        }
        total
    }

    /// Lower bound counterpart of [`Self::spread_upper`].
    fn spread_lower(&self, src: ClassSet, outside: ClassSet) -> i64 {
        let mut internal = self.form_lower(&self.eps_terms(src, src));
        if internal % 2 == 1 {
            internal += 1;
        }
        let mut total = internal.max(0);
        for c in outside.iter() {
            total += self.form_lower(&self.eps_terms(src, ClassSet::single(c))).max(0);
        }
        total
    }

    fn piece_upper(&self, src: ClassSet, target: ClassSet) -> i64 {
        self.form_upper(&self.eps_terms(src, target))
            .min(self.class_sum_m(target))
            .min(self.class_sum_m(src))
            .max(0)
    }

    fn class_sum_m(&self, set: ClassSet) -> i64 {
        set.iter().map(|a| self.class_m[a]).sum()
    }

    /// Posts `ε(i,j) ≥ bound`; returns whether this tightened anything.
    /// Also records the complementary cap `ε(i, V∖j) ≤ m_i − bound`, since
    /// every stub of `i` lands either in `j` or outside it.
    pub fn post_sigma(&mut self, i: ClassSet, j: ClassSet, bound: i64) -> bool {
        let mut tightened = self.post_sigma_raw(i, j, bound);
        if bound > 0 && !i.is_empty() && !j.is_empty() {
            let rest = self.view.complement_of(j);
            tightened |= self.post_tau_raw(i, rest, self.class_sum_m(i) - bound);
        }
        tightened
    }

    /// Posts `ε(i,j) ≤ bound` together with the complementary floor
    /// `ε(i, V∖j) ≥ m_i − bound`; returns whether this tightened anything.
    pub fn post_tau(&mut self, i: ClassSet, j: ClassSet, bound: i64) -> bool {
        let mut tightened = self.post_tau_raw(i, j, bound);
        if !i.is_empty() && !j.is_empty() {
            let rest = self.view.complement_of(j);
            tightened |= self.post_sigma_raw(i, rest, self.class_sum_m(i) - bound);
        }
        tightened
    }

    /// Re-posting a tighter bound for the same pair updates the stored fact
    /// in place, so repeated dynamic refinement does not grow the system.
    fn post_sigma_raw(&mut self, i: ClassSet, j: ClassSet, bound: i64) -> bool {
        if bound <= 0 || i.is_empty() || j.is_empty() {
            return false;
        }
        if bound <= self.sigma(i, j) {
            return false;
        }
        let key = (i.0, j.0, true);
        if let Some(&slot) = self.fact_slot.get(&key) {
            self.facts[slot].lo = self.facts[slot].lo.max(bound);
        } else {
            let terms = self.eps_terms(i, j);
            self.push_fact(terms, bound, INF);
            self.fact_slot.insert(key, self.facts.len() - 1);
        }
        true
    }

    fn post_tau_raw(&mut self, i: ClassSet, j: ClassSet, bound: i64) -> bool {
        if i.is_empty() || j.is_empty() {
            if bound < 0 {
                self.contradiction = true;
            }
            return false;
        }
        if bound >= self.tau(i, j) {
            return false;
        }
        let key = (i.0, j.0, false);
        if let Some(&slot) = self.fact_slot.get(&key) {
            self.facts[slot].hi = self.facts[slot].hi.min(bound.max(-1));
        } else {
            let terms = self.eps_terms(i, j);
            self.push_fact(terms, 0, bound.max(-1));
            self.fact_slot.insert(key, self.facts.len() - 1);
        }
        true
    }

    /// Tightens every variable interval to bounds consistency with all posted
    /// facts. Sets the contradiction flag when an interval empties or a fact
    /// becomes unsatisfiable. Never weakens a bound; idempotent once stable.
    pub fn propagate(&mut self) {
        let mut rounds = 0usize;
        loop {
            if self.contradiction {
                return;
            }
            let mut changed = false;
            for f in 0..self.facts.len() {
                let (sum_lo, sum_hi) = {
                    let fact = &self.facts[f];
                    let mut slo = 0i64;
                    let mut shi = 0i64;
                    for &(v, c) in &fact.terms {
                        slo += c * self.lo[v];
                        shi = shi.saturating_add(c * self.hi[v]);
                    }
                    (slo, shi)
                };
                let (flo, fhi) = (self.facts[f].lo, self.facts[f].hi);
                if sum_lo > fhi || sum_hi < flo {
                    self.contradiction = true;
                    return;
                }
                for t in 0..self.facts[f].terms.len() {
                    let (v, c) = self.facts[f].terms[t];
                    let rest_lo = sum_lo - c * self.lo[v];
                    let rest_hi = sum_hi.saturating_sub(c * self.hi[v]);
                    if fhi < INF {
                        let room = fhi - rest_lo;
                        let new_hi = room.div_euclid(c);
                        if new_hi < self.hi[v] {
                            self.hi[v] = new_hi;
                            changed = true;
                        }
                    }
                    if flo > -INF && rest_hi < INF {
                        let need = flo - rest_hi;
                        let new_lo = (need + c - 1).div_euclid(c);
                        if new_lo > self.lo[v] {
                            self.lo[v] = new_lo;
                            changed = true;
                        }
                    }
                    if self.lo[v] > self.hi[v] {
                        self.contradiction = true;
                        return;
                    }
                }
            }
            rounds += 1;
            if !changed || rounds > 10_000 {
                return;
            }
        }
    }

    /// Posts the class-level consequences of assuming no card is completable.
    ///
    /// For a vertex `w`, deleting `w` leaves a uniquely completable card
    /// unless some neighbour's degree is one above an occupied degree *and*
    /// the witness class one below that neighbour's degree has a member `w`
    /// fails to cover. Aggregated over a class `a`:
    ///
    /// * every `a`-vertex needs at least one neighbour among the useful bad
    ///   classes (witness class has a member other than the vertex itself);
    /// * every `a`-vertex must miss at least one member of the union of
    ///   reachable witness classes.
    ///
    /// Additionally, for every neighbourly class union `j` and class `a ⊄ j`
    /// of degree `|j|`: an `a`-vertex adjacent to all of `j` would have a
    /// completable card, so each such vertex misses one.
    pub fn assume_no_completable_card(&mut self) {
        self.no_completable = true;
        // Witnesses sit one below an occupied degree, so every vertex must
        // miss at least one such vertex other than itself.
        let dmask = self.view.dull_classes();
        if !dmask.is_empty() {
            let nd = self.view.n_of(dmask) as i64;
            for a in 0..self.nclasses {
                let internal = i64::from(dmask.contains(a));
                self.post_tau(ClassSet::single(a), dmask, self.class_n[a] * (nd - 1 - internal));
            }
        }
        self.refresh_no_completable();
        // Neighbourly unions: a vertex whose neighbourhood is exactly a
        // neighbourly set has all witnesses inside its closed neighbourhood.
        if self.nclasses <= 16 {
            let all = self.view.all();
            for bits in 1..(1u64 << self.nclasses) {
                let j = ClassSet(bits);
                if j == all || !self.view.is_neighbourly_set(j) {
                    continue;
                }
                let nj = self.view.n_of(j) as i64;
                for a in 0..self.nclasses {
                    if !j.contains(a) && self.class_d[a] == nj {
                        // Covering all of j would leave a completable card.
                        let cap = self.class_n[a] * (nj - 1);
                        self.post_tau(ClassSet::single(a), j, cap);
                    }
                    if j.contains(a) && self.class_d[a] == nj - 1 {
                        // Covering the rest of j likewise; each member of
                        // this class misses at least one other j-vertex.
                        let cap = self.class_n[a] * (nj - 2);
                        self.post_tau(ClassSet::single(a), j, cap);
                    }
                }
            }
        }
        self.propagate();
    }

    /// Recomputes the per-class bad-neighbour and forced-miss bounds from the
    /// current intervals (classes whose connecting variable has collapsed to
    /// zero stop counting as reachable). Returns whether anything tightened.
    fn refresh_no_completable(&mut self) -> bool {
        let mut changed = false;
        for a in 0..self.nclasses {
            let mut useful = ClassSet::EMPTY;
            let mut escape = ClassSet::EMPTY;
            for b in 0..self.nclasses {
                if !self.view.classes()[b].is_bad {
                    continue;
                }
                let reachable = if b == a {
                    self.class_n[a] >= 2 && self.hi[self.var_w(a)] >= 1
                } else {
                    self.hi[self.var_x(a.min(b), a.max(b))] >= 1
                };
                if !reachable {
                    continue;
                }
                let witness = self
                    .view
                    .class_of_degree((self.class_d[b] - 1) as usize)
                    .expect("bad degree has its witness class");
                // The witness must have a member the vertex can miss.
                if witness == a && self.class_n[a] == 1 {
                    continue;
                }
                // If adjacency to the whole witness class is already forced,
                // no member can be the missed one, so `b` cannot serve `a`.
                let saturated = if witness == a {
                    let full = self.class_n[a] * (self.class_n[a] - 1) / 2;
                    self.lo[self.var_w(a)] >= full
                } else {
                    let v = self.var_x(a.min(witness), a.max(witness));
                    self.lo[v] >= self.class_n[a] * self.class_n[witness]
                };
                if saturated {
                    continue;
                }
                useful = useful.union(ClassSet::single(b));
                escape = escape.union(ClassSet::single(witness));
            }
            let a_set = ClassSet::single(a);
            if useful.is_empty() {
                // No admissible bad neighbour: some card completes.
                self.contradiction = true;
                return true;
            }
            changed |= self.post_sigma(a_set, useful, self.class_n[a]);
            let n_esc = self.view.n_of(escape) as i64;
            let internal = i64::from(escape.contains(a));
            let per_vertex = n_esc - internal - 1;
            changed |= self.post_tau(a_set, escape, self.class_n[a] * per_vertex);
        }
        changed
    }

    /// Posts, for one ordered pair of disjoint unions, the guaranteed-edge
    /// floor refined under the no-completable-card hypothesis:
    ///
    /// * when `i` misses the dull classes entirely, every `j`-vertex must
    ///   fail to cover the rest of the graph (its witness lives outside `i`),
    ///   and shortfalls against the residual set add on;
    /// * when `i` meets the dull classes and its complement is neighbourly,
    ///   `j`-vertices of degree ξ_i need an extra edge into `i`, and those of
    ///   degree ξ_i+1 need their single forced edge to land on a bad vertex.
    ///
    /// Returns whether anything tightened. Reads current τ values, so it is
    /// re-run alongside propagation.
    fn post_guarded_floor(&mut self, i: ClassSet, j: ClassSet) -> bool {
        debug_assert!(i.is_disjoint(j));
        let view = &self.view;
        let chi = view.chi(i, j) as i64;
        let nj = view.n_of(j) as i64;
        let dmask = view.dull_classes();
        let bound = if i.is_disjoint(dmask) {
            let s = view.complement_of(i.union(j)).minus(dmask);
            let ns = view.n_of(s) as i64;
            let shortfall = (nj * ns - self.tau(s, j)).max(0);
            chi + nj + shortfall
        } else if view.is_complement_neighbourly(i) {
            let xi = view.xi(i);
            if xi < 0 {
                return false;
            }
            let c = i.intersect(view.bad_classes());
            let singles = view.kappa(j, xi as usize) as i64;
            let doubles = view.kappa(j, (view.n() - view.n_of(i)) as usize) as i64;
            let unbad = (doubles - self.tau(c, j)).max(0);
            chi + singles + unbad
        } else {
            return false;
        };
        self.post_sigma(i, j, bound)
    }

    /// Posts the static floors for a pair: the clamped guaranteed-edge count
    /// (valid for every graph), and, under the no-completable hypothesis with
    /// `j` neighbourly, forced misses from degree-|j| outsiders (each must be
    /// missed by some `j`-member) plus degree-(|j|−1) members of `j` (each
    /// must miss inside `j`). The two counts concern disjoint vertex pairs,
    /// so they add.
    pub fn post_pair_floors(&mut self, i: ClassSet, j: ClassSet, neighbourly_floor: bool) {
        if !i.is_disjoint(j) || i.is_empty() || j.is_empty() {
            return;
        }
        let view = &self.view;
        let chi_plus = view.chi_clamped(i, j) as i64;
        self.post_sigma(i, j, chi_plus);
        if neighbourly_floor && self.no_completable && self.view.is_neighbourly_set(j) {
            let view = &self.view;
            let nj = view.n_of(j);
            let s = view.complement_of(i.union(j));
            let missed_outsiders = view.kappa(s, nj) as i64;
            let missing_members = if nj >= 1 { view.kappa(j, nj - 1) as i64 } else { 0 };
            let chi = view.chi(i, j) as i64;
            self.post_sigma(i, j, chi + missed_outsiders + missing_members);
        }
    }

    /// Runs propagation and the dynamic refinements (per-class reachability,
    /// guarded pair floors) to a joint fixed point, then scans the pair list
    /// for σ > τ, flagging a contradiction if found.
    pub fn run(&mut self, pairs: &[(ClassSet, ClassSet)]) {
        loop {
            self.propagate();
            if self.contradiction {
                return;
            }
            let mut changed = false;
            if self.no_completable {
                changed |= self.refresh_no_completable();
                for &(i, j) in pairs {
                    changed |= self.post_guarded_floor(i, j);
                }
            }
            if !changed {
                break;
            }
        }
        for &(i, j) in pairs {
            if self.sigma(i, j) > self.tau(i, j) {
                self.contradiction = true;
                return;
            }
        }
    }

    /// Sharpens every variable interval by refutation: an endpoint value
    /// whose assumption propagates to a contradiction is sliced off. Sound
    /// because only endpoints every surviving realization avoids are removed;
    /// considerably slower than [`Self::run`], so callers cache the result.
    pub fn shave(&mut self, pairs: &[(ClassSet, ClassSet)], max_rounds: usize) {
        self.run(pairs);
        for _ in 0..max_rounds {
            if self.contradiction {
                return;
            }
            let mut changed = false;
            for v in 0..self.lo.len() {
                while self.lo[v] < self.hi[v] {
                    let mut probe = self.clone();
                    probe.hi[v] = probe.lo[v];
                    probe.run(pairs);
                    if !probe.contradiction {
                        break;
                    }
                    self.lo[v] += 1;
                    changed = true;
                    self.run(pairs);
                    if self.contradiction {
                        return;
                    }
                }
                while self.hi[v] > self.lo[v] {
                    let mut probe = self.clone();
                    probe.lo[v] = probe.hi[v];
                    probe.run(pairs);
                    if !probe.contradiction {
                        break;
                    }
                    self.hi[v] -= 1;
                    changed = true;
                    self.run(pairs);
                    if self.contradiction {
                        return;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::DegreeSequence;

    fn state(text: &str) -> BoundState {
        let seq = DegreeSequence::parse(text).unwrap();
        BoundState::new(PartitionView::from_sequence(&seq))
    }

    #[test]
    fn whole_graph_totals() {
        let bs = state("2,2,2,2");
        let all = bs.view().all();
        assert_eq!(bs.sigma(all, all), 8);
        assert_eq!(bs.tau(all, all), 8);
    }

    #[test]
    fn guaranteed_edges_between_low_and_high() {
        // Two degree-2 vertices among eight; the rest have degree ≥ 5, so
        // each of the six high vertices reaches the low pair at least
        // 2 - (7 - d) times.
        let bs = state("2,2,5,5,6,6,7,7");
        let view = bs.view().clone();
        let low = view.collect(|c| c.degree == 2);
        let high = view.complement_of(low);
        let chi = view.chi_clamped(low, high) as i64;
        assert!(bs.sigma(low, high) >= chi);
        // With degree 7 = n-1, adjacency to both low vertices is forced.
        assert!(bs.sigma(low, view.collect(|c| c.degree == 7)) >= 4);
    }

    #[test]
    fn internal_stub_count_is_even() {
        let bs = state("1,1,2,3,3,4,4,4");
        let view = bs.view().clone();
        for bits in 1..(1u64 << view.classes().len()) {
            let m = ClassSet(bits);
            assert_eq!(bs.sigma(m, m) % 2, 0);
            assert_eq!(bs.tau(m, m) % 2, 0);
        }
    }

    #[test]
    fn boundary_parity_matches_stub_total() {
        let bs = state("1,2,2,3,3,3,4,4");
        let view = bs.view().clone();
        for bits in 1..(1u64 << view.classes().len()) - 1 {
            let m = ClassSet(bits);
            let co = view.complement_of(m);
            let parity = (view.m_of(m) % 2) as i64;
            assert_eq!(bs.sigma(m, co) % 2, parity);
            assert_eq!(bs.tau(m, co) % 2, parity);
        }
    }

    #[test]
    fn posting_tightens_and_contradicts() {
        let mut bs = state("2,2,2,2,2,2");
        let all = bs.view().all();
        assert!(!bs.is_contradictory());
        // Force more stubs than exist: contradiction after propagation.
        assert!(bs.post_sigma(all, all, 14));
        bs.propagate();
        assert!(bs.is_contradictory());
    }

    #[test]
    fn conservation_links_pairs() {
        // Pendants attached to a single hub: the hub class takes all stubs.
        let bs = state("1,1,1,3");
        let view = bs.view().clone();
        let pend = view.collect(|c| c.degree == 1);
        let hub = view.collect(|c| c.degree == 3);
        assert_eq!(bs.sigma(pend, hub), 3);
        assert_eq!(bs.tau(pend, pend), 0);
    }
}
