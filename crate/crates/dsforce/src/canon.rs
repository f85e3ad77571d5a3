//! Canonical forms for vertex-coloured graphs.
//!
//! Two graphs receive equal [`CanonicalForm`]s exactly when some isomorphism
//! between them preserves the given vertex colours. The construction refines
//! the colour partition until it is equitable (every cell sees every other
//! cell through a constant number of edges per vertex), then individualizes
//! vertices of the first unresolved cell and takes the minimum leaf encoding
//! over the resulting search tree. A root vertex can be distinguished by
//! colour, which turns the certificate into a rooted one: equality of rooted
//! certificates is isomorphism mapping root to root.

use crate::graph::Graph;

/// Isomorphism-invariant encoding of a coloured graph.
///
/// Ordering and hashing treat the certificate as the tuple
/// (order, colour sequence, adjacency bits), so forms are usable directly as
/// map keys and in minimum-selection rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    colours: Vec<u64>,
    bits: Vec<u64>,
}

impl CanonicalForm {
    /// Number of vertices of the underlying graph.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Colour keys in canonical vertex order: the supplied colours shifted
    /// left one bit, with the low bit set on the root for rooted forms.
    #[must_use]
    pub fn colour_keys(&self) -> &[u64] {
        &self.colours
    }

    /// Rebuilds the canonical representative graph.
    #[must_use]
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("canonical forms never exceed the order cap");
        let mut k = 0usize;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

/// Ordered partition of the vertex set into cells.
type Cells = Vec<Vec<usize>>;

struct Searcher<'a> {
    g: &'a Graph,
    best: Option<Vec<u64>>,
}

impl Searcher<'_> {
    /// Splits cells by neighbour counts into other cells until stable.
    ///
    /// The result is isomorphism-invariant: splitter choice follows cell
    /// positions and fragments are ordered by neighbour count.
    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter: u64 = cells[s].iter().map(|&v| 1u64 << v).sum();
                let mut t = 0;
                while t < cells.len() {
                    if cells[t].len() > 1 {
                        let count =
                            |v: usize| (self.g.neighbours(v) & splitter).count_ones();
                        let first = count(cells[t][0]);
                        if cells[t].iter().any(|&v| count(v) != first) {
                            let mut old = Vec::new();
                            std::mem::swap(&mut old, &mut cells[t]);
                            let mut groups: Vec<(u32, Vec<usize>)> = Vec::new();
                            for v in old {
                                let c = count(v);
                                match groups.iter_mut().find(|(gc, _)| *gc == c) {
                                    Some((_, members)) => members.push(v),
                                    None => groups.push((c, vec![v])),
                                }
                            }
                            groups.sort_by_key(|(c, _)| *c);
                            let fragments: Vec<Vec<usize>> =
                                groups.into_iter().map(|(_, members)| members).collect();
                            cells.splice(t..=t, fragments);
                            changed = true;
                        }
                    }
                    t += 1;
                }
                s += 1;
            }
            if !changed {
                return;
            }
        }
    }

    /// True when adjacency between every pair of cells is all-or-nothing, so
    /// any cell-respecting labelling produces identical adjacency bits.
    fn cells_uniform(&self, cells: &Cells) -> bool {
        let masks: Vec<u64> = cells
            .iter()
            .map(|cell| cell.iter().map(|&v| 1u64 << v).sum())
            .collect();
        for (i, cell) in cells.iter().enumerate() {
            for (j, mask) in masks.iter().enumerate().skip(i) {
                let stubs: u32 = cell
                    .iter()
                    .map(|&v| (self.g.neighbours(v) & mask).count_ones())
                    .sum();
                let full = if i == j {
                    cell.len() * (cell.len() - 1)
                } else {
                    cell.len() * cells[j].len()
                };
                if stubs != 0 && stubs as usize != full {
                    return false;
                }
            }
        }
        true
    }

    /// Adjacency bits of the labelling that lists cells in order.
    fn leaf_bits(&self, cells: &Cells) -> Vec<u64> {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        let n = order.len();
        let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
        let mut k = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.g.has_edge(order[i], order[j]) {
                    bits[k / 64] |= 1u64 << (k % 64);
                }
                k += 1;
            }
        }
        bits
    }

    fn search(&mut self, mut cells: Cells) {
        self.refine(&mut cells);
        if self.cells_uniform(&cells) {
            let bits = self.leaf_bits(&cells);
            if self.best.as_ref().is_none_or(|b| bits < *b) {
                self.best = Some(bits);
            }
            return;
        }
        let target = cells
            .iter()
            .position(|cell| cell.len() > 1)
            .expect("a non-uniform partition has a splittable cell");
        for idx in 0..cells[target].len() {
            let mut child = cells.clone();
            let v = child[target].remove(idx);
            child.insert(target, vec![v]);
            self.search(child);
        }
    }
}

fn initial_cells(keys: &[u64]) -> Cells {
    let mut values: Vec<u64> = keys.to_vec();
    values.sort_unstable();
    values.dedup();
    values
        .iter()
        .map(|&value| {
            (0..keys.len())
                .filter(|&v| keys[v] == value)
                .collect::<Vec<_>>()
        })
        .collect()
}

fn form_for_keys(g: &Graph, keys: &[u64]) -> CanonicalForm {
    assert_eq!(keys.len(), g.n(), "one colour key per vertex");
    let cells = initial_cells(keys);
    let colours: Vec<u64> = cells.iter().flatten().map(|&v| keys[v]).collect();
    let mut searcher = Searcher { g, best: None };
    searcher.search(cells);
    CanonicalForm {
        n: g.n(),
        colours,
        bits: searcher.best.expect("search always reaches a leaf"),
    }
}

/// Canonical form under a uniform colouring.
#[must_use]
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_coloured(g, &vec![0; g.n()])
}

/// Canonical form respecting the given vertex colours.
///
/// Colour values must stay below `2^63` so the rooted variant can reserve the
/// low bit.
#[must_use]
pub fn canonical_form_coloured(g: &Graph, colours: &[u64]) -> CanonicalForm {
    let keys: Vec<u64> = colours.iter().map(|&c| c << 1).collect();
    form_for_keys(g, &keys)
}

/// Canonical form with one vertex singled out by colour.
///
/// Two rooted certificates are equal exactly when a colour-preserving
/// isomorphism maps one root to the other.
#[must_use]
pub fn rooted_certificate(g: &Graph, colours: &[u64], root: usize) -> CanonicalForm {
    assert!(root < g.n(), "root vertex out of range");
    let mut keys: Vec<u64> = colours.iter().map(|&c| c << 1).collect();
    keys[root] |= 1;
    form_for_keys(g, &keys)
}

/// Isomorphism test via certificate equality.
#[must_use]
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn graph_from_bits(n: usize, bits: u32) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    /// Reference isomorphism test by exhausting all vertex bijections.
    fn isomorphic_by_permutations(a: &Graph, b: &Graph) -> bool {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for shorter in permutations(n - 1) {
                for slot in 0..n {
                    let mut p = shorter.clone();
                    p.insert(slot, n - 1);
                    out.push(p);
                }
            }
            out
        }
        a.n() == b.n()
            && permutations(a.n())
                .iter()
                .any(|p| &a.relabelled(p) == b)
    }

    #[test]
    fn matches_permutation_oracle_on_order_four() {
        let graphs: Vec<Graph> = (0..64u32).map(|bits| graph_from_bits(4, bits)).collect();
        for x in &graphs {
            for y in &graphs {
                assert_eq!(
                    are_isomorphic(x, y),
                    isomorphic_by_permutations(x, y),
                    "disagreement on {:?} vs {:?}",
                    x.edges(),
                    y.edges()
                );
            }
        }
    }

    #[test]
    fn class_counts_match_known_census() {
        // Numbers of non-isomorphic simple graphs on 4, 5 and 6 vertices.
        for (n, expected) in [(4usize, 11usize), (5, 34), (6, 156)] {
            let pairs = n * (n - 1) / 2;
            let forms: HashSet<CanonicalForm> = (0..1u32 << pairs)
                .map(|bits| canonical_form(&graph_from_bits(n, bits)))
                .collect();
            assert_eq!(forms.len(), expected, "order {n}");
        }
    }

    #[test]
    fn relabelling_is_invisible() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let base = canonical_form(&g);
        for perm in [
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 5, 3],
            vec![1, 2, 3, 4, 5, 0],
        ] {
            assert_eq!(canonical_form(&g.relabelled(&perm)), base);
        }
    }

    #[test]
    fn regular_non_isomorphic_pairs_split() {
        // Two 2-regular graphs on six vertices: a hexagon and two triangles.
        let hexagon =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&hexagon, &triangles));
    }

    #[test]
    fn colours_constrain_isomorphism() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let left_end = canonical_form_coloured(&path, &[7, 0, 0]);
        let right_end = canonical_form_coloured(&path, &[0, 0, 7]);
        let middle = canonical_form_coloured(&path, &[0, 7, 0]);
        assert_eq!(left_end, right_end);
        assert_ne!(left_end, middle);
    }

    #[test]
    fn rooted_certificates_follow_orbits() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let colours = [0u64; 4];
        let ends =
            rooted_certificate(&path, &colours, 0) == rooted_certificate(&path, &colours, 3);
        let mixed =
            rooted_certificate(&path, &colours, 0) == rooted_certificate(&path, &colours, 1);
        assert!(ends);
        assert!(!mixed);
    }

    #[test]
    fn dense_graphs_stay_fast() {
        let mut clique = Graph::empty(12).unwrap();
        for i in 0..12 {
            for j in i + 1..12 {
                clique.add_edge(i, j);
            }
        }
        let form = canonical_form(&clique);
        assert_eq!(form.to_graph().edge_count(), 66);
        let empty = Graph::empty(12).unwrap();
        assert_ne!(canonical_form(&empty), form);
    }

    #[test]
    fn representative_reconstruction_round_trips() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        let form = canonical_form(&g);
        assert!(are_isomorphic(&form.to_graph(), &g));
        assert_eq!(canonical_form(&form.to_graph()), form);
    }
}
