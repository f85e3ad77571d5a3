//! Labelled simple graphs on at most 64 vertices, one `u64` adjacency row per
//! vertex. Values are immutable after construction in all public workflows;
//! operations allocate fresh results.

use thiserror::Error;

use crate::degseq::{DegreeSequence, MAX_VERTICES};

/// Errors raised by graph construction and editing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex index was not smaller than the graph order.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange {
        /// Offending index.
        vertex: usize,
        /// Graph order.
        n: usize,
    },
    /// More vertices than [`MAX_VERTICES`].
    #[error("graph order {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    /// A switch was applied to a quadruple that does not admit it.
    #[error("switch not admitted: requires edges {a}-{c}, {b}-{d} present and {a}-{d}, {b}-{c} absent")]
    NotAdmitted {
        /// First endpoint of the first removed edge.
        a: usize,
        /// Second endpoint of the first removed edge.
        c: usize,
        /// First endpoint of the second removed edge.
        b: usize,
        /// Second endpoint of the second removed edge.
        d: usize,
    },
}

/// A simple undirected labelled graph with bitset adjacency rows.
///
/// ```
/// use dsforce::Graph;
/// let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
/// assert_eq!(k3.edge_count(), 3);
/// assert_eq!(k3.degree(0), 2);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u != v {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Number of vertices.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Whether the edge `uv` is present (`false` when `u == v`).
    #[must_use]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Inserts the edge `uv` (no-op on loops).
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    /// Removes the edge `uv` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// The neighbourhood of `v` as a bitmask.
    #[must_use]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Degree of `v`.
    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// The sorted degree sequence of the graph.
    #[must_use]
    pub fn degree_sequence(&self) -> DegreeSequence {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeSequence::new(degrees).expect("degrees of a valid graph are always in range")
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    #[must_use]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u + 1 < 64 { !0u64 << (u + 1) } else { 0 };
            let mut higher = self.adj[u] & above;
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// The card obtained by deleting `v`: indices above `v` shift down by one,
    /// preserving the relative order of the remaining vertices.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let n = self.n - 1;
        let mut adj = Vec::with_capacity(n);
        let low_mask = (1u64 << v) - 1;
        for (u, &row) in self.adj.iter().enumerate() {
            if u == v {
                continue;
            }
            let high = if v + 1 < 64 { (row >> (v + 1)) << v } else { 0 };
            adj.push((row & low_mask) | high);
        }
        Ok(Graph { n, adj })
    }

    /// The induced subgraph on the first `m` vertices, keeping their labels.
    #[must_use]
    pub fn induced_prefix(&self, m: usize) -> Graph {
        let m = m.min(self.n);
        let mask = if m == 64 { !0u64 } else { (1u64 << m) - 1 };
        Graph {
            n: m,
            adj: self.adj[..m].iter().map(|&row| row & mask).collect(),
        }
    }

    /// All `n` cards of the graph, in deletion order.
    #[must_use]
    pub fn deck(&self) -> Vec<Graph> {
        (0..self.n)
            .map(|v| self.delete_vertex(v).expect("vertex index in range"))
            .collect()
    }

    /// The complement graph: edge `uv` present iff absent here, `u != v`.
    #[must_use]
    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & full & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Whether the switch removing edges `ac`, `bd` and inserting `ad`, `bc`
    /// is admitted: the four vertices are distinct, `ac` and `bd` are present,
    /// `ad` and `bc` are absent.
    #[must_use]
    pub fn admits_switch(&self, a: usize, c: usize, b: usize, d: usize) -> bool {
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && self.has_edge(a, c)
            && self.has_edge(b, d)
            && !self.has_edge(a, d)
            && !self.has_edge(b, c)
    }

    /// Applies the switch `ac, bd -> ad, bc`, preserving all degrees.
    pub fn apply_switch(&self, a: usize, c: usize, b: usize, d: usize) -> Result<Graph, GraphError> {
        for &v in &[a, b, c, d] {
            self.check_vertex(v)?;
        }
        if !self.admits_switch(a, c, b, d) {
            return Err(GraphError::NotAdmitted { a, c, b, d });
        }
        let mut g = self.clone();
        g.remove_edge(a, c);
        g.remove_edge(b, d);
        g.add_edge(a, d);
        g.add_edge(b, c);
        Ok(g)
    }

    /// Relabels the graph: vertex `v` of the result is `perm[v]` of `self`.
    #[must_use]
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(inverse[u], inverse[v]);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn construction_and_degrees() {
        let g = p4();
        assert_eq!(g.degree_sequence().degrees(), &[1, 1, 2, 2]);
        assert_eq!(g.edge_count(), 3);
        assert!(Graph::from_edges(2, &[(0, 5)]).is_err());
    }

    #[test]
    fn vertex_deletion_relabels_stably() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for v in 0..3 {
            let card = k3.delete_vertex(v).unwrap();
            assert_eq!(card.n(), 2);
            assert!(card.has_edge(0, 1));
        }
        // P4 minus a pendant is P3.
        let card = p4().delete_vertex(0).unwrap();
        assert_eq!(card.degree_sequence().degrees(), &[1, 1, 2]);
        assert!(card.has_edge(0, 1) && card.has_edge(1, 2));
        // Deck size equals the order.
        assert_eq!(p4().deck().len(), 4);
    }

    #[test]
    fn deleted_edge_totals() {
        // Sum of card edge counts = (n-2) * m.
        for g in [p4(), Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap()] {
            let total: usize = g.deck().iter().map(Graph::edge_count).sum();
            assert_eq!(total, (g.n() - 2) * g.edge_count());
        }
    }

    #[test]
    fn complement_involution_and_commutation() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        let empty4 = Graph::empty(4).unwrap();
        assert_eq!(empty4.complement().edge_count(), 6);
        // Complement and deletion commute exactly under the stable relabelling.
        for v in 0..g.n() {
            assert_eq!(
                g.complement().delete_vertex(v).unwrap(),
                g.delete_vertex(v).unwrap().complement()
            );
        }
    }

    #[test]
    fn switch_admission() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // 01 and 23 are edges, but 03 is also an edge, so not admitted.
        assert!(!c4.admits_switch(0, 1, 2, 3));
        // In P4 = 0-1-2-3, edges 01 and 23 exist, but 2-1 exists as well.
        assert!(!p4().admits_switch(0, 1, 2, 3));
        // Two disjoint edges 0-1, 2-3: switch to 0-3, 2-1.
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.admits_switch(0, 1, 2, 3));
        let switched = two_k2.apply_switch(0, 1, 2, 3).unwrap();
        assert!(switched.has_edge(0, 3) && switched.has_edge(2, 1));
        assert_eq!(switched.degree_sequence(), two_k2.degree_sequence());
        assert!(matches!(
            c4.apply_switch(0, 1, 2, 3),
            Err(GraphError::NotAdmitted { .. })
        ));
    }

    #[test]
    fn relabelling_preserves_structure() {
        let g = p4();
        let perm = [3, 2, 1, 0];
        let h = g.relabelled(&perm);
        assert_eq!(h.degree_sequence(), g.degree_sequence());
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && h.has_edge(2, 3));
    }
}
