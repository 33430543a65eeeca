//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitrows.
//!
//! Row `v` of the adjacency is the open neighborhood `N(v)` as a [`VertexSet`].
//! Constructors accept the empty graph; analysis operations reject it.

mod canon;
mod enumerate;
mod io;
mod vertex_set;

pub use canon::{
    canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalForm,
    MAX_CANON_VERTICES,
};
pub use enumerate::{enumerate_nonisomorphic, MAX_ENUM_VERTICES};
pub use io::{decode_graph6, encode_graph6, parse_edge_list, parse_graph_text, write_edge_list};
pub use vertex_set::{Iter as VertexIter, VertexSet};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hard vertex limit of the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// Largest graph whose complementary prism still fits in [`MAX_VERTICES`].
pub const MAX_PRISM_BASE: usize = MAX_VERTICES / 2;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `original[new] = old`, ascending.
    pub original: Vec<usize>,
}

impl Induced {
    /// Maps a vertex of the host graph to its index in the induced graph.
    pub fn local(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }

    /// Lifts a set of induced-graph vertices back to host labels.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.map(&self.original)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v).bits();
        }
        Ok(g)
    }

    /// Builds a graph from unordered pairs. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry, irreflexivity and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidInput(format!(
                    "row {v} has bits beyond n={n}"
                )));
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::InvalidInput(format!("self-loop at vertex {v}")));
            }
            for u in VertexSet::from_bits(row) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(Error::InvalidInput(format!(
                        "asymmetric adjacency at ({v},{u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Checks that every bit of `set` names a vertex of this graph.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "vertex set {set} has members outside 0..{}",
                self.n
            )))
        }
    }

    pub(crate) fn ensure_nonempty(&self, op: &str) -> Result<()> {
        if self.n == 0 {
            Err(Error::InvalidInput(format!(
                "{op} is undefined on the empty graph"
            )))
        } else {
            Ok(())
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| (all - self.neighbors(v)).without(v).bits())
            .collect();
        Graph { n: self.n, adj }
    }

    /// `self ⊕ other`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << shift));
        Ok(Graph { n, adj })
    }

    /// `self ⋈ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Induced> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::InvalidInput(
                "induced subgraph of the empty set".into(),
            ));
        }
        let original = set.to_vec();
        let mut local = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| (self.neighbors(v) & set).map(&local).bits())
            .collect();
        Ok(Induced {
            graph: Graph {
                n: original.len(),
                adj,
            },
            original,
        })
    }

    /// Removes one vertex and relabels the rest in ascending order.
    pub fn remove_vertex(&self, v: usize) -> Result<Induced> {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Relabels by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.neighbors(v).map(perm).bits();
        }
        Graph { n: self.n, adj }
    }

    /// The complementary prism `GḠ`.
    ///
    /// Vertex `v` keeps its label in the `G` copy; its partner in the
    /// complement copy is `v + n`. The two copies are joined by the perfect
    /// matching `v – v+n`.
    pub fn complementary_prism(&self) -> Result<Graph> {
        if self.n > MAX_PRISM_BASE {
            return Err(Error::capacity("prism base order", self.n, MAX_PRISM_BASE));
        }
        let n = self.n;
        let co = self.complement();
        let mut adj = Vec::with_capacity(2 * n);
        for v in 0..n {
            adj.push(self.adj[v] | (1u64 << (v + n)));
        }
        for v in 0..n {
            adj.push((co.adj[v] << n) | (1u64 << v));
        }
        Ok(Graph { n: 2 * n, adj })
    }

    /// Connected components (or anticomponents when `in_complement`), each
    /// as a vertex set, sorted by smallest vertex.
    pub fn components(&self, in_complement: bool) -> Result<Vec<VertexSet>> {
        self.ensure_nonempty("components")?;
        Ok(self.component_sets(in_complement))
    }

    pub(crate) fn component_sets(&self, in_complement: bool) -> Vec<VertexSet> {
        let all = self.vertices();
        let mut unseen = all;
        let mut parts = Vec::new();
        while let Some(start) = unseen.first() {
            let mut part = VertexSet::singleton(start);
            let mut frontier = part;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    let nb = if in_complement {
                        (all - self.neighbors(v)).without(v)
                    } else {
                        self.neighbors(v)
                    };
                    next |= nb;
                }
                frontier = next - part;
                part |= next;
            }
            unseen = unseen - part;
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_sets(false).len() == 1
    }

    pub fn is_co_connected(&self) -> bool {
        self.n > 0 && self.component_sets(true).len() == 1
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertices();
        (0..self.n)
            .filter(|&v| self.neighbors(v) == all.without(v))
            .collect()
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Result<Option<usize>> {
        self.ensure_nonempty("girth")?;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        Ok(best)
    }

    /// A proper 2-colouring if one exists (`true` = second colour).
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        if !side.contains(u) {
                            side.insert(w);
                        }
                        queue.push_back(w);
                    } else if side.contains(w) == side.contains(u) {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_basics() {
        let k2 = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(Graph::from_edges(3, &[]).unwrap().edge_count(), 0);
        let p5 = path(5);
        assert_eq!(p5.degree_sequence(), vec![1, 1, 2, 2, 2]);
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Graph::empty(65),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn complement_and_de_morgan() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let p5 = path(5);
        assert_eq!(p5.complement().complement(), p5);

        let k1 = Graph::complete(1).unwrap();
        let p3 = k1.join(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(p3.degree_sequence(), vec![1, 1, 2]);

        let two_k2 = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!((two_k2.order(), two_k2.edge_count()), (4, 2));

        let a = Graph::complete(2).unwrap();
        let b = Graph::complete(3).unwrap();
        assert_eq!(
            a.join(&b).unwrap().complement(),
            a.complement().disjoint_union(&b.complement()).unwrap()
        );
    }

    #[test]
    fn union_capacity() {
        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn complement_of_universal_base_by_edge_count() {
        // K1 ⋈ complement(mK2) against K1 ⊕ mK2 for m = 1..=4.
        for m in 1..=4usize {
            let mk2 = (0..m).fold(Graph::empty(0).unwrap(), |acc, _| {
                acc.disjoint_union(&Graph::complete(2).unwrap()).unwrap()
            });
            let k1 = Graph::complete(1).unwrap();
            let g = k1.join(&mk2.complement()).unwrap();
            let co = g.complement();
            assert_eq!(co, k1.disjoint_union(&mk2).unwrap());
            let n = 2 * m + 1;
            assert_eq!(co.edge_count() + g.edge_count(), n * (n - 1) / 2);
            assert_eq!(co.edge_count(), m);
        }
    }

    #[test]
    fn induced() {
        let p5 = path(5);
        let sub = p5
            .induced_subgraph([0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(sub.graph, path(3));
        assert_eq!(p5.induced_subgraph(p5.vertices()).unwrap().graph, p5);
        let k4 = Graph::complete(4).unwrap();
        let pair = k4.induced_subgraph([1, 3].into_iter().collect()).unwrap();
        assert_eq!(pair.graph, Graph::complete(2).unwrap());
        assert_eq!(pair.local(3), Some(1));
        assert!(p5.induced_subgraph(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn prism_construction() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(
            k1.complementary_prism().unwrap(),
            Graph::complete(2).unwrap()
        );

        // prism(K2): ū-u-v-v̄ with u=0, v=1, ū=2, v̄=3.
        let k2 = Graph::complete(2).unwrap();
        let p = k2.complementary_prism().unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (1, 3)]);

        let p3 = path(3);
        let pp = p3.complementary_prism().unwrap();
        assert_eq!(pp.order(), 6);
        assert_eq!(
            (0..3).map(|v| pp.degree(v)).collect::<Vec<_>>(),
            vec![2, 3, 2]
        );
        for v in 0..3 {
            assert_eq!(pp.degree(v + 3), 3 - p3.degree(v));
        }
        assert!(Graph::empty(33).unwrap().complementary_prism().is_err());
    }

    #[test]
    fn components_and_anticomponents() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let parts = two_k2.components(false).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.len() == 2));

        // K1 ⋈ complement(2K2): anticomponent sizes 1, 2, 2.
        let g = Graph::complete(1)
            .unwrap()
            .join(&two_k2.complement())
            .unwrap();
        let mut sizes: Vec<_> = g
            .components(true)
            .unwrap()
            .iter()
            .map(|p| p.len())
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2]);
        assert_eq!(
            g.components(true).unwrap(),
            g.complement().components(false).unwrap()
        );
        assert_eq!(path(5).components(false).unwrap().len(), 1);
        assert!(Graph::empty(0).unwrap().components(false).is_err());
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(5).girth().unwrap(), Some(5));
        assert_eq!(cycle(4).girth().unwrap(), Some(4));
        assert_eq!(Graph::complete(4).unwrap().girth().unwrap(), Some(3));
        assert_eq!(path(5).girth().unwrap(), None);
        // Two triangles sharing nothing plus a 6-cycle elsewhere.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 3),
            ],
        )
        .unwrap();
        assert_eq!(g.girth().unwrap(), Some(3));
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn universal_vertices() {
        let g = Graph::complete(1).unwrap().join(&path(4)).unwrap();
        assert_eq!(g.universal_vertices().to_vec(), vec![0]);
    }
}
