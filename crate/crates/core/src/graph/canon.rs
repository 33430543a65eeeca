//! Canonical labeling by exhaustive permutation search.
//!
//! The canonical graph is the relabeling whose upper-triangle adjacency
//! string, read in graph6 bit order (column by column), is lexicographically
//! largest among all relabelings that list vertices by non-increasing degree.
//! Restricting to degree-sorted orders keeps the answer an isomorphism
//! invariant, since every isomorphism preserves degrees. Positions are filled
//! left to right and a branch is cut as soon as its prefix falls below the
//! best string found so far.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{encode_graph6, Graph, VertexSet};
use crate::error::{Error, Result};

/// Orders above this are refused: `10·9/2 = 45` key bits still fit a `u64`
/// and the worst case (vertex-transitive inputs) stays interactive.
pub const MAX_CANON_VERTICES: usize = 10;

/// graph6 text of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// Degree required at each position.
    slot_degree: Vec<usize>,
    order: Vec<usize>,
    used: VertexSet,
    best_key: u64,
    best_order: Vec<usize>,
    have_best: bool,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, key: u64, bits: u32, ahead: bool) {
        if pos == self.n {
            if !self.have_best || key > self.best_key {
                self.best_key = key;
                self.best_order.clone_from(&self.order);
                self.have_best = true;
            }
            return;
        }
        for v in 0..self.n {
            if self.used.contains(v) || self.g.degree(v) != self.slot_degree[pos] {
                continue;
            }
            let mut k = key;
            for &u in &self.order {
                k = (k << 1) | self.g.has_edge(u, v) as u64;
            }
            let b = bits + pos as u32;
            let mut now_ahead = ahead;
            if self.have_best && !ahead {
                let best_prefix = self.best_key >> (self.total_bits - b);
                if k < best_prefix {
                    continue;
                }
                now_ahead = k > best_prefix;
            }
            self.order.push(v);
            self.used.insert(v);
            self.run(pos + 1, k, b, now_ahead);
            self.used.remove(v);
            self.order.pop();
        }
    }
}

/// Returns the canonical graph and `perm` with `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    g.ensure_nonempty("canonical form")?;
    let n = g.order();
    if n > MAX_CANON_VERTICES {
        return Err(Error::capacity(
            "canonical form order",
            n,
            MAX_CANON_VERTICES,
        ));
    }
    let mut slot_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        slot_degree,
        order: Vec::with_capacity(n),
        used: VertexSet::EMPTY,
        best_key: 0,
        best_order: Vec::new(),
        have_best: false,
    };
    s.run(0, 0, 0, false);
    let mut perm = vec![0; n];
    for (new, &old) in s.best_order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((g.relabel(&perm), perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (c, _) = canonical_labeling(g)?;
    Ok(CanonicalForm(encode_graph6(&c)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// An isomorphism `map` from `a` to `b` (`map[v_a] = v_b`), if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order() || a.degree_sequence() != b.degree_sequence() {
        return Ok(None);
    }
    let (ca, pa) = canonical_labeling(a)?;
    let (cb, pb) = canonical_labeling(b)?;
    if ca != cb {
        return Ok(None);
    }
    let mut inv_b = vec![0; pb.len()];
    for (old, &new) in pb.iter().enumerate() {
        inv_b[new] = old;
    }
    Ok(Some(pa.iter().map(|&c| inv_b[c]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabeled_path_matches() {
        let p5 = path(5);
        let q = p5.relabel(&[3, 0, 4, 1, 2]);
        assert!(is_isomorphic(&p5, &q).unwrap());
        let iso = find_isomorphism(&p5, &q).unwrap().unwrap();
        assert_eq!(p5.relabel(&iso), q);
    }

    #[test]
    fn cycle_vs_path() {
        let mut c5 = path(5);
        c5.add_edge(0, 4);
        assert!(!is_isomorphic(&c5, &path(5)).unwrap());
    }

    #[test]
    fn petersen_is_fast_and_invariant() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut perm: Vec<usize> = (0..10).collect();
        perm.shuffle(&mut rng);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&g.relabel(&perm)).unwrap()
        );
    }

    #[test]
    fn rejects_large_and_empty() {
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
        assert!(canonical_form(&Graph::empty(0).unwrap()).is_err());
    }
}
