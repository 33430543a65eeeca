use std::collections::BTreeMap;

use super::{canonical_labeling, encode_graph6, Graph, VertexSet};
use crate::error::{Error, Result};

pub const MAX_ENUM_VERTICES: usize = 7;

/// One representative per isomorphism class on `n` vertices, each in its
/// canonical labeling, ordered by canonical form.
///
/// Classes on `n` vertices are grown from the classes on `n - 1` by adding a
/// vertex with every possible neighborhood and deduplicating by canonical
/// form. Deleting any vertex of an `n`-vertex graph leaves a graph isomorphic
/// to some `(n-1)`-representative, so no class is missed.
pub fn enumerate_nonisomorphic(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::capacity("enumeration order", n, MAX_ENUM_VERTICES));
    }
    if n == 0 {
        return Err(Error::InvalidInput("enumeration needs n >= 1".into()));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for base in &level {
            for nbrs in 0..(1u64 << (k - 1)) {
                let mut rows = base.rows().to_vec();
                for u in VertexSet::from_bits(nbrs) {
                    rows[u] |= 1 << (k - 1);
                }
                rows.push(nbrs);
                let g = Graph { n: k, adj: rows };
                let (c, _) = canonical_labeling(&g)?;
                next.entry(encode_graph6(&c)).or_insert(c);
            }
        }
        level = next.into_values().collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::BTreeSet;

    /// Dedup of every labeled graph, independent of the growth procedure.
    fn labeled_classes(n: usize, connected_only: bool) -> BTreeSet<String> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| (mask >> b) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if connected_only && !g.is_connected() {
                continue;
            }
            out.insert(canonical_form(&g).unwrap().to_string());
        }
        out
    }

    #[test]
    fn counts_match_labeled_dedup() {
        for n in 1..=5 {
            for connected in [false, true] {
                let grown: BTreeSet<String> = enumerate_nonisomorphic(n, connected)
                    .unwrap()
                    .iter()
                    .map(|g| canonical_form(g).unwrap().to_string())
                    .collect();
                assert_eq!(
                    grown,
                    labeled_classes(n, connected),
                    "n={n} connected={connected}"
                );
            }
        }
        assert_eq!(labeled_classes(4, false).len(), 11);
        assert_eq!(labeled_classes(3, true).len(), 2);
    }

    #[test]
    fn known_class_counts() {
        let all: Vec<usize> = (1..=7)
            .map(|n| enumerate_nonisomorphic(n, false).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = (1..=7)
            .map(|n| enumerate_nonisomorphic(n, true).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn limits() {
        assert!(matches!(
            enumerate_nonisomorphic(8, false),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
