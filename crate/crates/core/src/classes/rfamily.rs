//! The family `R(l, m) = K̄_l ⋈ m K2` and its one-edge-deficient variant.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RShape {
    pub l: usize,
    pub m: usize,
    pub starred: bool,
    /// The `l` vertices of the independent side.
    pub independent: VertexSet,
    /// The `m` matching edges, each as `(smaller, larger)`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// For a starred shape, the missing edge as `(independent, pair vertex)`.
    pub missing: Option<(usize, usize)>,
}

impl RShape {
    /// Vertices of the matching side.
    pub fn matched(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

/// Unstarred recognition. An independent vertex misses exactly the other
/// independent vertices, so each seed `v` proposes
/// `I = {v} ∪ non-neighbors(v)` and the proposal is checked in full.
fn recognize_plain(g: &Graph) -> Option<RShape> {
    recognize_from(g, 0..g.order())
}

fn recognize_from(g: &Graph, seeds: impl IntoIterator<Item = usize>) -> Option<RShape> {
    if g.order() < 3 {
        return None;
    }
    let all = g.vertices();
    'candidates: for v in seeds {
        let independent = all - g.neighbors(v);
        let matched = all - independent;
        if matched.is_empty() || matched.len() % 2 == 1 {
            continue;
        }
        for u in independent {
            if g.neighbors(u) != matched {
                continue 'candidates;
            }
        }
        let mut pairs = Vec::new();
        for w in matched {
            let inner = g.neighbors(w) & matched;
            if inner.len() != 1 || !independent.is_subset(g.neighbors(w)) {
                continue 'candidates;
            }
            let partner = inner.first()?;
            if w < partner {
                pairs.push((w, partner));
            }
        }
        return Some(RShape {
            l: independent.len(),
            m: pairs.len(),
            starred: false,
            independent,
            pairs,
            missing: None,
        });
    }
    None
}

/// Matches `g` against `R(l, m)` and then `R*(l, m)`.
///
/// For the starred form each non-edge is added back in lexicographic order
/// until the result is an `R(l, m)` with the added edge between its sides.
/// One end of that edge is independent, so only its two ends are tried as
/// seeds; this matters for `K3`, where any vertex could be the independent
/// one.
pub fn recognize_r(g: &Graph) -> Option<RShape> {
    if let Some(shape) = recognize_plain(g) {
        return Some(shape);
    }
    let n = g.order();
    for u in 0..n {
        for w in (u + 1)..n {
            if g.has_edge(u, w) {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, w);
            for (seed, other) in [(u, w), (w, u)] {
                let Some(mut shape) = recognize_from(&h, [seed]) else {
                    continue;
                };
                if shape.independent.contains(other) {
                    continue;
                }
                shape.starred = true;
                shape.missing = Some((seed, other));
                return Some(shape);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::named::{gen_named, Family};

    #[test]
    fn small_members() {
        let k3 = Graph::complete(3).unwrap();
        let s = recognize_r(&k3).unwrap();
        assert_eq!((s.l, s.m, s.starred), (1, 1, false));
        let p3 = gen_named(Family::Path { n: 3 }).unwrap();
        let s = recognize_r(&p3).unwrap();
        assert_eq!((s.l, s.m, s.starred), (1, 1, true));
        assert!(recognize_r(&gen_named(Family::Path { n: 5 }).unwrap()).is_none());
        // The middle vertex first: adding the missing edge yields K3, whose
        // first seed would be the wrong independent vertex.
        let p3_mid_first = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let s = recognize_r(&p3_mid_first).unwrap();
        assert_eq!((s.l, s.m, s.starred), (1, 1, true));
        assert!(recognize_r(&Graph::complete(4).unwrap()).is_none());
    }

    #[test]
    fn generated_members_are_recovered() {
        for l in 1..=3 {
            for m in 1..=3 {
                let s = recognize_r(&gen_named(Family::R { l, m }).unwrap()).unwrap();
                assert_eq!((s.l, s.m, s.starred), (l, m, false));
                let s = recognize_r(&gen_named(Family::RStar { l, m }).unwrap()).unwrap();
                assert_eq!((s.l, s.m, s.starred), (l, m, true), "R*({l},{m})");
            }
        }
        let s = recognize_r(&gen_named(Family::RStar { l: 2, m: 1 }).unwrap()).unwrap();
        // The deficient independent vertex is the only one of degree 1.
        assert_eq!(s.missing.map(|(i, _)| i), Some(0));
        assert!(s.independent.contains(0));
    }
}
