//! Spiders and quasi-spiders.
//!
//! A spider of weight `k` splits its vertices into a clique `C`, an
//! independent set `X` (both of size `k`) and a head `H` joined to all of `C`
//! and to none of `X`. In a thin spider `x_i` sees only `c_i`; in a thick one
//! it sees every `c_j` except `c_i`. A quasi-spider replaces one vertex of
//! `C ∪ X` by two twins, adjacent (`K2`) or not (`K̄2`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpiderKind {
    Thin,
    Thick,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    C,
    X,
}

/// The graph replacing a quasi-spider vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Replacement {
    K2,
    K2Bar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiInfo {
    /// The twins, smaller label first.
    pub pair: (usize, usize),
    pub replacement: Replacement,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderPartition {
    /// For a quasi-spider both twins are listed in their side.
    pub c: VertexSet,
    pub x: VertexSet,
    pub h: VertexSet,
    pub kind: SpiderKind,
    /// Weight of the underlying spider.
    pub k: usize,
    /// `(c_i, x_i)` for each `i`, using the smaller twin for a replaced vertex.
    pub legs: Vec<(usize, usize)>,
    pub quasi: Option<QuasiInfo>,
}

pub fn gen_spider(kind: SpiderKind, k: usize, head: &Graph) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "spider weight must be at least 2, got {k}"
        )));
    }
    let h = head.order();
    let n = 2 * k + h;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::capacity(
            "spider order",
            n,
            crate::graph::MAX_VERTICES,
        ));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            edges.push((i, j));
        }
        for j in 0..k {
            let leg = match kind {
                SpiderKind::Thin => i == j,
                SpiderKind::Thick => i != j,
            };
            if leg {
                edges.push((j, k + i));
            }
        }
        for v in 0..h {
            edges.push((i, 2 * k + v));
        }
    }
    edges.extend(
        head.edges()
            .into_iter()
            .map(|(u, v)| (2 * k + u, 2 * k + v)),
    );
    Graph::from_edges(n, &edges)
}

/// The spider with `c_index` or `x_index` (per `side`) doubled; the new twin
/// is the last vertex.
pub fn gen_quasi_spider(
    kind: SpiderKind,
    k: usize,
    head: &Graph,
    side: Side,
    index: usize,
    replacement: Replacement,
) -> Result<Graph> {
    if index >= k {
        return Err(Error::InvalidInput(format!(
            "index {index} out of range for weight {k}"
        )));
    }
    let g = gen_spider(kind, k, head)?;
    let original = match side {
        Side::C => index,
        Side::X => k + index,
    };
    let twin = g.order();
    let mut edges = g.edges();
    edges.extend(g.neighbors(original).iter().map(|u| (u, twin)));
    if replacement == Replacement::K2 {
        edges.push((original, twin));
    }
    Graph::from_edges(twin + 1, &edges)
}

/// Recognizes a spider and returns its partition.
///
/// `X` is forced to be the set of minimum-degree vertices: legs of a thin
/// spider have degree 1 while everything else has degree at least `k`, and
/// legs of a thick spider (k ≥ 3) have degree `k − 1` while clique and head
/// vertices have degree at least `k`. Every adjacency condition is then
/// checked in full. Weight-2 spiders are reported as thin.
pub fn find_spider_partition(g: &Graph) -> Option<SpiderPartition> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    let min_deg = (0..n).map(|v| g.degree(v)).min()?;
    let x: VertexSet = (0..n).filter(|&v| g.degree(v) == min_deg).collect();
    let k = x.len();
    if k < 2 {
        return None;
    }
    let kind = if min_deg == 1 {
        SpiderKind::Thin
    } else if k >= 3 && min_deg == k - 1 {
        SpiderKind::Thick
    } else {
        return None;
    };
    let c = x
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v));
    if c.len() != k || c.intersects(x) {
        return None;
    }
    let h = g.vertices() - c - x;
    for v in c {
        if !(c.without(v)).is_subset(g.neighbors(v)) || !h.is_subset(g.neighbors(v)) {
            return None;
        }
    }
    if h.iter().any(|v| g.neighbors(v).intersects(x)) {
        return None;
    }
    let mut legs = Vec::with_capacity(k);
    let mut used = VertexSet::EMPTY;
    for xv in x {
        let partner = match kind {
            SpiderKind::Thin => g.neighbors(xv),
            SpiderKind::Thick => c - g.neighbors(xv),
        };
        if partner.len() != 1 || partner.intersects(used) {
            return None;
        }
        used |= partner;
        legs.push((partner.first()?, xv));
    }
    legs.sort_unstable();
    Some(SpiderPartition {
        c,
        x,
        h,
        kind,
        k,
        legs,
        quasi: None,
    })
}

/// Recognizes a quasi-spider that is not a plain spider.
///
/// Twin pairs `u < v` are tried in lexicographic order; `v` is deleted and
/// the rest must be a spider with `u` in `C ∪ X`.
pub fn find_quasi_spider(g: &Graph) -> Option<SpiderPartition> {
    let n = g.order();
    if n < 5 || find_spider_partition(g).is_some() {
        return None;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let (nu, nv) = (g.neighbors(u).without(v), g.neighbors(v).without(u));
            if nu != nv {
                continue;
            }
            let rest = g.remove_vertex(v).ok()?;
            let Some(p) = find_spider_partition(&rest.graph) else {
                continue;
            };
            let lu = rest.local(u)?;
            let side = if p.c.contains(lu) {
                Side::C
            } else if p.x.contains(lu) {
                Side::X
            } else {
                continue;
            };
            let replacement = if g.has_edge(u, v) {
                Replacement::K2
            } else {
                Replacement::K2Bar
            };
            let mut c = rest.lift(p.c);
            let mut x = rest.lift(p.x);
            match side {
                Side::C => c.insert(v),
                Side::X => x.insert(v),
            }
            let map = |w: usize| rest.original[w];
            return Some(SpiderPartition {
                c,
                x,
                h: rest.lift(p.h),
                kind: p.kind,
                k: p.k,
                legs: p.legs.iter().map(|&(a, b)| (map(a), map(b))).collect(),
                quasi: Some(QuasiInfo {
                    pair: (u, v),
                    replacement,
                    side,
                }),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
        let e: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn empty() -> Graph {
        Graph::empty(0).unwrap()
    }

    #[test]
    fn p4_is_thin_weight_two() {
        let p = find_spider_partition(&path(4)).unwrap();
        assert_eq!(p.kind, SpiderKind::Thin);
        assert_eq!(p.k, 2);
        assert_eq!(p.c.to_vec(), vec![1, 2]);
        assert_eq!(p.x.to_vec(), vec![0, 3]);
        assert!(p.h.is_empty());
        assert_eq!(p.legs, vec![(1, 0), (2, 3)]);
    }

    #[test]
    fn weight_two_kinds_coincide() {
        let thin = gen_spider(SpiderKind::Thin, 2, &empty()).unwrap();
        let thick = gen_spider(SpiderKind::Thick, 2, &empty()).unwrap();
        assert!(is_isomorphic(&thin, &thick).unwrap());
        assert_eq!(
            find_spider_partition(&thick).unwrap().kind,
            SpiderKind::Thin
        );
    }

    #[test]
    fn thin_spider_from_edge_list() {
        // Thin spider of weight 3 whose head is an edge: legs 1-2, 3-4, 5-6,
        // clique 1,3,5, head 7-8 joined to the clique.
        let expected = one_based(
            8,
            &[
                (1, 2),
                (3, 4),
                (5, 6),
                (1, 3),
                (1, 5),
                (3, 5),
                (7, 8),
                (1, 7),
                (3, 7),
                (5, 7),
                (1, 8),
                (3, 8),
                (5, 8),
            ],
        );
        let g = gen_spider(SpiderKind::Thin, 3, &Graph::complete(2).unwrap()).unwrap();
        assert!(is_isomorphic(&g, &expected).unwrap());
        let with_k1 = gen_spider(SpiderKind::Thin, 3, &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(with_k1.order(), 7);
        assert_eq!(find_spider_partition(&with_k1).unwrap().h.len(), 1);
    }

    #[test]
    fn thick_quasi_spider_from_edge_list() {
        // Top row 1,3,5,7 is a clique; 1 and 3 are the twins replacing c1.
        let expected = one_based(
            7,
            &[
                (1, 3),
                (1, 5),
                (1, 7),
                (3, 5),
                (3, 7),
                (5, 7),
                (1, 4),
                (1, 6),
                (3, 4),
                (3, 6),
                (5, 2),
                (5, 6),
                (7, 2),
                (7, 4),
            ],
        );
        let g =
            gen_quasi_spider(SpiderKind::Thick, 3, &empty(), Side::C, 0, Replacement::K2).unwrap();
        assert!(is_isomorphic(&g, &expected).unwrap());
        let q = find_quasi_spider(&expected).unwrap();
        assert_eq!(q.kind, SpiderKind::Thick);
        assert_eq!(q.k, 3);
        let info = q.quasi.unwrap();
        assert_eq!(info.pair, (0, 2));
        assert_eq!(info.side, Side::C);
        assert_eq!(info.replacement, Replacement::K2);
    }

    #[test]
    fn z_is_a_quasi_spider() {
        let z =
            gen_quasi_spider(SpiderKind::Thin, 2, &empty(), Side::X, 0, Replacement::K2).unwrap();
        assert_eq!(z.order(), 5);
        assert_eq!(z.edges(), vec![(0, 1), (0, 2), (0, 4), (1, 3), (2, 4)]);
        let q = find_quasi_spider(&z).unwrap();
        assert_eq!(q.quasi.unwrap().side, Side::X);
        assert!(find_spider_partition(&z).is_none());
    }

    #[test]
    fn non_spiders() {
        assert!(find_spider_partition(&Graph::complete(4).unwrap()).is_none());
        assert!(find_quasi_spider(&Graph::complete(5).unwrap()).is_none());
        assert!(find_spider_partition(&path(5)).is_none());
        assert!(find_quasi_spider(&path(4)).is_none());
    }

    #[test]
    fn generated_spiders_are_recovered() {
        let heads = [
            empty(),
            Graph::empty(1).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::empty(2).unwrap(),
            path(3),
            path(4),
        ];
        for kind in [SpiderKind::Thin, SpiderKind::Thick] {
            for k in 2..=4 {
                for head in &heads {
                    let g = gen_spider(kind, k, head).unwrap();
                    let p =
                        find_spider_partition(&g).unwrap_or_else(|| panic!("{kind:?} {k} {head}"));
                    assert_eq!((p.c.len(), p.x.len(), p.h.len()), (k, k, head.order()));
                    let expected = if k == 2 { SpiderKind::Thin } else { kind };
                    assert_eq!(p.kind, expected);
                }
            }
        }
    }

    #[test]
    fn generated_quasi_spiders_are_recovered() {
        let heads = [
            empty(),
            Graph::empty(1).unwrap(),
            Graph::complete(2).unwrap(),
        ];
        for kind in [SpiderKind::Thin, SpiderKind::Thick] {
            for k in 2..=3 {
                for head in &heads {
                    for side in [Side::C, Side::X] {
                        for replacement in [Replacement::K2, Replacement::K2Bar] {
                            let g = gen_quasi_spider(kind, k, head, side, 0, replacement).unwrap();
                            let q = find_quasi_spider(&g).unwrap_or_else(|| {
                                panic!("{kind:?} {k} {head} {side:?} {replacement:?}")
                            });
                            let info = q.quasi.unwrap();
                            assert_eq!(info.replacement, replacement);
                            assert_eq!(info.side, side);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(gen_spider(SpiderKind::Thin, 1, &empty()).is_err());
        assert!(
            gen_quasi_spider(SpiderKind::Thin, 2, &empty(), Side::C, 2, Replacement::K2).is_err()
        );
    }
}
