use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Normalized cotree: union children are connected and join children are
/// co-connected, so no node repeats its parent's kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        match self {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => {
                ch.iter().fold(VertexSet::EMPTY, |acc, c| acc | c.leaves())
            }
        }
    }

    /// The graph on `n` vertices described by the tree.
    pub fn evaluate(&self, n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        self.add_edges(&mut g);
        Ok(g)
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(ch) => {
                ch.iter().for_each(|c| c.add_edges(g));
                for (i, a) in ch.iter().enumerate() {
                    for b in &ch[i + 1..] {
                        for u in a.leaves() {
                            for v in b.leaves() {
                                g.add_edge(u, v);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Builds the cotree of `g`, or `None` if `g` is not a cograph (or empty).
pub fn build_cotree(g: &Graph) -> Option<Cotree> {
    if g.is_empty() {
        return None;
    }
    build(g, g.vertices())
}

fn build(g: &Graph, part: VertexSet) -> Option<Cotree> {
    if part.len() == 1 {
        return part.first().map(Cotree::Leaf);
    }
    let induced = g.induced_subgraph(part).ok()?;
    let h = &induced.graph;
    for (in_complement, node) in [(false, Cotree::Union as fn(_) -> _), (true, Cotree::Join)] {
        let parts = h.component_sets(in_complement);
        if parts.len() > 1 {
            let children = parts
                .into_iter()
                .map(|p| build(g, induced.lift(p)))
                .collect::<Option<Vec<_>>>()?;
            return Some(node(children));
        }
    }
    // Connected and co-connected with at least two vertices: contains a P4.
    None
}

pub fn is_cograph(g: &Graph) -> bool {
    build_cotree(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert!(!is_cograph(&path(4)));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            build_cotree(&k3),
            Some(Cotree::Join(vec![
                Cotree::Leaf(0),
                Cotree::Leaf(1),
                Cotree::Leaf(2)
            ]))
        );
        let mut c5 = path(5);
        c5.add_edge(0, 4);
        assert!(!is_cograph(&c5));
        assert!(!is_cograph(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn evaluation_reproduces_graph() {
        // (K2 ⊕ K1) ⋈ K̄2
        let g = Graph::from_edges(5, &[(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])
            .unwrap();
        let t = build_cotree(&g).unwrap();
        assert!(matches!(t, Cotree::Join(ref ch) if ch.len() == 2));
        assert_eq!(t.evaluate(5).unwrap(), g);
    }
}
