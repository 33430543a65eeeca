//! Small graphs that appear as bases or exceptions in the characterizations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, decode_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BaseGraph {
    K2,
    K3,
    P5,
    P5JoinK1,
    Z,
    ZJoinK1,
    C5,
    P5Bar,
}

/// `(name, graph6 in the documented labeling, graph6 of the canonical form)`.
///
/// `Z` is the triangle `{0, 2, 4}` with the path `0-1-3` attached; joins put
/// the extra vertex last.
const TABLE: [(BaseGraph, &str, &str, &str); 8] = [
    (BaseGraph::K2, "K2", "A_", "A_"),
    (BaseGraph::K3, "K3", "Bw", "Bw"),
    (BaseGraph::P5, "P5", "DhC", "DqG"),
    (BaseGraph::P5JoinK1, "P5+K1", "EhFw", "E}iO"),
    (BaseGraph::Z, "Z", "Dqg", "D{C"),
    (BaseGraph::ZJoinK1, "Z+K1", "Eqjw", "E~qG"),
    (BaseGraph::C5, "C5", "Dhc", "DqK"),
    (BaseGraph::P5Bar, "P5bar", "DUw", "D{S"),
];

impl BaseGraph {
    pub const ALL: [BaseGraph; 8] = [
        BaseGraph::K2,
        BaseGraph::K3,
        BaseGraph::P5,
        BaseGraph::P5JoinK1,
        BaseGraph::Z,
        BaseGraph::ZJoinK1,
        BaseGraph::C5,
        BaseGraph::P5Bar,
    ];

    /// Connected bases of the P4-tidy recursion.
    pub const P4_TIDY_BASES: [BaseGraph; 6] = [
        BaseGraph::K2,
        BaseGraph::K3,
        BaseGraph::P5,
        BaseGraph::P5JoinK1,
        BaseGraph::Z,
        BaseGraph::ZJoinK1,
    ];

    /// Bases of the cograph recursion.
    pub const COGRAPH_BASES: [BaseGraph; 2] = [BaseGraph::K2, BaseGraph::K3];

    fn row(self) -> &'static (BaseGraph, &'static str, &'static str, &'static str) {
        &TABLE[self as usize]
    }

    pub fn name(self) -> &'static str {
        self.row().1
    }

    pub fn graph6(self) -> &'static str {
        self.row().2
    }

    pub fn canonical(self) -> &'static str {
        self.row().3
    }

    pub fn graph(self) -> Graph {
        decode_graph6(self.graph6()).expect("catalog constants are valid graph6")
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaseGraph::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown base graph {s:?}")))
    }
}

/// Matches `g` against the catalog by canonical form.
pub fn recognize_base(g: &Graph) -> Option<BaseGraph> {
    recognize_in(g, &BaseGraph::ALL)
}

pub(crate) fn recognize_in(g: &Graph, candidates: &[BaseGraph]) -> Option<BaseGraph> {
    let n = g.order();
    if !(2..=6).contains(&n) {
        return None;
    }
    let form = canonical_form(g).ok()?;
    candidates
        .iter()
        .copied()
        .find(|b| b.canonical() == form.as_str())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{gen_quasi_spider, Replacement, Side, SpiderKind};
    use crate::graph::{encode_graph6, is_isomorphic};

    #[test]
    fn constants_are_consistent() {
        for (i, b) in BaseGraph::ALL.into_iter().enumerate() {
            assert_eq!(TABLE[i].0, b);
            let g = b.graph();
            assert_eq!(encode_graph6(&g), b.graph6());
            assert_eq!(canonical_form(&g).unwrap().as_str(), b.canonical(), "{b}");
            assert_eq!(recognize_base(&g), Some(b));
            assert_eq!(b.name().parse::<BaseGraph>().unwrap(), b);
        }
    }

    #[test]
    fn z_matches_the_quasi_spider() {
        let empty = Graph::empty(0).unwrap();
        let q = gen_quasi_spider(SpiderKind::Thin, 2, &empty, Side::X, 0, Replacement::K2).unwrap();
        assert!(is_isomorphic(&q, &BaseGraph::Z.graph()).unwrap());
        let thick =
            gen_quasi_spider(SpiderKind::Thick, 2, &empty, Side::X, 0, Replacement::K2).unwrap();
        assert!(is_isomorphic(&thick, &BaseGraph::Z.graph()).unwrap());
    }

    #[test]
    fn joins_and_complements() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            BaseGraph::P5.graph().join(&k1).unwrap(),
            BaseGraph::P5JoinK1.graph()
        );
        assert_eq!(
            BaseGraph::Z.graph().join(&k1).unwrap(),
            BaseGraph::ZJoinK1.graph()
        );
        assert_eq!(BaseGraph::P5.graph().complement(), BaseGraph::P5Bar.graph());
        let mut relabeled = BaseGraph::C5.graph().relabel(&[2, 4, 1, 3, 0]);
        assert_eq!(recognize_base(&relabeled), Some(BaseGraph::C5));
        relabeled = Graph::empty(5).unwrap();
        assert_eq!(recognize_base(&relabeled), None);
    }
}
