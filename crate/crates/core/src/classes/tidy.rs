use super::catalog::{recognize_in, BaseGraph};
use super::spider::{find_quasi_spider, find_spider_partition, SpiderPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;

/// Largest order accepted by [`is_p4_tidy_definitional`].
pub const MAX_DEFINITIONAL_TIDY: usize = 8;

/// P4-tidiness via the structure theorem: a graph is P4-tidy when it is
/// `K1`, a union or join of P4-tidy graphs, one of `C5`, `P5`, `P̄5`, or a
/// spider or quasi-spider whose head is empty or P4-tidy.
pub fn is_p4_tidy(g: &Graph) -> bool {
    if g.is_empty() {
        return false;
    }
    tidy(g)
}

fn tidy(g: &Graph) -> bool {
    if g.order() == 1 {
        return true;
    }
    for in_complement in [false, true] {
        let parts = g.component_sets(in_complement);
        if parts.len() > 1 {
            return parts
                .into_iter()
                .all(|p| g.induced_subgraph(p).is_ok_and(|h| tidy(&h.graph)));
        }
    }
    if recognize_in(g, &[BaseGraph::C5, BaseGraph::P5, BaseGraph::P5Bar]).is_some() {
        return true;
    }
    spider_like(g)
        .is_some_and(|p| p.h.is_empty() || g.induced_subgraph(p.h).is_ok_and(|h| tidy(&h.graph)))
}

/// A spider or quasi-spider partition of `g`, plain spiders first.
pub fn spider_like(g: &Graph) -> Option<SpiderPartition> {
    find_spider_partition(g).or_else(|| find_quasi_spider(g))
}

/// P4-tidiness straight from the definition, for small graphs.
pub fn is_p4_tidy_definitional(g: &Graph) -> Result<bool> {
    g.ensure_nonempty("P4-tidy check")?;
    if g.order() > MAX_DEFINITIONAL_TIDY {
        return Err(Error::capacity(
            "definitional P4-tidy order",
            g.order(),
            MAX_DEFINITIONAL_TIDY,
        ));
    }
    Ok(oracle::is_p4_tidy(&oracle::Matrix::new(g)))
}
