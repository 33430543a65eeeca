//! OLD_oind for P4-tidy graphs and cographs.
//!
//! A connected graph of either class has a set exactly when it is one of a
//! few bases or arises as `(G1 ⊕ … ⊕ Gt) ⋈ K1` with `t ≥ 2` accepted
//! connected parts. The witness of such a join is the union of the part
//! witnesses; the apex stays out, being the only vertex that sees all of it.

use serde::{Deserialize, Serialize};

use crate::classes::{is_cograph, is_p4_tidy, recognize_in, BaseGraph};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, find_isomorphism, Graph, VertexSet};
use crate::oldoind::verify_oldoind;

/// Minimum OLD_oind sets of the bases in their catalog labeling, found by
/// the exact search and pinned here.
pub fn base_witness(base: BaseGraph) -> Option<VertexSet> {
    let v: &[usize] = match base {
        BaseGraph::K2 | BaseGraph::K3 => &[0, 1],
        BaseGraph::P5 | BaseGraph::P5JoinK1 => &[0, 1, 3, 4],
        BaseGraph::Z | BaseGraph::ZJoinK1 => &[1, 2, 3, 4],
        BaseGraph::C5 | BaseGraph::P5Bar => return None,
    };
    Some(v.iter().collect())
}

/// How a verdict was reached; vertices are labels of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum TidyTrace {
    /// The input is disconnected and each component is decided alone.
    Components {
        parts: Vec<TidyTrace>,
    },
    Base {
        name: String,
        vertices: Vec<usize>,
    },
    /// `(G1 ⊕ … ⊕ Gt) ⋈ K1` with the given apex.
    Apex {
        apex: usize,
        parts: Vec<TidyTrace>,
    },
    Reject {
        graph6: String,
        vertices: Vec<usize>,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TidyDecision {
    pub witness: Option<VertexSet>,
    pub trace: TidyTrace,
}

#[derive(Clone, Copy)]
enum Class {
    P4Tidy,
    Cograph,
}

impl Class {
    fn bases(self) -> &'static [BaseGraph] {
        match self {
            Class::P4Tidy => &BaseGraph::P4_TIDY_BASES,
            Class::Cograph => &BaseGraph::COGRAPH_BASES,
        }
    }
}

pub fn p4tidy_oldoind(g: &Graph) -> Result<Option<VertexSet>> {
    Ok(p4tidy_oldoind_traced(g)?.witness)
}

pub fn p4tidy_oldoind_traced(g: &Graph) -> Result<TidyDecision> {
    g.ensure_nonempty("P4-tidy decider")?;
    if !is_p4_tidy(g) {
        return Err(Error::NotP4Tidy);
    }
    decide(g, Class::P4Tidy)
}

pub fn cograph_oldoind(g: &Graph) -> Result<Option<VertexSet>> {
    Ok(cograph_oldoind_traced(g)?.witness)
}

pub fn cograph_oldoind_traced(g: &Graph) -> Result<TidyDecision> {
    g.ensure_nonempty("cograph decider")?;
    if !is_cograph(g) {
        return Err(Error::NotCograph);
    }
    decide(g, Class::Cograph)
}

fn decide(g: &Graph, class: Class) -> Result<TidyDecision> {
    let parts = g.component_sets(false);
    let decision = if parts.len() == 1 {
        let (witness, trace) = connected(g, class, &identity(g.order()))?;
        TidyDecision { witness, trace }
    } else {
        let mut witness = Some(VertexSet::EMPTY);
        let mut traces = Vec::with_capacity(parts.len());
        for p in parts {
            let h = g.induced_subgraph(p)?;
            let (w, t) = connected(&h.graph, class, &h.original)?;
            witness = witness.zip(w).map(|(a, b)| a | b);
            traces.push(t);
        }
        TidyDecision {
            witness,
            trace: TidyTrace::Components { parts: traces },
        }
    };
    if let Some(s) = decision.witness {
        let verdict = verify_oldoind(g, s)?;
        if let Some(v) = verdict.violation {
            return Err(Error::ContractViolation(format!(
                "constructed witness {s} fails: {v:?}"
            )));
        }
    }
    Ok(decision)
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Decides a connected graph; `labels` maps its vertices to input labels.
/// The returned witness is in the input labeling.
fn connected(g: &Graph, class: Class, labels: &[usize]) -> Result<(Option<VertexSet>, TidyTrace)> {
    let lift = |s: VertexSet| s.map(labels);
    let all_labels = || labels.to_vec();
    let reject = |reason: &str| TidyTrace::Reject {
        graph6: encode_graph6(g),
        vertices: all_labels(),
        reason: reason.to_string(),
    };
    if g.order() == 1 {
        return Ok((None, reject("a single vertex cannot be open-dominated")));
    }
    if let Some(base) = recognize_in(g, class.bases()) {
        let iso = find_isomorphism(&base.graph(), g)?.ok_or_else(|| {
            Error::ContractViolation(format!("catalog match for {base} has no isomorphism"))
        })?;
        let w = base_witness(base)
            .ok_or_else(|| Error::ContractViolation(format!("base {base} has no stored witness")))?
            .map(&iso);
        let trace = TidyTrace::Base {
            name: base.name().to_string(),
            vertices: all_labels(),
        };
        return Ok((Some(lift(w)), trace));
    }
    // At most one universal vertex can disconnect the graph when removed.
    let apex = g.universal_vertices().iter().find(|&v| {
        g.induced_subgraph(g.vertices().without(v))
            .is_ok_and(|h| !h.graph.is_connected())
    });
    let Some(apex) = apex else {
        return Ok((
            None,
            reject("not a base and no universal vertex separates the graph"),
        ));
    };
    let rest = g.vertices().without(apex);
    let mut witness = Some(VertexSet::EMPTY);
    let mut traces = Vec::new();
    let inner = g.induced_subgraph(rest)?;
    for p in inner.graph.component_sets(false) {
        let h = g.induced_subgraph(inner.lift(p))?;
        let sub_labels: Vec<usize> = h.original.iter().map(|&v| labels[v]).collect();
        let (w, t) = connected(&h.graph, class, &sub_labels)?;
        witness = witness.zip(w).map(|(a, b)| a | b);
        traces.push(t);
    }
    let trace = TidyTrace::Apex {
        apex: labels[apex],
        parts: traces,
    };
    Ok((witness, trace))
}
