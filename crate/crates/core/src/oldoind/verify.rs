use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The first clause a candidate set fails, with its witness vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `v` has no neighbor in the set.
    NotOpenDominating { v: usize },
    /// `u < v` have the same code.
    NotDistinguished { u: usize, v: usize },
    /// `v` is in the set and has two or more neighbors in it.
    OpenIndependence { v: usize },
    /// `v` is in the set and is open-dominated more than once.
    OverDominatedInSet { v: usize },
    /// `v` is outside the set and is open-dominated exactly once.
    UnderDominatedOutside { v: usize },
}

impl Violation {
    pub fn witnesses(&self) -> Vec<usize> {
        match *self {
            Violation::NotDistinguished { u, v } => vec![u, v],
            Violation::NotOpenDominating { v }
            | Violation::OpenIndependence { v }
            | Violation::OverDominatedInSet { v }
            | Violation::UnderDominatedOutside { v } => vec![v],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub violation: Option<Violation>,
    /// `codes[v] = N(v) ∩ S`, present only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<VertexSet>>,
}

impl Verdict {
    fn from_violation(violation: Option<Violation>) -> Self {
        Verdict {
            violation,
            codes: None,
        }
    }

    #[inline]
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// `N(v) ∩ S`.
#[inline]
pub fn code(g: &Graph, set: VertexSet, v: usize) -> VertexSet {
    g.neighbors(v) & set
}

fn check_input(g: &Graph, set: VertexSet) -> Result<()> {
    g.ensure_nonempty("verification")?;
    g.check_set(set)
}

/// Checks the three OLD_oind clauses and reports the first failure.
///
/// Clauses are tried in a fixed order: open domination, then open
/// independence, then location. Within a clause the smallest witness
/// (lexicographically smallest pair for location) is reported.
pub fn verify_oldoind(g: &Graph, set: VertexSet) -> Result<Verdict> {
    check_input(g, set)?;
    Ok(Verdict::from_violation(first_violation(g, set)))
}

/// [`verify_oldoind`] with the per-vertex codes attached.
pub fn verify_oldoind_detailed(g: &Graph, set: VertexSet) -> Result<Verdict> {
    let mut verdict = verify_oldoind(g, set)?;
    verdict.codes = Some((0..g.order()).map(|v| code(g, set, v)).collect());
    Ok(verdict)
}

/// Fast validity test used on hot paths; agrees with [`verify_oldoind`].
#[inline]
pub fn is_oldoind(g: &Graph, set: VertexSet) -> bool {
    first_violation(g, set).is_none()
}

pub(crate) fn first_violation(g: &Graph, set: VertexSet) -> Option<Violation> {
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| code(g, set, v).is_empty()) {
        return Some(Violation::NotOpenDominating { v });
    }
    if let Some(v) = set.iter().find(|&v| code(g, set, v).len() > 1) {
        return Some(Violation::OpenIndependence { v });
    }
    let mut codes: Vec<(u64, usize)> = (0..n).map(|v| (code(g, set, v).bits(), v)).collect();
    codes.sort_unstable();
    let mut best: Option<(usize, usize)> = None;
    for w in codes.windows(2) {
        if w[0].0 == w[1].0 {
            // Within a run of equal codes the smallest pair is its first two
            // members; compare across runs.
            let pair = (w[0].1, w[1].1);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
        }
    }
    best.map(|(u, v)| Violation::NotDistinguished { u, v })
}

/// The necessary conditions satisfied by every OLD_oind set: each member
/// of `S` is open-dominated by `S` exactly once and every other vertex at
/// least twice. Not sufficient in general.
///
/// Reports zero domination first, then over-dominated members, then
/// under-dominated non-members.
pub fn check_necessary(g: &Graph, set: VertexSet) -> Result<Verdict> {
    check_input(g, set)?;
    let n = g.order();
    let count = |v: usize| code(g, set, v).len();
    let violation = if let Some(v) = (0..n).find(|&v| count(v) == 0) {
        Some(Violation::NotOpenDominating { v })
    } else if let Some(v) = set.iter().find(|&v| count(v) > 1) {
        Some(Violation::OverDominatedInSet { v })
    } else {
        (0..n)
            .find(|&v| !set.contains(v) && count(v) < 2)
            .map(|v| Violation::UnderDominatedOutside { v })
    };
    Ok(Verdict::from_violation(violation))
}

/// Verification for graphs of girth at least five, where the necessary
/// conditions are also sufficient.
pub fn verify_girth5(g: &Graph, set: VertexSet) -> Result<Verdict> {
    check_input(g, set)?;
    if let Some(girth) = g.girth()? {
        if girth < 5 {
            return Err(Error::PreconditionViolated(format!(
                "girth is {girth}, need at least 5"
            )));
        }
    }
    check_necessary(g, set)
}

/// The lexicographically smallest pair `u < v` with `N(u) = N(v)`.
///
/// Open twins can never be told apart, so their presence rules out every
/// OLD set and hence every OLD_oind set.
pub fn find_open_twins(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).find_map(|u| {
        ((u + 1)..n)
            .find(|&v| g.neighbors(u) == g.neighbors(v))
            .map(|v| (u, v))
    })
}
