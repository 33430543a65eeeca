//! Exact search for OLD_oind sets.
//!
//! Every OLD_oind set induces a disjoint union of `K2`s, so the search runs
//! over induced matchings: edges are taken in lexicographic order, and an
//! edge is available only while neither endpoint is in or next to a chosen
//! endpoint. A branch is cut as soon as the endpoints still reachable from it
//! cannot dominate some vertex often enough, or two vertices whose
//! neighborhoods are already settled share a code.

use serde::{Deserialize, Serialize};

use super::verify::{find_open_twins, is_oldoind};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Found,
    /// The search space was exhausted without a valid set.
    Absent,
    /// The node budget ran out first; nothing is proven.
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub set: Option<VertexSet>,
    pub size: Option<usize>,
    pub nodes_explored: u64,
}

impl SolveResult {
    #[inline]
    pub fn found(&self) -> bool {
        self.status == SolveStatus::Found
    }

    fn new(status: SolveStatus, set: Option<VertexSet>, nodes_explored: u64) -> Self {
        SolveResult {
            status,
            set,
            size: set.map(VertexSet::len),
            nodes_explored,
        }
    }
}

/// Extra pruning rule: called with the chosen endpoints and the vertices
/// still reachable by the branch (a superset of the chosen ones). Returning
/// `true` cuts the branch, so it must only do so when no completion can be
/// valid.
pub type PruneHook<'a> = &'a (dyn Fn(VertexSet, VertexSet) -> bool + Sync);

#[derive(Clone, Copy, Default)]
pub struct SearchOptions<'a> {
    /// Maximum number of search nodes; `None` is unlimited.
    pub budget: Option<u64>,
    pub prune: Option<PruneHook<'a>>,
}

impl<'a> SearchOptions<'a> {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget: Some(budget),
            prune: None,
        }
    }
}

struct OutOfBudget;

enum Goal {
    /// Stop at the first valid set.
    First,
    /// Collect valid sets with exactly `k` edges, up to `limit` of them.
    Level { k: usize },
    /// Collect every valid set, up to `limit`.
    All,
}

struct Search<'g, 'o> {
    g: &'g Graph,
    edges: Vec<(usize, usize)>,
    opts: SearchOptions<'o>,
    nodes: u64,
    goal: Goal,
    limit: usize,
    found: Vec<VertexSet>,
}

impl Search<'_, '_> {
    fn new<'g, 'o>(
        g: &'g Graph,
        opts: SearchOptions<'o>,
        goal: Goal,
        limit: usize,
    ) -> Search<'g, 'o> {
        Search {
            g,
            edges: g.edges(),
            opts,
            nodes: 0,
            goal,
            limit,
            found: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    /// Explores the subtree below `chosen`, whose next edge has index at
    /// least `start`. `blocked` is `N[chosen]`.
    fn dfs(
        &mut self,
        chosen: VertexSet,
        blocked: VertexSet,
        start: usize,
        depth: usize,
    ) -> Result<bool, OutOfBudget> {
        self.nodes += 1;
        if self.opts.budget.is_some_and(|b| self.nodes > b) {
            return Err(OutOfBudget);
        }
        let g = self.g;
        let mut reachable = chosen;
        let mut any_future = false;
        for &(u, v) in &self.edges[start..] {
            if !blocked.contains(u) && !blocked.contains(v) {
                reachable.insert(u);
                reachable.insert(v);
                any_future = true;
            }
        }
        if self.infeasible(chosen, reachable) {
            return Ok(false);
        }
        if let Some(hook) = self.opts.prune {
            if hook(chosen, reachable) {
                return Ok(false);
            }
        }

        let at_level = match self.goal {
            Goal::Level { k } => depth == k,
            _ => true,
        };
        if at_level && !chosen.is_empty() && is_oldoind(g, chosen) {
            self.found.push(chosen);
            if matches!(self.goal, Goal::First) || self.done() {
                return Ok(true);
            }
        }
        if !any_future || matches!(self.goal, Goal::Level { k } if depth >= k) {
            return Ok(false);
        }

        for i in start..self.edges.len() {
            let (u, v) = self.edges[i];
            if blocked.contains(u) || blocked.contains(v) {
                continue;
            }
            let next = chosen.with(u).with(v);
            let next_blocked = blocked | g.closed_neighbors(u) | g.closed_neighbors(v);
            if self.dfs(next, next_blocked, i + 1, depth + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Necessary-condition pruning against the reachable endpoints.
    fn infeasible(&self, chosen: VertexSet, reachable: VertexSet) -> bool {
        let g = self.g;
        let undecided = reachable - chosen;
        let mut fixed_codes: Vec<u64> = Vec::new();
        for v in 0..g.order() {
            let nv = g.neighbors(v);
            let potential = (nv & reachable).len();
            if potential == 0 || (!reachable.contains(v) && potential < 2) {
                return true;
            }
            if !nv.intersects(undecided) {
                fixed_codes.push((nv & chosen).bits());
            }
        }
        fixed_codes.sort_unstable();
        fixed_codes.windows(2).any(|w| w[0] == w[1])
    }
}

/// Cheap certificates of absence: an isolated vertex or a pair of open twins.
fn trivially_absent(g: &Graph) -> bool {
    (0..g.order()).any(|v| g.degree(v) == 0) || find_open_twins(g).is_some()
}

/// Decides whether `g` has an OLD_oind set, returning the first one met in
/// the lexicographic edge order.
pub fn exists_oldoind(g: &Graph) -> Result<SolveResult> {
    exists_oldoind_with(g, SearchOptions::default())
}

pub fn exists_oldoind_with(g: &Graph, opts: SearchOptions<'_>) -> Result<SolveResult> {
    g.ensure_nonempty("OLD_oind search")?;
    if trivially_absent(g) {
        return Ok(SolveResult::new(SolveStatus::Absent, None, 0));
    }
    let mut s = Search::new(g, opts, Goal::First, 1);
    Ok(match s.dfs(VertexSet::EMPTY, VertexSet::EMPTY, 0, 0) {
        Ok(true) => SolveResult::new(SolveStatus::Found, s.found.first().copied(), s.nodes),
        Ok(false) => SolveResult::new(SolveStatus::Absent, None, s.nodes),
        Err(OutOfBudget) => SolveResult::new(SolveStatus::BudgetExceeded, None, s.nodes),
    })
}

/// A minimum OLD_oind set; among minimum sets the lexicographically
/// smallest vertex list is returned.
pub fn min_oldoind(g: &Graph) -> Result<SolveResult> {
    min_oldoind_with(g, SearchOptions::default())
}

pub fn min_oldoind_with(g: &Graph, opts: SearchOptions<'_>) -> Result<SolveResult> {
    g.ensure_nonempty("OLD_oind search")?;
    if trivially_absent(g) {
        return Ok(SolveResult::new(SolveStatus::Absent, None, 0));
    }
    let mut nodes = 0;
    for k in 1..=g.order() / 2 {
        let remaining = opts.budget.map(|b| b.saturating_sub(nodes));
        let level_opts = SearchOptions {
            budget: remaining,
            prune: opts.prune,
        };
        let mut s = Search::new(g, level_opts, Goal::Level { k }, usize::MAX);
        let outcome = s.dfs(VertexSet::EMPTY, VertexSet::EMPTY, 0, 0);
        nodes += s.nodes;
        if outcome.is_err() {
            return Ok(SolveResult::new(SolveStatus::BudgetExceeded, None, nodes));
        }
        if let Some(best) = s.found.into_iter().min_by(|a, b| a.lex_cmp(*b)) {
            return Ok(SolveResult::new(SolveStatus::Found, Some(best), nodes));
        }
    }
    Ok(SolveResult::new(SolveStatus::Absent, None, nodes))
}

/// Every OLD_oind set of `g` (up to `limit`), in the search's edge order.
/// The second value is `false` when the budget or limit cut the listing short.
pub fn all_oldoind_sets(
    g: &Graph,
    opts: SearchOptions<'_>,
    limit: usize,
) -> Result<(Vec<VertexSet>, bool)> {
    g.ensure_nonempty("OLD_oind search")?;
    if trivially_absent(g) {
        return Ok((Vec::new(), true));
    }
    let mut s = Search::new(g, opts, Goal::All, limit);
    let complete = match s.dfs(VertexSet::EMPTY, VertexSet::EMPTY, 0, 0) {
        Ok(stopped) => !stopped,
        Err(OutOfBudget) => false,
    };
    Ok((s.found, complete))
}
