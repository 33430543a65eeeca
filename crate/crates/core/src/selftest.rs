//! Self-test harness: each suite replays one family of results against the
//! exact search or an independent oracle and reports the first
//! counterexample.
//!
//! Suites run in parallel but the report is a pure function of the
//! configuration: work is split over graphs in a fixed order, the first
//! failure is the leftmost one, random candidates come from a seeded
//! generator per graph, and no timing is recorded.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    gen_quasi_spider, gen_spider, is_cograph, is_p4_tidy, BaseGraph, Replacement, Side, SpiderKind,
};
use crate::deciders::{
    audit_prism_set, cograph_oldoind_traced, p4tidy_oldoind_traced, prism_cograph_oldoind,
    PrismCase, PrismTrace, PrismWitness, TidyTrace,
};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, decode_graph6, encode_graph6, enumerate_nonisomorphic, is_isomorphic, Graph,
    VertexSet, MAX_ENUM_VERTICES,
};
use crate::hardness::{
    build_gadget, cover_to_set, enumerate_instances, example_instance, set_to_cover, solve_gadget,
    x3c_bruteforce,
};
use crate::oldoind::{
    all_oldoind_sets, code, exists_oldoind, is_oldoind, min_oldoind, SearchOptions,
};
use crate::oracle;

pub const REPORT_SCHEMA: &str = "oldoind.selftest/1";
pub const DEFAULT_SEED: u64 = 0x01d0_1d5e;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleConsistency,
    Spiders,
    QuasiSpiders,
    P4Tidy,
    Cographs,
    PrismCographs,
    UniversalBase,
    Reduction,
    Codec,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::OracleConsistency,
        Suite::Spiders,
        Suite::QuasiSpiders,
        Suite::P4Tidy,
        Suite::Cographs,
        Suite::PrismCographs,
        Suite::UniversalBase,
        Suite::Reduction,
        Suite::Codec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleConsistency => "oracle-consistency",
            Suite::Spiders => "spiders",
            Suite::QuasiSpiders => "quasi-spiders",
            Suite::P4Tidy => "p4-tidy",
            Suite::Cographs => "cographs",
            Suite::PrismCographs => "prism-cographs",
            Suite::UniversalBase => "universal-base",
            Suite::Reduction => "reduction",
            Suite::Codec => "codec",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

/// Deliberate defects for checking that the harness notices failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// The verifier under test forgets the distinctness clause.
    SkipDistinctness,
    /// The prism decider under test drops its size-two branch.
    DropSize2,
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skip-distinctness" => Ok(Mutation::SkipDistinctness),
            "drop-size2" => Ok(Mutation::DropSize2),
            _ => Err(Error::InvalidInput(format!("unknown mutation {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestConfig {
    /// Largest order for the exhaustive graph suites (at most 7).
    pub max_n: usize,
    /// Random candidate sets per graph in the oracle suite.
    pub samples: usize,
    /// Random graphs in the codec suite.
    pub random_graphs: usize,
    pub seed: u64,
    pub mutation: Option<Mutation>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: MAX_ENUM_VERTICES,
            samples: 1000,
            random_graphs: 1000,
            seed: DEFAULT_SEED,
            mutation: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    /// Number of cases examined; stops at the first failure.
    pub cases: u64,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub schema: String,
    pub config: SelftestConfig,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

/// A failure: what went wrong and on which input.
struct Failure {
    detail: String,
    input: String,
}

fn fail(input: impl fmt::Display, detail: impl Into<String>) -> Failure {
    Failure {
        detail: detail.into(),
        input: input.to_string(),
    }
}

type Check = std::result::Result<(), Failure>;

fn internal(input: impl fmt::Display) -> impl FnOnce(Error) -> Failure {
    let input = input.to_string();
    move |e| Failure {
        detail: format!("error: {e}"),
        input,
    }
}

/// Runs `check` over `items` in parallel and returns the leftmost failure.
fn first_failure<T: Sync>(
    items: &[T],
    check: impl Fn(usize, &T) -> Check + Sync + Send,
) -> Option<Failure> {
    items
        .par_iter()
        .enumerate()
        .map(|(i, t)| check(i, t).err())
        .find_first(Option::is_some)
        .flatten()
}

fn outcome(suite: Suite, cases: usize, failure: Option<Failure>, ok_detail: String) -> SuiteResult {
    match failure {
        None => SuiteResult {
            suite,
            passed: true,
            cases: cases as u64,
            detail: ok_detail,
            counterexample: None,
        },
        Some(f) => SuiteResult {
            suite,
            passed: false,
            cases: cases as u64,
            detail: f.detail,
            counterexample: Some(f.input),
        },
    }
}

fn graphs_up_to(max_n: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n.min(MAX_ENUM_VERTICES) {
        all.extend(enumerate_nonisomorphic(n, connected)?);
    }
    Ok(all)
}

pub fn run_selftest(cfg: &SelftestConfig) -> Result<SelftestReport> {
    run_suites(cfg, &Suite::ALL)
}

pub fn run_suites(cfg: &SelftestConfig, suites: &[Suite]) -> Result<SelftestReport> {
    if cfg.max_n == 0 || cfg.max_n > MAX_ENUM_VERTICES {
        return Err(Error::capacity(
            "self-test order",
            cfg.max_n,
            MAX_ENUM_VERTICES,
        ));
    }
    let results = suites
        .par_iter()
        .map(|&s| run_suite(s, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SelftestReport {
        schema: REPORT_SCHEMA.to_string(),
        config: cfg.clone(),
        passed: results.iter().all(|r| r.passed),
        suites: results,
    })
}

pub fn run_suite(suite: Suite, cfg: &SelftestConfig) -> Result<SuiteResult> {
    match suite {
        Suite::OracleConsistency => oracle_consistency(cfg),
        Suite::Spiders => spiders(),
        Suite::QuasiSpiders => quasi_spiders(),
        Suite::P4Tidy => p4_tidy(cfg),
        Suite::Cographs => cographs(cfg),
        Suite::PrismCographs => prism_cographs(cfg),
        Suite::UniversalBase => universal_base(cfg),
        Suite::Reduction => reduction(),
        Suite::Codec => codec(cfg),
    }
}

/// The verifier under test, possibly with a defect injected.
fn verifier_under_test(cfg: &SelftestConfig, g: &Graph, s: VertexSet) -> bool {
    match cfg.mutation {
        Some(Mutation::SkipDistinctness) => {
            !s.is_empty()
                && g.vertices().iter().all(|v| {
                    let c = code(g, s, v);
                    !c.is_empty() && (!s.contains(v) || c.len() == 1)
                })
        }
        _ => is_oldoind(g, s),
    }
}

fn oracle_consistency(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let graphs = graphs_up_to(cfg.max_n, false)?;
    let failure = first_failure(&graphs, |i, g| {
        let m = oracle::Matrix::new(g);
        let n = g.order();
        let mut rng =
            ChaCha8Rng::seed_from_u64(cfg.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let full = g.vertices().bits();
        let candidates = (0..cfg.samples)
            .map(|_| VertexSet::from_bits(rng.gen::<u64>() & full))
            .chain((1..=n / 2).flat_map(|k| oracle::induced_matchings(&m, k)));
        for s in candidates {
            if verifier_under_test(cfg, g, s) != oracle::is_oldoind(&m, s) {
                return Err(fail(g, format!("verifier and definition disagree on {s}")));
            }
        }
        let found = min_oldoind(g).map_err(internal(g))?;
        let expected = oracle::min_oldoind_size(&m);
        if found.size != expected {
            return Err(fail(
                g,
                format!("minimum {:?}, oracle {:?}", found.size, expected),
            ));
        }
        if let Some(s) = found.set {
            if !oracle::is_oldoind(&m, s) {
                return Err(fail(g, format!("minimum set {s} does not verify")));
            }
        }
        Ok(())
    });
    Ok(outcome(
        Suite::OracleConsistency,
        graphs.len(),
        failure,
        format!(
            "{} graphs, {} random sets each plus all induced matchings",
            graphs.len(),
            cfg.samples
        ),
    ))
}

fn heads() -> Vec<(&'static str, Graph)> {
    let g = |r: Result<Graph>| r.expect("small fixed graph");
    vec![
        ("empty", g(Graph::empty(0))),
        ("K1", g(Graph::empty(1))),
        ("K2", g(Graph::complete(2))),
        ("K2bar", g(Graph::empty(2))),
        ("P3", g(Graph::from_edges(3, &[(0, 1), (1, 2)]))),
    ]
}

fn spiders() -> Result<SuiteResult> {
    let mut cases = Vec::new();
    for kind in [SpiderKind::Thin, SpiderKind::Thick] {
        for k in 2..=4 {
            for (name, head) in heads() {
                cases.push((
                    format!("{kind:?} k={k} head={name}"),
                    gen_spider(kind, k, &head)?,
                ));
            }
        }
    }
    let failure = first_failure(&cases, |_, (label, g)| {
        let r = exists_oldoind(g).map_err(internal(g))?;
        if r.found() {
            return Err(fail(g, format!("{label} has a set {:?}", r.set)));
        }
        Ok(())
    });
    Ok(outcome(
        Suite::Spiders,
        cases.len(),
        failure,
        format!("{} spiders, none admits a set", cases.len()),
    ))
}

fn quasi_spiders() -> Result<SuiteResult> {
    let z = BaseGraph::Z.graph();
    let mut cases = Vec::new();
    for kind in [SpiderKind::Thin, SpiderKind::Thick] {
        for k in 2..=3 {
            for (name, head) in heads().into_iter().take(3) {
                for side in [Side::C, Side::X] {
                    for index in 0..k {
                        for rep in [Replacement::K2, Replacement::K2Bar] {
                            let g = gen_quasi_spider(kind, k, &head, side, index, rep)?;
                            cases.push((
                                format!("{kind:?} k={k} head={name} {side:?}{index} {rep:?}"),
                                g,
                            ));
                        }
                    }
                }
            }
        }
    }
    let failure = first_failure(&cases, |_, (label, g)| {
        let accepted = exists_oldoind(g).map_err(internal(g))?.found();
        let is_z = is_isomorphic(g, &z).map_err(internal(g))?;
        if accepted != is_z {
            return Err(fail(
                g,
                format!("{label}: accepted={accepted}, isomorphic to Z={is_z}"),
            ));
        }
        Ok(())
    });
    Ok(outcome(
        Suite::QuasiSpiders,
        cases.len(),
        failure,
        format!(
            "{} quasi-spiders, accepted exactly when isomorphic to Z",
            cases.len()
        ),
    ))
}

fn p4_tidy(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = graphs_up_to(cfg.max_n, true)?
        .into_iter()
        .filter(is_p4_tidy)
        .collect();
    let failure = first_failure(&graphs, |_, g| {
        let d = p4tidy_oldoind_traced(g).map_err(internal(g))?;
        let exists = exists_oldoind(g).map_err(internal(g))?.found();
        if d.witness.is_some() != exists {
            return Err(fail(
                g,
                format!("decider {}, search {exists}", d.witness.is_some()),
            ));
        }
        if let Some(s) = d.witness {
            if !is_oldoind(g, s) {
                return Err(fail(g, format!("witness {s} does not verify")));
            }
        }
        Ok(())
    });
    let mut detail = format!("{} connected P4-tidy graphs", graphs.len());
    let failure = failure.or_else(|| {
        let accepted: BTreeSet<String> = graphs
            .iter()
            .filter(|g| g.is_co_connected() && g.order() > 1)
            .filter(|g| p4tidy_oldoind_traced(g).is_ok_and(|d| d.witness.is_some()))
            .filter_map(|g| canonical_form(g).ok().map(|c| c.as_str().to_string()))
            .collect();
        let mut expected: BTreeSet<String> = BTreeSet::new();
        if cfg.max_n >= 5 {
            expected.extend([
                BaseGraph::P5.canonical().to_string(),
                BaseGraph::Z.canonical().to_string(),
            ]);
        }
        detail.push_str(&format!("; co-connected accepts {accepted:?}"));
        (accepted != expected).then(|| {
            fail(
                format!("{accepted:?}"),
                format!("co-connected accepts differ from {expected:?}"),
            )
        })
    });
    Ok(outcome(Suite::P4Tidy, graphs.len(), failure, detail))
}

fn cographs(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = graphs_up_to(cfg.max_n, false)?
        .into_iter()
        .filter(is_cograph)
        .collect();
    let failure = first_failure(&graphs, |_, g| {
        let d = cograph_oldoind_traced(g).map_err(internal(g))?;
        let exists = exists_oldoind(g).map_err(internal(g))?.found();
        if d.witness.is_some() != exists {
            return Err(fail(
                g,
                format!("decider {}, search {exists}", d.witness.is_some()),
            ));
        }
        if let Some(s) = d.witness {
            if !is_oldoind(g, s) {
                return Err(fail(g, format!("witness {s} does not verify")));
            }
        }
        Ok(())
    });
    let bases: BTreeSet<String> = graphs
        .iter()
        .filter_map(|g| cograph_oldoind_traced(g).ok())
        .filter_map(|d| match d.trace {
            TidyTrace::Base { name, .. } if d.witness.is_some() => Some(name),
            _ => None,
        })
        .collect();
    let expected: BTreeSet<String> = ["K2", "K3"]
        .into_iter()
        .filter(|_| cfg.max_n >= 3)
        .map(String::from)
        .collect();
    let failure = failure.or_else(|| {
        (bases != expected).then(|| {
            fail(
                format!("{bases:?}"),
                format!("base accepts differ from {expected:?}"),
            )
        })
    });
    Ok(outcome(
        Suite::Cographs,
        graphs.len(),
        failure,
        format!("{} cographs; base accepts {bases:?}", graphs.len()),
    ))
}

/// The prism decider under test, possibly with a defect injected.
fn prism_under_test(cfg: &SelftestConfig, g: &Graph) -> Result<Option<PrismWitness>> {
    let w = prism_cograph_oldoind(g)?;
    Ok(match cfg.mutation {
        Some(Mutation::DropSize2) => w.filter(|w| w.trace.base_case() != PrismCase::Size2Structure),
        _ => w,
    })
}

fn split_witness(n: usize, s: VertexSet) -> PrismWitness {
    let low = VertexSet::from_bits(s.bits() & ((1u64 << n) - 1));
    PrismWitness {
        s0: low,
        s1bar: s - low,
        trace: PrismTrace {
            case: PrismCase::Peel,
            component: String::new(),
            params: Default::default(),
            s0: low.to_vec(),
            inner: None,
        },
    }
}

fn prism_cographs(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = graphs_up_to(cfg.max_n.min(6), true)?
        .into_iter()
        .filter(is_cograph)
        .collect();
    let failure = first_failure(&graphs, |_, g| {
        let prism = g.complementary_prism().map_err(internal(g))?;
        let w = prism_under_test(cfg, g).map_err(internal(g))?;
        let exists = exists_oldoind(&prism).map_err(internal(g))?.found();
        if w.is_some() != exists {
            return Err(fail(
                g,
                format!("decider {}, search on the prism {exists}", w.is_some()),
            ));
        }
        let mut witnesses: Vec<PrismWitness> = w.into_iter().collect();
        if g.order() <= 5 {
            let (all, _) = all_oldoind_sets(&prism, SearchOptions::default(), usize::MAX)
                .map_err(internal(g))?;
            witnesses.extend(all.into_iter().map(|s| split_witness(g.order(), s)));
        }
        for w in &witnesses {
            let audit = audit_prism_set(g, w).map_err(internal(g))?;
            if let Some(c) = audit.clauses.iter().find(|c| !c.holds) {
                return Err(fail(
                    g,
                    format!(
                        "witness {} breaks clause {}: {}",
                        w.set(),
                        c.clause,
                        c.detail
                    ),
                ));
            }
        }
        Ok(())
    });
    Ok(outcome(
        Suite::PrismCographs,
        graphs.len(),
        failure,
        format!(
            "{} connected cographs; audits cover every set up to order 5",
            graphs.len()
        ),
    ))
}

/// `K1 ⋈ (m K2)‾`, with the apex last.
fn apex_over_matching(m: usize) -> Result<Graph> {
    let mut co = Graph::empty(0)?;
    for _ in 0..m {
        co = co.disjoint_union(&Graph::complete(2)?)?;
    }
    co.complement().join(&Graph::empty(1)?)
}

fn universal_base(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut failure = None;
    for m in 1..=4 {
        let g = apex_over_matching(m)?;
        let w = prism_under_test(cfg, &g)?;
        let ok = w.as_ref().is_some_and(|w| {
            w.s0.len() == 1
                && w.s1bar.len() == g.order()
                && w.trace.case == PrismCase::UniversalBase
        });
        if !ok {
            failure = Some(fail(
                &g,
                format!("m = {m}: expected the apex witness, got {w:?}"),
            ));
            break;
        }
    }
    let forms: Vec<String> = (1..=4)
        .filter_map(|m| {
            apex_over_matching(m)
                .ok()
                .and_then(|g| canonical_form(&g).ok())
        })
        .map(|c| c.as_str().to_string())
        .collect();
    let graphs: Vec<Graph> = graphs_up_to(cfg.max_n.min(6), true)?
        .into_iter()
        .filter(|g| g.order() > 1 && g.universal_vertices().len() == 1)
        .filter(|g| canonical_form(g).is_ok_and(|c| !forms.iter().any(|f| f == c.as_str())))
        .collect();
    let failure = failure.or_else(|| {
        first_failure(&graphs, |_, g| {
            let prism = g.complementary_prism().map_err(internal(g))?;
            if exists_oldoind(&prism).map_err(internal(g))?.found() {
                return Err(fail(g, "the prism has a set"));
            }
            if is_cograph(g) && prism_under_test(cfg, g).map_err(internal(g))?.is_some() {
                return Err(fail(g, "the decider accepts"));
            }
            Ok(())
        })
    });
    Ok(outcome(
        Suite::UniversalBase,
        graphs.len() + 4,
        failure,
        format!(
            "4 apex graphs accepted; {} other graphs with one universal vertex rejected",
            graphs.len()
        ),
    ))
}

fn reduction() -> Result<SuiteResult> {
    let mut instances = Vec::new();
    for ground in [3, 6] {
        for m in 1..=3 {
            instances.extend(enumerate_instances(ground, m)?);
        }
    }
    let failure = first_failure(&instances, |_, inst| {
        let (g, map) = build_gadget(inst).map_err(internal(inst.to_string().trim()))?;
        let label = inst.to_string().replace('\n', "; ");
        let cover = x3c_bruteforce(inst).map_err(internal(&label))?;
        let r = solve_gadget(&g, &map, None).map_err(internal(&label))?;
        if cover.is_some() != r.found() {
            return Err(fail(
                &label,
                format!("cover {cover:?}, gadget search {:?}", r.status),
            ));
        }
        if let Some(cover) = cover {
            let d = cover_to_set(inst, &g, &map, &cover).map_err(internal(&label))?;
            if set_to_cover(inst, &g, &map, d).map_err(internal(&label))? != cover {
                return Err(fail(&label, "cover does not roundtrip"));
            }
        }
        if let Some(s) = r.set {
            set_to_cover(inst, &g, &map, s).map_err(internal(&label))?;
        }
        Ok(())
    });
    let failure = failure.or_else(|| {
        let inst = example_instance();
        let label = inst.to_string().replace('\n', "; ");
        let check = || -> Result<Option<String>> {
            let (g, map) = build_gadget(&inst)?;
            let cover = x3c_bruteforce(&inst)?;
            if cover.as_deref() != Some(&[0, 2][..]) || g.order() != 33 {
                return Ok(Some(format!("cover {cover:?} on {} vertices", g.order())));
            }
            let d = cover_to_set(&inst, &g, &map, &[0, 2])?;
            Ok((d.len() != 24 || !is_oldoind(&g, d))
                .then(|| format!("set {d} of size {}", d.len())))
        };
        match check() {
            Ok(None) => None,
            Ok(Some(msg)) => Some(fail(&label, msg)),
            Err(e) => Some(fail(&label, format!("error: {e}"))),
        }
    });
    Ok(outcome(
        Suite::Reduction,
        instances.len() + 1,
        failure,
        format!(
            "{} instances up to relabeling plus the worked example",
            instances.len()
        ),
    ))
}

fn codec(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut graphs = graphs_up_to(cfg.max_n, false)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_graphs {
        let n = rng.gen_range(1..=32);
        let p: f64 = rng.gen();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        graphs.push(Graph::from_edges(n, &edges)?);
    }
    let failure = first_failure(&graphs, |_, g| {
        let text = encode_graph6(g);
        match decode_graph6(&text) {
            Ok(h) if &h == g => Ok(()),
            Ok(h) => Err(fail(&text, format!("decodes to {h}"))),
            Err(e) => Err(fail(&text, format!("error: {e}"))),
        }
    });
    Ok(outcome(
        Suite::Codec,
        graphs.len(),
        failure,
        format!("{} graphs roundtrip through graph6", graphs.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SelftestConfig {
        SelftestConfig {
            max_n: 5,
            samples: 50,
            random_graphs: 50,
            ..SelftestConfig::default()
        }
    }

    #[test]
    fn small_run_passes_and_repeats() {
        let a = run_selftest(&small()).unwrap();
        assert!(a.passed, "{a:?}");
        assert_eq!(a.suites.len(), Suite::ALL.len());
        assert_eq!(a, run_selftest(&small()).unwrap());
    }

    #[test]
    fn mutations_are_caught() {
        let cfg = SelftestConfig {
            mutation: Some(Mutation::SkipDistinctness),
            ..small()
        };
        let r = run_suite(Suite::OracleConsistency, &cfg).unwrap();
        assert!(!r.passed);
        assert!(r.counterexample.is_some());
        let cfg = SelftestConfig {
            mutation: Some(Mutation::DropSize2),
            // The smallest size-two graphs have six vertices.
            max_n: 6,
            ..small()
        };
        assert!(!run_suite(Suite::PrismCographs, &cfg).unwrap().passed);
    }

    #[test]
    fn bad_order_is_rejected() {
        let cfg = SelftestConfig {
            max_n: 8,
            ..small()
        };
        assert!(run_selftest(&cfg).is_err());
        assert_eq!("codec".parse::<Suite>().unwrap(), Suite::Codec);
    }
}
