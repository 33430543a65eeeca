//! OLD_oind sets of complementary prisms of connected cographs.
//!
//! Let `L` be the components of `Ḡ` (equivalently, the anticomponents of
//! `G` seen from the other side). The prism of `G` has a set exactly when
//! one of three shapes applies, tried in this order:
//!
//! * universal base: `Ḡ = K1 ⊕ s K2`; take the apex in `G` and all of `Ḡ`;
//! * size-two structure: every part is `K2`, `R(l, m)` or `R*(l, 1)` with
//!   `l ≤ 2`, under counting conditions; two vertices of `G` are chosen;
//! * peel: one part `H` whose own prism has a set, one part `F̄` that is
//!   `R(1, m)` or `K2`, and any number of further `K2` parts. The witness of
//!   `H` is reused with its two halves swapped.
//!
//! Vertex `v` of `G` has prism partner `v + n`. Internally a witness is a
//! pair `(s0, s1)` of vertex sets of `G`, where `s1` lists the vertices whose
//! partners are chosen.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::classes::{is_cograph, recognize_r, RShape};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_labeling, encode_graph6, Graph, VertexSet, MAX_CANON_VERTICES, MAX_PRISM_BASE,
};
use crate::oldoind::verify_oldoind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrismCase {
    UniversalBase,
    Size2Structure,
    Peel,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismParams {
    /// Number of `K2` parts next to the apex (universal base).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    /// Matching size of the `R(1, m)` part peeled off with `H`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Number of extra `K2` parts besides `F̄` (peel).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    /// Part types, for the size-two structure.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<String>,
}

/// One level of the derivation. `component` is the graph6 text of the
/// canonical form of the graph decided at this level (its plain graph6 above
/// the canonical-form limit); vertex lists use the labels of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismTrace {
    pub case: PrismCase,
    pub component: String,
    pub params: PrismParams,
    pub s0: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner: Option<Box<PrismTrace>>,
}

impl PrismTrace {
    fn relabel(&mut self, map: &[usize]) {
        for v in &mut self.s0 {
            *v = map[*v];
        }
        self.s0.sort_unstable();
        if let Some(inner) = &mut self.inner {
            inner.relabel(map);
        }
    }

    /// Number of levels, counting this one.
    pub fn depth(&self) -> usize {
        1 + self.inner.as_ref().map_or(0, |i| i.depth())
    }

    /// The case of the innermost level.
    pub fn base_case(&self) -> PrismCase {
        self.inner.as_ref().map_or(self.case, |i| i.base_case())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismWitness {
    /// Chosen vertices of `G`.
    pub s0: VertexSet,
    /// Chosen vertices of `Ḡ`, as prism labels `n..2n`.
    pub s1bar: VertexSet,
    pub trace: PrismTrace,
}

impl PrismWitness {
    pub fn set(&self) -> VertexSet {
        self.s0 | self.s1bar
    }
}

#[derive(Clone, Debug)]
struct Local {
    s0: VertexSet,
    s1: VertexSet,
    trace: PrismTrace,
}

impl Local {
    fn relabel(&self, map: &[usize]) -> Local {
        let mut trace = self.trace.clone();
        trace.relabel(map);
        Local {
            s0: self.s0.map(map),
            s1: self.s1.map(map),
            trace,
        }
    }
}

/// Shape of one component of `Ḡ`, in labels of `G`.
#[derive(Clone, Debug)]
pub(crate) enum PartType {
    K1,
    K2,
    R(RShape),
    Other,
}

#[derive(Clone, Debug)]
pub(crate) struct Part {
    pub vertices: VertexSet,
    pub ty: PartType,
    /// `(size, canonical graph6, smallest vertex)`: the order in which
    /// symmetric choices are resolved.
    pub key: (usize, String, usize),
}

impl Part {
    fn r(&self) -> Option<&RShape> {
        match &self.ty {
            PartType::R(s) => Some(s),
            _ => None,
        }
    }

    fn is_r(&self, l: usize, starred: bool) -> bool {
        self.r().is_some_and(|s| s.l == l && s.starred == starred)
    }

    /// `R(1, m)` with `m ≥ 1`.
    fn is_r1m(&self) -> bool {
        self.is_r(1, false)
    }

    fn is_r_star(&self, l: usize) -> bool {
        self.r().is_some_and(|s| s.starred && s.l == l && s.m == 1)
    }

    /// `R*(2, 1)` or `R(2, m)`.
    fn has_two_independent(&self) -> bool {
        self.is_r(2, false) || self.is_r_star(2)
    }

    /// Vertices of the matching edges; all of a `K2`.
    fn matched(&self) -> VertexSet {
        match &self.ty {
            PartType::K2 => self.vertices,
            PartType::R(s) => s.matched(),
            _ => VertexSet::EMPTY,
        }
    }

    fn label(&self) -> String {
        match &self.ty {
            PartType::K1 => "K1".into(),
            PartType::K2 => "K2".into(),
            PartType::R(s) if s.starred => format!("R*({},{})", s.l, s.m),
            PartType::R(s) => format!("R({},{})", s.l, s.m),
            PartType::Other => "other".into(),
        }
    }
}

fn graph_key(g: &Graph) -> String {
    if g.order() <= MAX_CANON_VERTICES {
        canonical_labeling(g).map_or_else(|_| encode_graph6(g), |(c, _)| encode_graph6(&c))
    } else {
        encode_graph6(g)
    }
}

/// Components of `Ḡ` with their types, sorted by smallest vertex.
pub(crate) fn classify_parts(g: &Graph) -> Result<Vec<Part>> {
    let co = g.complement();
    let mut parts = Vec::new();
    for p in co.component_sets(false) {
        let sub = co.induced_subgraph(p)?;
        let ty = match p.len() {
            1 => PartType::K1,
            2 => PartType::K2,
            _ => match recognize_r(&sub.graph) {
                Some(s) => PartType::R(lift_shape(&s, &sub.original)),
                None => PartType::Other,
            },
        };
        let key = (p.len(), graph_key(&sub.graph), p.first().unwrap_or(0));
        parts.push(Part {
            vertices: p,
            ty,
            key,
        });
    }
    Ok(parts)
}

fn lift_shape(s: &RShape, map: &[usize]) -> RShape {
    let mut pairs: Vec<(usize, usize)> = s
        .pairs
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (map[a], map[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    pairs.sort_unstable();
    RShape {
        l: s.l,
        m: s.m,
        starred: s.starred,
        independent: s.independent.map(map),
        pairs,
        missing: s.missing.map(|(i, p)| (map[i], map[p])),
    }
}

/// Whether the parts satisfy the size-two conditions: every part is `K2`,
/// `R(l, m)` or `R*(l, 1)` with `l ∈ {1, 2}`; two or three parts have at
/// least three vertices; at most one part has two independent vertices and
/// then only two parts are large; at most two parts are `R*(1,1)`,
/// `R*(2,1)` or `R(2,m)`.
pub(crate) fn size2_conditions(parts: &[Part]) -> bool {
    let allowed = parts.iter().all(|p| match &p.ty {
        PartType::K2 => true,
        PartType::R(s) => (1..=2).contains(&s.l) && (!s.starred || s.m == 1),
        _ => false,
    });
    if !allowed {
        return false;
    }
    let large = parts.iter().filter(|p| p.vertices.len() >= 3).count();
    let two_independent = parts.iter().filter(|p| p.has_two_independent()).count();
    let special = parts
        .iter()
        .filter(|p| p.is_r_star(1) || p.has_two_independent())
        .count();
    (2..=3).contains(&large)
        && two_independent <= 1
        && (two_independent == 0 || large == 2)
        && special <= 2
}

/// Builds the `|S0| = 2` witness, or `None` when the conditions fail.
fn size2(g: &Graph, parts: &[Part]) -> Option<Local> {
    if !size2_conditions(parts) {
        return None;
    }
    let mut large: Vec<&Part> = parts.iter().filter(|p| p.vertices.len() >= 3).collect();
    large.sort_by(|a, b| a.key.cmp(&b.key));
    // The parts whose independent vertex goes into S0, first one first.
    let chosen: Vec<&Part> = if large.len() == 2 {
        let first = large
            .iter()
            .position(|p| p.has_two_independent())
            .unwrap_or(0);
        vec![large[first], large[1 - first]]
    } else {
        // The part left out must be R(1, m); prefer R*(1,1) parts for S0.
        let mut order = large.clone();
        order.sort_by_key(|p| !p.is_r_star(1));
        order.truncate(2);
        order
    };
    let mut s0 = VertexSet::EMPTY;
    for p in &chosen {
        let s = p.r()?;
        let v = if s.starred && s.l == 2 {
            s.missing?.0
        } else {
            s.independent.first()?
        };
        s0.insert(v);
    }
    let s1 = parts
        .iter()
        .fold(VertexSet::EMPTY, |acc, p| acc | p.matched());
    let trace = PrismTrace {
        case: PrismCase::Size2Structure,
        component: graph_key(g),
        params: PrismParams {
            parts: parts.iter().map(Part::label).collect(),
            ..PrismParams::default()
        },
        s0: s0.to_vec(),
        inner: None,
    };
    Some(Local { s0, s1, trace })
}

type Memo = RwLock<HashMap<String, Option<Local>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoized decision. Below the canonical-form limit the graph is decided in
/// its canonical labeling and the answer mapped back, so the result depends
/// only on the isomorphism class and never on the order of earlier calls.
fn decide(g: &Graph) -> Result<Option<Local>> {
    let (work, back, key) = if g.order() <= MAX_CANON_VERTICES {
        let (c, perm) = canonical_labeling(g)?;
        let mut back = vec![0; perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            back[new] = old;
        }
        let key = encode_graph6(&c);
        (c, back, key)
    } else {
        (
            g.clone(),
            (0..g.order()).collect(),
            format!("labeled:{}", encode_graph6(g)),
        )
    };
    let cached = memo().read().ok().and_then(|m| m.get(&key).cloned());
    let answer = match cached {
        Some(a) => a,
        None => {
            let a = decide_uncached(&work)?;
            if let Ok(mut m) = memo().write() {
                m.entry(key).or_insert_with(|| a.clone());
            }
            a
        }
    };
    Ok(answer.map(|l| l.relabel(&back)))
}

fn decide_uncached(g: &Graph) -> Result<Option<Local>> {
    let n = g.order();
    if n == 1 {
        let trace = PrismTrace {
            case: PrismCase::UniversalBase,
            component: graph_key(g),
            params: PrismParams {
                s: Some(0),
                ..PrismParams::default()
            },
            s0: vec![0],
            inner: None,
        };
        return Ok(Some(Local {
            s0: VertexSet::singleton(0),
            s1: VertexSet::singleton(0),
            trace,
        }));
    }
    let parts = classify_parts(g)?;
    let k1: Vec<&Part> = parts
        .iter()
        .filter(|p| matches!(p.ty, PartType::K1))
        .collect();
    if !k1.is_empty() {
        // Two apexes leave no branch applicable; one apex needs all other
        // parts to be K2.
        if k1.len() > 1
            || !parts
                .iter()
                .all(|p| matches!(p.ty, PartType::K1 | PartType::K2))
        {
            return Ok(None);
        }
        let apex = k1[0].vertices;
        let trace = PrismTrace {
            case: PrismCase::UniversalBase,
            component: graph_key(g),
            params: PrismParams {
                s: Some(parts.len() - 1),
                ..PrismParams::default()
            },
            s0: apex.to_vec(),
            inner: None,
        };
        return Ok(Some(Local {
            s0: apex,
            s1: g.vertices(),
            trace,
        }));
    }
    if let Some(local) = size2(g, &parts) {
        return Ok(Some(local));
    }
    peel(g, &parts)
}

fn peel(g: &Graph, parts: &[Part]) -> Result<Option<Local>> {
    let co = g.complement();
    for (i, h_part) in parts.iter().enumerate() {
        if h_part.vertices.len() < 2 {
            continue;
        }
        let others: Vec<&Part> = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p)
            .collect();
        let k2 = others
            .iter()
            .filter(|p| matches!(p.ty, PartType::K2))
            .count();
        let r1m: Vec<&&Part> = others.iter().filter(|p| p.is_r1m()).collect();
        let fits = match r1m.len() {
            0 => k2 >= 1 && k2 == others.len(),
            1 => k2 + 1 == others.len(),
            _ => false,
        };
        if !fits {
            continue;
        }
        let h = co.induced_subgraph(h_part.vertices)?;
        let Some(sub) = decide(&h.graph)? else {
            continue;
        };
        let sub = sub.relabel(&h.original);
        let extra = others
            .iter()
            .fold(VertexSet::EMPTY, |acc, p| acc | p.matched());
        let (m, r) = match r1m.first().and_then(|p| p.r()) {
            Some(s) => (Some(s.m), k2),
            None => (None, k2 - 1),
        };
        let trace = PrismTrace {
            case: PrismCase::Peel,
            component: graph_key(g),
            params: PrismParams {
                m,
                r: Some(r),
                ..PrismParams::default()
            },
            s0: sub.s1.to_vec(),
            inner: Some(Box::new(sub.trace)),
        };
        return Ok(Some(Local {
            s0: sub.s1,
            s1: sub.s0 | extra,
            trace,
        }));
    }
    Ok(None)
}

fn check_prism_input(g: &Graph) -> Result<()> {
    g.ensure_nonempty("prism decider")?;
    if g.order() > MAX_PRISM_BASE {
        return Err(Error::capacity(
            "prism base order",
            g.order(),
            MAX_PRISM_BASE,
        ));
    }
    if !is_cograph(g) {
        return Err(Error::NotCograph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Decides whether the complementary prism of the connected cograph `g` has
/// an OLD_oind set and builds one. Every returned witness has been verified
/// on the prism.
pub fn prism_cograph_oldoind(g: &Graph) -> Result<Option<PrismWitness>> {
    check_prism_input(g)?;
    let Some(local) = decide(g)? else {
        return Ok(None);
    };
    let w = finish(g, local)?;
    Ok(Some(w))
}

fn finish(g: &Graph, local: Local) -> Result<PrismWitness> {
    let n = g.order();
    let s1bar = VertexSet::from_bits(local.s1.bits() << n);
    let w = PrismWitness {
        s0: local.s0,
        s1bar,
        trace: local.trace,
    };
    let prism = g.complementary_prism()?;
    let verdict = verify_oldoind(&prism, w.set())?;
    if let Some(v) = verdict.violation {
        return Err(Error::ContractViolation(format!(
            "prism witness {} for {} fails: {v:?}",
            w.set(),
            encode_graph6(g)
        )));
    }
    let matched_pairs = (local.s0 & local.s1).len();
    if matched_pairs > 1 {
        return Err(Error::ContractViolation(format!(
            "prism witness for {} uses {matched_pairs} prism edges",
            encode_graph6(g)
        )));
    }
    Ok(w)
}

/// The size-two construction on its own: `g` must satisfy the size-two
/// conditions (and have no apex), otherwise a precondition error is returned.
pub fn size2_construct(g: &Graph) -> Result<PrismWitness> {
    check_prism_input(g)?;
    let parts = classify_parts(g)?;
    if parts.iter().any(|p| p.vertices.len() < 2) {
        return Err(Error::PreconditionViolated(
            "a component of the complement is a single vertex".into(),
        ));
    }
    let local = size2(g, &parts).ok_or_else(|| {
        Error::PreconditionViolated("complement components violate the size-two conditions".into())
    })?;
    finish(g, local)
}
