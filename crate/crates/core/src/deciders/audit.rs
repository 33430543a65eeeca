//! Structural checks on a prism witness of a connected cograph.
//!
//! With `Ḡ_1, …, Ḡ_t` the components of `Ḡ`, `G_i` the matching
//! anticomponents, `n_i = |G_i|` and `D̄_i` the vertices of `Ḡ_i` left out of
//! `S̄1`, every valid witness satisfies six necessary conditions whenever
//! `t ≥ 2` and no component is a single vertex. The audit evaluates each one.

use serde::{Deserialize, Serialize};

use super::prism::PrismWitness;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oldoind::verify_oldoind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseResult {
    pub clause: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismAudit {
    /// False when `t < 2` or some component of `Ḡ` is a single vertex; the
    /// clauses are then not evaluated.
    pub hypotheses_met: bool,
    pub clauses: Vec<ClauseResult>,
}

impl PrismAudit {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }
}

fn clause(name: &str, holds: bool, detail: String) -> ClauseResult {
    ClauseResult {
        clause: name.to_string(),
        holds,
        detail,
    }
}

pub fn audit_prism_set(g: &Graph, w: &PrismWitness) -> Result<PrismAudit> {
    g.ensure_nonempty("prism audit")?;
    let n = g.order();
    let prism = g.complementary_prism()?;
    if !w.s0.is_subset(g.vertices()) || !w.s1bar.is_subset(prism.vertices() - g.vertices()) {
        return Err(Error::WitnessInvalid(
            "witness halves lie outside their sides of the prism".into(),
        ));
    }
    let verdict = verify_oldoind(&prism, w.set())?;
    if let Some(v) = verdict.violation {
        return Err(Error::WitnessInvalid(format!(
            "witness {} fails: {v:?}",
            w.set()
        )));
    }

    let co = g.complement();
    let parts = co.component_sets(false);
    if parts.len() < 2 || parts.iter().any(|p| p.len() < 2) {
        return Ok(PrismAudit {
            hypotheses_met: false,
            clauses: Vec::new(),
        });
    }
    let s0 = w.s0;
    let s1 = VertexSet::from_bits(w.s1bar.bits() >> n);
    let d = |p: VertexSet| p - s1;
    let large: Vec<VertexSet> = parts.iter().copied().filter(|p| p.len() >= 3).collect();

    let mut clauses = Vec::with_capacity(6);
    clauses.push(clause(
        "i",
        !s0.is_empty() && !s1.is_empty(),
        format!("|S0| = {}, |S1bar| = {}", s0.len(), s1.len()),
    ));

    let missing: Vec<VertexSet> = parts
        .iter()
        .copied()
        .filter(|p| !p.intersects(s1))
        .collect();
    clauses.push(clause(
        "ii",
        missing.is_empty(),
        format!("{} component(s) miss S1bar", missing.len()),
    ));

    let bad: Vec<String> = large
        .iter()
        .filter(|p| (**p & s0).len() <= 1)
        .filter_map(|&p| {
            let dp = d(p);
            let independent = dp.iter().all(|v| !co.neighbors(v).intersects(dp));
            (!independent || !(1..=2).contains(&dp.len())).then(|| format!("{dp}"))
        })
        .collect();
    clauses.push(clause(
        "iii",
        bad.is_empty(),
        if bad.is_empty() {
            "every checked D_i is independent of size 1 or 2".into()
        } else {
            format!("failing D_i: {}", bad.join(" "))
        },
    ));

    let d_all = parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | d(p));
    let (holds, detail) = if s0.len() == 2 {
        let hit = parts
            .iter()
            .filter(|p| p.intersects(s0))
            .collect::<Vec<_>>();
        let ok =
            hit.len() == 2 && hit.iter().all(|p| p.len() >= 3) && (2..=3).contains(&d_all.len());
        (
            ok,
            format!(
                "{} anticomponent(s) meet S0, |D| = {}",
                hit.len(),
                d_all.len()
            ),
        )
    } else {
        (true, format!("|S0| = {}, clause vacuous", s0.len()))
    };
    clauses.push(clause("iv", holds, detail));

    let untouched = large.iter().filter(|p| !p.intersects(s0)).count();
    clauses.push(clause(
        "v",
        untouched <= 1,
        format!("{untouched} large anticomponent(s) miss S0"),
    ));

    clauses.push(clause(
        "vi",
        (1..=3).contains(&large.len()),
        format!("{} component(s) with at least three vertices", large.len()),
    ));

    Ok(PrismAudit {
        hypotheses_met: true,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{gen_named, Family};
    use crate::deciders::prism::prism_cograph_oldoind;

    #[test]
    fn five_a_passes() {
        let parts = [
            gen_named(Family::R { l: 2, m: 2 }).unwrap(),
            gen_named(Family::RStar { l: 1, m: 1 }).unwrap(),
            Graph::complete(2).unwrap(),
        ];
        let g = parts[0]
            .disjoint_union(&parts[1])
            .unwrap()
            .disjoint_union(&parts[2])
            .unwrap()
            .complement();
        let w = prism_cograph_oldoind(&g).unwrap().unwrap();
        let a = audit_prism_set(&g, &w).unwrap();
        assert!(a.hypotheses_met);
        assert_eq!(a.clauses.len(), 6);
        assert!(a.all_hold(), "{a:?}");
    }

    #[test]
    fn apex_inputs_skip_the_clauses() {
        let p3 = gen_named(Family::Path { n: 3 }).unwrap();
        let w = prism_cograph_oldoind(&p3).unwrap().unwrap();
        let a = audit_prism_set(&p3, &w).unwrap();
        assert!(!a.hypotheses_met);
    }

    #[test]
    fn invalid_witness_is_an_error() {
        let p3 = gen_named(Family::Path { n: 3 }).unwrap();
        let mut w = prism_cograph_oldoind(&p3).unwrap().unwrap();
        w.s0 = VertexSet::singleton(0);
        assert!(matches!(
            audit_prism_set(&p3, &w),
            Err(Error::WitnessInvalid(_))
        ));
    }
}
