use oldoind::classes::{is_cograph, is_p4_tidy};
use oldoind::deciders::{
    audit_prism_set, cograph_oldoind, p4tidy_oldoind, prism_cograph_oldoind, PrismCase, PrismTrace,
    PrismWitness,
};
use oldoind::graph::enumerate_nonisomorphic;
use oldoind::oldoind::{all_oldoind_sets, exists_oldoind, is_oldoind, SearchOptions};
use oldoind::oracle::{min_oldoind_size, Matrix};
use oldoind::{Graph, VertexSet};

#[test]
fn tidy_and_cograph_deciders_agree_with_search() {
    for n in 1..=7 {
        for g in enumerate_nonisomorphic(n, false).unwrap() {
            let exists = exists_oldoind(&g).unwrap().found();
            if is_p4_tidy(&g) {
                let w = p4tidy_oldoind(&g).unwrap();
                assert_eq!(w.is_some(), exists, "{g}");
                if let Some(s) = w {
                    assert!(is_oldoind(&g, s), "{g}");
                }
            }
            if is_cograph(&g) {
                let w = cograph_oldoind(&g).unwrap();
                assert_eq!(w.is_some(), exists, "{g}");
            }
        }
    }
}

#[test]
fn prism_decider_agrees_with_search() {
    for n in 1..=6 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            if !is_cograph(&g) {
                continue;
            }
            let prism = g.complementary_prism().unwrap();
            let exists = exists_oldoind(&prism).unwrap().found();
            if n <= 4 {
                assert_eq!(
                    min_oldoind_size(&Matrix::new(&prism)).is_some(),
                    exists,
                    "{g}"
                );
            }
            let w = prism_cograph_oldoind(&g).unwrap();
            assert_eq!(w.is_some(), exists, "{g}");
            if let Some(w) = w {
                assert!(is_oldoind(&prism, w.set()));
                let audit = audit_prism_set(&g, &w).unwrap();
                assert!(audit.all_hold(), "{g}: {audit:?}");
            }
        }
    }
}

fn split(n: usize, s: VertexSet) -> PrismWitness {
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

#[test]
fn every_small_witness_passes_the_audit() {
    for n in 2..=5 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            if !is_cograph(&g) {
                continue;
            }
            let prism = g.complementary_prism().unwrap();
            let (sets, complete) =
                all_oldoind_sets(&prism, SearchOptions::default(), usize::MAX).unwrap();
            assert!(complete);
            for s in sets {
                let audit = audit_prism_set(&g, &split(n, s)).unwrap();
                assert!(audit.all_hold(), "{g} {s}: {audit:?}");
            }
        }
    }
}

#[test]
fn universal_base_family() {
    for m in 1..=4 {
        let mut co = Graph::empty(1).unwrap();
        for _ in 0..m {
            co = co.disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        }
        let g = co.complement();
        let w = prism_cograph_oldoind(&g).unwrap().unwrap();
        assert_eq!(w.s0.len(), 1);
        assert_eq!(w.s1bar.len(), g.order());
        assert_eq!(w.trace.case, PrismCase::UniversalBase);
    }
}
