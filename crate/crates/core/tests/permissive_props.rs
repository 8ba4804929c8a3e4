mod common;

use kexchange_core::graph::{certify_separability, is_vertex_cover, min_separability};
use kexchange_core::permissive::{
    candidate_family, check_structural_witness, permissive_search, Confidence, PermissiveOutcome, SearchMode,
};
use kexchange_core::strict::raw_neighborhood_search;
use rand::Rng;

#[test]
fn universal_negatives_are_exact_and_positives_valid() {
    let mut rng = common::rng(404);
    let mut checked = 0;
    while checked < 150 {
        let k = rng.gen_range(1..=3);
        let inst = common::random_cover_instance(&mut rng, 14, k);
        let Some(cert) = min_separability(inst.graph(), 2) else {
            continue;
        };
        checked += 1;
        let out = permissive_search(&inst, cert.beta(), SearchMode::Universal).unwrap();
        let oracle = raw_neighborhood_search(&inst).is_improved();
        match out {
            PermissiveOutcome::ImprovedCover { cover, witness } => {
                assert!(is_vertex_cover(inst.graph(), &cover));
                assert!(cover.len() < inst.cover().len());
                assert!(witness.w.is_subset(&witness.q_set));
                assert!(witness.q_set.is_subset(inst.cover()));
            }
            PermissiveOutcome::NoImprovementWithinK { confidence, .. } => {
                assert_eq!(confidence, Confidence::Deterministic);
                assert!(!oracle, "false negative on {inst:?}");
            }
        }
    }
}

#[test]
fn every_witness_is_contained_in_some_candidate() {
    let mut rng = common::rng(77);
    let mut checked = 0;
    while checked < 100 {
        let k = rng.gen_range(1..=3);
        let inst = common::random_cover_instance(&mut rng, 12, k);
        let Some(cert) = min_separability(inst.graph(), 2) else {
            continue;
        };
        checked += 1;
        let fam = candidate_family(inst.graph(), &cert, inst.cover(), k, SearchMode::Universal).unwrap();
        for cand in &fam.candidates {
            assert!(inst.graph().is_independent(cand.as_set()));
            assert!(cand.as_set().is_subset(inst.cover()));
        }
        let witnesses = common::structural_witnesses(inst.graph(), inst.cover(), k);
        for star in &witnesses {
            assert!(check_structural_witness(inst.graph(), inst.cover(), k, star));
            assert!(
                fam.candidates.iter().any(|c| star.is_subset(c.as_set())),
                "witness {star:?} not covered in {inst:?}"
            );
        }
        if !witnesses.is_empty() {
            assert!(permissive_search(&inst, cert.beta(), SearchMode::Universal)
                .unwrap()
                .is_improved());
        }
    }
}

#[test]
fn outcome_is_independent_of_thread_count() {
    let mut rng = common::rng(5);
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    for _ in 0..40 {
        let inst = common::random_cover_instance(&mut rng, 14, 2);
        let Ok(cert) = certify_separability(inst.graph(), 3) else {
            continue;
        };
        let mode = SearchMode::Randomized {
            seed: 9,
            repetitions: None,
        };
        let a = permissive_search(&inst, cert.beta(), mode).unwrap();
        let b = single.install(|| permissive_search(&inst, cert.beta(), mode).unwrap());
        assert_eq!(a, b);
    }
}
