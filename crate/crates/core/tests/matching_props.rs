mod common;

use kexchange_core::generate::random_bipartite;
use kexchange_core::graph::{BipartiteGraph, Side};
use kexchange_core::matching::{find_hall_violator, maximum_matching, HallCheck};
use proptest::prelude::*;

fn arb_bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (0usize..=8, 0usize..=8).prop_flat_map(|(na, nb)| {
        proptest::collection::vec(any::<bool>(), na * nb).prop_map(move |bits| {
            let edges = (0..na).flat_map(|i| (0..nb).map(move |j| (i, j)));
            BipartiteGraph::from_parts(na, nb, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matching_is_valid_and_maximum(bg in arb_bipartite()) {
        let m = maximum_matching(&bg);
        let mut used = std::collections::HashSet::new();
        for &(a, b) in m.pairs() {
            prop_assert!(bg.a().contains(a) && bg.b().contains(b));
            prop_assert!(bg.graph().has_edge(a, b));
            prop_assert!(used.insert(a) && used.insert(b));
        }
        prop_assert_eq!(m.len(), common::kuhn_matching_size(&bg));
        // defect version of König's theorem
        let (deficiency, _) = common::brute_max_deficiency(&bg, Side::A);
        prop_assert_eq!(m.len(), bg.a().len() - deficiency);
    }

    #[test]
    fn violator_is_sound_and_complete(bg in arb_bipartite(), b_side in any::<bool>()) {
        let side = if b_side { Side::B } else { Side::A };
        let (deficiency, _) = common::brute_max_deficiency(&bg, side);
        match find_hall_violator(&bg, side) {
            HallCheck::Saturated => prop_assert_eq!(deficiency, 0),
            HallCheck::Violator(w) => {
                prop_assert!(deficiency > 0);
                prop_assert!(w.is_subset(bg.side(side)));
                prop_assert!(bg.graph().open_neighborhood(&w).len() < w.len());
                // the alternating closure has maximum deficiency
                prop_assert_eq!(w.len() - bg.graph().open_neighborhood(&w).len(), deficiency);
            }
        }
    }
}

#[test]
fn larger_random_matchings_agree_with_kuhn() {
    let mut rng = common::rng(99);
    for i in 0..50 {
        let bg = random_bipartite(40, 35, 0.02 + 0.002 * i as f64, &mut rng);
        assert_eq!(maximum_matching(&bg).len(), common::kuhn_matching_size(&bg));
    }
}
