//! Property tests for the structural invariants: complement closure, exact
//! JSON round-trips, difference-set checking against a brute-force oracle,
//! and the equivalence of the two coverage-checking strategies.

use dgraceful::constructions::{construct, ConstructionFamily, ConstructionRequest};
use dgraceful::decomposition::{expand, verify_decomposition_with_cap, Decomposition};
use dgraceful::diff_family::df_from_labeling;
use dgraceful::graph::Graph;
use dgraceful::labeling::{is_cyclic_rds, Labeling};
use dgraceful::search::{search_all, SearchConfig};
use proptest::prelude::*;

fn divisors(e: usize) -> Vec<usize> {
    (1..=e).filter(|d| e % d == 0).collect()
}

/// Any valid construction request with small parameters.
fn arb_request() -> impl Strategy<Value = ConstructionRequest> {
    prop_oneof![
        (1..=24usize, 0..8usize).prop_map(|(e, i)| {
            let ds = divisors(e);
            ConstructionRequest::new(ConstructionFamily::Path, e, ds[i % ds.len()])
        }),
        (1..=24usize, 0..8usize).prop_map(|(e, i)| {
            let ds = divisors(e);
            ConstructionRequest::new(ConstructionFamily::Star, e, ds[i % ds.len()])
        }),
        (1..=6usize).prop_map(|k| ConstructionRequest::new(ConstructionFamily::Cycle4kD2, k, 2)),
        (1..=6usize).prop_map(|k| ConstructionRequest::new(ConstructionFamily::Cycle4kD4, k, 4)),
        (1..=5usize)
            .prop_map(|j| ConstructionRequest::new(ConstructionFamily::Cycle2kOddD2, 2 * j + 1, 2)),
        (1..=4usize).prop_map(|j| ConstructionRequest::new(ConstructionFamily::LadderD2, 2 * j, 2)),
    ]
}

/// Arbitrary simple graph as (vertex count, canonical edge list).
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2..=8usize)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            let count = pairs.len();
            (
                Just(pairs),
                prop::collection::btree_set(0..count, 1..=count),
            )
        })
        .prop_map(|(pairs, chosen)| {
            let edges: Vec<(usize, usize)> = chosen.into_iter().map(|i| pairs[i]).collect();
            let n = 1 + edges.iter().map(|&(a, b)| a.max(b)).max().unwrap();
            Graph::new(n, edges).expect("simple graph")
        })
}

proptest! {
    // complementing a labeling preserves gracefulness, spectrum, and α
    #[test]
    fn complement_preserves_the_spectrum(req in arb_request()) {
        let labeling = construct(&req).unwrap();
        let complement = labeling.complement();
        let original = labeling.verify_d_graceful().unwrap();
        let mirrored = complement.verify_d_graceful().unwrap();
        prop_assert_eq!(original.realized, mirrored.realized);
        prop_assert_eq!(labeling.verify_alpha(), complement.verify_alpha());
        let double = complement.complement();
        prop_assert_eq!(double.labels(), labeling.labels());
    }

    #[test]
    fn graph_json_round_trips(graph in arb_graph()) {
        let json = serde_json::to_string(&graph).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &graph);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn labeling_json_round_trips(req in arb_request()) {
        let labeling = construct(&req).unwrap();
        let json = serde_json::to_string(&labeling).unwrap();
        let back: Labeling = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.labels(), labeling.labels());
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    // the difference family and its expansion survive a save/load cycle
    #[test]
    fn pipeline_json_round_trips(req in arb_request()) {
        let labeling = construct(&req).unwrap();
        if 2 * labeling.d() * (labeling.m() + 1) > 120 {
            return Ok(()); // keep the expansion small
        }
        let family = df_from_labeling(&labeling).unwrap();
        let json = serde_json::to_string(&family).unwrap();
        let family_back: dgraceful::DifferenceFamily = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&family_back).unwrap(), json);

        let dec = expand(&family).unwrap();
        let json = serde_json::to_string(&dec).unwrap();
        let dec_back: Decomposition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(dec_back.blocks(), dec.blocks(), "translates rebuilt on load");
        prop_assert_eq!(serde_json::to_string(&dec_back).unwrap(), json);
    }

    // difference-set membership is translation invariant
    #[test]
    fn rds_check_is_shift_invariant(shift in 0..24usize) {
        let shifted: Vec<usize> = [0usize, 1, 4, 9, 11].iter().map(|x| (x + shift) % 24).collect();
        prop_assert!(is_cyclic_rds(&shifted, 24, 4));
    }

    // and agrees with a brute-force recount on arbitrary 5-subsets of Z_24
    #[test]
    fn rds_check_matches_brute_force(set in prop::collection::btree_set(0..24usize, 5)) {
        let elements: Vec<usize> = set.into_iter().collect();
        let mut counts = [0usize; 24];
        for &a in &elements {
            for &b in &elements {
                if a != b {
                    counts[(24 + a - b) % 24] += 1;
                }
            }
        }
        let expected = (0..24).all(|x| {
            if x % 6 == 0 { counts[x] == 0 } else { counts[x] == 1 }
        });
        prop_assert_eq!(is_cyclic_rds(&elements, 24, 4), expected);
    }

    // the chunked coverage scan must agree with the materialized table on
    // arbitrarily mutated block sets, defect for defect
    #[test]
    fn chunked_and_materialized_coverage_agree(
        idx in 0..16usize,
        pos in 0..6usize,
        value in 0..16usize,
    ) {
        let labeling =
            Labeling::new(Graph::cycle(6).unwrap(), 2, vec![0, 5, 2, 3, 1, 7]).unwrap();
        let dec = expand(&df_from_labeling(&labeling).unwrap()).unwrap();
        let mut blocks = dec.blocks().to_vec();
        blocks[idx][pos] = value;
        let mutated = Decomposition::from_parts(
            dec.spec(),
            dec.graph().clone(),
            dec.base_blocks().to_vec(),
            blocks,
        );
        let chunked = verify_decomposition_with_cap(&mutated, 4);
        let full = verify_decomposition_with_cap(&mutated, 512);
        prop_assert_eq!(chunked.ok, full.ok);
        prop_assert_eq!(chunked.uncovered, full.uncovered);
        prop_assert_eq!(chunked.multiply_covered, full.multiply_covered);
        prop_assert_eq!(chunked.internal_edges, full.internal_edges);
        prop_assert_eq!(chunked.malformed_blocks, full.malformed_blocks);
        prop_assert_eq!(chunked.automorphism_ok, full.automorphism_ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // complement pairing: the reduced search keeps exactly half
    #[test]
    fn symmetry_reduction_halves_path_searches(e in 1..=5usize) {
        let full = search_all(&SearchConfig::new(Graph::path(e).unwrap(), 1).unwrap());
        let reduced = search_all(
            &SearchConfig::new(Graph::path(e).unwrap(), 1)
                .unwrap()
                .symmetry_reduction(true),
        );
        prop_assert_eq!(reduced.solutions.len() * 2, full.solutions.len());
    }
}
