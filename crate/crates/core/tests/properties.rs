mod common;

use gea_core::axioms::{check_ea_axioms, check_gea_axioms};
use gea_core::io::AlgebraFile;
use gea_core::random::random_gea;
use gea_core::representation::{
    build_representation, extract_states, operator_leq, vector_state, verify_injective, verify_morphism,
    verify_order_reflecting, FiniteVector,
};
use gea_core::states::{order_determining_set, separating_set};
use gea_core::{AlgebraTable, Gea, GeneralizedState, Rational};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gea_from(n: usize, seed: u64) -> Gea {
    let table = random_gea(n, &mut ChaCha8Rng::seed_from_u64(seed));
    Gea::new(table).expect("generator output is a GEA")
}

fn arb_gea() -> impl Strategy<Value = Gea> {
    (1usize..=6, any::<u64>()).prop_map(|(n, seed)| gea_from(n, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn induced_order_is_partial(g in arb_gea()) {
        prop_assert!(g.order().is_partial_order());
        let z = g.table().zero();
        for x in 0..g.len() {
            prop_assert!(g.order().leq(z, x));
        }
    }

    #[test]
    fn diff_recovers_summand(g in arb_gea()) {
        for (x, y, z) in g.table().sums() {
            prop_assert!(g.order().leq(x, z));
            prop_assert_eq!(g.order().diff(z, x), Some(y));
        }
    }

    #[test]
    fn states_are_monotone_and_form_a_cone(g in arb_gea()) {
        let set = match order_determining_set(&g) {
            Ok(s) => s,
            Err(f) => f.partial,
        };
        for s in &set.states {
            for x in 0..g.len() {
                for y in 0..g.len() {
                    if g.order().leq(x, y) {
                        prop_assert!(s.value(x) <= s.value(y));
                    }
                }
            }
        }
        for s in &set.states {
            for t in &set.states {
                let sum: Vec<Rational> = s.values().iter().zip(t.values()).map(|(a, b)| a + b).collect();
                prop_assert!(GeneralizedState::new(g.table(), sum).is_ok());
            }
            let half = gea_core::rational::ratio(1, 2);
            prop_assert!(s.scaled(&half).is_ok());
        }
    }

    #[test]
    fn order_determining_implies_separating(g in arb_gea()) {
        if order_determining_set(&g).is_ok() {
            prop_assert!(separating_set(&g).is_ok());
        }
    }

    #[test]
    fn injectivity_matches_separation(g in arb_gea()) {
        let (set, ok) = match separating_set(&g) {
            Ok(s) => (s, true),
            Err(f) => (f.partial, false),
        };
        let rep = build_representation(g.table(), &set).unwrap();
        prop_assert!(verify_morphism(&rep, g.table()).unwrap().is_empty());
        prop_assert_eq!(verify_injective(&rep).holds(), ok);
    }

    #[test]
    fn order_reflection_matches_order_determination(g in arb_gea()) {
        let (set, ok) = match order_determining_set(&g) {
            Ok(s) => (s, true),
            Err(f) => (f.partial, false),
        };
        let rep = build_representation(g.table(), &set).unwrap();
        prop_assert_eq!(verify_order_reflecting(&rep, g.order()).unwrap().holds(), ok);
    }

    #[test]
    fn extract_inverts_build(g in arb_gea()) {
        let set = match separating_set(&g) {
            Ok(s) => s,
            Err(f) => f.partial,
        };
        let rep = build_representation(g.table(), &set).unwrap();
        prop_assert_eq!(extract_states(&rep), set.states);
    }

    #[test]
    fn diagonal_order_is_pointwise(g in arb_gea()) {
        let set = match separating_set(&g) {
            Ok(s) => s,
            Err(f) => f.partial,
        };
        let rep = build_representation(g.table(), &set).unwrap();
        for a in 0..g.len() {
            for b in 0..g.len() {
                let pointwise = set.states.iter().all(|s| s.value(a) <= s.value(b));
                prop_assert_eq!(operator_leq(&rep, a, b), pointwise);
            }
        }
    }

    #[test]
    fn vector_states_are_nonnegative_and_additive(g in arb_gea(), seed in any::<u64>()) {
        let set = match order_determining_set(&g) {
            Ok(s) => s,
            Err(f) => f.partial,
        };
        let rep = build_representation(g.table(), &set).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = FiniteVector::sample(rep.dim(), &mut rng);
        for a in 0..g.len() {
            prop_assert!(!vector_state(&rep, &x, a).unwrap().is_negative());
        }
        for (p, q, r) in g.table().sums() {
            let lhs = vector_state(&rep, &x, r).unwrap();
            let rhs = vector_state(&rep, &x, p).unwrap() + vector_state(&rep, &x, q).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert!(vector_state(&rep, &x, g.table().zero()).unwrap().is_zero());
    }

    #[test]
    fn algebra_file_round_trips(g in arb_gea()) {
        let json = AlgebraFile::to_json(g.table());
        prop_assert_eq!(&AlgebraFile::parse(&json).unwrap(), g.table());
    }

    #[test]
    fn effect_algebra_axioms_imply_gea_axioms(n in 1usize..=6, seed in any::<u64>()) {
        // Take a generated GEA and try each element as unit.
        let g = gea_from(n, seed);
        for u in 0..n {
            let t = g.table();
            let Ok(with_unit) = AlgebraTable::new(t.labels().to_vec(), t.zero(), Some(u), t.sums()) else {
                continue;
            };
            if check_ea_axioms(&with_unit).unwrap().passed {
                prop_assert!(check_gea_axioms(&with_unit).passed);
            }
        }
    }

    #[test]
    fn random_tables_ea_pass_implies_gea_pass(
        n in 2usize..=4,
        raw in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4), 0..12),
        unit in 1usize..4,
    ) {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut sums: Vec<(usize, usize, usize)> = (0..n).flat_map(|i| [(0, i, i), (i, 0, i)]).collect();
        let mut seen = std::collections::BTreeSet::new();
        for (x, y, z) in raw {
            if x < n && y < n && z < n && x != 0 && y != 0 && seen.insert((x, y)) {
                sums.push((x, y, z));
            }
        }
        let Ok(t) = AlgebraTable::new(labels, 0, Some(unit % n), sums) else {
            return Ok(());
        };
        if check_ea_axioms(&t).unwrap().passed {
            prop_assert!(check_gea_axioms(&t).passed);
        }
    }

    #[test]
    fn separation_is_injectivity_of_value_vectors(g in arb_gea()) {
        let set = match separating_set(&g) {
            Ok(s) => s,
            Err(f) => f.partial,
        };
        let vectors: std::collections::BTreeSet<Vec<Rational>> = (0..g.len()).map(|a| set.value_vector(a)).collect();
        prop_assert_eq!(set.separates_points(g.len()), vectors.len() == g.len());
    }
}

#[test]
fn corpus_effect_algebras_are_gea() {
    for (name, t) in common::valid_corpus() {
        if t.unit().is_some() && check_ea_axioms(&t).unwrap().passed {
            assert!(check_gea_axioms(&t).passed, "{name}");
        }
    }
}
