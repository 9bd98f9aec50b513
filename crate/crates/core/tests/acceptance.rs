//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{load, oracle_feasible, valid_corpus};
use gea_core::axioms::{check_ea_axioms, check_gea_axioms, Axiom};
use gea_core::effects::{demo_excd, gdh_sum, is_positive, omega, random_positive, vector_witness, ComplexVector};
use gea_core::io::MorphismFile;
use gea_core::lp::lp_feasible;
use gea_core::morphism::{classify_morphism, MorphismClass, MorphismSpec};
use gea_core::random::random_gea;
use gea_core::representation::{
    bound_holds, build_representation, extract_states, norm_attaining_slot, operator_norm, verify_injective,
    verify_order_reflecting, FiniteVector,
};
use gea_core::states::{order_determining_set, separating_set, witness_program, StateWitnessSet};
use gea_core::{AlgebraTable, Gea};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const POPULATION_SEED: u64 = 0x6ea;
const RANDOM_ALGEBRAS: usize = 240;
const VECTOR_SAMPLES: usize = 100;
const MATRIX_PAIRS: usize = 200;
const WITNESS_GAP: f64 = 1e-9;
const ADDITIVITY_REL: f64 = 1e-9;
const FAST_LIMIT: Duration = Duration::from_secs(1);
const SLOW_LIMIT: Duration = Duration::from_secs(60);

struct Gate {
    failed: usize,
}

impl Gate {
    fn report(&mut self, id: u32, name: &str, ok: bool, detail: String, elapsed: Duration) {
        if !ok {
            self.failed += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id}. {name}: {detail} ({:.3}s)", elapsed.as_secs_f64());
    }
}

fn population() -> Vec<(String, AlgebraTable)> {
    let mut out: Vec<(String, AlgebraTable)> =
        valid_corpus().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(POPULATION_SEED);
    for i in 0..RANDOM_ALGEBRAS {
        let n = 2 + i % 5;
        out.push((format!("random#{i}(n={n})"), random_gea(n, &mut rng)));
    }
    out
}

fn set_or_partial(r: Result<StateWitnessSet, gea_core::WitnessFailure>) -> (StateWitnessSet, bool) {
    match r {
        Ok(s) => (s, true),
        Err(f) => (f.partial, false),
    }
}

fn criterion_1(gate: &mut Gate) {
    let t = Instant::now();
    let r = demo_excd();
    let c = &r.classification;
    let omega_ok = r.inner_products[0].values == vec![("0".into(), 0.0), ("p1".into(), 1.0), ("p2".into(), 0.0)];
    let id_sum = r.target_sums.iter().any(|s| s == &["p1", "p2", "id"]);
    let triple = r.sub_gea_violation == Some(["p1".into(), "p2".into(), "id".into()]);
    // closing the loop: the same table through the witness pipeline
    let gea = Gea::new(r.algebra.clone()).unwrap();
    let pipeline = order_determining_set(&gea).is_ok_and(|s| {
        let rep = build_representation(gea.table(), &s).unwrap();
        s.len() == 2 && verify_order_reflecting(&rep, gea.order()).unwrap().holds()
    });
    let flags = r.axioms.passed
        && r.order_determining
        && c.is_morphism
        && c.injective
        && c.order_reflecting
        && !c.embedding;
    let elapsed = t.elapsed();
    let ok = flags && omega_ok && id_sum && triple && pipeline && elapsed < FAST_LIMIT;
    gate.report(
        1,
        "two-projection example",
        ok,
        format!(
            "axioms={} order_determining={} morphism={} injective={} order_reflecting={} embedding={} \
             violating_triple={:?} omega_e1={} p1+p2=id:{} pipeline_order_reflecting={}",
            r.axioms.passed,
            r.order_determining,
            c.is_morphism,
            c.injective,
            c.order_reflecting,
            c.embedding,
            r.sub_gea_violation,
            omega_ok,
            id_sum,
            pipeline
        ),
        elapsed,
    );
}

fn criterion_2(gate: &mut Gate) {
    let t = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, table) in valid_corpus() {
        let start = Instant::now();
        let gea = Gea::new(table).unwrap();
        for result in [order_determining_set(&gea), separating_set(&gea)] {
            let Ok(set) = result else { continue };
            let rep = build_representation(gea.table(), &set).unwrap();
            checked += 1;
            if extract_states(&rep) != set.states {
                bad.push(name);
            }
        }
        slowest = slowest.max(start.elapsed());
    }
    let ok = bad.is_empty() && checked > 0 && slowest < FAST_LIMIT;
    gate.report(
        2,
        "recovery identity",
        ok,
        format!("{checked} witness sets, mismatches={bad:?}, slowest algebra {:.3}s", slowest.as_secs_f64()),
        t.elapsed(),
    );
}

/// Whether every per-pair program the search would solve is feasible, decided
/// by the enumeration oracle alone.
fn oracle_separable(table: &AlgebraTable) -> bool {
    let n = table.len();
    (0..n).all(|a| {
        ((a + 1)..n).all(|b| {
            oracle_feasible(&witness_program(table, a, b).unwrap()).is_some()
                || oracle_feasible(&witness_program(table, b, a).unwrap()).is_some()
        })
    })
}

fn oracle_order_determinable(gea: &Gea) -> bool {
    gea.order()
        .non_leq_pairs()
        .all(|(a, b)| oracle_feasible(&witness_program(gea.table(), a, b).unwrap()).is_some())
}

fn criterion_3_4(gate: &mut Gate, pop: &[(String, AlgebraTable)]) {
    let t = Instant::now();
    let mut mismatches = Vec::new();
    let mut oracle_mismatches = Vec::new();
    let mut successes = 0;
    for (name, table) in pop {
        let gea = Gea::new(table.clone()).unwrap();
        let (set, ok) = set_or_partial(separating_set(&gea));
        let rep = build_representation(table, &set).unwrap();
        if verify_injective(&rep).holds() != ok {
            mismatches.push(name.clone());
        }
        if oracle_separable(table) != ok {
            oracle_mismatches.push(name.clone());
        }
        successes += usize::from(ok);
    }
    let elapsed = t.elapsed();
    gate.report(
        3,
        "separating set <=> injective representation",
        mismatches.is_empty() && oracle_mismatches.is_empty() && elapsed < SLOW_LIMIT,
        format!(
            "{} algebras ({successes} separable), mismatches={mismatches:?}, oracle disagreements={oracle_mismatches:?}",
            pop.len()
        ),
        elapsed,
    );

    let t = Instant::now();
    let mut mismatches = Vec::new();
    let mut oracle_mismatches = Vec::new();
    let mut successes = 0;
    for (name, table) in pop {
        let gea = Gea::new(table.clone()).unwrap();
        let (set, ok) = set_or_partial(order_determining_set(&gea));
        let rep = build_representation(table, &set).unwrap();
        if verify_order_reflecting(&rep, gea.order()).unwrap().holds() != ok {
            mismatches.push(name.clone());
        }
        if oracle_order_determinable(&gea) != ok {
            oracle_mismatches.push(name.clone());
        }
        successes += usize::from(ok);
    }
    let elapsed = t.elapsed();
    gate.report(
        4,
        "order-determining set <=> order-reflecting representation",
        mismatches.is_empty() && oracle_mismatches.is_empty() && elapsed < SLOW_LIMIT,
        format!(
            "{} algebras ({successes} order-determinable), mismatches={mismatches:?}, oracle disagreements={oracle_mismatches:?}",
            pop.len()
        ),
        elapsed,
    );
}

fn criterion_5(gate: &mut Gate) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(POPULATION_SEED ^ 5);
    let mut elements = 0;
    let mut failures = Vec::new();
    for (name, table) in valid_corpus() {
        let gea = Gea::new(table).unwrap();
        let set = order_determining_set(&gea)
            .or_else(|_| separating_set(&gea))
            .unwrap_or_else(|f| f.partial);
        let rep = build_representation(gea.table(), &set).unwrap();
        for a in 0..gea.len() {
            elements += 1;
            let sampled = (0..VECTOR_SAMPLES).all(|_| {
                let x = FiniteVector::sample(rep.dim(), &mut rng);
                bound_holds(&rep, a, &x).unwrap()
            });
            let c = operator_norm(&rep, a);
            let attained = match norm_attaining_slot(&rep, a) {
                Some(slot) => {
                    let e = FiniteVector::basis(rep.dim(), slot);
                    rep.apply(a, &e).unwrap().norm_sq() == &c * &c
                }
                None => rep.dim() == 0,
            };
            if !(sampled && attained) {
                failures.push(format!("{name}:{}", gea.label(a)));
            }
        }
    }
    gate.report(
        5,
        "operator bound",
        failures.is_empty(),
        format!("{elements} elements x {VECTOR_SAMPLES} vectors, failures={failures:?}"),
        t.elapsed(),
    );
}

fn criterion_6(gate: &mut Gate, pop: &[(String, AlgebraTable)]) {
    let t = Instant::now();
    let mut programs = 0;
    let mut mismatches = Vec::new();
    for (name, table) in pop.iter().filter(|(_, t)| t.len() <= 6) {
        for a in 0..table.len() {
            for b in 0..table.len() {
                if a == b {
                    continue;
                }
                let p = witness_program(table, a, b).unwrap();
                programs += 1;
                let ours = lp_feasible(&p);
                let valid_point = ours.as_ref().is_none_or(|x| p.is_feasible_point(x));
                if ours.is_some() != oracle_feasible(&p).is_some() || !valid_point {
                    mismatches.push(format!("{name}({a},{b})"));
                }
            }
        }
    }
    gate.report(
        6,
        "simplex vs basic-solution enumeration",
        mismatches.is_empty(),
        format!("{programs} programs, mismatches={mismatches:?}"),
        t.elapsed(),
    );
}

fn random_unit_vector(d: usize, rng: &mut ChaCha8Rng) -> ComplexVector {
    ComplexVector::new(
        (0..d)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

fn criterion_7(gate: &mut Gate) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(POPULATION_SEED ^ 7);
    let (mut pairs, mut witnesses, mut verdict_bad, mut gap_bad, mut additivity_bad) = (0, 0, 0, 0, 0);
    let mut worst_rel = 0.0f64;
    for d in [2, 3, 4] {
        for _ in 0..MATRIX_PAIRS {
            pairs += 1;
            let a = random_positive(d, 10.0, &mut rng);
            let b = random_positive(d, 10.0, &mut rng);
            let w = vector_witness(&a, &b).unwrap();
            if w.is_none() != is_positive(&b.sub(&a).unwrap()) {
                verdict_bad += 1;
            }
            if let Some(x) = &w {
                witnesses += 1;
                if omega(x, &a).unwrap() - omega(x, &b).unwrap() <= WITNESS_GAP {
                    gap_bad += 1;
                }
            }
            let x = random_unit_vector(d, &mut rng);
            let lhs = omega(&x, &gdh_sum(&a, &b).unwrap()).unwrap();
            let rhs = omega(&x, &a).unwrap() + omega(&x, &b).unwrap();
            let rel = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
            worst_rel = worst_rel.max(rel);
            if rel > ADDITIVITY_REL {
                additivity_bad += 1;
            }
        }
    }
    gate.report(
        7,
        "operator model",
        verdict_bad == 0 && gap_bad == 0 && additivity_bad == 0,
        format!(
            "{pairs} pairs ({witnesses} with witness): verdict mismatches={verdict_bad}, \
             gap<=1e-9: {gap_bad}, additivity failures={additivity_bad} (worst rel {worst_rel:.1e})"
        ),
        t.elapsed(),
    );
}

fn classified_morphisms(pop: &[(String, AlgebraTable)]) -> Vec<(String, MorphismClass)> {
    let mut out = Vec::new();
    for (name, t) in valid_corpus() {
        out.push((format!("id:{name}"), classify_morphism(&MorphismSpec::identity(t)).unwrap()));
    }
    for file in ["id_d4.json", "excd_inclusion.json"] {
        let text = std::fs::read_to_string(common::corpus_dir().join(file)).unwrap();
        let m = MorphismFile::parse(&text).unwrap();
        let spec = m.to_spec(load(&m.source), load(&m.target)).unwrap();
        out.push((file.to_string(), classify_morphism(&spec).unwrap()));
    }
    out.push(("demo".into(), demo_excd().classification));
    // injective onto a sub-GEA, yet not order reflecting
    let trivial = AlgebraTable::new(
        ["0", "a", "b", "c"].map(String::from).to_vec(),
        0,
        None,
        (0..4).flat_map(|i| [(0, i, i), (i, 0, i)]),
    )
    .unwrap();
    let joined = AlgebraTable::new(
        trivial.labels().to_vec(),
        0,
        None,
        trivial.sums().chain([(1, 2, 3), (2, 1, 3)]),
    )
    .unwrap();
    let spec = MorphismSpec::new(trivial, joined, vec![0, 1, 2, 3]).unwrap();
    out.push(("trivial->joined".into(), classify_morphism(&spec).unwrap()));
    // random maps between members of the population
    let mut rng = ChaCha8Rng::seed_from_u64(POPULATION_SEED ^ 8);
    for _ in 0..400 {
        let (sn, s) = &pop[rng.random_range(0..pop.len())];
        let (tn, t) = &pop[rng.random_range(0..pop.len())];
        let mut map: Vec<usize> = (0..s.len()).map(|_| rng.random_range(0..t.len())).collect();
        map[s.zero()] = t.zero();
        if rng.random_bool(0.3) && s.len() <= t.len() {
            map = (0..s.len()).collect();
        }
        let spec = MorphismSpec::new(s.clone(), t.clone(), map).unwrap();
        out.push((format!("{sn}->{tn}"), classify_morphism(&spec).unwrap()));
    }
    out
}

fn criterion_8(gate: &mut Gate, pop: &[(String, AlgebraTable)]) {
    let t = Instant::now();
    let mut problems = Vec::new();

    let broken = load("broken_ge3.json");
    let r = check_gea_axioms(&broken);
    let planted = ["a", "b", "d"].map(|l| broken.index_of(l).unwrap()).to_vec();
    if r.passed || !r.violations_of(Axiom::GE3).any(|v| v.witness == planted) {
        problems.push("broken_ge3: planted GE3 witness (a,b,d) not reported".to_string());
    }
    let no_comp = load("ea_no_complement.json");
    let r = check_ea_axioms(&no_comp).unwrap();
    for l in ["a", "b"] {
        let i = no_comp.index_of(l).unwrap();
        if r.passed || !r.violations_of(Axiom::E3).any(|v| v.witness.first() == Some(&i)) {
            problems.push(format!("ea_no_complement: missing E3 witness for {l}"));
        }
    }
    for (name, table) in valid_corpus() {
        if !check_gea_axioms(&table).passed {
            problems.push(format!("{name} rejected"));
        }
        if table.unit().is_some() && name != "ea_no_complement.json" && !check_ea_axioms(&table).unwrap().passed {
            problems.push(format!("{name} rejected as effect algebra"));
        }
    }
    let morphisms = classified_morphisms(pop);
    let chain_bad: Vec<_> = morphisms.iter().filter(|(_, c)| !c.chain_holds()).map(|(n, _)| n.clone()).collect();
    let counterexample = &morphisms.iter().find(|(n, _)| n == "trivial->joined").unwrap().1;
    if !(counterexample.injective && counterexample.image_is_sub_gea && !counterexample.order_reflecting) {
        problems.push("trivial->joined not classified as expected".into());
    }
    let embeddings = morphisms.iter().filter(|(_, c)| c.embedding).count();
    let distinct_images: BTreeSet<_> = morphisms
        .iter()
        .map(|(_, c)| (c.is_morphism, c.injective, c.order_reflecting, c.embedding))
        .collect();
    gate.report(
        8,
        "axiom checker soundness",
        problems.is_empty() && chain_bad.is_empty(),
        format!(
            "{} morphisms classified ({embeddings} embeddings, {} flag patterns), chain failures={chain_bad:?}, problems={problems:?}",
            morphisms.len(),
            distinct_images.len()
        ),
        t.elapsed(),
    );
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    let pop = population();
    criterion_1(&mut gate);
    criterion_2(&mut gate);
    criterion_3_4(&mut gate, &pop);
    criterion_5(&mut gate);
    criterion_6(&mut gate, &pop);
    criterion_7(&mut gate);
    criterion_8(&mut gate, &pop);
    if gate.failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failed);
        ExitCode::FAILURE
    }
}
