//! Browser bindings. Every export takes and returns JSON strings; failures are
//! reported as `{"error": "..."}` so the page never has to catch.

use gea_core::effects::{self, ComplexVector, EffectMatrix};
use gea_core::io::{AlgebraFile, WitnessSetFile};
use gea_core::representation::{build_representation, operator_leq, verify_injective, verify_order_reflecting};
use gea_core::states::witness_set;
use gea_core::{check_gea_axioms, rational, Gea, WitnessGoal};
use num_complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest algebra the page will generate.
const MAX_RANDOM: usize = 8;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn analyze(text: &str, goal: &str) -> Result<Value, String> {
    let table = AlgebraFile::parse(text).map_err(|e| e.to_string())?;
    let goal: WitnessGoal = goal.parse()?;
    let report = check_gea_axioms(&table);
    let label = |i: usize| table.label(i).to_string();
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "axiom": v.axiom, "witness": v.witness.iter().map(|&i| label(i)).collect::<Vec<_>>(), "message": v.message }))
        .collect();
    if !report.passed {
        return Ok(json!({ "elements": table.labels(), "axioms_pass": false, "violations": violations }));
    }
    let gea = Gea::new(table.clone()).map_err(|e| e.to_string())?;
    let covers: Vec<[String; 2]> = gea.order().covers().into_iter().map(|(x, y)| [label(x), label(y)]).collect();
    let outcome = witness_set(&gea, goal);
    let states = WitnessSetFile::from_outcome(&table, &outcome);
    let set = match &outcome {
        Ok(s) => s.clone(),
        Err(f) => f.partial.clone(),
    };
    let rep = build_representation(&table, &set).map_err(|e| e.to_string())?;
    let operators: Vec<Value> = (0..table.len())
        .map(|a| json!({ "element": label(a), "diag": rep.operator(a).iter().map(rational::to_pq).collect::<Vec<_>>() }))
        .collect();
    let n = table.len();
    let operator_order: Vec<[String; 2]> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && operator_leq(&rep, a, b))
        .map(|(a, b)| [label(a), label(b)])
        .collect();
    let reflecting = verify_order_reflecting(&rep, gea.order()).map_err(|e| e.to_string())?;
    Ok(json!({
        "elements": table.labels(),
        "axioms_pass": true,
        "violations": violations,
        "covers": covers,
        "goal": goal.as_str(),
        "found": outcome.is_ok(),
        "states": states,
        "representation": {
            "witnesses": rep.dim(),
            "operators": operators,
            "operator_order": operator_order,
            "injective": verify_injective(&rep).holds(),
            "order_reflecting": reflecting.holds(),
        },
    }))
}

/// Axioms, Hasse diagram, witness states and diagonal representation of an
/// algebra file.
#[wasm_bindgen]
pub fn analyze_algebra(algebra_json: &str, goal: &str) -> String {
    match analyze(algebra_json, goal) {
        Ok(v) => v.to_string(),
        Err(e) => error(e),
    }
}

/// A seeded random GEA on `n` elements, as an algebra file.
#[wasm_bindgen]
pub fn random_gea(n: usize, seed: u32) -> String {
    if !(1..=MAX_RANDOM).contains(&n) {
        return error(format!("n must be in 1..={MAX_RANDOM}"));
    }
    let table = gea_core::random::random_gea(n, &mut ChaCha8Rng::seed_from_u64(seed.into()));
    AlgebraFile::to_json(&table)
}

fn hermitian_2x2(p: &[f64]) -> Result<EffectMatrix, String> {
    let [d1, d2, re, im] = p else {
        return Err("expected [a11, a22, re a12, im a12]".into());
    };
    let z = Complex64::new(*re, *im);
    EffectMatrix::new(2, vec![Complex64::new(*d1, 0.0), z, z.conj(), Complex64::new(*d2, 0.0)])
        .map_err(|e| e.to_string())
}

fn witness(a: &[f64], b: &[f64]) -> Result<Value, String> {
    let a = hermitian_2x2(a)?;
    let b = hermitian_2x2(b)?;
    let diff = b.sub(&a).map_err(|e| e.to_string())?;
    let w = effects::vector_witness(&a, &b).map_err(|e| e.to_string())?;
    let omegas = |x: &ComplexVector| -> Result<(f64, f64), String> {
        Ok((effects::omega(x, &a).map_err(|e| e.to_string())?, effects::omega(x, &b).map_err(|e| e.to_string())?))
    };
    let witness = match &w {
        None => Value::Null,
        Some(x) => {
            let (wa, wb) = omegas(x)?;
            json!({ "vector": x.coords.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(), "omega_a": wa, "omega_b": wb })
        }
    };
    Ok(json!({
        "a_eigenvalues": a.eigenvalues(),
        "b_eigenvalues": b.eigenvalues(),
        "difference_eigenvalues": diff.eigenvalues(),
        "a_leq_b": w.is_none(),
        "witness": witness,
        "sum_is_effect": effects::effect_sum(&a, &b).ok().flatten().is_some(),
    }))
}

/// Compares two positive 2x2 matrices given as `[a11, a22, re a12, im a12]`.
#[wasm_bindgen]
pub fn effect_witness(a: &[f64], b: &[f64]) -> String {
    match witness(a, b) {
        Ok(v) => v.to_string(),
        Err(e) => error(e),
    }
}

/// The two-projection example on `C^2`.
#[wasm_bindgen]
pub fn demo_excd() -> String {
    let r = effects::demo_excd();
    let c = &r.classification;
    json!({
        "axioms_pass": r.axioms.passed,
        "target_sums": r.target_sums,
        "inner_products": r.inner_products,
        "order_determining": r.order_determining,
        "morphism": c.is_morphism,
        "injective": c.injective,
        "order_reflecting": c.order_reflecting,
        "embedding": c.embedding,
        "sub_gea_violation": r.sub_gea_violation,
    })
    .to_string()
}
