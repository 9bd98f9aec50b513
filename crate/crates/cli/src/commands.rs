//! Subcommand bodies. Each one records its stages on a [`Run`] and returns
//! the exit classification.

use std::path::{Path, PathBuf};

use gea_core::effects::{demo_excd, omega, vector_witness, EffectMatrix, MatrixFile};
use gea_core::io::{AlgebraFile, MorphismFile, RepresentationFile, WitnessSetFile};
use gea_core::morphism::{classify_morphism, MorphismClass};
use gea_core::representation::{build_representation, verify_all, RepDefect};
use gea_core::states::witness_set;
use gea_core::{check_ea_axioms, check_gea_axioms, AlgebraTable, AxiomReport, Gea, SubGeaViolation, WitnessGoal};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{ExitClass, Halt, Run};

/// Random vectors per element for the boundedness check.
const BOUND_SAMPLES: usize = 100;

type Step<T> = Result<T, Halt>;

fn labels(t: &AlgebraTable, idx: &[usize]) -> Value {
    json!(idx.iter().map(|&i| t.label(i)).collect::<Vec<_>>())
}

fn pair(t: &AlgebraTable, p: Option<(usize, usize)>) -> Value {
    p.map_or(Value::Null, |(a, b)| labels(t, &[a, b]))
}

fn axioms_json(t: &AlgebraTable, r: &AxiomReport) -> Value {
    json!({
        "kind": r.kind,
        "passed": r.passed,
        "violations": r.violations.iter().map(|v| json!({
            "axiom": v.axiom,
            "witness": labels(t, &v.witness),
            "message": v.message,
        })).collect::<Vec<_>>(),
    })
}

fn load_algebra(run: &mut Run, path: &Path) -> Step<AlgebraTable> {
    let text = run.read(path)?;
    let table = AlgebraFile::parse(&text).map_err(|e| run.input_error("parse", format!("{}: {e}", path.display())))?;
    run.ok(
        "parse",
        json!({
            "path": path.display().to_string(),
            "elements": table.labels(),
            "zero": table.label(table.zero()),
            "unit": table.unit().map(|u| table.label(u)),
            "defined_sums": table.num_sums(),
        }),
    );
    Ok(table)
}

fn check_gea(run: &mut Run, table: &AlgebraTable, stage: &str) -> Step<Gea> {
    let report = check_gea_axioms(table);
    let value = axioms_json(table, &report);
    if !report.passed {
        return Err(run.fail(stage, ExitClass::CheckFailed, value));
    }
    run.ok(stage, value);
    Ok(Gea::new(table.clone()).expect("axioms hold"))
}

fn order_json(gea: &Gea) -> Value {
    let t = gea.table();
    let o = gea.order();
    let n = gea.len();
    let strict: Vec<Value> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| o.lt(x, y))
        .map(|(x, y)| labels(t, &[x, y]))
        .collect();
    json!({
        "partial_order": o.is_partial_order(),
        "strict": strict,
        "covers": o.covers().into_iter().map(|(x, y)| labels(t, &[x, y])).collect::<Vec<_>>(),
        "incomparable_or_reversed": o.non_leq_pairs().count(),
    })
}

pub fn check(run: &mut Run, path: &Path, ea: bool) -> Step<ExitClass> {
    let table = load_algebra(run, path)?;
    let gea_report = check_gea_axioms(&table);
    let mut class = ExitClass::Ok;
    if !gea_report.passed {
        class = ExitClass::CheckFailed;
        run.fail("gea_axioms", class, axioms_json(&table, &gea_report));
    } else {
        run.ok("gea_axioms", axioms_json(&table, &gea_report));
    }
    if ea {
        let report = check_ea_axioms(&table).map_err(|e| run.input_error("ea_axioms", e))?;
        if !report.passed {
            class = ExitClass::CheckFailed;
            run.fail("ea_axioms", class, axioms_json(&table, &report));
        } else {
            run.ok("ea_axioms", axioms_json(&table, &report));
        }
    }
    Ok(class)
}

pub fn order(run: &mut Run, path: &Path) -> Step<ExitClass> {
    let table = load_algebra(run, path)?;
    let gea = check_gea(run, &table, "gea_axioms")?;
    run.ok("order", order_json(&gea));
    Ok(ExitClass::Ok)
}

fn find_witnesses(run: &mut Run, gea: &Gea, goal: WitnessGoal) -> Step<gea_core::StateWitnessSet> {
    let outcome = witness_set(gea, goal);
    let file = WitnessSetFile::from_outcome(gea.table(), &outcome);
    let value = serde_json::to_value(&file).expect("plain data");
    match outcome {
        Ok(set) => {
            run.ok("states", value);
            Ok(set)
        }
        Err(_) => Err(run.fail("states", ExitClass::NoWitnessSet, value)),
    }
}

pub fn states(run: &mut Run, path: &Path, goal: WitnessGoal) -> Step<ExitClass> {
    let table = load_algebra(run, path)?;
    let gea = check_gea(run, &table, "gea_axioms")?;
    run.ok("order", order_json(&gea));
    find_witnesses(run, &gea, goal)?;
    Ok(ExitClass::Ok)
}

fn defect_json(t: &AlgebraTable, d: &RepDefect) -> Value {
    match *d {
        RepDefect::NonzeroAtZero { slot } => json!({ "kind": "nonzero_at_zero", "slot": slot }),
        RepDefect::NotAdditive { x, y, z, slot } => {
            json!({ "kind": "not_additive", "sum": labels(t, &[x, y, z]), "slot": slot })
        }
        RepDefect::NotPositive { element, slot } => {
            json!({ "kind": "not_positive", "element": t.label(element), "slot": slot })
        }
    }
}

pub fn represent(run: &mut Run, path: &Path, goal: WitnessGoal, out: Option<&Path>, seed: u64) -> Step<ExitClass> {
    let table = load_algebra(run, path)?;
    let gea = check_gea(run, &table, "gea_axioms")?;
    run.ok("order", order_json(&gea));
    let set = find_witnesses(run, &gea, goal)?;
    let rep = build_representation(&table, &set).map_err(|e| run.input_error("represent", e))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = verify_all(&rep, &table, gea.order(), BOUND_SAMPLES, &mut rng).expect("representation matches table");
    let file = RepresentationFile::new(&table, &rep, &v);
    run.ok("represent", serde_json::to_value(&file).expect("plain data"));

    let passed = v.morphism
        && v.injective
        && v.bounds_checked
        && (goal == WitnessGoal::Separate || v.order_reflecting);
    let verification = json!({
        "morphism": v.morphism,
        "injective": v.injective,
        "order_reflecting": v.order_reflecting,
        "bounds_checked": v.bounds_checked,
        "bound_samples": BOUND_SAMPLES,
        "defects": v.defects.iter().map(|d| defect_json(&table, d)).collect::<Vec<_>>(),
        "injectivity_failure": pair(&table, v.injectivity_failure),
        "order_failure": pair(&table, v.order_failure),
    });
    if !passed {
        return Err(run.fail("verify", ExitClass::CheckFailed, verification));
    }
    run.ok("verify", verification);

    if let Some(out) = out {
        let text = serde_json::to_string_pretty(&file).expect("plain data") + "\n";
        std::fs::write(out, text).map_err(|e| run.input_error("write", format!("{}: {e}", out.display())))?;
        run.ok("write", json!({ "path": out.display().to_string() }));
    }
    Ok(ExitClass::Ok)
}

fn classification_json(src: &AlgebraTable, dst: &AlgebraTable, c: &MorphismClass) -> Value {
    let violation = c.sub_gea_violation.as_ref().map(|v| match *v {
        SubGeaViolation::MissingZero => json!({ "kind": "missing_zero" }),
        SubGeaViolation::Triple { x, y, z } => json!({ "kind": "triple", "triple": labels(dst, &[x, y, z]) }),
    });
    json!({
        "morphism": c.is_morphism,
        "injective": c.injective,
        "order_reflecting": c.order_reflecting,
        "embedding": c.embedding,
        "image_is_sub_gea": c.image_is_sub_gea,
        "reflects_sums": c.reflects_sums,
        "additivity_failure": c.additivity_failure.map(|(x, y, z)| labels(src, &[x, y, z])),
        "collision": pair(src, c.collision),
        "unreflected_pair": pair(src, c.unreflected_pair),
        "sub_gea_violation": violation,
        "unreflected_sum": pair(src, c.unreflected_sum),
    })
}

pub fn morphism(run: &mut Run, mapfile: &Path) -> Step<ExitClass> {
    let text = run.read(mapfile)?;
    let file = MorphismFile::parse(&text).map_err(|e| run.input_error("parse", format!("{}: {e}", mapfile.display())))?;
    let base = mapfile.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |p: &str| -> PathBuf { base.join(p) };
    let source = load_algebra(run, &resolve(&file.source))?;
    let target = load_algebra(run, &resolve(&file.target))?;
    check_gea(run, &source, "source_axioms")?;
    check_gea(run, &target, "target_axioms")?;
    let spec = file
        .to_spec(source.clone(), target.clone())
        .map_err(|e| run.input_error("map", e))?;
    let class = classify_morphism(&spec).expect("both sides are GEAs");
    let mut value = classification_json(&source, &target, &class);
    value["map"] = json!(file.map);
    run.ok("classify", value);
    Ok(ExitClass::Ok)
}

pub fn demo(run: &mut Run) -> Step<ExitClass> {
    let r = demo_excd();
    let states = WitnessSetFile::from_set(&r.algebra, &r.vector_states);
    run.ok(
        "demo_excd",
        json!({
            "axioms": axioms_json(&r.algebra, &r.axioms),
            "elements": r.algebra.labels(),
            "target_elements": r.target.labels(),
            "target_sums": r.target_sums,
            "inner_products": r.inner_products,
            "order_determining": r.order_determining,
            "vector_states": states,
            "classification": classification_json(&r.algebra, &r.target, &r.classification),
            "sub_gea_violation": r.sub_gea_violation,
        }),
    );
    Ok(ExitClass::Ok)
}

fn load_matrix(run: &mut Run, path: &Path) -> Step<EffectMatrix> {
    let text = run.read(path)?;
    MatrixFile::parse(&text).map_err(|e| run.input_error("parse", format!("{}: {e}", path.display())))
}

pub fn witness(run: &mut Run, a_path: &Path, b_path: &Path) -> Step<ExitClass> {
    let a = load_matrix(run, a_path)?;
    let b = load_matrix(run, b_path)?;
    let w = vector_witness(&a, &b).map_err(|e| run.input_error("witness", e))?;
    let value = match &w {
        None => json!({ "a_leq_b": true, "vector": Value::Null }),
        Some(x) => {
            let wa = omega(x, &a).expect("dimensions match");
            let wb = omega(x, &b).expect("dimensions match");
            json!({
                "a_leq_b": false,
                "vector": x.coords.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                "omega_a": wa,
                "omega_b": wb,
                "gap": wa - wb,
            })
        }
    };
    run.ok("witness", value);
    Ok(ExitClass::Ok)
}

pub fn effect_check(run: &mut Run, path: &Path) -> Step<ExitClass> {
    let m = load_matrix(run, path)?;
    let value = json!({
        "dim": m.dim(),
        "eigenvalues": m.eigenvalues(),
        "positive": m.is_positive(),
        "effect": m.is_effect(),
        "psd_tol": m.psd_tol,
    });
    if !m.is_effect() {
        return Err(run.fail("effect", ExitClass::CheckFailed, value));
    }
    run.ok("effect", value);
    Ok(ExitClass::Ok)
}
