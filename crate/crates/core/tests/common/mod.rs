//! Shared test helpers: the corpus loader and an LP feasibility oracle that
//! does not share code with the simplex solver under test.

#![allow(dead_code)]

use std::path::PathBuf;

use gea_core::io::AlgebraFile;
use gea_core::lp::LinearProgram;
use gea_core::{AlgebraTable, Rational};
use num_traits::{Signed, Zero};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load(name: &str) -> AlgebraTable {
    let path = corpus_dir().join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    AlgebraFile::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Corpus algebras that satisfy the axioms.
pub const VALID: &[&str] = &[
    "excd.json",
    "excd_target.json",
    "diamond.json",
    "chain3.json",
    "cube.json",
    "ea_no_complement.json",
    "no_states.json",
    "singleton.json",
];

pub fn valid_corpus() -> Vec<(&'static str, AlgebraTable)> {
    VALID.iter().map(|&n| (n, load(n))).collect()
}

/// Solves `M x = rhs` for a square or tall `M` by exact Gauss-Jordan
/// elimination. Returns `None` if `M` lacks full column rank or the system is
/// inconsistent.
fn solve_full_rank(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    // every column must pivot, so column c pivots in row c
    for c in 0..cols {
        let p = (c..rows).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for v in aug[c].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = aug[c].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
    }
    if aug[cols..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| aug[c][cols].clone()).collect())
}

/// Feasibility of `A x = b, x >= 0` by enumerating basic solutions: the
/// system is feasible iff some linearly independent column subset yields a
/// nonnegative solution. Exponential in the number of variables; fine for the
/// tiny programs in the test population.
pub fn oracle_feasible(program: &LinearProgram) -> Option<Vec<Rational>> {
    let nv = program.num_vars();
    let rows = program.rows();
    let rhs = program.rhs();
    assert!(nv <= 16, "oracle is exponential in the variable count");
    for mask in 0u32..(1 << nv) {
        let cols: Vec<usize> = (0..nv).filter(|&j| mask & (1 << j) != 0).collect();
        if cols.len() > rows.len() {
            continue;
        }
        let sub: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let sol = if cols.is_empty() {
            rhs.iter().all(Zero::is_zero).then(Vec::new)
        } else {
            solve_full_rank(&sub, rhs)
        };
        if let Some(sol) = sol {
            if sol.iter().all(|v| !v.is_negative()) {
                let mut x = vec![Rational::zero(); nv];
                for (&j, v) in cols.iter().zip(sol) {
                    x[j] = v;
                }
                return Some(x);
            }
        }
    }
    None
}

#[test]
fn oracle_handles_textbook_cases() {
    use gea_core::rational::int;
    // x + y = 1, x - y = 3  ->  x = 2, y = -1: infeasible with x, y >= 0
    let mut p = LinearProgram::new(2);
    p.add_equality(vec![int(1), int(1)], int(1)).unwrap();
    p.add_equality(vec![int(1), int(-1)], int(3)).unwrap();
    assert!(oracle_feasible(&p).is_none());
    // x + y = 1 alone is feasible
    let mut q = LinearProgram::new(2);
    q.add_equality(vec![int(1), int(1)], int(1)).unwrap();
    let x = oracle_feasible(&q).unwrap();
    assert!(q.is_feasible_point(&x));
}
