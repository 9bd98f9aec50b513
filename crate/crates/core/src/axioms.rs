//! Exhaustive axiom checks for generalized effect algebras and effect algebras.
//!
//! Partial associativity is read as a biconditional: if either bracketing of
//! `x + y + z` is defined then both must be, and they must agree. Commutativity
//! likewise requires `y + x` to be present whenever `x + y` is. The triple scan
//! is `O(n^3)`.

use std::fmt;

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraKind {
    #[serde(rename = "GEA")]
    Generalized,
    #[serde(rename = "EA")]
    Effect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    GE1,
    GE2,
    GE3,
    GE4,
    GE5,
    E1,
    E2,
    E3,
    E4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Element indices that exhibit the failure.
    pub witness: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub kind: AlgebraKind,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl AxiomReport {
    fn new(kind: AlgebraKind, violations: Vec<Violation>) -> Self {
        let passed = violations.is_empty();
        Self {
            kind,
            violations,
            passed,
        }
    }

    pub fn violations_of(&self, axiom: Axiom) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }
}

struct Scan<'a> {
    table: &'a AlgebraTable,
    out: Vec<Violation>,
}

impl<'a> Scan<'a> {
    fn l(&self, i: usize) -> &str {
        self.table.label(i)
    }

    fn push(&mut self, axiom: Axiom, witness: Vec<usize>, message: String) {
        self.out.push(Violation {
            axiom,
            witness,
            message,
        });
    }

    fn show(&self, v: Option<usize>) -> String {
        v.map_or_else(|| "undefined".to_string(), |k| self.l(k).to_string())
    }

    fn commutativity(&mut self, axiom: Axiom) {
        let t = self.table;
        for (i, j, k) in t.sums() {
            let swapped = t.sum(j, i);
            if swapped != Some(k) {
                let msg = format!(
                    "{} + {} = {} but {} + {} is {}",
                    self.l(i),
                    self.l(j),
                    self.l(k),
                    self.l(j),
                    self.l(i),
                    self.show(swapped)
                );
                self.push(axiom, vec![i, j], msg);
            }
        }
    }

    fn associativity(&mut self, axiom: Axiom) {
        let t = self.table;
        let n = t.len();
        for x in 0..n {
            for y in 0..n {
                let xy = t.sum(x, y);
                for z in 0..n {
                    let left = xy.and_then(|xy| t.sum(xy, z));
                    let right = t.sum(y, z).and_then(|yz| t.sum(x, yz));
                    if left != right {
                        let msg = format!(
                            "({x} + {y}) + {z} is {} but {x} + ({y} + {z}) is {}",
                            self.show(left),
                            self.show(right),
                            x = self.l(x),
                            y = self.l(y),
                            z = self.l(z),
                        );
                        self.push(axiom, vec![x, y, z], msg);
                    }
                }
            }
        }
    }

    fn cancellation(&mut self) {
        let t = self.table;
        let n = t.len();
        for x in 0..n {
            for y in 0..n {
                let Some(k) = t.sum(x, y) else { continue };
                for z in (y + 1)..n {
                    if t.sum(x, z) == Some(k) {
                        let msg = format!(
                            "{x} + {y} = {x} + {z} = {k} with {y} != {z}",
                            x = self.l(x),
                            y = self.l(y),
                            z = self.l(z),
                            k = self.l(k),
                        );
                        self.push(Axiom::GE3, vec![x, y, z], msg);
                    }
                }
            }
        }
    }

    fn positivity(&mut self) {
        let t = self.table;
        let zero = t.zero();
        for (i, j, k) in t.sums() {
            if k == zero && (i != zero || j != zero) {
                let msg = format!("{} + {} = {}", self.l(i), self.l(j), self.l(zero));
                self.push(Axiom::GE4, vec![i, j], msg);
            }
        }
    }

    fn neutral_zero(&mut self) {
        let t = self.table;
        let zero = t.zero();
        for x in 0..t.len() {
            let right = t.sum(x, zero);
            let left = t.sum(zero, x);
            if right != Some(x) || left != Some(x) {
                let msg = format!(
                    "{x} + {z} is {} and {z} + {x} is {}, expected {x}",
                    self.show(right),
                    self.show(left),
                    x = self.l(x),
                    z = self.l(zero),
                );
                self.push(Axiom::GE5, vec![x], msg);
            }
        }
    }

    fn unique_complement(&mut self, unit: usize) {
        let t = self.table;
        for x in 0..t.len() {
            let complements: Vec<usize> = (0..t.len()).filter(|&y| t.sum(x, y) == Some(unit)).collect();
            match complements.as_slice() {
                [_] => {}
                [] => {
                    let msg = format!("{} has no complement", self.l(x));
                    self.push(Axiom::E3, vec![x], msg);
                }
                many => {
                    let names: Vec<&str> = many.iter().map(|&y| self.l(y)).collect();
                    let msg = format!("{} has complements {}", self.l(x), names.join(", "));
                    let mut witness = vec![x];
                    witness.extend_from_slice(many);
                    self.push(Axiom::E3, witness, msg);
                }
            }
        }
    }

    fn unit_absorbs(&mut self, unit: usize) {
        let t = self.table;
        let zero = t.zero();
        for x in 0..t.len() {
            if x == zero {
                continue;
            }
            if t.sum(unit, x).is_some() || t.sum(x, unit).is_some() {
                let msg = format!("{} + {} is defined", self.l(unit), self.l(x));
                self.push(Axiom::E4, vec![x], msg);
            }
        }
    }
}

/// Checks GE1–GE5 exhaustively.
pub fn check_gea_axioms(table: &AlgebraTable) -> AxiomReport {
    let mut scan = Scan {
        table,
        out: Vec::new(),
    };
    scan.commutativity(Axiom::GE1);
    scan.associativity(Axiom::GE2);
    scan.cancellation();
    scan.positivity();
    scan.neutral_zero();
    AxiomReport::new(AlgebraKind::Generalized, scan.out)
}

/// Checks E1–E4 exhaustively. Fails with [`Error::MissingUnit`] if the table has no unit.
pub fn check_ea_axioms(table: &AlgebraTable) -> Result<AxiomReport> {
    let unit = table.unit().ok_or(Error::MissingUnit)?;
    let mut scan = Scan {
        table,
        out: Vec::new(),
    };
    scan.commutativity(Axiom::E1);
    scan.associativity(Axiom::E2);
    scan.unique_complement(unit);
    scan.unit_absorbs(unit);
    Ok(AxiomReport::new(AlgebraKind::Effect, scan.out))
}
