//! The order induced by the partial sum, and sub-algebra tests.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::axioms::{check_gea_axioms, AxiomReport};
use crate::{Error, Result, Verdict};

/// `x <= y` iff `x + z = y` for some `z`; the (unique) `z` is `y - x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
    /// `(y, x) -> y - x`
    diff: BTreeMap<(usize, usize), usize>,
}

impl OrderRelation {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `y - x`, defined iff `x <= y`.
    pub fn diff(&self, y: usize, x: usize) -> Option<usize> {
        self.diff.get(&(y, x)).copied()
    }

    /// Ordered pairs `(a, b)` with `a` not below `b`, lexicographically.
    pub fn non_leq_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.leq(a, b))
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.leq(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| !self.leq(x, y) || (0..n).all(|z| !self.leq(y, z) || self.leq(x, z)))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    fn from_table(table: &AlgebraTable) -> Self {
        let n = table.len();
        let mut leq = vec![false; n * n];
        let mut diff = BTreeMap::new();
        for (x, z, y) in table.sums() {
            leq[x * n + y] = true;
            diff.insert((y, x), z);
        }
        Self { n, leq, diff }
    }
}

/// Computes the induced order of a table that satisfies the GEA axioms.
///
/// Calling this on a table that fails the axioms is a contract error.
pub fn induced_order(table: &AlgebraTable) -> Result<OrderRelation> {
    let report = check_gea_axioms(table);
    if !report.passed {
        return Err(Error::NotGea(report.violations.len()));
    }
    Ok(OrderRelation::from_table(table))
}

/// A table that has passed the GEA axioms, together with its induced order.
#[derive(Debug, Clone)]
pub struct Gea {
    table: AlgebraTable,
    order: OrderRelation,
}

impl Gea {
    pub fn new(table: AlgebraTable) -> Result<Self> {
        Self::checked(table).map_err(|r| Error::NotGea(r.violations.len()))
    }

    /// Like [`Gea::new`] but hands back the full report on failure.
    pub fn checked(table: AlgebraTable) -> std::result::Result<Self, AxiomReport> {
        let report = check_gea_axioms(&table);
        if !report.passed {
            return Err(report);
        }
        let order = OrderRelation::from_table(&table);
        Ok(Self { table, order })
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.table.label(i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubGeaViolation {
    MissingZero,
    /// `x + y = z` with two of the three inside the subset and one outside.
    Triple { x: usize, y: usize, z: usize },
}

/// Tests whether `subset` contains zero and is closed under the two-out-of-three
/// rule for defined sums.
pub fn is_sub_gea(table: &AlgebraTable, subset: &BTreeSet<usize>) -> Result<Verdict<SubGeaViolation>> {
    for &i in subset {
        table.check_index(i)?;
    }
    if !subset.contains(&table.zero()) {
        return Ok(Verdict::Fails(SubGeaViolation::MissingZero));
    }
    for (x, y, z) in table.sums() {
        let inside = [x, y, z].iter().filter(|i| subset.contains(i)).count();
        if inside == 2 {
            return Ok(Verdict::Fails(SubGeaViolation::Triple { x, y, z }));
        }
    }
    Ok(Verdict::Holds)
}
