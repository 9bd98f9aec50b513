//! Diagonal operator representation of a generalized effect algebra.
//!
//! Given a finite witness set `S`, every element `a` is sent to the diagonal
//! operator `x -> (s(a) x_s)_s` on finitely supported sequences indexed by `S`.
//! The diagonal entries are exact nonnegative rationals, so positivity,
//! additivity, injectivity and order reflection can all be checked exactly.
//! Vectors are taken with rational coordinates: every identity checked here
//! involves coordinates only through `|x_s|^2`.

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::order::OrderRelation;
use crate::rational::{self, Rational};
use crate::states::{GeneralizedState, StateWitnessSet};
use crate::{Error, Result, Verdict};

/// A finitely supported vector on the witness basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteVector {
    pub coords: Vec<Rational>,
}

impl FiniteVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    /// The basis vector `e_slot`.
    pub fn basis(len: usize, slot: usize) -> Self {
        let mut coords = vec![Rational::zero(); len];
        coords[slot] = Rational::from_integer(1.into());
        Self { coords }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn norm_sq(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// Coordinates `p/q` with `q` in `1..=4` and value in `[-5, 5]`.
    pub fn sample<R: Rng>(len: usize, rng: &mut R) -> Self {
        let coords = (0..len)
            .map(|_| {
                let q: i64 = rng.random_range(1..=4);
                let p: i64 = rng.random_range(-5 * q..=5 * q);
                rational::ratio(p, q)
            })
            .collect();
        Self { coords }
    }
}

/// `a -> diag(s(a))_{s in S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalRep {
    witness_order: Vec<String>,
    operators: Vec<Vec<Rational>>,
    zero: usize,
}

impl DiagonalRep {
    /// Number of basis slots (witness states).
    pub fn dim(&self) -> usize {
        self.witness_order.len()
    }

    pub fn witness_order(&self) -> &[String] {
        &self.witness_order
    }

    pub fn operator(&self, a: usize) -> &[Rational] {
        &self.operators[a]
    }

    pub fn operators(&self) -> &[Vec<Rational>] {
        &self.operators
    }

    pub fn num_elements(&self) -> usize {
        self.operators.len()
    }

    pub fn zero_element(&self) -> usize {
        self.zero
    }

    /// `phi(a) x`.
    pub fn apply(&self, a: usize, x: &FiniteVector) -> Result<FiniteVector> {
        self.check_len(x)?;
        Ok(FiniteVector::new(
            self.operators[a].iter().zip(&x.coords).map(|(d, c)| d * c).collect(),
        ))
    }

    fn check_len(&self, x: &FiniteVector) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Replaces one diagonal entry; the result need not be a representation.
    pub fn with_entry(mut self, a: usize, slot: usize, value: Rational) -> Self {
        self.operators[a][slot] = value;
        self
    }
}

/// Builds `phi_S` for the states of `set`, in their stored order.
///
/// Every state must be a generalized state on `table`. An empty set is
/// accepted and yields operators on the zero space.
pub fn build_representation(table: &AlgebraTable, set: &StateWitnessSet) -> Result<DiagonalRep> {
    for s in &set.states {
        GeneralizedState::new(table, s.values().to_vec())?;
    }
    let operators = (0..table.len()).map(|a| set.value_vector(a)).collect();
    let witness_order = (0..set.len()).map(|i| format!("s{i}")).collect();
    Ok(DiagonalRep {
        witness_order,
        operators,
        zero: table.zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepDefect {
    /// `phi(0)` has a nonzero entry.
    NonzeroAtZero { slot: usize },
    /// `phi(x + y) != phi(x) + phi(y)`.
    NotAdditive { x: usize, y: usize, z: usize, slot: usize },
    /// A negative diagonal entry.
    NotPositive { element: usize, slot: usize },
}

/// Checks `phi(0) = 0`, positivity and entrywise additivity over every defined sum.
pub fn verify_morphism(rep: &DiagonalRep, table: &AlgebraTable) -> Result<Vec<RepDefect>> {
    if rep.num_elements() != table.len() {
        return Err(Error::LengthMismatch {
            expected: table.len(),
            found: rep.num_elements(),
        });
    }
    let mut defects = Vec::new();
    for (slot, v) in rep.operators[table.zero()].iter().enumerate() {
        if !v.is_zero() {
            defects.push(RepDefect::NonzeroAtZero { slot });
        }
    }
    for (element, op) in rep.operators.iter().enumerate() {
        for (slot, v) in op.iter().enumerate() {
            if v.is_negative() {
                defects.push(RepDefect::NotPositive { element, slot });
            }
        }
    }
    for (x, y, z) in table.sums() {
        let bad = (0..rep.dim()).find(|&s| &rep.operators[x][s] + &rep.operators[y][s] != rep.operators[z][s]);
        if let Some(slot) = bad {
            defects.push(RepDefect::NotAdditive { x, y, z, slot });
        }
    }
    Ok(defects)
}

/// Injective iff all diagonals are pairwise distinct.
pub fn verify_injective(rep: &DiagonalRep) -> Verdict<(usize, usize)> {
    let n = rep.num_elements();
    for a in 0..n {
        for b in (a + 1)..n {
            if rep.operators[a] == rep.operators[b] {
                return Verdict::Fails((a, b));
            }
        }
    }
    Verdict::Holds
}

/// `phi(a) <= phi(b)` in the positivity order. For diagonal operators this is
/// the entrywise order: `<e_s, (phi(b) - phi(a)) e_s> = b_s - a_s`.
pub fn operator_leq(rep: &DiagonalRep, a: usize, b: usize) -> bool {
    rep.operators[a].iter().zip(&rep.operators[b]).all(|(x, y)| x <= y)
}

/// Order reflecting iff `phi(a) <= phi(b)` implies `a <= b` for every pair.
pub fn verify_order_reflecting(rep: &DiagonalRep, order: &OrderRelation) -> Result<Verdict<(usize, usize)>> {
    let n = rep.num_elements();
    if order.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: order.len(),
        });
    }
    for a in 0..n {
        for b in 0..n {
            if operator_leq(rep, a, b) && !order.leq(a, b) {
                return Ok(Verdict::Fails((a, b)));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Largest diagonal entry of `phi(a)`, which is its operator norm (0 on the zero space).
pub fn operator_norm(rep: &DiagonalRep, a: usize) -> Rational {
    rational::max_of(&rep.operators[a]).unwrap_or_else(Rational::zero)
}

/// Slot where `phi(a)` attains its norm.
pub fn norm_attaining_slot(rep: &DiagonalRep, a: usize) -> Option<usize> {
    let op = &rep.operators[a];
    op.iter()
        .enumerate()
        .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(&x.0)))
        .map(|(i, _)| i)
}

/// `||phi(a) x||^2 <= ||phi(a)||^2 ||x||^2`, compared exactly.
pub fn bound_holds(rep: &DiagonalRep, a: usize, x: &FiniteVector) -> Result<bool> {
    let image = rep.apply(a, x)?;
    let c = operator_norm(rep, a);
    Ok(image.norm_sq() <= &c * &c * x.norm_sq())
}

/// `omega_x(phi(a)) = <x, phi(a) x> = sum_s s(a) x_s^2`.
pub fn vector_state(rep: &DiagonalRep, x: &FiniteVector, a: usize) -> Result<Rational> {
    rep.check_len(x)?;
    if a >= rep.num_elements() {
        return Err(Error::IndexOutOfRange {
            index: a,
            len: rep.num_elements(),
        });
    }
    Ok(rep.operators[a].iter().zip(&x.coords).map(|(d, c)| d * c * c).sum())
}

/// One state per slot: `a -> omega_{e_s}(phi(a))`.
pub fn extract_states(rep: &DiagonalRep) -> Vec<GeneralizedState> {
    (0..rep.dim())
        .map(|slot| {
            let e = FiniteVector::basis(rep.dim(), slot);
            let values = (0..rep.num_elements())
                .map(|a| vector_state(rep, &e, a).expect("basis vector has the right length"))
                .collect();
            GeneralizedState::from_values_unchecked(values)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub morphism: bool,
    pub injective: bool,
    pub order_reflecting: bool,
    pub defects: Vec<RepDefect>,
    pub injectivity_failure: Option<(usize, usize)>,
    pub order_failure: Option<(usize, usize)>,
    #[serde(serialize_with = "rational::serialize_pq_seq")]
    pub bounds: Vec<Rational>,
    /// Every sampled vector satisfied the norm bound, with equality at the norm-attaining basis vector.
    pub bounds_checked: bool,
}

/// Runs every check on a built representation. `samples` random vectors per
/// element are drawn from `rng` for the boundedness check.
pub fn verify_all<R: Rng>(
    rep: &DiagonalRep,
    table: &AlgebraTable,
    order: &OrderRelation,
    samples: usize,
    rng: &mut R,
) -> Result<Verification> {
    let defects = verify_morphism(rep, table)?;
    let inj = verify_injective(rep);
    let ord = verify_order_reflecting(rep, order)?;
    let bounds: Vec<Rational> = (0..rep.num_elements()).map(|a| operator_norm(rep, a)).collect();
    let mut bounds_checked = true;
    for (a, c) in bounds.iter().enumerate() {
        for _ in 0..samples {
            let x = FiniteVector::sample(rep.dim(), rng);
            bounds_checked &= bound_holds(rep, a, &x)?;
        }
        if let Some(slot) = norm_attaining_slot(rep, a) {
            let e = FiniteVector::basis(rep.dim(), slot);
            let image = rep.apply(a, &e)?;
            bounds_checked &= image.norm_sq() == c * c;
        }
    }
    Ok(Verification {
        morphism: defects.is_empty(),
        injective: inj.holds(),
        order_reflecting: ord.holds(),
        defects,
        injectivity_failure: inj.counterexample().copied(),
        order_failure: ord.counterexample().copied(),
        bounds,
        bounds_checked,
    })
}
