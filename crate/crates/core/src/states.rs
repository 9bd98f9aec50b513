//! Generalized states and witness sets found by exact linear programming.
//!
//! A generalized state is an additive map into the nonnegative rationals. The
//! states on a finite table form a polyhedral cone cut out by one equation per
//! defined sum, so whether some state has `s(a) > s(b)` is a feasibility
//! question once the cone is sliced by `s(a) - s(b) = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::lp::{lp_feasible, LinearProgram};
use crate::order::Gea;
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// An additive map `E -> Q>=0`, stored as one value per element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedState {
    values: Vec<Rational>,
}

impl GeneralizedState {
    /// Validates nonnegativity, `s(0) = 0` and additivity on every defined sum.
    pub fn new(table: &AlgebraTable, values: Vec<Rational>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::LengthMismatch {
                expected: table.len(),
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| v.is_negative()) {
            return Err(Error::InvalidState(format!(
                "negative value at `{}`",
                table.label(i)
            )));
        }
        if !values[table.zero()].is_zero() {
            return Err(Error::InvalidState("nonzero value at zero".into()));
        }
        if let Some((x, y, z)) = table
            .sums()
            .find(|&(x, y, z)| &values[x] + &values[y] != values[z])
        {
            return Err(Error::InvalidState(format!(
                "s({}) + s({}) != s({})",
                table.label(x),
                table.label(y),
                table.label(z)
            )));
        }
        Ok(Self { values })
    }

    pub fn zero(table: &AlgebraTable) -> Self {
        Self {
            values: vec![Rational::zero(); table.len()],
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn value(&self, a: usize) -> &Rational {
        &self.values[a]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `q * s` for `q >= 0`.
    pub fn scaled(&self, q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidState("negative scale".into()));
        }
        Ok(Self {
            values: self.values.iter().map(|v| v * q).collect(),
        })
    }

    pub fn to_pq(&self) -> Vec<String> {
        self.values.iter().map(rational::to_pq).collect()
    }
}

impl fmt::Display for GeneralizedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessGoal {
    Separate,
    Order,
}

impl WitnessGoal {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessGoal::Separate => "separate",
            WitnessGoal::Order => "order",
        }
    }
}

impl std::str::FromStr for WitnessGoal {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "separate" => Ok(WitnessGoal::Separate),
            "order" => Ok(WitnessGoal::Order),
            other => Err(format!("unknown goal `{other}` (expected separate or order)")),
        }
    }
}

/// A finite set of generalized states plus, for each pair it was built for,
/// the index of the state that witnesses that pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateWitnessSet {
    pub goal: WitnessGoal,
    pub states: Vec<GeneralizedState>,
    pub provenance: BTreeMap<(usize, usize), usize>,
}

impl StateWitnessSet {
    pub fn new(goal: WitnessGoal) -> Self {
        Self {
            goal,
            states: Vec::new(),
            provenance: BTreeMap::new(),
        }
    }

    /// Wraps an explicit list of states, with no provenance.
    pub fn from_states(goal: WitnessGoal, states: Vec<GeneralizedState>) -> Self {
        Self {
            goal,
            states,
            provenance: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// True iff every pair of distinct elements takes different values on some state.
    pub fn separates_points(&self, n: usize) -> bool {
        (0..n).all(|a| ((a + 1)..n).all(|b| self.states.iter().any(|s| s.value(a) != s.value(b))))
    }

    /// True iff `s(a) <= s(b)` for all states forces `a <= b`.
    pub fn is_order_determining(&self, gea: &Gea) -> bool {
        gea.order()
            .non_leq_pairs()
            .all(|(a, b)| self.states.iter().any(|s| s.value(a) > s.value(b)))
    }

    /// `a -> (s(a))_s`, the evaluation map into `Q>=0^S`.
    pub fn value_vector(&self, a: usize) -> Vec<Rational> {
        self.states.iter().map(|s| s.value(a).clone()).collect()
    }

    fn witness_for(&self, a: usize, b: usize) -> Option<usize> {
        self.states.iter().position(|s| match self.goal {
            WitnessGoal::Separate => s.value(a) != s.value(b),
            WitnessGoal::Order => s.value(a) > s.value(b),
        })
    }

    /// Records `state` for `pair`, reusing an identical state when present.
    fn record(&mut self, pair: (usize, usize), state: GeneralizedState) {
        let idx = match self.states.iter().position(|s| *s == state) {
            Some(i) => i,
            None => {
                self.states.push(state);
                self.states.len() - 1
            }
        };
        self.provenance.insert(pair, idx);
    }
}

/// Witness search that could not be completed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFailure {
    /// Pairs for which no generalized state exists, lexicographically ordered.
    pub failures: Vec<(usize, usize)>,
    /// Witnesses found for the remaining pairs.
    pub partial: StateWitnessSet,
}

/// The linear program whose feasible points are the generalized states with
/// `s(plus) - s(minus) = 1`.
///
/// There is one variable per nonzero element (the zero element is fixed to 0),
/// one additivity row per defined sum `x + y = z` with `x <= y` (the mirrored
/// entry gives the same row) and one normalization row.
pub fn witness_program(table: &AlgebraTable, plus: usize, minus: usize) -> Result<LinearProgram> {
    table.check_index(plus)?;
    table.check_index(minus)?;
    let zero = table.zero();
    let var = |i: usize| -> Option<usize> {
        match i.cmp(&zero) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        }
    };
    let nv = table.len() - 1;
    let mut program = LinearProgram::new(nv);
    let row_of = |terms: &[(usize, i64)]| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); nv];
        for &(i, c) in terms {
            if let Some(v) = var(i) {
                row[v] += Rational::from_integer(c.into());
            }
        }
        row
    };
    for (x, y, z) in table.sums() {
        if x > y && table.sum(y, x) == Some(z) {
            continue;
        }
        let row = row_of(&[(x, 1), (y, 1), (z, -1)]);
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        program.add_equality(row, Rational::zero())?;
    }
    program.add_equality(row_of(&[(plus, 1), (minus, -1)]), Rational::one())?;
    Ok(program)
}

fn solve_witness(table: &AlgebraTable, plus: usize, minus: usize) -> Result<Option<GeneralizedState>> {
    let program = witness_program(table, plus, minus)?;
    Ok(lp_feasible(&program).map(|x| {
        let zero = table.zero();
        let mut values = Vec::with_capacity(table.len());
        let mut it = x.into_iter();
        for i in 0..table.len() {
            values.push(if i == zero {
                Rational::zero()
            } else {
                it.next().expect("one variable per nonzero element")
            });
        }
        GeneralizedState::from_values_unchecked(values)
    }))
}

/// A generalized state with `s(a) - s(b) = 1`, or `None` if every state has
/// `s(a) <= s(b)`.
///
/// Contract: `a` must not be below `b` (for `a <= b` additivity forces
/// `s(a) <= s(b)` on every state).
pub fn find_order_witness(gea: &Gea, a: usize, b: usize) -> Result<Option<GeneralizedState>> {
    gea.table().check_index(a)?;
    gea.table().check_index(b)?;
    if gea.order().leq(a, b) {
        return Err(Error::Contract(format!(
            "{} <= {}: no state can order them the other way",
            gea.label(a),
            gea.label(b)
        )));
    }
    solve_witness(gea.table(), a, b)
}

/// A generalized state with `s(a) != s(b)`, trying `s(a) - s(b) = 1` first and
/// then `s(b) - s(a) = 1`. `None` means every state agrees on `a` and `b`.
pub fn find_separating_state(gea: &Gea, a: usize, b: usize) -> Result<Option<GeneralizedState>> {
    gea.table().check_index(a)?;
    gea.table().check_index(b)?;
    if a == b {
        return Err(Error::Contract("separating an element from itself".into()));
    }
    if let Some(s) = solve_witness(gea.table(), a, b)? {
        return Ok(Some(s));
    }
    solve_witness(gea.table(), b, a)
}

/// Per-pair witness search. Pairs are visited in lexicographic order; a pair
/// already witnessed by an earlier state reuses it, otherwise a new state is
/// solved for.
fn collect(
    gea: &Gea,
    goal: WitnessGoal,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> std::result::Result<StateWitnessSet, WitnessFailure> {
    let mut set = StateWitnessSet::new(goal);
    let mut failures = Vec::new();
    for (a, b) in pairs {
        if let Some(idx) = set.witness_for(a, b) {
            set.provenance.insert((a, b), idx);
            continue;
        }
        let found = match goal {
            WitnessGoal::Separate => find_separating_state(gea, a, b),
            WitnessGoal::Order => find_order_witness(gea, a, b),
        }
        .expect("pairs satisfy the solver contract");
        match found {
            Some(s) => set.record((a, b), s),
            None => failures.push((a, b)),
        }
    }
    if failures.is_empty() {
        Ok(set)
    } else {
        Err(WitnessFailure {
            failures,
            partial: set,
        })
    }
}

/// An order-determining set: one witness `s(a) > s(b)` for every pair with
/// `a` not below `b`.
pub fn order_determining_set(gea: &Gea) -> std::result::Result<StateWitnessSet, WitnessFailure> {
    let pairs: Vec<_> = gea.order().non_leq_pairs().collect();
    collect(gea, WitnessGoal::Order, pairs.into_iter())
}

/// A set of generalized states separating every pair of distinct elements.
pub fn separating_set(gea: &Gea) -> std::result::Result<StateWitnessSet, WitnessFailure> {
    let n = gea.len();
    let pairs = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
    collect(gea, WitnessGoal::Separate, pairs)
}

pub fn witness_set(gea: &Gea, goal: WitnessGoal) -> std::result::Result<StateWitnessSet, WitnessFailure> {
    match goal {
        WitnessGoal::Separate => separating_set(gea),
        WitnessGoal::Order => order_determining_set(gea),
    }
}

/// `y -> g(y) / g(1)`.
pub fn normalize_state(g: &GeneralizedState, table: &AlgebraTable) -> Result<GeneralizedState> {
    let unit = table.unit().ok_or(Error::MissingUnit)?;
    if g.len() != table.len() {
        return Err(Error::LengthMismatch {
            expected: table.len(),
            found: g.len(),
        });
    }
    let at_unit = g.value(unit).clone();
    if at_unit.is_zero() {
        return Err(Error::TrivialOnUnit);
    }
    Ok(GeneralizedState {
        values: g.values.iter().map(|v| v / &at_unit).collect(),
    })
}

/// `max_s s(a)` over a finite nonempty witness set: the least bound `c_a`.
pub fn bound_constant(a: usize, set: &StateWitnessSet) -> Result<Rational> {
    if set.is_empty() {
        return Err(Error::EmptyWitnessSet);
    }
    if let Some(s) = set.states.iter().find(|s| a >= s.len()) {
        return Err(Error::IndexOutOfRange { index: a, len: s.len() });
    }
    Ok(rational::max_of(set.states.iter().map(|s| s.value(a))).expect("nonempty"))
}
