//! Finite generalized effect algebras and their realization in positive
//! operators.
//!
//! The pipeline is:
//!
//! 1. [`AlgebraTable`] holds a finite partial algebra as an explicit sum table.
//! 2. [`axioms`] checks the generalized-effect-algebra (and effect-algebra)
//!    axioms, and [`Gea`] packages a checked table with its induced order.
//! 3. [`states`] finds generalized states (additive maps into the nonnegative
//!    rationals) that separate points or determine the order, by solving exact
//!    rational linear programs ([`lp`]).
//! 4. [`representation`] turns a finite witness set into the diagonal operator
//!    map `a -> diag(s(a))` and verifies it is an injective or order reflecting
//!    morphism into positive operators.
//!
//! [`effects`] provides the concrete finite-dimensional model: Hermitian
//! matrices on `C^d`, positivity, the partial effect sum and vector states.

pub mod algebra;
pub mod axioms;
pub mod effects;
mod error;
pub mod io;
pub mod lp;
pub mod morphism;
pub mod order;
pub mod random;
pub mod rational;
pub mod representation;
pub mod states;

pub use algebra::AlgebraTable;
pub use axioms::{check_ea_axioms, check_gea_axioms, AlgebraKind, Axiom, AxiomReport, Violation};
pub use error::{Error, Result};
pub use morphism::{classify_morphism, MorphismClass, MorphismSpec};
pub use order::{induced_order, is_sub_gea, Gea, OrderRelation, SubGeaViolation};
pub use rational::Rational;
pub use representation::{build_representation, DiagonalRep, FiniteVector};
pub use states::{GeneralizedState, StateWitnessSet, WitnessFailure, WitnessGoal};

/// Outcome of a yes/no property check that carries a counterexample when the
/// property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}
