//! Maps between finite generalized effect algebras.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::order::{is_sub_gea, Gea, SubGeaViolation};
use crate::{Error, Result};

/// A total map from source element indices to target element indices.
#[derive(Debug, Clone)]
pub struct MorphismSpec {
    pub source: AlgebraTable,
    pub target: AlgebraTable,
    pub map: Vec<usize>,
}

impl MorphismSpec {
    pub fn new(source: AlgebraTable, target: AlgebraTable, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::LengthMismatch {
                expected: source.len(),
                found: map.len(),
            });
        }
        for &j in &map {
            target.check_index(j)?;
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(table: AlgebraTable) -> Self {
        let map = (0..table.len()).collect();
        Self {
            source: table.clone(),
            target: table,
            map,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub is_morphism: bool,
    pub injective: bool,
    pub order_reflecting: bool,
    pub embedding: bool,
    /// Whether the image is a sub-generalized effect algebra of the target.
    pub image_is_sub_gea: bool,
    /// Whether `f(a) + f(b)` defined in the target forces `a + b` defined in the source.
    pub reflects_sums: bool,
    /// A defined source sum `(a, b, a + b)` that is not preserved.
    pub additivity_failure: Option<(usize, usize, usize)>,
    /// Two distinct source elements with the same image.
    pub collision: Option<(usize, usize)>,
    /// `(a, b)` with `f(a) <= f(b)` but `a` not below `b`.
    pub unreflected_pair: Option<(usize, usize)>,
    pub sub_gea_violation: Option<SubGeaViolation>,
    /// `(a, b)` with `f(a) + f(b)` defined but `a + b` undefined.
    pub unreflected_sum: Option<(usize, usize)>,
}

impl MorphismClass {
    /// `embedding => order_reflecting => injective`.
    pub fn chain_holds(&self) -> bool {
        (!self.embedding || self.order_reflecting) && (!self.order_reflecting || self.injective)
    }
}

/// Classifies a map between two generalized effect algebras.
///
/// `embedding` requires an injective morphism whose image is a sub-GEA and
/// which reflects definedness of sums, so that the source is isomorphic to the
/// image. Without the last condition an injective morphism onto a sub-GEA can
/// fail to reflect the order (the identity from an algebra with only trivial
/// sums onto the same carrier with `a + b = c` is one), so both literal
/// conditions are also reported on their own.
pub fn classify_morphism(spec: &MorphismSpec) -> Result<MorphismClass> {
    if spec.map.len() != spec.source.len() {
        return Err(Error::LengthMismatch {
            expected: spec.source.len(),
            found: spec.map.len(),
        });
    }
    for &j in &spec.map {
        spec.target.check_index(j)?;
    }
    let source = Gea::new(spec.source.clone())?;
    let target = Gea::new(spec.target.clone())?;
    let f = &spec.map;
    let n = source.len();

    let additivity_failure = source
        .table()
        .sums()
        .find(|&(a, b, c)| spec.target.sum(f[a], f[b]) != Some(f[c]));

    let collision = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .find(|&(a, b)| f[a] == f[b]);

    let unreflected_pair = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| target.order().leq(f[a], f[b]) && !source.order().leq(a, b));

    let unreflected_sum = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| spec.target.sum(f[a], f[b]).is_some() && spec.source.sum(a, b).is_none());

    let image: BTreeSet<usize> = f.iter().copied().collect();
    let sub = is_sub_gea(&spec.target, &image)?;

    let is_morphism = additivity_failure.is_none();
    let injective = collision.is_none();
    let order_reflecting = unreflected_pair.is_none();
    let image_is_sub_gea = sub.holds();
    let reflects_sums = unreflected_sum.is_none();
    let class = MorphismClass {
        is_morphism,
        injective,
        order_reflecting,
        embedding: is_morphism && injective && image_is_sub_gea && reflects_sums,
        image_is_sub_gea,
        reflects_sums,
        additivity_failure,
        collision,
        unreflected_pair,
        sub_gea_violation: sub.counterexample().copied(),
        unreflected_sum,
    };
    debug_assert!(class.chain_holds(), "{class:?}");
    Ok(class)
}
