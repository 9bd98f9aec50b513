//! JSON file formats.
//!
//! * algebra: `{ "elements": [..], "zero": l, "unit": l?, "sums": [[x, y, z], ..] }`
//! * morphism: `{ "source": path, "target": path, "map": { l: l, .. } }`
//! * witness set: `{ "goal", "states": [["p/q", ..], ..], "provenance": {"a,b": i}, "failures": [[a, b], ..] }`
//! * representation: `{ "witnesses", "order", "operators": {l: ["p/q", ..]}, "verification": {..} }`
//!
//! Matrix files are handled by [`crate::effects::MatrixFile`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::morphism::MorphismSpec;
use crate::rational::{self, Rational};
use crate::representation::{DiagonalRep, Verification};
use crate::states::{GeneralizedState, StateWitnessSet, WitnessFailure, WitnessGoal};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub elements: Vec<String>,
    pub zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub sums: Vec<[String; 3]>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraTable> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.to_table()
    }

    pub fn to_table(&self) -> Result<AlgebraTable> {
        let sums: Vec<(&str, &str, &str)> = self
            .sums
            .iter()
            .map(|[x, y, z]| (x.as_str(), y.as_str(), z.as_str()))
            .collect();
        AlgebraTable::from_labels(&self.elements, &self.zero, self.unit.as_deref(), &sums)
    }

    pub fn from_table(table: &AlgebraTable) -> Self {
        let l = |i: usize| table.label(i).to_string();
        Self {
            elements: table.labels().to_vec(),
            zero: l(table.zero()),
            unit: table.unit().map(l),
            sums: table.sums().map(|(x, y, z)| [l(x), l(y), l(z)]).collect(),
        }
    }

    pub fn to_json(table: &AlgebraTable) -> String {
        serde_json::to_string_pretty(&Self::from_table(table)).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: String,
    pub target: String,
    pub map: BTreeMap<String, String>,
}

impl MorphismFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Resolves the label map against already loaded source and target tables.
    pub fn to_spec(&self, source: AlgebraTable, target: AlgebraTable) -> Result<MorphismSpec> {
        let mut map = Vec::with_capacity(source.len());
        for label in source.labels() {
            let image = self
                .map
                .get(label)
                .ok_or_else(|| Error::Contract(format!("map is not total: `{label}` has no image")))?;
            map.push(target.index_of(image)?);
        }
        for key in self.map.keys() {
            source.index_of(key)?;
        }
        MorphismSpec::new(source, target, map)
    }
}

fn pair_key(table: &AlgebraTable, (a, b): (usize, usize)) -> String {
    format!("{},{}", table.label(a), table.label(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSetFile {
    pub goal: WitnessGoal,
    pub states: Vec<Vec<String>>,
    pub provenance: BTreeMap<String, usize>,
    pub failures: Vec<[String; 2]>,
}

impl WitnessSetFile {
    pub fn from_set(table: &AlgebraTable, set: &StateWitnessSet) -> Self {
        Self {
            goal: set.goal,
            states: set.states.iter().map(GeneralizedState::to_pq).collect(),
            provenance: set
                .provenance
                .iter()
                .map(|(&pair, &i)| (pair_key(table, pair), i))
                .collect(),
            failures: Vec::new(),
        }
    }

    pub fn from_outcome(
        table: &AlgebraTable,
        outcome: &std::result::Result<StateWitnessSet, WitnessFailure>,
    ) -> Self {
        match outcome {
            Ok(set) => Self::from_set(table, set),
            Err(failure) => {
                let mut file = Self::from_set(table, &failure.partial);
                file.failures = failure
                    .failures
                    .iter()
                    .map(|&(a, b)| [table.label(a).to_string(), table.label(b).to_string()])
                    .collect();
                file
            }
        }
    }

    /// Reads the states back, validating each against `table`.
    pub fn to_set(&self, table: &AlgebraTable) -> Result<StateWitnessSet> {
        let states = self
            .states
            .iter()
            .map(|row| {
                let values = row.iter().map(|v| rational::parse_pq(v)).collect::<Result<Vec<Rational>>>()?;
                GeneralizedState::new(table, values)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut provenance = BTreeMap::new();
        for (key, &i) in &self.provenance {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::Contract(format!("bad provenance key `{key}`")))?;
            if i >= states.len() {
                return Err(Error::IndexOutOfRange { index: i, len: states.len() });
            }
            provenance.insert((table.index_of(a)?, table.index_of(b)?), i);
        }
        Ok(StateWitnessSet {
            goal: self.goal,
            states,
            provenance,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationFile {
    pub morphism: bool,
    pub injective: bool,
    pub order_reflecting: bool,
    pub bounds: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub witnesses: usize,
    pub order: Vec<String>,
    pub operators: BTreeMap<String, Vec<String>>,
    pub verification: VerificationFile,
}

impl RepresentationFile {
    pub fn new(table: &AlgebraTable, rep: &DiagonalRep, verification: &Verification) -> Self {
        Self {
            witnesses: rep.dim(),
            order: rep.witness_order().to_vec(),
            operators: (0..rep.num_elements())
                .map(|a| {
                    (
                        table.label(a).to_string(),
                        rep.operator(a).iter().map(rational::to_pq).collect(),
                    )
                })
                .collect(),
            verification: VerificationFile {
                morphism: verification.morphism,
                injective: verification.injective,
                order_reflecting: verification.order_reflecting,
                bounds: verification
                    .bounds
                    .iter()
                    .enumerate()
                    .map(|(a, c)| (table.label(a).to_string(), rational::to_pq(c)))
                    .collect(),
            },
        }
    }
}
