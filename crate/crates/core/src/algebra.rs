//! Finite partial algebras given by an explicit sum table.

use std::collections::{BTreeMap, HashMap};

use crate::{Error, Result};

/// A finite partial algebra `(E; +, 0[, 1])`.
///
/// Elements are identified by index; labels are only used for display and
/// file I/O. The sum table is a partial function `(i, j) -> k` meaning
/// `x_i + x_j = x_k`. Entries are stored exactly as given: `(j, i)` is *not*
/// filled in from `(i, j)`, so a one-sided table shows up as a commutativity
/// violation when the axioms are checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTable {
    labels: Vec<String>,
    zero: usize,
    unit: Option<usize>,
    sums: BTreeMap<(usize, usize), usize>,
}

impl AlgebraTable {
    pub fn new(
        labels: Vec<String>,
        zero: usize,
        unit: Option<usize>,
        sums: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let mut seen = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if seen.insert(label.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let check = |index: usize| {
            if index < n {
                Ok(index)
            } else {
                Err(Error::IndexOutOfRange { index, len: n })
            }
        };
        check(zero)?;
        if let Some(u) = unit {
            check(u)?;
            if u == zero && n > 1 {
                return Err(Error::UnitIsZero);
            }
        }
        let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, j, k) in sums {
            check(i)?;
            check(j)?;
            check(k)?;
            if let Some(&prev) = table.get(&(i, j)) {
                if prev != k {
                    return Err(Error::ConflictingSum {
                        x: labels[i].clone(),
                        y: labels[j].clone(),
                        first: labels[prev].clone(),
                        second: labels[k].clone(),
                    });
                }
            }
            table.insert((i, j), k);
        }
        Ok(Self {
            labels,
            zero,
            unit,
            sums: table,
        })
    }

    /// Builds a table from labels, using labels for zero, unit and sums.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(
        labels: &[S],
        zero: &str,
        unit: Option<&str>,
        sums: &[(T, T, T)],
    ) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let zero = find(zero)?;
        let unit = unit.map(find).transpose()?;
        let sums = sums
            .iter()
            .map(|(x, y, z)| Ok((find(x.as_ref())?, find(y.as_ref())?, find(z.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, zero, unit, sums)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `x_i + x_j`, if defined.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums.get(&(i, j)).copied()
    }

    /// All defined sums as `(i, j, k)` with `x_i + x_j = x_k`, in lexicographic order.
    pub fn sums(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.sums.iter().map(|(&(i, j), &k)| (i, j, k))
    }

    pub fn num_sums(&self) -> usize {
        self.sums.len()
    }

    /// Same table with the unit forgotten.
    pub fn without_unit(&self) -> Self {
        Self {
            unit: None,
            ..self.clone()
        }
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            })
        }
    }
}
