//! Finite-dimensional operator models on `C^d`.
//!
//! Effects are Hermitian matrices between `0` and `I`; their partial sum is
//! defined when the ordinary sum stays below `I`. Positive matrices carry the
//! total ordinary sum. Floating-point checks use absolute tolerances
//! ([`DEFAULT_TOL`]) and assume matrices of spectral radius at most about 10.

mod jacobi;

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::morphism::{classify_morphism, MorphismClass, MorphismSpec};
use crate::order::{is_sub_gea, Gea, SubGeaViolation};
use crate::rational;
use crate::states::{GeneralizedState, StateWitnessSet, WitnessGoal};
use crate::{AxiomReport, Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_DEMO_DIM: usize = 8;

/// A Hermitian `d x d` complex matrix with its tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    pub hermitian_tol: f64,
    pub psd_tol: f64,
}

/// A vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    pub coords: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(coords: Vec<Complex64>) -> Self {
        Self { coords }
    }

    pub fn real(coords: &[f64]) -> Self {
        Self {
            coords: coords.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl EffectMatrix {
    /// Row-major entries; fails if the matrix is not Hermitian within [`DEFAULT_TOL`].
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerances(dim, entries, DEFAULT_TOL, DEFAULT_TOL)
    }

    pub fn with_tolerances(dim: usize, entries: Vec<Complex64>, hermitian_tol: f64, psd_tol: f64) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::MalformedMatrix(format!(
                "{} entries for dimension {dim}",
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::MalformedMatrix("non-finite entry".into()));
        }
        for i in 0..dim {
            for j in i..dim {
                let deviation = (entries[i * dim + j] - entries[j * dim + i].conj()).norm();
                if deviation > hermitian_tol {
                    return Err(Error::NotHermitian {
                        row: i,
                        col: j,
                        deviation,
                    });
                }
            }
        }
        Ok(Self {
            dim,
            entries,
            hermitian_tol,
            psd_tol,
        })
    }

    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn diag(values: &[f64]) -> Self {
        let d = values.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for (i, &v) in values.iter().enumerate() {
            entries[i * d + i] = Complex64::new(v, 0.0);
        }
        Self::new(d, entries).expect("diagonal real matrix is Hermitian")
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag(&vec![1.0; dim])
    }

    pub fn zero(dim: usize) -> Self {
        Self::diag(&vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        jacobi::hermitian_eigenvalues(&self.entries, self.dim)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues().last().expect("dim >= 1")
    }

    /// `0 <= A` within `psd_tol`.
    pub fn is_positive(&self) -> bool {
        self.min_eigenvalue() >= -self.psd_tol
    }

    /// `0 <= A <= I` within `psd_tol`.
    pub fn is_effect(&self) -> bool {
        let ev = self.eigenvalues();
        ev[0] >= -self.psd_tol && ev[ev.len() - 1] <= 1.0 + self.psd_tol
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.same_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect();
        Self::with_tolerances(self.dim, entries, self.hermitian_tol, self.psd_tol)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            entries: self.entries.iter().map(|&z| z * k).collect(),
            ..self.clone()
        }
    }

    pub fn apply(&self, x: &ComplexVector) -> Result<ComplexVector> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.dim()));
        }
        let d = self.dim;
        Ok(ComplexVector::new(
            (0..d)
                .map(|i| (0..d).map(|j| self.entries[i * d + j] * x.coords[j]).sum())
                .collect(),
        ))
    }

    /// Largest absolute entry difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }
}

/// `<x, A x>` with the inner product conjugate-linear in the first slot.
/// For Hermitian `A` the result is real; the imaginary rounding residue is dropped.
pub fn omega(x: &ComplexVector, a: &EffectMatrix) -> Result<f64> {
    let ax = a.apply(x)?;
    Ok(x.coords.iter().zip(&ax.coords).map(|(xi, yi)| xi.conj() * yi).sum::<Complex64>().re)
}

pub fn is_positive(a: &EffectMatrix) -> bool {
    a.is_positive()
}

/// The partial sum of effects: `Some(A + B)` iff `A + B <= I` (within `psd_tol`).
pub fn effect_sum(a: &EffectMatrix, b: &EffectMatrix) -> Result<Option<EffectMatrix>> {
    a.same_dim(b)?;
    for m in [a, b] {
        if !m.is_effect() {
            let ev = m.eigenvalues();
            return Err(Error::NotEffect(ev[0], ev[ev.len() - 1]));
        }
    }
    let s = a.add(b)?;
    Ok((s.max_eigenvalue() <= 1.0 + s.psd_tol).then_some(s))
}

/// The total sum of positive operators.
pub fn gdh_sum(a: &EffectMatrix, b: &EffectMatrix) -> Result<EffectMatrix> {
    a.same_dim(b)?;
    for m in [a, b] {
        if !m.is_positive() {
            return Err(Error::NotPositive(m.min_eigenvalue()));
        }
    }
    a.add(b)
}

/// A vector `x` with `<x, A x> > <x, B x>`, or `None` iff `A <= B`.
///
/// The witness is a unit eigenvector of `B - A` for its smallest eigenvalue.
pub fn vector_witness(a: &EffectMatrix, b: &EffectMatrix) -> Result<Option<ComplexVector>> {
    a.same_dim(b)?;
    for m in [a, b] {
        if !m.is_positive() {
            return Err(Error::NotPositive(m.min_eigenvalue()));
        }
    }
    let diff = b.sub(a)?;
    let (lambda, x) = jacobi::hermitian_min_eigenpair(diff.entries(), diff.dim());
    if lambda >= -diff.psd_tol {
        return Ok(None);
    }
    Ok(Some(ComplexVector::new(x)))
}

/// A random positive matrix `G G* / d` with entries of `G` uniform in the unit
/// square, scaled to spectral radius at most `radius`.
pub fn random_positive<R: Rng>(dim: usize, radius: f64, rng: &mut R) -> EffectMatrix {
    let g: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let v: Complex64 = (0..dim).map(|k| g[i * dim + k] * g[j * dim + k].conj()).sum();
            entries[i * dim + j] = v;
        }
    }
    // exact Hermitian symmetry before validation
    for i in 0..dim {
        entries[i * dim + i].im = 0.0;
        for j in (i + 1)..dim {
            entries[j * dim + i] = entries[i * dim + j].conj();
        }
    }
    let m = EffectMatrix::new(dim, entries).expect("G G* is Hermitian");
    let top = m.max_eigenvalue().max(f64::MIN_POSITIVE);
    let k = rng.random_range(0.0..radius) / top;
    m.scale(k)
}

/// Matrix file contents: `{ "dim": d, "re": [[..]], "im": [[..]] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<EffectMatrix> {
        let file: MatrixFile = serde_json::from_str(text)?;
        file.to_matrix()
    }

    pub fn to_matrix(&self) -> Result<EffectMatrix> {
        let d = self.dim;
        let shape_ok = |m: &Vec<Vec<f64>>| m.len() == d && m.iter().all(|r| r.len() == d);
        if !shape_ok(&self.re) || self.im.as_ref().is_some_and(|m| !shape_ok(m)) {
            return Err(Error::MalformedMatrix(format!("rows must be {d} x {d}")));
        }
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let im = self.im.as_ref().map_or(0.0, |m| m[i][j]);
                entries.push(Complex64::new(self.re[i][j], im));
            }
        }
        EffectMatrix::new(d, entries)
    }

    pub fn from_matrix(m: &EffectMatrix) -> Self {
        let d = m.dim();
        let re = (0..d).map(|i| (0..d).map(|j| m.entry(i, j).re).collect()).collect();
        let im = (0..d).map(|i| (0..d).map(|j| m.entry(i, j).im).collect()).collect();
        Self { dim: d, re, im: Some(im) }
    }
}

/// Outcome of reproducing the two-projection example on `C^2`.
#[derive(Debug, Clone, Serialize)]
pub struct ExcdReport {
    pub axioms: AxiomReport,
    /// The sub-algebra `{0, p1, p2}` with only trivial sums.
    #[serde(skip)]
    pub algebra: AlgebraTable,
    /// `{0, p1, p2, id}` with the sums of `E(C^2)` that land in the set.
    #[serde(skip)]
    pub target: AlgebraTable,
    pub target_sums: Vec<[String; 3]>,
    /// `omega_x(a)` for the vector states `x = (1, 0)` and `x = (0, 1)`.
    pub inner_products: Vec<VectorStateValues>,
    pub order_determining: bool,
    #[serde(skip)]
    pub vector_states: StateWitnessSet,
    pub classification: MorphismClass,
    pub sub_gea_violation: Option<[String; 3]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VectorStateValues {
    pub vector: [f64; 2],
    pub values: Vec<(String, f64)>,
}

/// Builds `E = {0, p1, p2}` from the coordinate projections on `C^2`, checks
/// it is a GEA ordered by the vector states at the basis vectors, and
/// classifies its inclusion into the four-element fragment of `E(C^2)`.
pub fn demo_excd() -> ExcdReport {
    let elements = [
        ("0", EffectMatrix::zero(2)),
        ("p1", EffectMatrix::diag(&[1.0, 0.0])),
        ("p2", EffectMatrix::diag(&[0.0, 1.0])),
        ("id", EffectMatrix::identity(2)),
    ];
    let labels: Vec<String> = elements.iter().map(|(l, _)| l.to_string()).collect();

    // Sums of E(C^2) restricted to the four elements.
    let mut target_sums = Vec::new();
    for (i, (_, a)) in elements.iter().enumerate() {
        for (j, (_, b)) in elements.iter().enumerate() {
            let Some(s) = effect_sum(a, b).expect("projections are effects") else { continue };
            if let Some(k) = elements.iter().position(|(_, m)| m.approx_eq(&s, DEFAULT_TOL)) {
                target_sums.push((i, j, k));
            }
        }
    }
    let target = AlgebraTable::new(labels.clone(), 0, Some(3), target_sums.iter().copied())
        .expect("fragment table is well formed");

    let e_sums: Vec<_> = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 2, 2), (2, 0, 2)].to_vec();
    let algebra =
        AlgebraTable::new(labels[..3].to_vec(), 0, None, e_sums).expect("three-element table is well formed");
    let axioms = crate::check_gea_axioms(&algebra);
    let gea = Gea::new(algebra.clone()).expect("E is a generalized effect algebra");

    let mut inner_products = Vec::new();
    let mut states = Vec::new();
    for basis in [[1.0, 0.0], [0.0, 1.0]] {
        let x = ComplexVector::real(&basis);
        let values: Vec<f64> = elements[..3]
            .iter()
            .map(|(_, m)| omega(&x, m).expect("dimension 2"))
            .collect();
        let exact = values
            .iter()
            .map(|&v| rational::from_f64(v).expect("finite"))
            .collect();
        states.push(GeneralizedState::new(&algebra, exact).expect("vector states are additive"));
        inner_products.push(VectorStateValues {
            vector: basis,
            values: labels[..3].iter().cloned().zip(values).collect(),
        });
    }
    let vector_states = StateWitnessSet::from_states(WitnessGoal::Order, states);
    let order_determining = vector_states.is_order_determining(&gea);

    let spec = MorphismSpec::new(algebra.clone(), target.clone(), vec![0, 1, 2]).expect("inclusion");
    let classification = classify_morphism(&spec).expect("both tables are GEAs");
    let image: BTreeSet<usize> = [0, 1, 2].into();
    let sub_gea_violation = match is_sub_gea(&target, &image).expect("indices in range").counterexample() {
        Some(&SubGeaViolation::Triple { x, y, z }) => {
            Some([labels[x].clone(), labels[y].clone(), labels[z].clone()])
        }
        _ => None,
    };

    ExcdReport {
        axioms,
        algebra,
        target_sums: target
            .sums()
            .map(|(i, j, k)| [labels[i].clone(), labels[j].clone(), labels[k].clone()])
            .collect(),
        target,
        inner_products,
        order_determining,
        vector_states,
        classification,
        sub_gea_violation,
    }
}
