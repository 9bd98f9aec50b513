//! Exact feasibility for `A x = b, x >= 0` over the rationals.
//!
//! Phase-one primal simplex on a dense tableau: one artificial variable per
//! row, minimise their sum, Bland's rule for both the entering column and
//! ratio-test ties. The system is feasible iff the phase-one optimum is zero.

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// Equality-constrained program over nonnegative variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Adds `coeffs . x = rhs`.
    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                found: coeffs.len(),
            });
        }
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// True iff `x` has the right length, is nonnegative and satisfies every row exactly.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.rows.iter().zip(&self.rhs).all(|(row, b)| {
                let lhs: Rational = row.iter().zip(x).map(|(a, v)| a * v).sum();
                lhs == *b
            })
    }
}

struct Tableau {
    /// `m` rows of `num_vars + m` coefficients followed by the rhs.
    cells: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-one objective, followed by minus its value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    num_vars: usize,
}

impl Tableau {
    fn new(program: &LinearProgram) -> Self {
        let m = program.num_rows();
        let n = program.num_vars;
        let width = n + m + 1;
        let mut cells = Vec::with_capacity(m);
        for (i, (row, b)) in program.rows.iter().zip(&program.rhs).enumerate() {
            let flip = b.is_negative();
            let mut line = vec![Rational::zero(); width];
            for (j, a) in row.iter().enumerate() {
                line[j] = if flip { -a } else { a.clone() };
            }
            line[n + i] = Rational::from_integer(1.into());
            line[width - 1] = if flip { -b } else { b.clone() };
            cells.push(line);
        }
        // c_j - c_B B^-1 A_j with c = 1 on artificials and B = I.
        let mut cost = vec![Rational::zero(); width];
        for line in &cells {
            for j in 0..n {
                cost[j] -= &line[j];
            }
            cost[width - 1] -= &line[width - 1];
        }
        Self {
            cells,
            cost,
            basis: (n..n + m).collect(),
            num_vars: n,
        }
    }

    fn rhs_col(&self) -> usize {
        self.cost.len() - 1
    }

    /// Smallest-index original column with negative reduced cost.
    fn entering(&self) -> Option<usize> {
        (0..self.num_vars).find(|&j| self.cost[j].is_negative())
    }

    /// Minimum-ratio row; ties go to the row whose basic variable has the smallest index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.rhs_col();
        let mut best: Option<(usize, Rational)> = None;
        for (i, line) in self.cells.iter().enumerate() {
            if !line[col].is_positive() {
                continue;
            }
            let ratio = &line[rhs] / &line[col];
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.cells[row][col].clone();
        for v in self.cells[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.cells[row].clone();
        for (i, line) in self.cells.iter_mut().enumerate() {
            if i == row || line[col].is_zero() {
                continue;
            }
            let factor = line[col].clone();
            for (v, pv) in line.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    fn solve(mut self) -> Option<Vec<Rational>> {
        while let Some(col) = self.entering() {
            // Phase one is bounded below by zero, so a leaving row always exists.
            let row = self.leaving(col).expect("phase-one objective is bounded");
            self.pivot(row, col);
        }
        let rhs = self.rhs_col();
        if !self.cost[rhs].is_zero() {
            return None;
        }
        let mut x = vec![Rational::zero(); self.num_vars];
        for (line, &b) in self.cells.iter().zip(&self.basis) {
            if b < self.num_vars {
                x[b] = line[rhs].clone();
            }
        }
        Some(x)
    }
}

/// Returns an exact feasible point of `program`, or `None` if there is none.
pub fn lp_feasible(program: &LinearProgram) -> Option<Vec<Rational>> {
    let x = Tableau::new(program).solve()?;
    debug_assert!(program.is_feasible_point(&x));
    Some(x)
}
