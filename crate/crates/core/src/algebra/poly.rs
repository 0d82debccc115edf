use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

/// Polynomial with non-negative integer coefficients and a saturating
/// exponent cap: any term of degree above `cap` is accumulated at `x^cap`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedPoly {
    coeffs: Vec<u64>,
}

impl TruncatedPoly {
    pub fn zero(cap: usize) -> Self {
        Self { coeffs: vec![0; cap + 1] }
    }

    /// `x^min(e, cap)`.
    pub fn mono(exponent: usize, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[exponent.min(cap)] = 1;
        p
    }

    /// Builds from a coefficient list, folding indices beyond `cap` into `cap`.
    pub fn from_coeffs(coeffs: &[u64], cap: usize) -> Result<Self> {
        let mut p = Self::zero(cap);
        for (e, &c) in coeffs.iter().enumerate() {
            let slot = &mut p.coeffs[e.min(cap)];
            *slot = slot.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        }
        Ok(p)
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: usize) -> u64 {
        self.coeffs.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Smallest exponent with a non-zero coefficient; `None` stands for the
    /// `+inf` of the zero polynomial.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_caps(self.cap(), other.cap())?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::CoefficientOverflow))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Product with saturating exponents and overflow-checked coefficients.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_caps(self.cap(), other.cap())?;
        let cap = self.cap();
        let mut out = Self::zero(cap);
        for (a, &ca) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (b, &cb) in other.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
                let term = ca.checked_mul(cb).ok_or(Error::CoefficientOverflow)?;
                let slot = &mut out.coeffs[(a + b).min(cap)];
                *slot = slot.checked_add(term).ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(out)
    }
}

fn check_caps(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("polynomial caps differ: {a} vs {b}")))
    }
}

/// Dense matrix of [`TruncatedPoly`] entries sharing one cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    cap: usize,
    // rows * cols * (cap + 1) coefficients, entry-major.
    data: Vec<u64>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, cap: usize) -> Self {
        Self { rows, cols, cap, data: vec![0; rows * cols * (cap + 1)] }
    }

    pub fn identity(size: usize, cap: usize) -> Self {
        let mut m = Self::zeros(size, size, cap);
        for i in 0..size {
            m.set_mono(i, i, 0);
        }
        m
    }

    /// Matrix whose `(i, j)` entry is the monomial `x^exponent(i, j)`
    /// (saturated at `cap`).
    pub fn from_monomials<F>(rows: usize, cols: usize, cap: usize, mut exponent: F) -> Self
    where
        F: FnMut(usize, usize) -> usize,
    {
        let mut m = Self::zeros(rows, cols, cap);
        for i in 0..rows {
            for j in 0..cols {
                m.set_mono(i, j, exponent(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        (i * self.cols + j) * (self.cap + 1)
    }

    /// Coefficients of entry `(i, j)`.
    pub fn coeffs(&self, i: usize, j: usize) -> &[u64] {
        let o = self.offset(i, j);
        &self.data[o..o + self.cap + 1]
    }

    pub fn get(&self, i: usize, j: usize) -> TruncatedPoly {
        TruncatedPoly { coeffs: self.coeffs(i, j).to_vec() }
    }

    pub fn set(&mut self, i: usize, j: usize, p: &TruncatedPoly) -> Result<()> {
        check_caps(self.cap, p.cap())?;
        let o = self.offset(i, j);
        self.data[o..o + self.cap + 1].copy_from_slice(&p.coeffs);
        Ok(())
    }

    pub fn set_mono(&mut self, i: usize, j: usize, exponent: usize) {
        let o = self.offset(i, j);
        let cap = self.cap;
        self.data[o..o + cap + 1].fill(0);
        self.data[o + exponent.min(cap)] = 1;
    }

    /// Minimum degree of entry `(i, j)`; `None` for a zero entry.
    pub fn min_degree(&self, i: usize, j: usize) -> Option<usize> {
        self.coeffs(i, j).iter().position(|&c| c != 0)
    }

    /// `self * other`; row stripes are evaluated in parallel when enabled.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul_counted(other).map(|(m, _)| m)
    }

    /// Like [`PolyMatrix::mul`], also returning the number of coefficient
    /// multiply-adds performed.
    pub fn mul_counted(&self, other: &PolyMatrix) -> Result<(PolyMatrix, u64)> {
        let plan = self.plan(other)?;
        let rows = par::map_indices(self.rows, |i| plan.row(self, i));
        plan.assemble(rows)
    }

    /// Single-threaded product; same output as [`PolyMatrix::mul`].
    pub fn mul_sequential(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let plan = self.plan(other)?;
        let rows = par::map_indices_sequential(self.rows, |i| plan.row(self, i));
        plan.assemble(rows).map(|(m, _)| m)
    }

    fn plan<'a>(&self, other: &'a PolyMatrix) -> Result<ProductPlan<'a>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        check_caps(self.cap, other.cap)?;
        // Sparse view of the right factor: per row, the non-zero terms.
        let terms = (0..other.rows)
            .map(|t| {
                let mut row = Vec::new();
                for j in 0..other.cols {
                    for (e, &c) in other.coeffs(t, j).iter().enumerate() {
                        if c != 0 {
                            row.push(Term { col: j, exponent: e, coeff: c });
                        }
                    }
                }
                row
            })
            .collect();
        Ok(ProductPlan { right: other, terms })
    }
}

struct Term {
    col: usize,
    exponent: usize,
    coeff: u64,
}

struct ProductPlan<'a> {
    right: &'a PolyMatrix,
    terms: Vec<Vec<Term>>,
}

impl ProductPlan<'_> {
    fn row(&self, left: &PolyMatrix, i: usize) -> Result<(Vec<u64>, u64)> {
        let cap = left.cap;
        let width = cap + 1;
        let mut out = vec![0u64; self.right.cols * width];
        let mut ops = 0u64;
        for t in 0..left.cols {
            let entry = left.coeffs(i, t);
            for (a, &ca) in entry.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for term in &self.terms[t] {
                    let prod = ca.checked_mul(term.coeff).ok_or(Error::CoefficientOverflow)?;
                    let slot = &mut out[term.col * width + (a + term.exponent).min(cap)];
                    *slot = slot.checked_add(prod).ok_or(Error::CoefficientOverflow)?;
                    ops += 1;
                }
            }
        }
        Ok((out, ops))
    }

    fn assemble(&self, rows: Vec<Result<(Vec<u64>, u64)>>) -> Result<(PolyMatrix, u64)> {
        let mut data = Vec::with_capacity(rows.len() * self.right.cols * (self.right.cap + 1));
        let mut ops = 0u64;
        let n_rows = rows.len();
        for row in rows {
            let (coeffs, row_ops) = row?;
            data.extend_from_slice(&coeffs);
            ops += row_ops;
        }
        let m = PolyMatrix { rows: n_rows, cols: self.right.cols, cap: self.right.cap, data };
        Ok((m, ops))
    }
}

/// `a * b` over the saturating ring.
pub fn poly_mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    a.mul(b)
}
