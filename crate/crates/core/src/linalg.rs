//! Dense complex matrix arithmetic and decompositions.
//!
//! Everything here is sized for small dense problems (dimension up to a few
//! dozen): a cyclic Jacobi eigensolver for Hermitian matrices and a singular
//! value / polar decomposition built on top of it. All functions are pure and
//! deterministic: identical inputs produce bit-identical outputs, which the
//! test suite relies on.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Relative Frobenius tolerance accepted by [`hermitian_eigensystem`] before
/// it declares the input non-Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-9;

/// Convergence threshold factor: the sweep loop stops once the off-diagonal
/// Frobenius mass drops below `1e-14 * ||H||_F`.
const OFF_DIAGONAL_FACTOR: f64 = 1e-14;

/// Hard cap on Jacobi sweeps.
const MAX_SWEEPS: usize = 100;

/// Singular values at or below this threshold are treated as exact zeros and
/// their left singular vectors recovered by orthonormal completion.
const SINGULAR_VALUE_CUTOFF: f64 = 1e-12;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting inconsistent shapes
    /// and non-finite numbers.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from nested row slices.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Square matrix with the given real entries on the diagonal.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn square_side(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Sum of diagonal entries; fails on rectangular input.
    pub fn trace(&self) -> Result<Complex64> {
        let n = self.square_side()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * v[j])
                    .sum::<Complex64>()
            })
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise absolute difference; panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `||A - A^dagger||_F / ||A||_F`, or 0 for the zero matrix.
    pub fn hermiticity_deviation(&self) -> f64 {
        let norm = self.frobenius_norm();
        if norm == 0.0 {
            return 0.0;
        }
        (self - &self.adjoint()).frobenius_norm() / norm
    }

    fn column(&self, col: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    fn set_column(&mut self, col: usize, v: &[Complex64]) {
        for (i, &z) in v.iter().enumerate() {
            self.set(i, col, z);
        }
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + aik * rhs.get(k, j));
                }
            }
        }
        out
    }
}

/// Full eigensystem of a Hermitian matrix.
///
/// Eigenvalues are sorted descending; `eigenvectors` holds the matching
/// unit-norm eigenvectors as columns. Each column's phase is fixed so that
/// its largest-magnitude component is real and positive, making the output
/// reproducible.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

/// Factors of `A = left * diag * right` with `left`, `right` unitary and
/// `diag` the singular values of `A` in descending order.
#[derive(Debug, Clone)]
pub struct PolarFactors {
    pub left: ComplexMatrix,
    pub diag: Vec<f64>,
    pub right: ComplexMatrix,
}

impl PolarFactors {
    /// Rebuilds `left * diag * right`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        &(&self.left * &ComplexMatrix::from_diagonal(&self.diag)) * &self.right
    }
}

/// Diagonalizes a Hermitian matrix with cyclic Jacobi rotations.
///
/// Convergence is declared when the off-diagonal Frobenius mass falls below
/// `1e-14 * ||H||_F`; the sweep cap is 100.
pub fn hermitian_eigensystem(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = h.square_side()?;
    let deviation = h.hermiticity_deviation();
    if deviation > HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let norm = h.frobenius_norm();
    let target = OFF_DIAGONAL_FACTOR * norm;
    let mut a = h.clone();
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let raw: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps the rotation-order basis for degenerate eigenvalues
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut col = v.column(src);
        fix_phase(&mut col);
        eigenvectors.set_column(dst, &col);
    }

    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a.get(i, j).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One complex Jacobi rotation zeroing the (p, q) element of `a` while
/// accumulating the transform into `v`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a.get(p, q);
    let abs = apq.norm();
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    // elements already at the round-off floor relative to the diagonal are
    // flushed to zero instead of rotated
    if abs <= 0.5 * f64::EPSILON * (app.abs() + aqq.abs()) {
        a.set(p, q, Complex64::ZERO);
        a.set(q, p, Complex64::ZERO);
        return;
    }

    let phase = apq / abs;
    let zeta = (app - aqq) / (2.0 * abs);
    let t = if zeta == 0.0 {
        1.0
    } else {
        zeta.signum() / (zeta.abs() + (zeta * zeta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let su = s * phase;
    let su_conj = s * phase.conj();

    // right multiplication by the rotation (columns p, q)
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, c * aip + su_conj * aiq);
        a.set(i, q, -su * aip + c * aiq);
    }
    // left multiplication by its adjoint (rows p, q)
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, c * apj + su * aqj);
        a.set(q, j, -su_conj * apj + c * aqj);
    }
    // accumulate eigenvectors
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, c * vip + su_conj * viq);
        v.set(i, q, -su * vip + c * viq);
    }
}

/// Rotates a unit vector so its largest-magnitude component is real positive.
fn fix_phase(col: &mut [Complex64]) {
    let mut best = 0usize;
    let mut best_norm = 0.0;
    for (i, z) in col.iter().enumerate() {
        let n = z.norm();
        if n > best_norm {
            best_norm = n;
            best = i;
        }
    }
    if best_norm == 0.0 {
        return;
    }
    let phase = col[best] / best_norm;
    let correction = phase.conj();
    for z in col.iter_mut() {
        *z *= correction;
    }
}

/// Polar / singular value decomposition `A = left * diag * right`.
///
/// Built from the eigensystem of `A^dagger A`: the right factor comes from its
/// eigenvectors, the left columns from `A w / sigma`, with rank-deficient
/// columns (singular value below 1e-12) filled in by orthonormal completion.
pub fn polar_decompose(a: &ComplexMatrix) -> Result<PolarFactors> {
    let n = a.square_side()?;
    let mut gram = &a.adjoint() * a;
    // symmetrize to keep the eigensolver precondition independent of the
    // rounding in the product
    let gram_adj = gram.adjoint();
    gram = (&gram + &gram_adj).scale(Complex64::new(0.5, 0.0));

    let eigen = hermitian_eigensystem(&gram)?;
    let mut diag: Vec<f64> = eigen
        .eigenvalues
        .iter()
        .map(|&lambda| if lambda > 0.0 { lambda.sqrt() } else { 0.0 })
        .collect();

    let mut left = ComplexMatrix::zeros(n, n);
    let mut have_column = vec![false; n];
    for k in 0..n {
        if diag[k] > SINGULAR_VALUE_CUTOFF {
            let w = eigen.eigenvectors.column(k);
            let mut col = a.mul_vec(&w);
            let inv = 1.0 / diag[k];
            for z in col.iter_mut() {
                *z *= inv;
            }
            orthogonalize_against(&mut col, &left, &have_column);
            normalize(&mut col);
            left.set_column(k, &col);
            have_column[k] = true;
        } else {
            diag[k] = 0.0;
        }
    }
    for k in 0..n {
        if !have_column[k] {
            let col = completion_column(&left, &have_column, n);
            left.set_column(k, &col);
            have_column[k] = true;
        }
    }

    Ok(PolarFactors {
        left,
        diag,
        right: eigen.eigenvectors.adjoint(),
    })
}

fn orthogonalize_against(col: &mut [Complex64], basis: &ComplexMatrix, have: &[bool]) {
    // two passes of modified Gram-Schmidt
    for _ in 0..2 {
        for (j, &present) in have.iter().enumerate() {
            if !present {
                continue;
            }
            let overlap: Complex64 = (0..col.len())
                .map(|i| basis.get(i, j).conj() * col[i])
                .sum();
            for (i, z) in col.iter_mut().enumerate() {
                *z -= overlap * basis.get(i, j);
            }
        }
    }
}

fn normalize(col: &mut [Complex64]) {
    let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        let inv = 1.0 / norm;
        for z in col.iter_mut() {
            *z *= inv;
        }
    }
}

/// Picks the standard basis vector with the largest residual after projecting
/// out the existing columns, orthonormalized.
fn completion_column(basis: &ComplexMatrix, have: &[bool], n: usize) -> Vec<Complex64> {
    let mut best: Option<Vec<Complex64>> = None;
    let mut best_norm = -1.0;
    for k in 0..n {
        let mut cand = vec![Complex64::ZERO; n];
        cand[k] = Complex64::ONE;
        orthogonalize_against(&mut cand, basis, have);
        let norm = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > best_norm {
            best_norm = norm;
            best = Some(cand);
        }
    }
    let mut col = best.expect("n > 0");
    normalize(&mut col);
    col
}

/// Largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    let factors = polar_decompose(a)?;
    Ok(factors.diag.first().copied().unwrap_or(0.0))
}
