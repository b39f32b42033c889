//! Dense exact matrices over a [`FieldSpec`], with the row-reduction
//! routines everything else is built on: rank, kernel, solving, inversion.
//!
//! Matrices are stored row-major; all arithmetic is exact, so ranks and
//! kernels are decided symbolically rather than numerically.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A dense `rows × cols` matrix over `field`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        let z = field.zero();
        Matrix {
            field,
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Build from explicit rows; all rows must have the same length and all
    /// entries must be canonical elements of `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: format!("{ncols} columns"),
                    found: format!("{} columns", row.len()),
                });
            }
            for e in row {
                if !field.contains(e) {
                    return Err(Error::FieldMismatch {
                        expected: field.to_string(),
                        found: format!("{e:?}"),
                    });
                }
                data.push(e.clone());
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field.clone(), self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.add(a, b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.sub(a, b);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.neg(a);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(a, c);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let f = &self.field;
        if let FieldSpec::Prime(p) = f {
            return self.mul_prime(other, *p);
        }
        let mut out = Matrix::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let v = f.add(cur, &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Multiplication specialised to `F_p`: residues are unpacked to `u64`
    /// once and accumulated in `u128`, avoiding per-entry enum dispatch.
    fn mul_prime(&self, other: &Matrix, p: u64) -> Matrix {
        let unpack = |m: &Matrix| -> Vec<u64> {
            m.data
                .iter()
                .map(|e| match e {
                    FieldElement::Prime(v) => *v,
                    _ => unreachable!("prime field holds prime elements"),
                })
                .collect()
        };
        let a = unpack(self);
        let b = unpack(other);
        let (n, m, k) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u64; n * k];
        for i in 0..n {
            for t in 0..m {
                let av = a[i * m + t];
                if av == 0 {
                    continue;
                }
                let av = av as u128;
                let row = &b[t * k..(t + 1) * k];
                let dst = &mut out[i * k..(i + 1) * k];
                for j in 0..k {
                    dst[j] = ((dst[j] as u128 + av * row[j] as u128) % p as u128) as u64;
                }
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: n,
            cols: k,
            data: out.into_iter().map(FieldElement::Prime).collect(),
        }
    }

    pub fn matvec(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, x.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) || f.is_zero(&x[j]) {
                    continue;
                }
                out[i] = f.add(&out[i], &f.mul(a, &x[j]));
            }
        }
        out
    }

    /// In-place Gauss–Jordan to reduced row echelon form; returns the pivot
    /// column of each pivot row.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel {x : Ax = 0}, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = Matrix::zero(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut out = Matrix::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Determinant by fraction-aware elimination.
    pub fn det(&self) -> FieldElement {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot nonzero");
            for i in c + 1..n {
                if f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Projective normalisation: scale so the first nonzero entry in
    /// row-major order is 1. Canonical representative for classes of
    /// matrices modulo scalars.
    pub fn projective_canonical(&self) -> Matrix {
        let f = &self.field;
        match self.data.iter().find(|e| !f.is_zero(e)) {
            None => self.clone(),
            Some(first) => self.scale(&f.inv(first).expect("nonzero")),
        }
    }

    /// Whether `other` is a nonzero scalar multiple of `self`.
    pub fn proportional_to(&self, other: &Matrix) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        !self.is_zero()
            && !other.is_zero()
            && self.projective_canonical() == other.projective_canonical()
    }
}

/// Solve `A x = b` exactly. Returns a particular solution (when consistent)
/// together with a basis of the kernel of `A`, so the full solution set is
/// `particular + span(kernel)`.
pub fn solve_linear(
    a: &Matrix,
    b: &[FieldElement],
) -> (Option<Vec<FieldElement>>, Vec<Vec<FieldElement>>) {
    assert_eq!(a.rows(), b.len(), "rhs length must match row count");
    let f = a.field().clone();
    let mut aug = Matrix::zero(f.clone(), a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let pivots = aug.rref_in_place();
    // Inconsistent iff some pivot lands in the augmented column.
    let particular = if pivots.last() == Some(&a.cols()) {
        None
    } else {
        let mut x = vec![f.zero(); a.cols()];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, a.cols()).clone();
        }
        Some(x)
    };
    (particular, a.kernel_basis())
}

/// Rank of a matrix; exposed as a free function alongside [`solve_linear`].
pub fn mat_rank(a: &Matrix) -> usize {
    a.rank()
}

/// Incremental row-space tracker: feed vectors, watch the rank grow.
/// Used to grow bases greedily while remembering which candidates were kept.
pub struct RankTracker {
    field: FieldSpec,
    dim: usize,
    /// Reduced rows, each paired with its leading-column index.
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl RankTracker {
    pub fn new(field: FieldSpec, dim: usize) -> RankTracker {
        RankTracker {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; returns the reduced remainder and
    /// its leading column, or `None` when `v` is dependent.
    fn reduce(&self, v: &[FieldElement]) -> Option<(usize, Vec<FieldElement>)> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (lead, row) in &self.rows {
            if !f.is_zero(&v[*lead]) {
                let factor = v[*lead].clone();
                for j in *lead..self.dim {
                    v[j] = f.sub(&v[j], &f.mul(&factor, &row[j]));
                }
            }
        }
        let lead = v.iter().position(|e| !f.is_zero(e))?;
        Some((lead, v))
    }

    /// Returns true when `v` was independent (and is now absorbed).
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let Some((lead, mut row)) = self.reduce(v) else {
            return false;
        };
        let inv = f.inv(&row[lead]).expect("leading entry nonzero");
        for e in row.iter_mut() {
            *e = f.mul(e, &inv);
        }
        self.rows.push((lead, row));
        self.rows.sort_by_key(|(l, _)| *l);
        true
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).is_none()
    }
}
