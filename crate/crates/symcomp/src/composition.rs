//! Symmetric composition structures `(S, ⋆, n)`.
//!
//! A multiplication `⋆` with structure tensor `γ` (so `(x⋆y)_k =
//! Σ_{i,j} γ_{ijk} x_i y_j`) is a *symmetric composition* with multiplier
//! `λ_⋆` when
//!
//! 1. `n(x⋆y) = λ_⋆·n(x)·n(y)` as an identity of biquadratic polynomials
//!    in the 16 coordinates of `(x, y)`, and
//! 2. `b_n(x⋆y, z) = b_n(x, y⋆z)` for all `x, y, z`.
//!
//! Both are checked symbolically by [`SymmetricComposition::verify`]: (1) by
//! comparing all coefficients of the two polynomials, (2) on basis triples
//! (enough, by bilinearity). The two conditions imply the operator identity
//! `r_x∘ℓ_x = ℓ_x∘r_x = λ_⋆·n(x)·Id`, which is also exposed for testing.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Matrix;
use crate::quadform::{QuadraticSpace, Similarity, DIM};

/// Enumeration cap for the para-unit search.
pub const PARA_UNIT_BUDGET: u128 = 10_000_000;

/// A verified symmetric composition: quadratic space, structure tensor and
/// cached multiplier. Instances are only built through [`SymmetricComposition::verify`]
/// (or operations that preserve the axioms), so the invariants always hold.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricComposition {
    space: QuadraticSpace,
    /// `γ_{ijk}` at index `(i·8 + j)·8 + k`.
    gamma: Vec<FieldElement>,
    multiplier: FieldElement,
}

/// Index of the monomial `x_i·x_p` (unordered pair) among the 36 degree-2
/// monomials in 8 variables.
fn mono_index(i: usize, p: usize) -> usize {
    let (a, b) = if i <= p { (i, p) } else { (p, i) };
    // Cells above the diagonal of an 8×8 grid, row-major.
    a * DIM - a * (a + 1) / 2 + b
}

const MONO_COUNT: usize = DIM * (DIM + 1) / 2; // 36

impl SymmetricComposition {
    /// Check both composition axioms for `gamma` over `space` and extract
    /// the multiplier.
    ///
    /// Condition (1) is expanded into the 36×36 table of coefficients of
    /// `x_i x_p · y_j y_q`; the table of `n(x⋆y)` must be an exact scalar
    /// multiple of the table of `n(x)n(y)`. Condition (2) is checked on all
    /// 512 basis triples. Violations report the first failing monomial or
    /// triple.
    pub fn verify(space: QuadraticSpace, gamma: Vec<FieldElement>) -> Result<SymmetricComposition> {
        let f = space.field().clone();
        if gamma.len() != DIM * DIM * DIM {
            return Err(Error::DimensionMismatch {
                expected: format!("{} structure constants", DIM * DIM * DIM),
                found: format!("{}", gamma.len()),
            });
        }
        for e in &gamma {
            if !f.contains(e) {
                return Err(Error::FieldMismatch {
                    expected: f.to_string(),
                    found: format!("{e:?}"),
                });
            }
        }
        let g = |i: usize, j: usize, k: usize| &gamma[(i * DIM + j) * DIM + k];
        let u = space.upper();

        // Coefficient table of n(x⋆y): entry (mono(i,p), mono(j,q)) collects
        // Σ U_{kl} γ_{ijk} γ_{pql} over k ≤ l.
        let mut lhs = vec![f.zero(); MONO_COUNT * MONO_COUNT];
        for k in 0..DIM {
            for l in k..DIM {
                let c = u.get(k, l);
                if f.is_zero(c) {
                    continue;
                }
                for i in 0..DIM {
                    for j in 0..DIM {
                        let g1 = g(i, j, k);
                        if f.is_zero(g1) {
                            continue;
                        }
                        let cg1 = f.mul(c, g1);
                        for p in 0..DIM {
                            for q in 0..DIM {
                                let g2 = g(p, q, l);
                                if f.is_zero(g2) {
                                    continue;
                                }
                                let cell = mono_index(i, p) * MONO_COUNT + mono_index(j, q);
                                lhs[cell] = f.add(&lhs[cell], &f.mul(&cg1, g2));
                            }
                        }
                    }
                }
            }
        }
        // Coefficient table of n(x)·n(y): the outer product of the upper
        // coefficient vector with itself.
        let mut rhs = vec![f.zero(); MONO_COUNT * MONO_COUNT];
        for i in 0..DIM {
            for p in i..DIM {
                if f.is_zero(u.get(i, p)) {
                    continue;
                }
                for j in 0..DIM {
                    for q in j..DIM {
                        if f.is_zero(u.get(j, q)) {
                            continue;
                        }
                        rhs[mono_index(i, p) * MONO_COUNT + mono_index(j, q)] =
                            f.mul(u.get(i, p), u.get(j, q));
                    }
                }
            }
        }
        if lhs.iter().all(|e| f.is_zero(e)) {
            return Err(Error::DegenerateComposition);
        }
        let pivot = rhs
            .iter()
            .position(|e| !f.is_zero(e))
            .expect("polar form is nonsingular, so n(x)n(y) is not identically zero");
        let lambda = f.div(&lhs[pivot], &rhs[pivot])?;
        if f.is_zero(&lambda) {
            return Err(Error::DegenerateComposition);
        }
        for (cell, expected) in rhs.iter().enumerate() {
            if lhs[cell] != f.mul(&lambda, expected) {
                let (xm, ym) = (cell / MONO_COUNT, cell % MONO_COUNT);
                return Err(Error::CompositionViolation {
                    condition: 1,
                    witness: format!("monomial pair (x-mono #{xm}, y-mono #{ym})"),
                });
            }
        }

        // Condition (2) on basis triples: b(e_i⋆e_j, e_k) = b(e_i, e_j⋆e_k).
        let polar = space.polar_matrix();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut left = f.zero();
                    let mut right = f.zero();
                    for s in 0..DIM {
                        left = f.add(&left, &f.mul(g(i, j, s), polar.get(s, k)));
                        right = f.add(&right, &f.mul(polar.get(i, s), g(j, k, s)));
                    }
                    if left != right {
                        return Err(Error::CompositionViolation {
                            condition: 2,
                            witness: format!("basis triple ({i},{j},{k})"),
                        });
                    }
                }
            }
        }

        Ok(SymmetricComposition {
            space,
            gamma,
            multiplier: lambda,
        })
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn field(&self) -> &FieldSpec {
        self.space.field()
    }

    pub fn gamma(&self) -> &[FieldElement] {
        &self.gamma
    }

    pub fn gamma_at(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.gamma[(i * DIM + j) * DIM + k]
    }

    /// The multiplier λ_⋆ of the norm identity.
    pub fn multiplier(&self) -> &FieldElement {
        &self.multiplier
    }

    pub fn is_normalized(&self) -> bool {
        self.field().is_one(&self.multiplier)
    }

    /// `x ⋆ y` by contraction of the structure tensor.
    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let f = self.field();
        for v in [x, y] {
            if v.len() != DIM {
                return Err(Error::DimensionMismatch {
                    expected: format!("vector of length {DIM}"),
                    found: format!("length {}", v.len()),
                });
            }
            for e in v {
                if !f.contains(e) {
                    return Err(Error::FieldMismatch {
                        expected: f.to_string(),
                        found: format!("{e:?}"),
                    });
                }
            }
        }
        let mut out = vec![f.zero(); DIM];
        for i in 0..DIM {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..DIM {
                if f.is_zero(&y[j]) {
                    continue;
                }
                let xy = f.mul(&x[i], &y[j]);
                for k in 0..DIM {
                    let c = self.gamma_at(i, j, k);
                    if f.is_zero(c) {
                        continue;
                    }
                    out[k] = f.add(&out[k], &f.mul(c, &xy));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ℓ_x : y ↦ x⋆y`.
    pub fn left_op(&self, x: &[FieldElement]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zero(f.clone(), DIM, DIM);
        for k in 0..DIM {
            for j in 0..DIM {
                let mut acc = f.zero();
                for i in 0..DIM {
                    let c = self.gamma_at(i, j, k);
                    if f.is_zero(c) || f.is_zero(&x[i]) {
                        continue;
                    }
                    acc = f.add(&acc, &f.mul(c, &x[i]));
                }
                m.set(k, j, acc);
            }
        }
        m
    }

    /// Matrix of `r_x : y ↦ y⋆x`.
    pub fn right_op(&self, x: &[FieldElement]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zero(f.clone(), DIM, DIM);
        for k in 0..DIM {
            for i in 0..DIM {
                let mut acc = f.zero();
                for j in 0..DIM {
                    let c = self.gamma_at(i, j, k);
                    if f.is_zero(c) || f.is_zero(&x[j]) {
                        continue;
                    }
                    acc = f.add(&acc, &f.mul(c, &x[j]));
                }
                m.set(k, i, acc);
            }
        }
        m
    }

    /// The opposite composition `x ⋆op y = y ⋆ x`; same multiplier.
    pub fn opposite(&self) -> SymmetricComposition {
        let f = self.field();
        let mut gamma = vec![f.zero(); DIM * DIM * DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    gamma[(i * DIM + j) * DIM + k] = self.gamma_at(j, i, k).clone();
                }
            }
        }
        SymmetricComposition {
            space: self.space.clone(),
            gamma,
            multiplier: self.multiplier.clone(),
        }
    }

    /// The rescaled composition `ν·⋆ : (x,y) ↦ ν·(x⋆y)`, with multiplier
    /// `ν²·λ_⋆`.
    pub fn scale(&self, nu: &FieldElement) -> Result<SymmetricComposition> {
        let f = self.field();
        if f.is_zero(nu) {
            return Err(Error::ZeroScalar);
        }
        let gamma = self.gamma.iter().map(|c| f.mul(c, nu)).collect();
        Ok(SymmetricComposition {
            space: self.space.clone(),
            gamma,
            multiplier: f.mul(&f.mul(nu, nu), &self.multiplier),
        })
    }

    /// The tensor of `(x, y) ↦ f(x⋆y)`.
    pub fn compose_after(&self, f: &Matrix) -> Vec<FieldElement> {
        let fld = self.field();
        let mut out = vec![fld.zero(); DIM * DIM * DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut acc = fld.zero();
                    for s in 0..DIM {
                        let c = self.gamma_at(i, j, s);
                        if fld.is_zero(c) || fld.is_zero(f.get(k, s)) {
                            continue;
                        }
                        acc = fld.add(&acc, &fld.mul(f.get(k, s), c));
                    }
                    out[(i * DIM + j) * DIM + k] = acc;
                }
            }
        }
        out
    }

    /// The tensor of `(x, y) ↦ g(x) ⋆ h(y)`.
    pub fn pair_product_tensor(&self, g: &Matrix, h: &Matrix) -> Vec<FieldElement> {
        let f = self.field();
        // Contract g into the first slot, then h into the second.
        let mut t1 = vec![f.zero(); DIM * DIM * DIM]; // (i, q, k)
        for q in 0..DIM {
            for k in 0..DIM {
                for i in 0..DIM {
                    let mut acc = f.zero();
                    for p in 0..DIM {
                        let c = self.gamma_at(p, q, k);
                        if f.is_zero(c) || f.is_zero(g.get(p, i)) {
                            continue;
                        }
                        acc = f.add(&acc, &f.mul(c, g.get(p, i)));
                    }
                    t1[(i * DIM + q) * DIM + k] = acc;
                }
            }
        }
        let mut out = vec![f.zero(); DIM * DIM * DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut acc = f.zero();
                    for q in 0..DIM {
                        let c = &t1[(i * DIM + q) * DIM + k];
                        if f.is_zero(c) || f.is_zero(h.get(q, j)) {
                            continue;
                        }
                        acc = f.add(&acc, &f.mul(c, h.get(q, j)));
                    }
                    out[(i * DIM + j) * DIM + k] = acc;
                }
            }
        }
        out
    }

    /// The scalar `c` with `num = c·den`, when the tensors are exactly
    /// proportional (and `den` is nonzero somewhere).
    pub fn tensor_ratio(
        field: &FieldSpec,
        num: &[FieldElement],
        den: &[FieldElement],
    ) -> Option<FieldElement> {
        let pivot = den.iter().position(|e| !field.is_zero(e))?;
        let c = field.div(&num[pivot], &den[pivot]).ok()?;
        for (n, d) in num.iter().zip(den) {
            if *n != field.mul(&c, d) {
                return None;
            }
        }
        Some(c)
    }

    /// Normalize: produce the unique composition `◇` with multiplier 1
    /// similar to `⋆`, via `x◇y = λ_⋆⁻²·ℓ_u(r_u(x) ⋆ r_u(y))` for a base
    /// point `u` of norm 1, together with the similarity `λ_⋆⁻¹·r_u : ◇ → ⋆`
    /// (multiplier `λ_⋆⁻¹`).
    pub fn normalize(
        &self,
        u: Option<&[FieldElement]>,
    ) -> Result<(SymmetricComposition, Similarity)> {
        let f = self.field().clone();
        let u = match u {
            Some(u) => u.to_vec(),
            None => self.space.find_norm_one()?,
        };
        if !f.is_one(&self.space.evaluate(&u)?) {
            return Err(Error::Parse(format!(
                "base point must have norm 1, got {}",
                f.format(&self.space.evaluate(&u)?)
            )));
        }
        let l_u = self.left_op(&u);
        let r_u = self.right_op(&u);
        let lambda_inv = f.inv(&self.multiplier)?;
        let lam2_inv = f.mul(&lambda_inv, &lambda_inv);
        // γ'_{ijk} = λ⁻² Σ_s L_{ks} γ(R·, R·)_{ijs}.
        let inner = self.pair_product_tensor(&r_u, &r_u);
        let mut gamma = vec![f.zero(); DIM * DIM * DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut acc = f.zero();
                    for s in 0..DIM {
                        let c = &inner[(i * DIM + j) * DIM + s];
                        if f.is_zero(c) || f.is_zero(l_u.get(k, s)) {
                            continue;
                        }
                        acc = f.add(&acc, &f.mul(l_u.get(k, s), c));
                    }
                    gamma[(i * DIM + j) * DIM + k] = f.mul(&lam2_inv, &acc);
                }
            }
        }
        let normalized = SymmetricComposition::verify(self.space.clone(), gamma)?;
        debug_assert!(normalized.is_normalized());
        let map = self.space.similarity_from_matrix(&r_u.scale(&lambda_inv))?;
        let mu = normalized
            .similarity_check(self, map.matrix())
            .expect("λ⁻¹·r_u is a similarity from the normalized composition");
        debug_assert_eq!(mu, lambda_inv);
        Ok((normalized, map))
    }

    /// Whether `f` is an automorphism: an isometry with
    /// `f(x⋆y) = f(x)⋆f(y)` coefficient-wise.
    pub fn is_automorphism(&self, f: &Matrix) -> bool {
        let Ok(sim) = self.space.similarity_from_matrix(f) else {
            return false;
        };
        if !sim.is_isometry() {
            return false;
        }
        self.compose_after(f) == self.pair_product_tensor(f, f)
    }

    /// Twist by an order-3 automorphism: `x ⋆_f y = f(x) ⋆ f⁻¹(y)`.
    /// The result is a symmetric composition with the same multiplier.
    pub fn twist_by_automorphism(&self, f: &Matrix) -> Result<SymmetricComposition> {
        if !self.is_automorphism(f) {
            return Err(Error::NotAnAutomorphism(
                "twisting map must be an automorphism".into(),
            ));
        }
        if !f.mul(f).mul(f).is_identity() {
            return Err(Error::OrderNotThree);
        }
        let f_inv = f.inverse().ok_or(Error::NotInvertible)?;
        let twisted = SymmetricComposition::verify(
            self.space.clone(),
            self.pair_product_tensor(f, &f_inv),
        )?;
        debug_assert_eq!(twisted.multiplier, self.multiplier);
        Ok(twisted)
    }

    /// Search for a para-unit: a vector `e` with `n(e) = 1` and
    /// `e⋆x = x⋆e = b_n(e,x)·e − x` for all `x`. Returns `Ok(None)` after an
    /// exhaustive search without a hit.
    pub fn para_unit_search(&self) -> Result<Option<Vec<FieldElement>>> {
        self.para_unit_search_with_budget(PARA_UNIT_BUDGET)
    }

    /// [`para_unit_search`](Self::para_unit_search) with an explicit cap on
    /// the number of candidates the exhaustive scan may visit.
    pub fn para_unit_search_with_budget(&self, budget: u128) -> Result<Option<Vec<FieldElement>>> {
        let f = self.field().clone();
        let Some(q) = f.size() else {
            return Err(Error::InfiniteField);
        };
        let total = (q as u128).pow(DIM as u32);
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget,
            });
        }
        if let FieldSpec::Prime(p) = &f {
            if let Some(e) = self.para_unit_prime_fast(*p) {
                debug_assert!(self.is_para_unit(&e));
                return Ok(Some(e));
            }
            return Ok(None);
        }
        let mut digits = vec![0u64; DIM];
        let mut v = vec![f.element_at(0); DIM];
        loop {
            if f.is_one(&self.space.evaluate(&v).expect("canonical vector")) && self.is_para_unit(&v)
            {
                return Ok(Some(v));
            }
            let mut pos = 0;
            loop {
                if pos == DIM {
                    return Ok(None);
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

    /// Full para-unit check for a candidate of norm 1.
    pub fn is_para_unit(&self, e: &[FieldElement]) -> bool {
        let f = self.field();
        if !self
            .space
            .evaluate(e)
            .map(|n| f.is_one(&n))
            .unwrap_or(false)
        {
            return false;
        }
        // Matrix of x ↦ b(e,x)·e − x.
        let polar = self.space.polar_matrix();
        let be = polar.matvec(e); // b(e, e_j) by symmetry of the polar form
        let mut target = Matrix::zero(f.clone(), DIM, DIM);
        for k in 0..DIM {
            for j in 0..DIM {
                let mut v = f.mul(&be[j], &e[k]);
                if j == k {
                    v = f.sub(&v, &f.one());
                }
                target.set(k, j, v);
            }
        }
        self.left_op(e) == target && self.right_op(e) == target
    }

    /// Para-unit enumeration with plain u64 residues: filter by `n(e) = 1`
    /// and `e⋆e = e` (cheap necessary conditions), then run the full check.
    fn para_unit_prime_fast(&self, p: u64) -> Option<Vec<FieldElement>> {
        let as_u64 = |e: &FieldElement| match e {
            FieldElement::Prime(v) => *v,
            _ => unreachable!("prime-field composition"),
        };
        let gamma: Vec<u64> = self.gamma.iter().map(as_u64).collect();
        let upper: Vec<Vec<u64>> = (0..DIM)
            .map(|i| (0..DIM).map(|j| as_u64(self.space.upper().get(i, j))).collect())
            .collect();
        let mut v = [0u64; DIM];
        loop {
            let mut norm = 0u64;
            for i in 0..DIM {
                if v[i] == 0 {
                    continue;
                }
                for j in i..DIM {
                    if upper[i][j] == 0 || v[j] == 0 {
                        continue;
                    }
                    norm = (norm + upper[i][j] * v[i] % p * v[j]) % p;
                }
            }
            if norm == 1 {
                let mut idempotent = true;
                'comp: for k in 0..DIM {
                    let mut acc = 0u64;
                    for i in 0..DIM {
                        if v[i] == 0 {
                            continue;
                        }
                        for j in 0..DIM {
                            let c = gamma[(i * DIM + j) * DIM + k];
                            if c == 0 || v[j] == 0 {
                                continue;
                            }
                            acc = (acc + c * v[i] % p * v[j]) % p;
                        }
                    }
                    if acc != v[k] {
                        idempotent = false;
                        break 'comp;
                    }
                }
                if idempotent {
                    let e: Vec<FieldElement> = v.iter().map(|&x| FieldElement::Prime(x)).collect();
                    if self.is_para_unit(&e) {
                        return Some(e);
                    }
                }
            }
            let mut pos = 0;
            loop {
                if pos == DIM {
                    return None;
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

    /// The derivation algebra: all `d` with `d(x⋆y) = d(x)⋆y + x⋆d(y)`,
    /// solved as a linear system on basis pairs (512 equations in the 64
    /// entries of `d`). Returns the dimension and a basis.
    pub fn derivations(&self) -> (usize, Vec<Matrix>) {
        let f = self.field().clone();
        // Unknowns D_{ab} at index a·8+b, where column b of D is d(e_b).
        let mut system = Matrix::zero(f.clone(), DIM * DIM * DIM, DIM * DIM);
        let mut row = 0;
        for i in 0..DIM {
            for j in 0..DIM {
                for m in 0..DIM {
                    // Coefficient of D_{m,k} from d(x⋆y): +γ_{ijk}.
                    for k in 0..DIM {
                        let c = self.gamma_at(i, j, k);
                        if !f.is_zero(c) {
                            let idx = m * DIM + k;
                            let cur = system.get(row, idx).clone();
                            system.set(row, idx, f.add(&cur, c));
                        }
                    }
                    // From −d(e_i)⋆e_j: coefficient of D_{a,i} is −γ_{ajm}.
                    for a in 0..DIM {
                        let c = self.gamma_at(a, j, m);
                        if !f.is_zero(c) {
                            let idx = a * DIM + i;
                            let cur = system.get(row, idx).clone();
                            system.set(row, idx, f.sub(&cur, c));
                        }
                    }
                    // From −e_i⋆d(e_j): coefficient of D_{a,j} is −γ_{iam}.
                    for a in 0..DIM {
                        let c = self.gamma_at(i, a, m);
                        if !f.is_zero(c) {
                            let idx = a * DIM + j;
                            let cur = system.get(row, idx).clone();
                            system.set(row, idx, f.sub(&cur, c));
                        }
                    }
                    row += 1;
                }
            }
        }
        let kernel = system.kernel_basis();
        let basis = kernel
            .into_iter()
            .map(|v| {
                let mut m = Matrix::zero(f.clone(), DIM, DIM);
                for a in 0..DIM {
                    for b in 0..DIM {
                        m.set(a, b, v[a * DIM + b].clone());
                    }
                }
                m
            })
            .collect::<Vec<_>>();
        (basis.len(), basis)
    }

    /// Check whether `h` is a similarity of compositions `self → other`:
    /// a similarity of the quadratic spaces with `h(x ⋆ y) = h(x) ⋄ h(y)`
    /// exactly. Returns the quadratic multiplier `μ(h)`, which satisfies
    /// `λ_⋆ = λ_⋄·μ(h)`.
    pub fn similarity_check(&self, other: &SymmetricComposition, h: &Matrix) -> Option<FieldElement> {
        if self.field() != other.field() {
            return None;
        }
        let sim = crate::quadform::similarity_between(&self.space, &other.space, h).ok()?;
        if self.compose_after(h) != other.pair_product_tensor(h, h) {
            return None;
        }
        let f = self.field();
        debug_assert_eq!(
            self.multiplier,
            f.mul(&other.multiplier, sim.multiplier()),
            "multiplier relation λ_⋆ = λ_⋄·μ(h)"
        );
        Some(sim.multiplier().clone())
    }
}
