//! The even Clifford representation of a symmetric composition and the
//! triality action it induces on similarity classes.
//!
//! For an eight-dimensional symmetric composition `(S, ⋆, n)` with multiplier
//! λ, each vector `x` acts on `S ⊕ S` through the 16×16 matrix
//! `α(x) = [[0, λ⁻¹·r_x], [ℓ_x, 0]]`, and `α(x)² = n(x)·Id`. Products of two
//! generators therefore land in `End(S) × End(S)`, realizing the even
//! Clifford algebra of `(S, n)` as two 8×8 blocks. A similarity `f`
//! transports this splitting; whether it fixes or swaps the two blocks is
//! exactly the proper/improper dichotomy, valid in every characteristic.
//!
//! For proper `f` the two transported block automorphisms are inner, and
//! their Skolem–Noether representatives `g`, `h` satisfy
//! `λ'·f(x⋆y) = g(x)⋆h(y)`. The induced map on projective classes,
//! `ρ: [f] ↦ [g]`, is the trialitarian automorphism computed here, together
//! with its scalar bookkeeping, the improper analogue, fixed-point lifting,
//! and composition twisting by a cocycle pair.

use crate::composition::SymmetricComposition;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Matrix, RankTracker};
use crate::quadform::{QuadraticSpace, Similarity, DIM};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Dimension of `End(S) × End(S)` over the base field: two 8×8 blocks.
pub const EVEN_DIM: usize = 2 * DIM * DIM;

/// An element of `End(S) × End(S)`: a pair of 8×8 matrices multiplying
/// componentwise. This is the shape of the even Clifford algebra of a
/// regular 8-dimensional quadratic space.
#[derive(Debug, Clone, PartialEq)]
pub struct PairMap {
    pub first: Matrix,
    pub second: Matrix,
}

impl PairMap {
    pub fn identity(field: FieldSpec) -> PairMap {
        PairMap {
            first: Matrix::identity(field.clone(), DIM),
            second: Matrix::identity(field, DIM),
        }
    }

    pub fn mul(&self, other: &PairMap) -> PairMap {
        PairMap {
            first: self.first.mul(&other.first),
            second: self.second.mul(&other.second),
        }
    }

    /// Coordinates in `F^128`: the first block row-major, then the second.
    pub fn flatten(&self) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(EVEN_DIM);
        for i in 0..DIM {
            out.extend_from_slice(self.first.row(i));
        }
        for i in 0..DIM {
            out.extend_from_slice(self.second.row(i));
        }
        out
    }

    pub fn from_flat(field: &FieldSpec, v: &[FieldElement]) -> PairMap {
        assert_eq!(v.len(), EVEN_DIM);
        let mut first = Matrix::zero(field.clone(), DIM, DIM);
        let mut second = Matrix::zero(field.clone(), DIM, DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                first.set(i, j, v[i * DIM + j].clone());
                second.set(i, j, v[DIM * DIM + i * DIM + j].clone());
            }
        }
        PairMap { first, second }
    }
}

/// The even Clifford algebra of a symmetric composition's quadratic space,
/// realized concretely inside `End(S) × End(S)` by the degree-two generator
/// images `α₀(e_i·e_j) = (λ⁻¹·r_{e_i}ℓ_{e_j}, λ⁻¹·ℓ_{e_i}r_{e_j})`.
///
/// The struct stores a full basis of the 128-dimensional image, each element
/// remembered as a word in the 64 degree-two generators so that any algebra
/// map defined on generators can be transported along the words.
#[derive(Debug, Clone)]
pub struct EvenCliffordRep {
    composition: SymmetricComposition,
    lambda_inv: FieldElement,
    /// `α₀(e_i·e_j)` at index `i·8 + j`.
    seeds: Vec<PairMap>,
    /// Basis element `k` equals the product of the seeds listed in `words[k]`.
    words: Vec<Vec<(usize, usize)>>,
    /// Inverse of the 128×128 matrix whose columns are the flattened basis
    /// elements; maps a flattened pair to its basis coordinates.
    basis_inv: Matrix,
    eps1_flat: Vec<FieldElement>,
    eps2_flat: Vec<FieldElement>,
    eps1_coords: Vec<FieldElement>,
}

/// The transport of a similarity through the even Clifford representation:
/// a linear automorphism of `End(S) × End(S)`, stored as its 128×128 matrix
/// on flattened pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Transport {
    matrix: Matrix,
}

impl Transport {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, p: &PairMap) -> PairMap {
        let out = self.matrix.matvec(&p.flatten());
        PairMap::from_flat(self.matrix.field(), &out)
    }

    pub fn compose(&self, other: &Transport) -> Transport {
        Transport {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    /// One 64×64 block of the transport, indexed by block row and column.
    fn block(&self, br: usize, bc: usize) -> Matrix {
        let n = DIM * DIM;
        let f = self.matrix.field().clone();
        let mut out = Matrix::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.matrix.get(br * n + i, bc * n + j).clone());
            }
        }
        out
    }
}

/// A proper similarity `f` with its triality companions: canonical `g`, `h`
/// and the scalars realizing `λ·f(x⋆y) = g(x)⋆h(y)`, `μ·g(x⋆y) = h(x)⋆f(y)`,
/// `ν·h(x⋆y) = f(x)⋆g(y)`.
#[derive(Debug, Clone)]
pub struct TrialityTriple {
    pub g: Similarity,
    pub h: Similarity,
    pub lambda: FieldElement,
    pub mu: FieldElement,
    pub nu: FieldElement,
}

/// The companions of an improper similarity: improper `g`, `h` with
/// `λ·f(x⋆y) = h(y)⋆g(x)`.
#[derive(Debug, Clone)]
pub struct ImproperPair {
    pub g: Similarity,
    pub h: Similarity,
    pub lambda: FieldElement,
}

impl EvenCliffordRep {
    /// Build the representation: form the 64 degree-two generator images and
    /// close them under multiplication until they span all of
    /// `End(S) × End(S)`, remembering each basis element's generator word.
    pub fn build(composition: &SymmetricComposition) -> Result<EvenCliffordRep> {
        let field = composition.field().clone();
        let lambda_inv = field.inv(composition.multiplier())?;

        let mut left = Vec::with_capacity(DIM);
        let mut right = Vec::with_capacity(DIM);
        for i in 0..DIM {
            let mut e = vec![field.zero(); DIM];
            e[i] = field.one();
            left.push(composition.left_op(&e));
            right.push(composition.right_op(&e));
        }

        let mut seeds = Vec::with_capacity(DIM * DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                seeds.push(PairMap {
                    first: right[i].mul(&left[j]).scale(&lambda_inv),
                    second: left[i].mul(&right[j]).scale(&lambda_inv),
                });
            }
        }

        let mut tracker = RankTracker::new(field.clone(), EVEN_DIM);
        let mut basis: Vec<PairMap> = Vec::with_capacity(EVEN_DIM);
        let mut words: Vec<Vec<(usize, usize)>> = Vec::with_capacity(EVEN_DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                let s = &seeds[i * DIM + j];
                if tracker.insert(&s.flatten()) {
                    basis.push(s.clone());
                    words.push(vec![(i, j)]);
                }
            }
        }

        // Multiply known elements by generators until the span stops growing.
        // Every product of k+1 generators is a combination of (basis element
        // of ≤ k generators)·generator, so this sweep reaches the closure.
        let mut head = 0;
        'grow: while tracker.rank() < EVEN_DIM && head < basis.len() {
            let current = basis[head].clone();
            let word = words[head].clone();
            head += 1;
            for i in 0..DIM {
                for j in 0..DIM {
                    let cand = current.mul(&seeds[i * DIM + j]);
                    if tracker.insert(&cand.flatten()) {
                        let mut w = word.clone();
                        w.push((i, j));
                        basis.push(cand);
                        words.push(w);
                        if tracker.rank() == EVEN_DIM {
                            break 'grow;
                        }
                    }
                }
            }
        }
        if tracker.rank() < EVEN_DIM {
            return Err(Error::RankDeficient {
                got: tracker.rank(),
            });
        }

        let mut columns = Matrix::zero(field.clone(), EVEN_DIM, EVEN_DIM);
        for (k, b) in basis.iter().enumerate() {
            for (r, v) in b.flatten().into_iter().enumerate() {
                columns.set(r, k, v);
            }
        }
        let basis_inv = columns
            .inverse()
            .expect("tracked basis columns are independent");

        let eps1 = PairMap {
            first: Matrix::identity(field.clone(), DIM),
            second: Matrix::zero(field.clone(), DIM, DIM),
        };
        let eps2 = PairMap {
            first: Matrix::zero(field.clone(), DIM, DIM),
            second: Matrix::identity(field.clone(), DIM),
        };
        let eps1_flat = eps1.flatten();
        let eps2_flat = eps2.flatten();
        let eps1_coords = basis_inv.matvec(&eps1_flat);

        Ok(EvenCliffordRep {
            composition: composition.clone(),
            lambda_inv,
            seeds,
            words,
            basis_inv,
            eps1_flat,
            eps2_flat,
            eps1_coords,
        })
    }

    pub fn composition(&self) -> &SymmetricComposition {
        &self.composition
    }

    fn field(&self) -> &FieldSpec {
        self.composition.field()
    }

    /// The degree-two generator images `α₀(e_i·e_j)`.
    pub fn seed(&self, i: usize, j: usize) -> &PairMap {
        &self.seeds[i * DIM + j]
    }

    /// The 16×16 generator image `α(e_i) = [[0, λ⁻¹·r_{e_i}], [ℓ_{e_i}, 0]]`.
    pub fn generator_image(&self, i: usize) -> Matrix {
        let field = self.field().clone();
        let mut e = vec![field.zero(); DIM];
        e[i] = field.one();
        let l = self.composition.left_op(&e);
        let r = self.composition.right_op(&e).scale(&self.lambda_inv);
        let mut out = Matrix::zero(field, 2 * DIM, 2 * DIM);
        for a in 0..DIM {
            for b in 0..DIM {
                out.set(a, DIM + b, r.get(a, b).clone());
                out.set(DIM + a, b, l.get(a, b).clone());
            }
        }
        out
    }

    /// Generator images of the transported word letters: for each `i` the
    /// operators of the column `f(e_i)`, combined into
    /// `μ(f)⁻¹·α₀(f(e_i)·f(e_j))`, then multiplied along every stored word.
    fn word_images(&self, f: &Similarity) -> Result<Vec<PairMap>> {
        let comp = &self.composition;
        let field = comp.field();
        let fm = f.matrix();
        let mut lf = Vec::with_capacity(DIM);
        let mut rf = Vec::with_capacity(DIM);
        for i in 0..DIM {
            let x: Vec<FieldElement> = (0..DIM).map(|r| fm.get(r, i).clone()).collect();
            lf.push(comp.left_op(&x));
            rf.push(comp.right_op(&x));
        }
        let c = field.mul(&field.inv(f.multiplier())?, &self.lambda_inv);
        let mut seed_im = Vec::with_capacity(DIM * DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                seed_im.push(PairMap {
                    first: rf[i].mul(&lf[j]).scale(&c),
                    second: lf[i].mul(&rf[j]).scale(&c),
                });
            }
        }
        Ok(self
            .words
            .iter()
            .map(|w| {
                let mut acc = seed_im[w[0].0 * DIM + w[0].1].clone();
                for &(i, j) in &w[1..] {
                    acc = acc.mul(&seed_im[i * DIM + j]);
                }
                acc
            })
            .collect())
    }

    /// Transport of `f` through the even representation: the algebra
    /// automorphism of `End(S) × End(S)` induced by conjugation in the even
    /// Clifford algebra. Unchanged under rescaling of `f`.
    pub fn transport(&self, f: &Similarity) -> Result<Transport> {
        let images = self.word_images(f)?;
        let field = self.field().clone();
        let mut image_columns = Matrix::zero(field, EVEN_DIM, EVEN_DIM);
        for (k, im) in images.iter().enumerate() {
            for (r, v) in im.flatten().into_iter().enumerate() {
                image_columns.set(r, k, v);
            }
        }
        Ok(Transport {
            matrix: image_columns.mul(&self.basis_inv),
        })
    }

    /// Decide whether `f` fixes or swaps the two central idempotents of the
    /// even Clifford algebra. This is the Dickson invariant, computed without
    /// determinants and therefore valid in characteristic 2.
    pub fn is_proper(&self, f: &Similarity) -> Result<bool> {
        let images = self.word_images(f)?;
        let field = self.field();
        let mut out = vec![field.zero(); EVEN_DIM];
        for (k, c) in self.eps1_coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for (r, v) in images[k].flatten().into_iter().enumerate() {
                out[r] = field.add(&out[r], &field.mul(c, &v));
            }
        }
        if out == self.eps1_flat {
            Ok(true)
        } else if out == self.eps2_flat {
            Ok(false)
        } else {
            Err(Error::FactorInconsistency)
        }
    }

    /// The triality companions of a proper similarity: canonical `g`, `h`
    /// and scalars with `λ·f(x⋆y) = g(x)⋆h(y)`, `μ·g(x⋆y) = h(x)⋆f(y)`,
    /// `ν·h(x⋆y) = f(x)⋆g(y)`, satisfying `λμ = μ(h)`, `μν = μ(f)`,
    /// `λν = μ(g)`.
    pub fn triality_triple(&self, f: &Similarity) -> Result<TrialityTriple> {
        let tr = self.transport(f)?;
        if !tr.block(0, 1).is_zero() || !tr.block(1, 0).is_zero() {
            return if tr.block(0, 0).is_zero() && tr.block(1, 1).is_zero() {
                Err(Error::WrongParity {
                    expected_proper: true,
                })
            } else {
                Err(Error::FactorInconsistency)
            };
        }
        let g_mat = skolem_noether(&tr.block(0, 0))?;
        let h_mat = skolem_noether(&tr.block(1, 1))?;

        let comp = &self.composition;
        let field = comp.field();
        let t_f = comp.compose_after(f.matrix());
        let t_g = comp.compose_after(&g_mat);
        let t_h = comp.compose_after(&h_mat);
        let lambda = SymmetricComposition::tensor_ratio(
            field,
            &comp.pair_product_tensor(&g_mat, &h_mat),
            &t_f,
        )
        .ok_or(Error::FactorInconsistency)?;
        let mu = SymmetricComposition::tensor_ratio(
            field,
            &comp.pair_product_tensor(&h_mat, f.matrix()),
            &t_g,
        )
        .ok_or(Error::FactorInconsistency)?;
        let nu = SymmetricComposition::tensor_ratio(
            field,
            &comp.pair_product_tensor(f.matrix(), &g_mat),
            &t_h,
        )
        .ok_or(Error::FactorInconsistency)?;

        let g = comp.space().similarity_from_matrix(&g_mat)?;
        let h = comp.space().similarity_from_matrix(&h_mat)?;
        let checks = [
            (1u8, field.mul(&lambda, &mu), h.multiplier()),
            (2u8, field.mul(&mu, &nu), f.multiplier()),
            (3u8, field.mul(&lambda, &nu), g.multiplier()),
        ];
        for (which, got, want) in checks {
            if &got != want {
                return Err(Error::TripleRelationFailure {
                    which,
                    witness: format!(
                        "{} ≠ {}",
                        field.format(&got),
                        field.format(want)
                    ),
                });
            }
        }
        Ok(TrialityTriple { g, h, lambda, mu, nu })
    }

    /// The trialitarian automorphism on projective classes: `ρ[f] = [g]`,
    /// returned as the canonical class representative.
    pub fn rho(&self, f: &Similarity) -> Result<Similarity> {
        Ok(self.triality_triple(f)?.g)
    }

    /// The companions of an improper similarity: improper `g`, `h` with
    /// `λ·f(x⋆y) = h(y)⋆g(x)`.
    pub fn improper_pair(&self, f: &Similarity) -> Result<ImproperPair> {
        let tr = self.transport(f)?;
        if !tr.block(0, 0).is_zero() || !tr.block(1, 1).is_zero() {
            return if tr.block(0, 1).is_zero() && tr.block(1, 0).is_zero() {
                Err(Error::WrongParity {
                    expected_proper: false,
                })
            } else {
                Err(Error::FactorInconsistency)
            };
        }
        // Composing the swapped transport with the factor exchange gives two
        // algebra automorphisms of End(S); their inner representatives are
        // the two companions, in an order fixed by the defining identity.
        let first = skolem_noether(&tr.block(1, 0))?;
        let second = skolem_noether(&tr.block(0, 1))?;

        let comp = &self.composition;
        let field = comp.field();
        let t_f = comp.compose_after(f.matrix());
        let swapped = comp.opposite();
        let mut resolved = None;
        for (g_mat, h_mat) in [(&first, &second), (&second, &first)] {
            let lhs = swapped.pair_product_tensor(g_mat, h_mat);
            if let Some(lambda) = SymmetricComposition::tensor_ratio(field, &lhs, &t_f) {
                resolved = Some((g_mat.clone(), h_mat.clone(), lambda));
                break;
            }
        }
        let (g_mat, h_mat, lambda) = resolved.ok_or(Error::FactorInconsistency)?;
        let g = comp.space().similarity_from_matrix(&g_mat)?;
        let h = comp.space().similarity_from_matrix(&h_mat)?;
        if self.is_proper(&g)? || self.is_proper(&h)? {
            return Err(Error::FactorInconsistency);
        }
        Ok(ImproperPair { g, h, lambda })
    }

    /// Lift a proper similarity whose class is fixed by ρ to an automorphism:
    /// find the scalar κ with `f(x⋆y) = κ·f(x)⋆f(y)` and return `κ·f`.
    pub fn fixed_point_lift(&self, f: &Similarity) -> Result<Matrix> {
        let g = self.rho(f)?;
        if !g.same_class(f) {
            return Err(Error::NotFixedByRho);
        }
        let comp = &self.composition;
        let t_f = comp.compose_after(f.matrix());
        let t_pair = comp.pair_product_tensor(f.matrix(), f.matrix());
        let kappa = SymmetricComposition::tensor_ratio(comp.field(), &t_f, &t_pair)
            .ok_or(Error::NotFixedByRho)?;
        let lifted = f.matrix().scale(&kappa);
        if !comp.is_automorphism(&lifted) {
            return Err(Error::FactorInconsistency);
        }
        Ok(lifted)
    }

    /// Twist the composition by a cocycle pair: requires
    /// `ρ²[f]·ρ[f]·[f] = 1` on classes and `[g] = ρ²[f]⁻¹`; the partner's
    /// scalar is fixed by the canonical representative of `ρ²[f]⁻¹`. Returns
    /// the verified composition `x◇y = f(x)⋆ĝ(y)`, whose multiplier is
    /// `μ(f)·μ(ĝ)·λ`, and checks `ρ_◇ = Int[f⁻¹]∘ρ_⋆` on sampled classes.
    pub fn twist_by_pair(
        &self,
        f: &Similarity,
        g: &Similarity,
    ) -> Result<SymmetricComposition> {
        let comp = &self.composition;
        let field = comp.field().clone();
        let r1 = self.rho(f)?;
        let r2 = self.rho(&r1)?;
        let product = r2.matrix().mul(&r1.matrix().mul(f.matrix()));
        if !product.proportional_to(&Matrix::identity(field.clone(), DIM)) {
            return Err(Error::CocycleViolation);
        }
        let partner = r2.inverse().class_representative();
        if g.class_representative() != partner {
            return Err(Error::WrongTwistPartner);
        }
        let partner_sim = comp.space().similarity_from_matrix(&partner)?;
        let twisted = SymmetricComposition::verify(
            comp.space().clone(),
            comp.pair_product_tensor(f.matrix(), &partner),
        )?;
        let expected = field.mul(
            &field.mul(f.multiplier(), partner_sim.multiplier()),
            comp.multiplier(),
        );
        if twisted.multiplier() != &expected {
            return Err(Error::FactorInconsistency);
        }
        // Coherence of the two triality maps on a deterministic sample.
        let twisted_rep = EvenCliffordRep::build(&twisted)?;
        let f_inv = f.inverse();
        let mut rng = ChaCha8Rng::seed_from_u64(0x7517);
        for _ in 0..2 {
            let s = sample_proper_similarity(comp, &mut rng);
            let lhs = twisted_rep.rho(&s)?;
            let rhs = f_inv.matrix().mul(&self.rho(&s)?.matrix()).mul(f.matrix());
            if lhs.class_representative() != rhs.projective_canonical() {
                return Err(Error::FactorInconsistency);
            }
        }
        Ok(twisted)
    }
}

/// Whether two compositions on the same quadratic space induce the same
/// triality automorphism: true exactly when their degree-two generator
/// images in the even representation agree, which decides ρ-equality
/// without any sampling.
pub fn rho_equality(a: &EvenCliffordRep, b: &EvenCliffordRep) -> Result<bool> {
    if a.composition.space().upper() != b.composition.space().upper()
        || a.field() != b.field()
    {
        return Err(Error::DimensionMismatch {
            expected: "two compositions on one quadratic space".into(),
            found: "different spaces".into(),
        });
    }
    Ok(a.seeds == b.seeds)
}

/// Inner representative of an algebra automorphism of `End(S)`: given ψ as
/// the 64×64 matrix of its action on row-major flattened 8×8 matrices,
/// return the canonical invertible `g` with `ψ = Int(g)`, verified on all
/// matrix units. The representative is unique up to scalar; its first
/// nonzero entry is normalized to 1.
pub fn skolem_noether(psi: &Matrix) -> Result<Matrix> {
    let n = DIM * DIM;
    if psi.rows() != n || psi.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("{n}×{n} action on End(S)"),
            found: format!("{}×{}", psi.rows(), psi.cols()),
        });
    }
    let field = psi.field().clone();
    // ψ(E_{uv}) read off as the reshaped column u·8+v.
    let unit_image = |u: usize, v: usize| -> Matrix {
        let mut m = Matrix::zero(field.clone(), DIM, DIM);
        for r in 0..DIM {
            for s in 0..DIM {
                m.set(r, s, psi.get(r * DIM + s, u * DIM + v).clone());
            }
        }
        m
    };

    // If ψ = Int(g), then ψ(E_{u0}) = (column u of g)·(row 0 of g⁻¹), so all
    // images of the units E_{u0} applied to one common vector w recover the
    // columns of g up to one overall scalar.
    let p00 = unit_image(0, 0);
    let w = (0..DIM)
        .find(|&t| (0..DIM).any(|r| !field.is_zero(p00.get(r, t))))
        .ok_or_else(|| Error::NoInnerRepresentative("ψ kills E₀₀".into()))?;
    let mut g = Matrix::zero(field.clone(), DIM, DIM);
    for u in 0..DIM {
        let pu0 = unit_image(u, 0);
        for r in 0..DIM {
            g.set(r, u, pu0.get(r, w).clone());
        }
    }
    let g = g.projective_canonical();
    let g_inv = g
        .inverse()
        .ok_or_else(|| Error::NoInnerRepresentative("candidate is singular".into()))?;
    // Full verification on the matrix-unit basis: g·E_{uv}·g⁻¹ is the outer
    // product of column u of g with row v of g⁻¹.
    for u in 0..DIM {
        for v in 0..DIM {
            let img = unit_image(u, v);
            for r in 0..DIM {
                for s in 0..DIM {
                    let want = field.mul(g.get(r, u), g_inv.get(v, s));
                    if img.get(r, s) != &want {
                        return Err(Error::NoInnerRepresentative(format!(
                            "conjugation mismatch at unit E[{u}][{v}], entry ({r},{s})"
                        )));
                    }
                }
            }
        }
    }
    Ok(g)
}

/// A random improper similarity: the left multiplication `ℓ_x` at a random
/// anisotropic `x`, whose multiplier is `λ·n(x)`.
pub fn sample_improper_similarity<R: Rng>(
    c: &SymmetricComposition,
    rng: &mut R,
) -> Similarity {
    let field = c.field().clone();
    loop {
        let x: Vec<FieldElement> = (0..DIM).map(|_| field.random(rng)).collect();
        let n = c.space().evaluate(&x).expect("vector has full length");
        if field.is_zero(&n) {
            continue;
        }
        return c
            .space()
            .similarity_from_matrix(&c.left_op(&x))
            .expect("left multiplication at anisotropic x is a similarity");
    }
}

/// A random proper similarity: the product of two improper ones.
pub fn sample_proper_similarity<R: Rng>(
    c: &SymmetricComposition,
    rng: &mut R,
) -> Similarity {
    sample_improper_similarity(c, rng).compose(&sample_improper_similarity(c, rng))
}

/// The reflection `x ↦ x − (b(x,v)/q(v))·v` in an anisotropic vector `v`:
/// an improper involutive isometry in every characteristic.
pub fn reflection(space: &QuadraticSpace, v: &[FieldElement]) -> Result<Matrix> {
    let field = space.field().clone();
    let q = space.evaluate(v)?;
    if field.is_zero(&q) {
        return Err(Error::ZeroScalar);
    }
    let q_inv = field.inv(&q)?;
    let mut m = Matrix::identity(field.clone(), DIM);
    for i in 0..DIM {
        let mut e = vec![field.zero(); DIM];
        e[i] = field.one();
        // column i of the correction: (b(e_i, v)/q(v))·v
        let coeff = field.mul(&space.polar(&e, v)?, &q_inv);
        for r in 0..DIM {
            let cur = m.get(r, i).clone();
            m.set(r, i, field.sub(&cur, &field.mul(&coeff, &v[r])));
        }
    }
    Ok(m)
}

/// A random proper isometry: the product of two reflections in random
/// anisotropic vectors.
pub fn sample_proper_isometry<R: Rng>(space: &QuadraticSpace, rng: &mut R) -> Similarity {
    let field = space.field().clone();
    let pick = |rng: &mut R| loop {
        let v: Vec<FieldElement> = (0..DIM).map(|_| field.random(rng)).collect();
        if let Ok(m) = reflection(space, &v) {
            return m;
        }
    };
    let m = pick(rng).mul(&pick(rng));
    space
        .similarity_from_matrix(&m)
        .expect("products of reflections are isometries")
}
