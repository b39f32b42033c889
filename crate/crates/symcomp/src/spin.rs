//! The triple model of the spin group of an eight-dimensional symmetric
//! composition, with its lifted triality action.
//!
//! For a normalized symmetric composition `(S, ⋆, n)` the spin group is
//! presented by triples `(f, f₁, f₂)` of proper isometries satisfying
//! `f(x⋆y) = f₁(x)⋆f₂(y)`; any one of the three cyclic relations implies
//! the other two. The lifted trialitarian automorphism is the cyclic shift
//! `ρ̂: (f, f₁, f₂) ↦ (f₁, f₂, f)`, and a change of composition by a twist
//! triple `(h, h₁, h₂)` with `h₂h₁h = Id` rewrites every triple into the
//! presentation over `x◇y = h(x)⋆h₂⁻¹(y)`.
//!
//! Completing a bare proper isometry `f` to a triple runs triality to get
//! companions `(g, h, λ)` and then rescales them to isometries; the needed
//! square roots may not exist over a non-closed field, in which case the
//! class has no spin lift and the failure is reported as an outcome rather
//! than a bug.

use crate::clifford::EvenCliffordRep;
use crate::composition::SymmetricComposition;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quadform::Similarity;

/// A point of the spin group in the triple presentation: proper isometries
/// with `f(x⋆y) = f₁(x)⋆f₂(y)` over a normalized composition. Constructed
/// only through the checked operations in this module, so the relation and
/// parity invariants always hold.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinTriple {
    composition: SymmetricComposition,
    f: Matrix,
    f1: Matrix,
    f2: Matrix,
}

/// All three cyclic relations, coefficient-wise:
/// `f(x⋆y) = f₁(x)⋆f₂(y)`, `f₁(x⋆y) = f₂(x)⋆f(y)`, `f₂(x⋆y) = f(x)⋆f₁(y)`.
fn check_relations(
    comp: &SymmetricComposition,
    f: &Matrix,
    f1: &Matrix,
    f2: &Matrix,
) -> Result<()> {
    let checks = [(1u8, f, f1, f2), (2u8, f1, f2, f), (3u8, f2, f, f1)];
    for (which, outer, left, right) in checks {
        if comp.compose_after(outer) != comp.pair_product_tensor(left, right) {
            return Err(Error::TripleRelationFailure {
                which,
                witness: "composed tensor differs from the paired product".into(),
            });
        }
    }
    Ok(())
}

/// Validate a candidate triple over the representation's composition:
/// each component must be a proper isometry, and the defining relation must
/// hold (the other two cyclic relations are then checked as well — by the
/// triple model they cannot fail independently, so a failure there signals
/// an internal inconsistency).
pub fn validate_triple(
    rep: &EvenCliffordRep,
    f: &Matrix,
    f1: &Matrix,
    f2: &Matrix,
) -> Result<SpinTriple> {
    let comp = rep.composition();
    if !comp.is_normalized() {
        return Err(Error::PresentationConstraint(
            "the triple presentation requires a normalized composition (λ = 1)".into(),
        ));
    }
    for m in [f, f1, f2] {
        let sim = comp.space().similarity_from_matrix(m)?;
        if !sim.is_isometry() {
            return Err(Error::NotAnIsometry);
        }
        if !rep.is_proper(&sim)? {
            return Err(Error::WrongParity {
                expected_proper: true,
            });
        }
    }
    check_relations(comp, f, f1, f2)?;
    Ok(SpinTriple {
        composition: comp.clone(),
        f: f.clone(),
        f1: f1.clone(),
        f2: f2.clone(),
    })
}

/// Complete a proper isometry to a spin triple: run triality to obtain the
/// companions `(g, h)` with `λ·f(x⋆y) = g(x)⋆h(y)`, then look for scalars
/// `s`, `t` making `s·g` and `t·h` isometries with `s·t·λ = 1`. The square
/// roots need not exist over the base field; that is a genuine obstruction,
/// reported as a no-lift outcome.
pub fn complete_triple(rep: &EvenCliffordRep, f: &Similarity) -> Result<SpinTriple> {
    let comp = rep.composition();
    let field = comp.field();
    if !f.is_isometry() {
        return Err(Error::NotAnIsometry);
    }
    let triple = rep.triality_triple(f)?;
    let s = field
        .sqrt(&field.inv(triple.g.multiplier())?)
        .ok_or_else(|| Error::NoLift("the first companion's multiplier is not a square".into()))?;
    let mut t = field
        .sqrt(&field.inv(triple.h.multiplier())?)
        .ok_or_else(|| Error::NoLift("the second companion's multiplier is not a square".into()))?;
    // (s·t·λ)² = (μ(g)·μ(h))⁻¹·λ² = μ(f)⁻¹ = 1, so at worst flip one sign.
    if !field.is_one(&field.mul(&field.mul(&s, &t), &triple.lambda)) {
        t = field.neg(&t);
    }
    validate_triple(
        rep,
        f.matrix(),
        &triple.g.matrix().scale(&s),
        &triple.h.matrix().scale(&t),
    )
}

/// Componentwise product of two triples over one composition.
pub fn compose_triples(a: &SpinTriple, b: &SpinTriple) -> Result<SpinTriple> {
    if a.composition.gamma() != b.composition.gamma()
        || a.composition.field() != b.composition.field()
    {
        return Err(Error::DimensionMismatch {
            expected: "two triples over one composition".into(),
            found: "different compositions".into(),
        });
    }
    let out = SpinTriple {
        composition: a.composition.clone(),
        f: a.f.mul(&b.f),
        f1: a.f1.mul(&b.f1),
        f2: a.f2.mul(&b.f2),
    };
    check_relations(&out.composition, &out.f, &out.f1, &out.f2)?;
    Ok(out)
}

impl SpinTriple {
    pub fn composition(&self) -> &SymmetricComposition {
        &self.composition
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn f1(&self) -> &Matrix {
        &self.f1
    }

    pub fn f2(&self) -> &Matrix {
        &self.f2
    }

    /// The lifted trialitarian automorphism: the cyclic shift
    /// `(f, f₁, f₂) ↦ (f₁, f₂, f)`. The shifted relation is the second
    /// cyclic relation of the original triple, so validity is preserved.
    pub fn rho_hat(&self) -> SpinTriple {
        let out = SpinTriple {
            composition: self.composition.clone(),
            f: self.f1.clone(),
            f1: self.f2.clone(),
            f2: self.f.clone(),
        };
        check_relations(&out.composition, &out.f, &out.f1, &out.f2)
            .expect("cyclic shift of a valid triple stays valid");
        out
    }

    /// Componentwise inverse; valid because the defining relation inverts.
    pub fn inverse(&self) -> SpinTriple {
        let inv = |m: &Matrix| m.inverse().expect("triple components are invertible");
        let out = SpinTriple {
            composition: self.composition.clone(),
            f: inv(&self.f),
            f1: inv(&self.f1),
            f2: inv(&self.f2),
        };
        check_relations(&out.composition, &out.f, &out.f1, &out.f2)
            .expect("componentwise inverse of a valid triple stays valid");
        out
    }
}

/// Rewrite a triple over `⋆` into the presentation over the twisted
/// composition `x◇y = h(x)⋆h₂⁻¹(y)`, where the twist data `(h, h₁, h₂)` is
/// itself a spin triple over `⋆` subject to `h₂·h₁·h = Id`. The passage is
/// `(f, f₁, f₂) ↦ (f, h⁻¹f₁h, h₂f₂h₂⁻¹)`, returned together with the
/// verified composition `◇` it now lives over.
pub fn change_presentation(
    tr: &SpinTriple,
    twist: &SpinTriple,
) -> Result<(SymmetricComposition, SpinTriple)> {
    let comp = &tr.composition;
    if comp.gamma() != twist.composition.gamma() || comp.field() != twist.composition.field() {
        return Err(Error::DimensionMismatch {
            expected: "twist data over the triple's own composition".into(),
            found: "a different composition".into(),
        });
    }
    let h = &twist.f;
    let h2 = &twist.f2;
    if !h2.mul(&twist.f1).mul(h).is_identity() {
        return Err(Error::PresentationConstraint(
            "twist triple must satisfy h₂·h₁·h = Id".into(),
        ));
    }
    let h_inv = h.inverse().ok_or(Error::NotInvertible)?;
    let h2_inv = h2.inverse().ok_or(Error::NotInvertible)?;
    let diamond = SymmetricComposition::verify(
        comp.space().clone(),
        comp.pair_product_tensor(h, &h2_inv),
    )?;
    let rep = EvenCliffordRep::build(&diamond)?;
    let f1 = h_inv.mul(&tr.f1).mul(h);
    let f2 = h2.mul(&tr.f2).mul(&h2_inv);
    let out = validate_triple(&rep, &tr.f, &f1, &f2)?;
    Ok((diamond, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{sample_proper_isometry, EvenCliffordRep};
    use crate::constructors::{coordinate_cycle, para_zorn};
    use crate::field::FieldSpec;
    use crate::quadform::DIM;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f7() -> FieldSpec {
        FieldSpec::Prime(7)
    }

    fn rep7() -> EvenCliffordRep {
        EvenCliffordRep::build(&para_zorn(f7()).unwrap()).unwrap()
    }

    /// A random spin triple: complete sampled proper isometries until the
    /// square-root obstruction vanishes.
    fn sample_triple(rep: &EvenCliffordRep, rng: &mut ChaCha8Rng) -> SpinTriple {
        loop {
            let f = sample_proper_isometry(rep.composition().space(), rng);
            match complete_triple(rep, &f) {
                Ok(t) => return t,
                Err(Error::NoLift(_)) => continue,
                Err(e) => panic!("unexpected completion failure: {e}"),
            }
        }
    }

    #[test]
    fn identity_homothety_and_automorphism_triples_validate() {
        let rep = rep7();
        let field = f7();
        let id = Matrix::identity(field.clone(), DIM);
        let t = validate_triple(&rep, &id, &id, &id).unwrap();
        assert_eq!(t.f(), &id);

        let pi = coordinate_cycle(&field);
        validate_triple(&rep, &pi, &pi, &pi).unwrap();

        // (Id, −Id, −Id): the two signs cancel in the paired product.
        let neg = id.neg();
        validate_triple(&rep, &id, &neg, &neg).unwrap();
    }

    #[test]
    fn validation_rejects_non_isometries_improper_maps_and_broken_relations() {
        let rep = rep7();
        let field = f7();
        let comp = rep.composition().clone();
        let id = Matrix::identity(field.clone(), DIM);
        let doubled = id.scale(&field.from_i64(2));
        assert!(matches!(
            validate_triple(&rep, &doubled, &id, &id),
            Err(Error::NotAnIsometry)
        ));

        // A left multiplication at a norm-one vector is an improper isometry.
        let e = comp.space().find_norm_one().unwrap();
        let ell = comp.left_op(&e);
        assert!(matches!(
            validate_triple(&rep, &ell, &ell, &ell),
            Err(Error::WrongParity {
                expected_proper: true
            })
        ));

        let pi = coordinate_cycle(&field);
        assert!(matches!(
            validate_triple(&rep, &id, &pi, &id),
            Err(Error::TripleRelationFailure { which: 1, .. })
        ));
    }

    #[test]
    fn completing_the_identity_and_the_cycle_gives_constant_triples() {
        let rep = rep7();
        let field = f7();
        let comp = rep.composition();
        let id_sim = comp
            .space()
            .similarity_from_matrix(&Matrix::identity(field.clone(), DIM))
            .unwrap();
        let t = complete_triple(&rep, &id_sim).unwrap();
        assert!(t.f().is_identity() && t.f1().is_identity() && t.f2().is_identity());

        let pi = coordinate_cycle(&field);
        let pi_sim = comp.space().similarity_from_matrix(&pi).unwrap();
        let t = complete_triple(&rep, &pi_sim).unwrap();
        assert_eq!(t.f1(), &pi);
        assert_eq!(t.f2(), &pi);
    }

    #[test]
    fn completion_preserves_f_matches_rho_and_can_legitimately_fail() {
        // Over F₅ the spinor-norm obstruction is visible: sampling products
        // of two reflections finds both liftable and unliftable classes.
        let field = FieldSpec::Prime(5);
        let comp = para_zorn(field.clone()).unwrap();
        let rep = EvenCliffordRep::build(&comp).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let mut lifted = 0usize;
        let mut obstructed = 0usize;
        for _ in 0..12 {
            let f = sample_proper_isometry(comp.space(), &mut rng);
            match complete_triple(&rep, &f) {
                Ok(t) => {
                    lifted += 1;
                    assert_eq!(t.f(), f.matrix());
                    let f1_sim = comp.space().similarity_from_matrix(t.f1()).unwrap();
                    assert!(f1_sim.same_class(&rep.rho(&f).unwrap()));
                }
                Err(Error::NoLift(_)) => obstructed += 1,
                Err(e) => panic!("unexpected completion failure: {e}"),
            }
        }
        assert!(lifted > 0, "no liftable isometry found in the sample");
        assert!(obstructed > 0, "no spinor-norm obstruction in the sample");
    }

    #[test]
    fn rho_hat_has_order_three_and_is_multiplicative() {
        let rep = rep7();
        let field = f7();
        let pi = coordinate_cycle(&field);
        let pi_triple = validate_triple(&rep, &pi, &pi, &pi).unwrap();
        assert_eq!(pi_triple.rho_hat(), pi_triple);

        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let t1 = sample_triple(&rep, &mut rng);
        let t2 = sample_triple(&rep, &mut rng);
        assert_eq!(t1.rho_hat().rho_hat().rho_hat(), t1);
        assert_eq!(
            compose_triples(&t1, &t2).unwrap().rho_hat(),
            compose_triples(&t1.rho_hat(), &t2.rho_hat()).unwrap()
        );

        // Group sanity: identity element and the square of the π-triple.
        let id = Matrix::identity(field.clone(), DIM);
        let id_triple = validate_triple(&rep, &id, &id, &id).unwrap();
        assert_eq!(compose_triples(&t1, &id_triple).unwrap(), t1);
        let sq = compose_triples(&pi_triple, &pi_triple).unwrap();
        assert_eq!(sq.f(), &pi.mul(&pi));
        assert_eq!(compose_triples(&t1, &t1.inverse()).unwrap(), id_triple);
    }

    #[test]
    fn presentation_change_by_the_cycle_triple_lands_on_the_twist() {
        let rep = rep7();
        let field = f7();
        let comp = rep.composition().clone();
        let id = Matrix::identity(field.clone(), DIM);
        let id_triple = validate_triple(&rep, &id, &id, &id).unwrap();

        // Trivial twist: nothing moves.
        let (same, back) = change_presentation(&id_triple, &id_triple).unwrap();
        assert_eq!(same.gamma(), comp.gamma());
        assert_eq!(back, id_triple);

        // Twisting by (π, π, π) rewrites triples over the Petersson twist.
        let pi = coordinate_cycle(&field);
        let w = validate_triple(&rep, &pi, &pi, &pi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let t = sample_triple(&rep, &mut rng);
        let (diamond, moved) = change_presentation(&t, &w).unwrap();
        assert_eq!(
            diamond.gamma(),
            comp.twist_by_automorphism(&pi).unwrap().gamma()
        );
        assert_eq!(moved.f(), t.f());

        // The lifted triality maps are intertwined:
        // ρ̂_◇(T(t)) = T(w⁻¹ · ρ̂_⋆(t) · w).
        let conjugated =
            compose_triples(&compose_triples(&w.inverse(), &t.rho_hat()).unwrap(), &w).unwrap();
        let (_, expected) = change_presentation(&conjugated, &w).unwrap();
        assert_eq!(moved.rho_hat(), expected);

        // A twist triple violating h₂·h₁·h = Id is refused.
        let mut bad = sample_triple(&rep, &mut rng);
        while bad.f2().mul(bad.f1()).mul(bad.f()).is_identity() {
            bad = sample_triple(&rep, &mut rng);
        }
        assert!(matches!(
            change_presentation(&t, &bad),
            Err(Error::PresentationConstraint(_))
        ));
    }
}
