//! The even Clifford representation: each basis vector e_i acts on S ⊕ S by
//! an off-diagonal block matrix, the degree-2 products span the full
//! 128-dimensional algebra End(S) × End(S), and every similarity of the
//! space transports to an algebra automorphism.
//!
//! Run with: cargo run --example even_clifford

use symcomp::clifford::{sample_proper_similarity, EvenCliffordRep, EVEN_DIM};
use symcomp::constructors::para_zorn;
use symcomp::field::FieldSpec;
use symcomp::linalg::Matrix;
use symcomp::quadform::DIM;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let rep = EvenCliffordRep::build(&zorn)?;
    println!(
        "even Clifford algebra of the para-Zorn space: dimension {EVEN_DIM} reached"
    );

    // The generator images satisfy the defining relations
    // α(e_i)² = n(e_i)·Id and α(e_i)α(e_j) + α(e_j)α(e_i) = b(e_i,e_j)·Id.
    let id16 = Matrix::identity(f7.clone(), 2 * DIM);
    let e = |i: usize| -> Vec<_> {
        (0..DIM)
            .map(|k| if k == i { f7.one() } else { f7.zero() })
            .collect()
    };
    let a0 = rep.generator_image(0);
    let a7 = rep.generator_image(7);
    let n0 = zorn.space().evaluate(&e(0))?;
    let b07 = zorn.space().polar(&e(0), &e(7))?;
    println!(
        "α(e₀)² = n(e₀)·Id:                 {}",
        a0.mul(&a0) == id16.scale(&n0)
    );
    println!(
        "α(e₀)α(e₇) + α(e₇)α(e₀) = b·Id:    {}",
        a0.mul(&a7).add(&a7.mul(&a0)) == id16.scale(&b07)
    );

    // Transport is functorial: the automorphism attached to a product of
    // similarities is the composite of the attached automorphisms, and
    // rescaling the similarity does not change it.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = sample_proper_similarity(&zorn, &mut rng);
    let g = sample_proper_similarity(&zorn, &mut rng);
    let t_f = rep.transport(&f)?;
    let t_g = rep.transport(&g)?;
    let t_fg = rep.transport(&f.compose(&g))?;
    println!(
        "Φ_{{fg}} = Φ_f ∘ Φ_g:                 {}",
        t_fg.matrix() == t_f.compose(&t_g).matrix()
    );
    let rescaled = zorn
        .space()
        .similarity_from_matrix(&f.matrix().scale(&f7.parse("5")?))?;
    println!(
        "Φ_{{5f}} = Φ_f (scale invariance):    {}",
        rep.transport(&rescaled)?.matrix() == t_f.matrix()
    );
    Ok(())
}
