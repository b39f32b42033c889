//! Properness of similarities, decided characteristic-freely by how the
//! transported automorphism acts on the two central idempotents of the even
//! Clifford algebra: fixing them is proper, swapping them is improper. The
//! verdict behaves like a sign: it multiplies along composition.
//!
//! Run with: cargo run --example proper_and_improper

use symcomp::clifford::{reflection, sample_improper_similarity, EvenCliffordRep};
use symcomp::constructors::para_zorn;
use symcomp::field::FieldSpec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let rep = EvenCliffordRep::build(&zorn)?;
    let space = zorn.space();

    // Left and right multiplication by an anisotropic vector are improper.
    let x = ["1", "0", "2", "0", "0", "1", "0", "3"]
        .iter()
        .map(|s| f7.parse(s))
        .collect::<symcomp::Result<Vec<_>>>()?;
    let lx = space.similarity_from_matrix(&zorn.left_op(&x))?;
    let rx = space.similarity_from_matrix(&zorn.right_op(&x))?;
    println!("ℓ_x proper? {}", rep.is_proper(&lx)?);
    println!("r_x proper? {}", rep.is_proper(&rx)?);

    // Reflections are improper isometries; products of two are proper.
    let v = ["1", "1", "0", "0", "0", "0", "1", "1"]
        .iter()
        .map(|s| f7.parse(s))
        .collect::<symcomp::Result<Vec<_>>>()?;
    let refl = space.similarity_from_matrix(&reflection(space, &v)?)?;
    println!("reflection proper? {}", rep.is_proper(&refl)?);
    println!(
        "ℓ_x ∘ reflection proper? {}",
        rep.is_proper(&lx.compose(&refl))?
    );

    // The sign rule on a few random samples.
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut all_multiplied = true;
    for _ in 0..10 {
        let a = sample_improper_similarity(&zorn, &mut rng);
        let b = sample_improper_similarity(&zorn, &mut rng);
        let proper_product = rep.is_proper(&a.compose(&b))?;
        all_multiplied &= proper_product;
    }
    println!("products of two improper maps always proper (10 samples): {all_multiplied}");
    Ok(())
}
