//! Scaling a composition changes its multiplier by a square; normalization
//! walks back to the unique composition with λ = 1 similar to it, returning
//! the similarity that implements the passage.
//!
//! Run with: cargo run --example normalize_and_scale

use symcomp::constructors::para_zorn;
use symcomp::field::FieldSpec;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    println!("para-Zorn multiplier:            λ = {}", f7.format(zorn.multiplier()));

    // x ∘ y = ν·(x ⋆ y) multiplies the norm identity by ν².
    let nu = f7.parse("3")?;
    let scaled = zorn.scale(&nu)?;
    println!(
        "after scaling by ν = 3:          λ = {} (= ν²·λ)",
        f7.format(scaled.multiplier())
    );

    // The opposite composition x ∘ y = y ⋆ x keeps the multiplier.
    let opposite = scaled.opposite();
    println!(
        "opposite of the scaled one:      λ = {}",
        f7.format(opposite.multiplier())
    );

    // normalize picks a norm-one base point u and conjugates through the
    // multiplication operators at u; the returned map is a similarity from
    // the normalized composition back to the input with multiplier λ⁻¹.
    let (normalized, map) = scaled.normalize(None)?;
    println!(
        "normalized:                      λ = {}",
        f7.format(normalized.multiplier())
    );
    println!(
        "normalization map multiplier:    μ = {} (= λ⁻¹)",
        f7.format(map.multiplier())
    );

    // The map intertwines the two products up to the recorded multiplier,
    // which is exactly what similarity_check verifies.
    let mu = normalized
        .similarity_check(&scaled, map.matrix())
        .expect("the normalization map relates the two compositions");
    println!(
        "similarity_check recomputes:     μ = {}",
        f7.format(&mu)
    );
    Ok(())
}
