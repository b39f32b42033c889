//! The trialitarian automorphism ρ on proper similarity classes: every
//! proper f factors through the even Clifford algebra into companions g, h
//! with λ·f(x⋆y) = g(x)⋆h(y), ρ[f] = [g] has order three, and the three
//! multipliers are tied together by exact scalar relations.
//!
//! Run with: cargo run --example triality_orbit

use symcomp::clifford::{rho_equality, sample_proper_similarity, EvenCliffordRep};
use symcomp::constructors::{para_zorn, split_petersson};
use symcomp::field::FieldSpec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let rep = EvenCliffordRep::build(&zorn)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let f = sample_proper_similarity(&zorn, &mut rng);
    let t = rep.triality_triple(&f)?;
    println!("a random proper similarity factors as λ·f(x⋆y) = g(x)⋆h(y) with");
    println!("  λ = {}", f7.format(&t.lambda));
    println!("  μ = {}  (ν·h(x⋆y) = f(x)⋆g(y))", f7.format(&t.mu));
    println!("  ν = {}  (μ·g(x⋆y) = h(x)⋆f(y))", f7.format(&t.nu));
    println!("scalar relations:");
    println!(
        "  λμ = μ(h): {}",
        f7.mul(&t.lambda, &t.mu) == *t.h.multiplier()
    );
    println!("  μν = μ(f): {}", f7.mul(&t.mu, &t.nu) == *f.multiplier());
    println!(
        "  λν = μ(g): {}",
        f7.mul(&t.lambda, &t.nu) == *t.g.multiplier()
    );

    // ρ walks the orbit [f] → [g] → [h] → [f]: order three.
    let g1 = rep.rho(&f)?;
    let g2 = rep.rho(&g1)?;
    let g3 = rep.rho(&g2)?;
    println!("ρ[f] = [g]:   {}", g1.same_class(&t.g));
    println!("ρ²[f] = [h]:  {}", g2.same_class(&t.h));
    println!("ρ³[f] = [f]:  {}", g3.same_class(&f));

    // The opposite composition computes the inverse automorphism.
    let rep_op = EvenCliffordRep::build(&zorn.opposite())?;
    println!("ρ_op(ρ[f]) = [f]: {}", rep_op.rho(&g1)?.same_class(&f));

    // ρ pins the composition up to scalar: rescaling keeps it, a genuinely
    // different composition on the same space changes it.
    let rescaled = EvenCliffordRep::build(&zorn.scale(&f7.parse("3")?)?)?;
    let petersson = EvenCliffordRep::build(&split_petersson(f7)?)?;
    println!("ρ of 3·(para-Zorn) equals ρ of para-Zorn: {}", rho_equality(&rep, &rescaled)?);
    println!(
        "ρ of split Petersson equals ρ of para-Zorn: {}",
        rho_equality(&rep, &petersson)?
    );
    Ok(())
}
