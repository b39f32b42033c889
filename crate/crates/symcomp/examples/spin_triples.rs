//! Triples (f, f₁, f₂) of proper isometries with f(x⋆y) = f₁(x)⋆f₂(y): one
//! relation implies its two cyclic companions, completion from f alone
//! succeeds exactly when two square roots exist, the cyclic shift realizes
//! triality on triples, and a twist of the composition transports triples
//! by an explicit change of presentation.
//!
//! Run with: cargo run --example spin_triples

use symcomp::clifford::{sample_proper_isometry, EvenCliffordRep};
use symcomp::constructors::{coordinate_cycle, para_zorn};
use symcomp::error::Error;
use symcomp::field::FieldSpec;
use symcomp::spin::{change_presentation, complete_triple, compose_triples, validate_triple};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let rep = EvenCliffordRep::build(&zorn)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);

    // Completion: for a proper isometry f the companion classes are fixed by
    // triality, and lifting them to genuine isometries needs two square
    // roots in the field — so completion can legitimately fail.
    let mut lifted = 0;
    let mut obstructed = 0;
    let mut example = None;
    while lifted + obstructed < 12 {
        let f = sample_proper_isometry(zorn.space(), &mut rng);
        match complete_triple(&rep, &f) {
            Ok(t) => {
                lifted += 1;
                example.get_or_insert(t);
            }
            Err(Error::NoLift(_)) => obstructed += 1,
            Err(e) => return Err(e),
        }
    }
    println!("of 12 random proper isometries: {lifted} lift to triples, {obstructed} are obstructed");

    let t = example.expect("some lift among 12 samples");
    println!(
        "a completed triple satisfies all three cyclic relations by construction; \
         shifting it three times returns it: {}",
        t.rho_hat().rho_hat().rho_hat() == t
    );

    // Triples form a group under componentwise composition.
    let squared = compose_triples(&t, &t)?;
    let back = compose_triples(&squared, &t.inverse())?;
    println!("group structure (t·t)·t⁻¹ = t: {}", back == t);

    // The constant triple at an order-3 automorphism changes presentation:
    // it carries triples over ⋆ to triples over the twisted composition.
    let pi = coordinate_cycle(&f7);
    let cycle_triple = validate_triple(&rep, &pi, &pi, &pi)?;
    let (twisted, transported) = change_presentation(&t, &cycle_triple)?;
    println!(
        "presentation change lands on the π-twist of para-Zorn: {}",
        twisted.gamma() == zorn.twist_by_automorphism(&pi)?.gamma()
    );
    println!(
        "the transported triple keeps its outer component f: {}",
        transported.f() == t.f()
    );
    Ok(())
}
