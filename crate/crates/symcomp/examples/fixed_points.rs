//! Automorphisms of the composition are exactly the fixed classes of ρ, and
//! a fixed class contains a unique automorphism that can be recovered from
//! any of its scalar multiples.
//!
//! Run with: cargo run --example fixed_points

use symcomp::clifford::EvenCliffordRep;
use symcomp::constructors::{coordinate_cycle, para_zorn};
use symcomp::field::FieldSpec;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let rep = EvenCliffordRep::build(&zorn)?;

    // The coordinate 3-cycle permuting the two isotropic triples is an
    // automorphism of the para-Zorn product.
    let pi = coordinate_cycle(&f7);
    println!("π is an automorphism: {}", zorn.is_automorphism(&pi));

    let pi_sim = zorn.space().similarity_from_matrix(&pi)?;
    println!(
        "ρ[π] = [π] (automorphisms are fixed): {}",
        rep.rho(&pi_sim)?.same_class(&pi_sim)
    );

    // Hand the lift a rescaled representative c·π: homotheties of an
    // automorphism stay in the fixed class, and fixed_point_lift divides the
    // scalar back out.
    for c in ["2", "3", "6"] {
        let scaled = zorn
            .space()
            .similarity_from_matrix(&pi.scale(&f7.parse(c)?))?;
        let lift = rep.fixed_point_lift(&scaled)?;
        println!(
            "lift from {c}·π: automorphism recovered exactly = {}",
            lift == pi
        );
    }

    // A class that ρ moves is rejected.
    let moved = zorn
        .space()
        .similarity_from_matrix(&zorn.left_op(&{
            let mut x = vec![f7.zero(); 8];
            x[0] = f7.one();
            x[7] = f7.parse("3")?;
            x
        }))?;
    let not_fixed = rep.fixed_point_lift(&moved.compose(&moved));
    println!(
        "lift from a non-fixed class: {}",
        match not_fixed {
            Err(e) => format!("rejected ({e})"),
            Ok(_) => "unexpectedly accepted".to_string(),
        }
    );
    Ok(())
}
