//! The two Okubo constructions: trace-zero 3×3 matrices when the base field
//! contains a primitive cube root of unity ω, and trace-zero hermitian
//! matrices over the quadratic extension F(ω) when it does not. Both carry
//! the product (inherited from the associative one) that composes with the
//! norm but has no unit.
//!
//! Run with: cargo run --example okubo_families

use symcomp::constructors::{okubo, okubo_hermitian, okubo_matrix, OkuboInput};
use symcomp::field::FieldSpec;

fn main() -> symcomp::Result<()> {
    // 7 ≡ 1 (mod 3): F₇ contains ω (namely 2 and 4), so the split matrix
    // construction applies directly.
    let f7 = FieldSpec::prime(7)?;
    let split = okubo_matrix(f7.clone())?;
    println!(
        "Okubo from sl₃ over F₇:        λ = {}, para-unit: {:?}",
        f7.format(split.multiplier()),
        split.para_unit_search()?.map(|u| u
            .iter()
            .map(|e| f7.format(e))
            .collect::<Vec<_>>()
            .join(","))
    );

    // 5 ≡ 2 (mod 3): F₅ has no ω, so the construction descends to hermitian
    // trace-zero matrices over F₂₅ = F₅(ω); the result is defined over F₅.
    let f5 = FieldSpec::prime(5)?;
    let hermitian = okubo_hermitian(f5.clone())?;
    println!(
        "Okubo hermitian over F₅:       λ = {}, field of definition: {}",
        f5.format(hermitian.multiplier()),
        hermitian.field()
    );

    // One dispatcher covers both routes; pick by whether the field already
    // contains ω, i.e. whether p ≡ 1 (mod 3).
    for p in [7u64, 5, 13, 11] {
        let field = FieldSpec::prime(p)?;
        let input = if p % 3 == 1 {
            OkuboInput::Matrix
        } else {
            OkuboInput::Hermitian
        };
        let comp = okubo(field.clone(), &input)?;
        let (dim, _) = comp.derivations();
        println!(
            "okubo over F_{p:<3} ({input:?}):  λ = {}, derivation dimension = {dim}",
            field.format(comp.multiplier()),
        );
    }

    // Characteristic 3 is genuinely different territory: the matrix route
    // needs ω ≠ 1, which no field of characteristic 3 has.
    let f3 = FieldSpec::prime(3)?;
    match okubo_matrix(f3) {
        Err(e) => println!("okubo over F₃: rejected ({e})"),
        Ok(_) => println!("okubo over F₃: unexpectedly built"),
    }
    Ok(())
}
