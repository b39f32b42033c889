//! The quadratic spaces underneath the compositions: evaluating the norm,
//! polar forms, similarity multipliers, and recognizing hyperbolic forms by
//! counting zeros over a finite field.
//!
//! Run with: cargo run --example quadratic_spaces

use symcomp::constructors::{okubo_matrix, para_zorn};
use symcomp::field::FieldSpec;
use symcomp::quadform::QuadraticSpace;

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let zorn = para_zorn(f7.clone())?;
    let space = zorn.space();

    // The para-Zorn norm on coordinates (α, a₁..a₃, b₁..b₃, β) is
    // αβ − a·b, a sum of four hyperbolic planes.
    let x = ["1", "2", "0", "3", "0", "5", "0", "4"]
        .iter()
        .map(|s| f7.parse(s))
        .collect::<symcomp::Result<Vec<_>>>()?;
    println!("n(x)        = {}", f7.format(&space.evaluate(&x)?));

    let y = ["0", "1", "1", "0", "2", "0", "0", "6"]
        .iter()
        .map(|s| f7.parse(s))
        .collect::<symcomp::Result<Vec<_>>>()?;
    println!("b_n(x, y)   = {}", f7.format(&space.polar(&x, &y)?));

    // Left multiplication by an anisotropic vector is a similarity with
    // multiplier λ·n(x): the norm scales uniformly.
    let lx = zorn.left_op(&x);
    let sim = space.similarity_from_matrix(&lx)?;
    println!(
        "μ(ℓ_x)      = {}  (equals λ·n(x) = {})",
        f7.format(sim.multiplier()),
        f7.format(&f7.mul(zorn.multiplier(), &space.evaluate(&x)?))
    );

    // Over a finite field, a form is hyperbolic exactly when it has the
    // maximal number of zeros; for rank 8 over F_q that is q⁷ + q⁴ − q³.
    let okubo = okubo_matrix(f7.clone())?;
    let standard = QuadraticSpace::standard_hyperbolic(f7.clone());
    println!(
        "zeros of the Okubo norm over F₇:      {}",
        okubo.space().count_zeros()?
    );
    println!(
        "zeros of the standard hyperbolic one: {}",
        standard.count_zeros()?
    );
    println!(
        "the Okubo space is hyperbolic:        {}",
        okubo.space().is_hyperbolic()?
    );
    Ok(())
}
