//! The two-parameter table family ◇_{a,b} on the hyperbolic basis
//! e₁..e₄, f₁..f₄: a closed-form structure-constant table whose entries are
//! monomials in a and b. Over any field the parameters are units; varying
//! them rescales cells of the table, and all members with cube parameters
//! are isomorphic.
//!
//! Run with: cargo run --example table_family

use symcomp::composition::SymmetricComposition;
use symcomp::constructors::{table_composition, table_rescaling_witness};
use symcomp::field::FieldSpec;

fn product_line(
    comp: &SymmetricComposition,
    names: &[&str],
    i: usize,
    j: usize,
) -> String {
    let field = comp.field();
    let mut terms = Vec::new();
    for k in 0..8 {
        let c = comp.gamma_at(i, j, k);
        if !field.is_zero(c) {
            let coeff = field.format(c);
            if coeff == "1" {
                terms.push(names[k].to_string());
            } else {
                terms.push(format!("{coeff}·{}", names[k]));
            }
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let names = ["e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4"];

    let a = f7.parse("2")?;
    let b = f7.parse("3")?;
    let comp = table_composition(f7.clone(), &a, &b)?;
    println!("◇_(2,3) over F₇: λ = {}", f7.format(comp.multiplier()));
    println!("a few products:");
    for (i, j) in [(0usize, 0usize), (3, 3), (7, 7), (0, 4), (3, 7)] {
        println!(
            "  {} ◇ {} = {}",
            names[i],
            names[j],
            product_line(&comp, &names, i, j)
        );
    }

    // When a and b are cubes, ◇_{a,b} is isomorphic to ◇_{1,1} through an
    // explicit diagonal rescaling of the basis.
    let f5 = FieldSpec::prime(5)?;
    // Over F₅ every element is a cube: 2 = 3³ and 3 = 2³.
    let a5 = f5.parse("2")?;
    let b5 = f5.parse("3")?;
    let witness = table_rescaling_witness(&f5, &f5.parse("3")?, &f5.parse("2")?)?;
    let one = table_composition(f5.clone(), &f5.one(), &f5.one())?;
    let target = table_composition(f5.clone(), &a5, &b5)?;
    let mu = one.similarity_check(&target, &witness);
    println!(
        "\ndiagonal witness carries ◇_(1,1) to ◇_(2,3) over F₅: {}",
        match mu {
            Some(m) => format!("yes (multiplier {})", f5.format(&m)),
            None => "no".to_string(),
        }
    );

    // Characteristic 3: the family still verifies — these are the symmetric
    // compositions specific to that characteristic.
    let f3 = FieldSpec::prime(3)?;
    for (a, b) in [(1u64, 1u64), (1, 2), (2, 1), (2, 2)] {
        let comp = table_composition(f3.clone(), &f3.element_at(a), &f3.element_at(b))?;
        let (dim, _) = comp.derivations();
        println!(
            "◇_({a},{b}) over F₃: λ = {}, derivation dimension = {dim}",
            f3.format(comp.multiplier())
        );
    }
    Ok(())
}
