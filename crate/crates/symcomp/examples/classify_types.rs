//! Classification evidence: a para-unit marks a para-octonion-like
//! composition (type I), its certified absence plus an 8-dimensional
//! derivation algebra marks an Okubo-like one (type II). Over infinite
//! fields the search cannot be exhausted and the verdict honestly stays
//! undetermined.
//!
//! Run with: cargo run --example classify_types

use symcomp::composition::SymmetricComposition;
use symcomp::constructors::{okubo_matrix, para_zorn, split_petersson};
use symcomp::error::Error;
use symcomp::field::FieldSpec;

fn evidence(name: &str, comp: &SymmetricComposition) -> symcomp::Result<()> {
    let field = comp.field();
    let (dim, _) = comp.derivations();
    let search = match comp.para_unit_search() {
        Ok(Some(unit)) => format!(
            "para-unit at ({})",
            unit.iter()
                .map(|e| field.format(e))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Ok(None) => "no para-unit (exhaustive)".to_string(),
        Err(Error::InfiniteField) => "search impossible (infinite field)".to_string(),
        Err(Error::BudgetExceeded { needed, budget }) => {
            format!("search skipped ({needed} candidates > budget {budget})")
        }
        Err(e) => return Err(e),
    };
    println!("  {name:<28} der-dim {dim:>2}, {search}");
    Ok(())
}

fn main() -> symcomp::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    println!("over F₇:");
    evidence("para-Zorn", &para_zorn(f7.clone())?)?;
    evidence("split Petersson", &split_petersson(f7.clone())?)?;
    evidence("Okubo (split matrix)", &okubo_matrix(f7.clone())?)?;

    println!("over F₁₃ (13⁸ candidates exceed the default budget):");
    evidence("Okubo (split matrix)", &okubo_matrix(FieldSpec::prime(13)?)?)?;

    println!("over ℚ:");
    evidence("para-Zorn", &para_zorn(FieldSpec::Rational)?)?;
    evidence("split Petersson", &split_petersson(FieldSpec::Rational)?)?;

    println!(
        "\nderivation dimension 14 goes with an octonion-type composition, 8 with an \
         Okubo-type one (away from characteristic 3); the para-unit settles type I \
         wherever the search can finish."
    );
    Ok(())
}
