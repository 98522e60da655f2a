//! First-order ring formulas mirroring the algebraic predicates: build,
//! print, evaluate, and compare against the direct algorithms.
//!
//! Run with: cargo run --example ring_formulas

use hopfsmooth::field::FieldSpec;
use hopfsmooth::fol::{build, evaluate, print_formula, Assignment, FormulaKind};
use hopfsmooth::groebner::is_groebner;
use hopfsmooth::monomial::MonomialOrder;
use hopfsmooth::poly::{parse_poly, ring};

fn main() -> hopfsmooth::Result<()> {
    let psi = build(FormulaKind::CharacteristicIs { p: 5 }, 0)?;
    println!("characteristic-5 sentence: {}", print_formula(&psi));
    println!(
        "  over F_5: {} | over F_3: {}",
        evaluate(&psi, &Assignment::new(FieldSpec::prime_field(5)?))?,
        evaluate(&psi, &Assignment::new(FieldSpec::prime_field(3)?))?,
    );

    let phi = build(FormulaKind::InitialTermIs { e: 2, d: 3 }, 1)?;
    println!("initial-term formula: {}", print_formula(&phi));

    // the Groebner criterion as a formula, against the checker
    let d = 6;
    let beta = build(FormulaKind::IsGroebner { d }, 2)?;
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    for gens in [vec!["x^2 + y^2", "x*y"], vec!["x", "y"]] {
        let polys: Vec<_> = gens
            .iter()
            .map(|t| parse_poly(t, &r))
            .collect::<hopfsmooth::Result<Vec<_>>>()?;
        let mut a = Assignment::new(FieldSpec::Rationals);
        a.bind_basis(&polys, d)?;
        println!(
            "{:?}: formula {} | checker {}",
            gens,
            evaluate(&beta, &a)?,
            is_groebner(&polys, &MonomialOrder::GradedLex)?,
        );
    }
    Ok(())
}
