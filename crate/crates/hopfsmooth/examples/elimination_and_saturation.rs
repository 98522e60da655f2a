//! Elimination ideals, saturation with its stabilization exponent, ideal
//! intersection and quotient, and contraction over a parameter subring.
//!
//! Run with: cargo run --example elimination_and_saturation

use hopfsmooth::field::FieldSpec;
use hopfsmooth::groebner::eliminate;
use hopfsmooth::idealops::{contract_with_multiplier, intersect, quotient, saturate, Ideal};
use hopfsmooth::poly::{parse_poly, ring};

fn main() -> hopfsmooth::Result<()> {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);

    // the circle meets the line ideal: eliminate y
    let gens = [parse_poly("x^2 + y^2 - 1", &r)?, parse_poly("y - x", &r)?];
    let elim = eliminate(&gens, &[0])?;
    println!("eliminating y from (x^2 + y^2 - 1, y - x):");
    for g in elim.generators() {
        println!("  {}", g);
    }

    let i = Ideal::new(r.clone(), vec![parse_poly("x^2*y", &r)?]);
    let x = parse_poly("x", &r)?;
    let (sat, s) = saturate(&i, &x)?;
    println!(
        "saturating (x^2 y) by x: ({}) with exponent {}",
        sat.canonical_texts()?.join(", "),
        s
    );
    let q = quotient(&i, &x, 1)?;
    println!("(x^2 y : x) = ({})", q.canonical_texts()?.join(", "));

    let meet = intersect(
        &Ideal::new(r.clone(), vec![parse_poly("x", &r)?]),
        &Ideal::new(r.clone(), vec![parse_poly("y", &r)?]),
    )?;
    println!("(x) meet (y) = ({})", meet.canonical_texts()?.join(", "));

    // contraction over the parameter t
    let rt = ring(FieldSpec::Rationals, &["t", "x"]);
    let j = Ideal::new(rt.clone(), vec![parse_poly("t*x", &rt)?]);
    let (c, f, s) = contract_with_multiplier(&j, &[0])?;
    println!(
        "contracting (t x) over k(t): ({}) after saturating by {} (exponent {})",
        c.canonical_texts()?.join(", "),
        f,
        s
    );
    Ok(())
}
