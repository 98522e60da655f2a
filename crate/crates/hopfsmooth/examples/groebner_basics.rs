//! Compute a reduced Groebner basis, run the division algorithm, and read
//! off the Krull dimension.
//!
//! Run with: cargo run --example groebner_basics

use hopfsmooth::field::FieldSpec;
use hopfsmooth::groebner::{buchberger, dimension, divide, dube_bound, is_groebner};
use hopfsmooth::monomial::MonomialOrder;
use hopfsmooth::poly::{parse_poly, ring};

fn main() -> hopfsmooth::Result<()> {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let gens = [
        parse_poly("x^2 + y^2", &r)?,
        parse_poly("x*y", &r)?,
    ];
    println!("generators:");
    for g in &gens {
        println!("  {}", g);
    }

    let ord = MonomialOrder::GradedLex;
    let gb = buchberger(&gens, &ord)?;
    println!("reduced Groebner basis:");
    for g in gb.generators() {
        println!("  {}", g);
    }
    println!("passes the criterion checker: {}", is_groebner(gb.generators(), &ord)?);

    let f = parse_poly("x^3 + x*y^2 + y^3", &r)?;
    let div = divide(&f, gb.generators(), &ord)?;
    println!("dividing {}:", f);
    for (q, g) in div.quotients.iter().zip(gb.generators()) {
        println!("  ({}) * ({})", q, g);
    }
    println!("  remainder {}", div.remainder);

    println!("dimension of the quotient: {}", dimension(&gb)?);
    let bound = dube_bound(2, 2)?;
    println!(
        "degree bound for quadratic inputs in two variables: {} (coarse {})",
        bound.fine, bound.coarse
    );
    Ok(())
}
