//! The graded monomial enumeration and dense d-bounded coefficient vectors.
//!
//! Run with: cargo run --example bounded_encodings

use hopfsmooth::field::FieldSpec;
use hopfsmooth::monomial::{monomial_rank, monomial_unrank};
use hopfsmooth::poly::{from_bounded, parse_poly, ring, to_bounded};

fn main() -> hopfsmooth::Result<()> {
    println!("the first ten monomials of k[x, y]:");
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    for k in 1..=10u64 {
        let m = monomial_unrank(k, 2)?;
        let p = hopfsmooth::poly::Polynomial::from_term(&r, m.clone(), r.field.one());
        println!("  m_{} = {}   (rank recomputed: {})", k, p, monomial_rank(&m)?);
    }
    let f = parse_poly("x^2 - 2*x*y + 1", &r)?;
    let b = to_bounded(&f, 6)?;
    let coeffs: Vec<String> = b.coeffs.iter().map(|c| c.to_literal()).collect();
    println!("{} as a 6-bounded vector: ({})", f, coeffs.join(", "));
    println!("decoded back: {}", from_bounded(&b, &r)?);
    match to_bounded(&parse_poly("x^3", &r)?, 6) {
        Err(e) => println!("x^3 with d = 6: {}", e),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
