//! Ideal membership and radical membership with exact certificates.
//!
//! Run with: cargo run --example ideal_membership

use hopfsmooth::field::FieldSpec;
use hopfsmooth::idealops::{radical_member, Ideal};
use hopfsmooth::poly::{parse_poly, ring};

fn main() -> hopfsmooth::Result<()> {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let ideal = Ideal::new(
        r.clone(),
        vec![parse_poly("x^2", &r)?, parse_poly("y^3", &r)?],
    );
    for text in ["x^2*y", "x + y", "x^2 + y^3", "0"] {
        let f = parse_poly(text, &r)?;
        println!("{} in (x^2, y^3): {}", text, ideal.member(&f)?);
    }
    for text in ["x", "x + y", "x - 1"] {
        let f = parse_poly(text, &r)?;
        let (inside, exponent) = radical_member(&f, &ideal)?;
        match exponent {
            Some(e) => println!("{} is in the radical; least power inside: {}", text, e),
            None => println!("{} is not in the radical ({})", text, inside),
        }
    }
    Ok(())
}
