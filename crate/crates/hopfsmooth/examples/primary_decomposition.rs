//! Primary decomposition with isolated/embedded classification and the
//! bounded primary verifier.
//!
//! Run with: cargo run --example primary_decomposition

use hopfsmooth::field::FieldSpec;
use hopfsmooth::idealops::Ideal;
use hopfsmooth::poly::{parse_poly, ring};
use hopfsmooth::primdec::{is_primary, primdec, Primality};

fn main() -> hopfsmooth::Result<()> {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("Q[x,y]", vec!["x^2", "x*y"]),
        ("Q[x,y]", vec!["x*y", "y^2"]),
        ("Q[x]", vec!["x^6 - 1"]),
        ("Q[x,y]", vec!["y - x^2"]),
    ];
    for (ring_name, gens) in cases {
        let vars: Vec<&str> = if ring_name.contains(",") {
            vec!["x", "y"]
        } else {
            vec!["x"]
        };
        let r = ring(FieldSpec::Rationals, &vars);
        let polys = gens
            .iter()
            .map(|t| parse_poly(t, &r))
            .collect::<hopfsmooth::Result<Vec<_>>>()?;
        let ideal = Ideal::new(r.clone(), polys);
        println!("({}) in {}:", gens.join(", "), ring_name);
        for comp in primdec(&ideal)? {
            let verdict = match is_primary(&comp.ideal)? {
                Primality::Primary => "primary".to_string(),
                Primality::NotPrimary { witness } => {
                    format!("not primary (witness {} * {})", witness.0, witness.1)
                }
                Primality::Unknown(why) => format!("unknown: {}", why),
            };
            println!(
                "  ({})  [{}] {}",
                comp.ideal.canonical_texts()?.join(", "),
                if comp.isolated { "isolated" } else { "embedded" },
                verdict,
            );
        }
    }
    Ok(())
}
