//! The built-in group schemes, their Hopf-axiom checks, dimensions, and
//! realized monomial bounds.
//!
//! Run with: cargo run --example hopf_catalog

use hopfsmooth::field::FieldSpec;
use hopfsmooth::hopf::{catalog, is_smooth};

fn main() -> hopfsmooth::Result<()> {
    for (name, h) in catalog::standard(FieldSpec::Rationals) {
        let check = h.check()?;
        let report = is_smooth(&h)?;
        println!(
            "{:>14}: hopf {} | dim {} | lie dim {} | smooth {} | bound {}",
            name,
            check.is_valid(),
            report.group_dim,
            report.lie_dim,
            report.smooth,
            h.bound()?,
        );
    }
    // a quadruple that is only a Hopf algebra in characteristic 2
    let bad = catalog::frobenius_kernel(FieldSpec::Rationals, 2);
    println!(
        "frobenius kernel over Q: hopf {} ({})",
        bad.is_hopf()?,
        bad.check()?
            .failures
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    );
    let good = catalog::frobenius_kernel(FieldSpec::prime_field(2)?, 2);
    println!("frobenius kernel over F_2: hopf {}", good.is_hopf()?);
    Ok(())
}
